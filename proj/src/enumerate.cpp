#include "eckit/enumerate.hpp"

#include "eckit/canonical.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

namespace eckit {

namespace {

std::recursive_mutex cache_mutex;

std::vector<std::string> sorted_keys(const std::set<std::string>& keys) {
    std::vector<std::pair<int, std::string>> order;
    order.reserve(keys.size());
    for (const std::string& k : keys) order.emplace_back(parse_graph6(k).m(), k);
    std::sort(order.begin(), order.end());
    std::vector<std::string> out;
    out.reserve(order.size());
    for (auto& [m, k] : order) out.push_back(std::move(k));
    return out;
}

std::vector<Graph> from_keys(const std::vector<std::string>& keys) {
    std::vector<Graph> out;
    out.reserve(keys.size());
    for (const std::string& k : keys) out.push_back(parse_graph6(k));
    return out;
}

// Every n-vertex graph arises by attaching a new vertex to some subset of an
// (n-1)-vertex graph, so level-by-level augmentation with canonical dedup is
// exhaustive.
const std::vector<std::string>& graph_level(int n) {
    static std::map<int, std::vector<std::string>> cache;
    std::lock_guard<std::recursive_mutex> lock(cache_mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::set<std::string> keys;
    if (n == 1) {
        keys.insert(canonical_key(make_graph(1, {})));
    } else {
        for (const std::string& key : graph_level(n - 1)) {
            Graph g = parse_graph6(key);
            for (uint32_t sub = 0; sub < (1u << (n - 1)); ++sub) {
                auto es = g.edges();
                for (int v = 0; v < n - 1; ++v)
                    if ((sub >> v) & 1) es.emplace_back(v, n - 1);
                keys.insert(canonical_key(make_graph(n, es)));
            }
        }
    }
    return cache.emplace(n, sorted_keys(keys)).first->second;
}

// Every tree on n >= 2 vertices has a leaf whose removal leaves a tree.
const std::vector<std::string>& tree_level(int n) {
    static std::map<int, std::vector<std::string>> cache;
    std::lock_guard<std::recursive_mutex> lock(cache_mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::set<std::string> keys;
    if (n == 1) {
        keys.insert(canonical_key(make_graph(1, {})));
    } else {
        for (const std::string& key : tree_level(n - 1)) {
            Graph g = parse_graph6(key);
            for (int v = 0; v < n - 1; ++v) {
                auto es = g.edges();
                es.emplace_back(v, n - 1);
                keys.insert(canonical_key(make_graph(n, es)));
            }
        }
    }
    return cache.emplace(n, sorted_keys(keys)).first->second;
}

// A unicyclic graph with a degree 1 vertex stays unicyclic after removing
// it; one with minimum degree 2 is the cycle itself.
const std::vector<std::string>& unicyclic_level(int n) {
    static std::map<int, std::vector<std::string>> cache;
    std::lock_guard<std::recursive_mutex> lock(cache_mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::set<std::string> keys;
    keys.insert(canonical_key(cycle(n)));
    if (n > 3) {
        for (const std::string& key : unicyclic_level(n - 1)) {
            Graph g = parse_graph6(key);
            for (int v = 0; v < n - 1; ++v) {
                auto es = g.edges();
                es.emplace_back(v, n - 1);
                keys.insert(canonical_key(make_graph(n, es)));
            }
        }
    }
    return cache.emplace(n, sorted_keys(keys)).first->second;
}

} // namespace

std::vector<Graph> all_graphs(int n) {
    if (n < 1) throw InvalidFamilyParams("enumeration needs n >= 1");
    if (n > 7) throw SizeCapExceeded("exhaustive enumeration capped at 7 vertices");
    return from_keys(graph_level(n));
}

std::vector<Graph> connected_graphs(int n) {
    std::vector<Graph> out;
    for (Graph& g : all_graphs(n))
        if (g.connected()) out.push_back(std::move(g));
    return out;
}

std::vector<Graph> trees(int n) {
    if (n < 1) throw InvalidFamilyParams("tree enumeration needs n >= 1");
    if (n > 10) throw SizeCapExceeded("tree enumeration capped at 10 vertices");
    return from_keys(tree_level(n));
}

std::vector<Graph> unicyclic_graphs(int n) {
    if (n < 3) throw InvalidFamilyParams("unicyclic enumeration needs n >= 3");
    if (n > 10) throw SizeCapExceeded("unicyclic enumeration capped at 10 vertices");
    return from_keys(unicyclic_level(n));
}

} // namespace eckit
