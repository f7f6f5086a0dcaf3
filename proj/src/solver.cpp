#include "eckit/solver.hpp"

#include "eckit/coalition.hpp"
#include "eckit/domination.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <mutex>
#include <thread>

namespace eckit {

namespace {

EdgeSet set_of(uint32_t mask, int m) {
    EdgeSet s(m);
    for (int e = 0; e < m; ++e)
        if ((mask >> e) & 1) s.set(e);
    return s;
}

bool is_valid_partition(const Graph& g, const EdgePartition& p, bool permissive = false) {
    return validate_partition(g, p, permissive).is_ec;
}

int upper_bound_impl(const Graph& g, std::vector<std::pair<std::string, int>>* trace) {
    int m = g.m();
    if (m == 0) throw NoEdges("upper bound needs at least one edge");
    auto note = [&](const char* name, int v) {
        if (trace) trace->emplace_back(name, v);
    };
    if (m == 1) {
        note("upper:single_edge", 1);
        return 1;
    }
    int maxdeg = 0;
    for (int v = 0; v < g.n(); ++v) maxdeg = std::max(maxdeg, g.degree(v));
    if (maxdeg <= 1) {
        // a matching with m >= 2: the only valid partitions are two class
        // splits, since no proper subset dominates and unions must cover E
        note("upper:matching_exact", 2);
        return 2;
    }
    int best = m;
    note("upper:class_count", m);
    if (!is_singleton_ec(g)) {
        // an order m partition is all singletons, which is exactly the
        // singleton partition; if that fails nothing of order m exists
        best = m - 1;
        note("upper:singleton_gap", best);
    }
    // counting bound anchored at a non full edge e: at most |N[e]| classes
    // touch its closed neighborhood, every other class is non dominating and
    // partners one of them, and a class has at most max_f |N[f]| partners
    int pmax = 0;
    for (int e = 0; e < m; ++e) pmax = std::max(pmax, edge_degree(g, e) + 1);
    int ne_min = INT_MAX;
    for (int e = 0; e < m; ++e)
        if (!is_full_edge(g, e)) ne_min = std::min(ne_min, edge_degree(g, e) + 1);
    if (ne_min != INT_MAX) {
        int prod = ne_min * (1 + pmax);
        note("upper:neighborhood_product", prod);
        best = std::min(best, prod);
    }
    return best;
}

// Turns dominating seed classes plus leftover edges into a valid partition.
// Each shrunken seed becomes a dominating singleton or a coalition pair;
// leftovers become partnered singletons, get absorbed without creating a
// dominating class, or in the corner case where every class so far is a
// dominating singleton, the remainder itself dominates and is split.
EdgePartition assemble_from_seeds(const Graph& g, const std::vector<EdgeSet>& seeds, EdgeSet leftover) {
    int m = g.m();
    EdgePartition result;
    auto dominating = [&](const EdgeSet& s) { return check_edge_dominating(g, s).dominating; };
    auto push_split = [&](const EdgeSet& mini) {
        if (mini.count() == 1) {
            result.push_back(mini);
            return;
        }
        EdgeSet first(m);
        first.set(mini.indices().front());
        result.push_back(first);
        result.push_back(mini - first);
    };
    for (const EdgeSet& s : seeds) {
        EdgeSet mini = shrink_to_minimal(g, s);
        leftover |= s - mini;
        push_split(mini);
    }
    while (!leftover.empty()) {
        int f = leftover.indices().front();
        EdgeSet fs(m);
        fs.set(f);
        if (is_full_edge(g, f)) {
            result.push_back(fs);
            leftover.reset(f);
            continue;
        }
        bool placed = false;
        for (EdgeSet& c : result) {
            if (dominating(c)) continue;
            if (dominating(c | fs)) {
                result.push_back(fs);
                placed = true;
                break;
            }
        }
        if (!placed) {
            for (EdgeSet& c : result) {
                if (dominating(c)) continue;
                if (!dominating(c | fs)) {
                    c |= fs;
                    placed = true;
                    break;
                }
            }
        }
        if (placed) {
            leftover.reset(f);
            continue;
        }
        // no non dominating class exists, so everything outside leftover is
        // a full edge and the remainder dominates on its own
        EdgeSet mini = shrink_to_minimal(g, leftover);
        push_split(mini);
        leftover.subtract(mini);
    }
    return result;
}

struct LowerBound {
    int order = 0;
    EdgePartition witness;
    std::string method;
};

LowerBound lower_bound_impl(const Graph& g) {
    int m = g.m();
    if (m == 0) throw NoEdges("lower bound needs at least one edge");
    EdgePartition p1 = singleton_partition(g);
    if (is_valid_partition(g, p1)) return {m, p1, "singleton"};
    LowerBound best;
    auto consider = [&](const char* name, const EdgePartition& p) {
        if ((int)p.size() > best.order && is_valid_partition(g, p))
            best = {(int)p.size(), p, name};
    };
    consider("existence", existence_partition(g));
    try {
        consider("min_degree", delta_construction(g));
    } catch (const HasFullEdge&) {
    } catch (const InvalidConstruction&) {
    }
    {
        // singletons over edges at universal vertices plus the rest
        EdgeSet at_universal(m);
        int count = 0;
        for (int v = 0; v < g.n(); ++v) {
            if (g.degree(v) == g.n() - 1 && g.n() >= 2) {
                at_universal |= g.incident_edges(v);
                ++count;
            }
        }
        if (count >= 1) {
            EdgePartition p;
            for (int e : at_universal.indices()) {
                EdgeSet s(m);
                s.set(e);
                p.push_back(s);
            }
            EdgeSet rest = EdgeSet::all(m) - at_universal;
            if (!rest.empty()) p.push_back(rest);
            consider("universal_split", p);
        }
    }
    if (best.order < 2) {
        for (int e = 0; e < m && best.order < 2; ++e) {
            EdgeSet a = edge_neighborhood(g, e, true);
            EdgeSet b = EdgeSet::all(m) - a;
            if (!b.empty()) consider("neighborhood_split", {a, b});
        }
    }
    return best;
}

} // namespace

int ec_upper_bound(const Graph& g) { return upper_bound_impl(g, nullptr); }

int ec_upper_bound(const Graph& g, std::vector<std::pair<std::string, int>>& trace) {
    return upper_bound_impl(g, &trace);
}

std::pair<int, EdgePartition> ec_lower_bound(const Graph& g) {
    LowerBound lb = lower_bound_impl(g);
    return {lb.order, lb.witness};
}

EdgePartition existence_partition(const Graph& g) {
    int m = g.m();
    if (m == 0) throw NoEdges("existence construction needs at least one edge");
    std::vector<EdgeSet> seeds;
    EdgeSet leftover(m);
    if (m <= 16) {
        seeds = edge_domatic_number(g).witness;
    } else {
        EdgeSet rest = EdgeSet::all(m);
        while (check_edge_dominating(g, rest).dominating) {
            EdgeSet mini = shrink_to_minimal(g, rest);
            seeds.push_back(mini);
            rest.subtract(mini);
        }
        leftover = rest;
    }
    EdgePartition p = assemble_from_seeds(g, seeds, leftover);
    if (!is_valid_partition(g, p))
        throw GraphError("internal: existence construction produced an invalid partition");
    return p;
}

EdgePartition delta_construction(const Graph& g) {
    int m = g.m();
    if (m == 0) throw NoEdges("minimum degree construction needs at least one edge");
    for (int e = 0; e < m; ++e)
        if (is_full_edge(g, e)) throw HasFullEdge("minimum degree construction needs no full edge");
    int dmin = INT_MAX;
    for (int u = 0; u < g.n(); ++u) dmin = std::min(dmin, g.degree(u));
    if (dmin < 1) throw InvalidConstruction("minimum degree construction needs minimum degree at least 1");
    // One singleton class per edge at a minimum degree vertex v, plus the
    // residue outside the closed neighborhood of an anchor edge at v. The
    // residue cannot dominate the anchor, and any class holding an edge from
    // that neighborhood completes the residue to a dominating set. The
    // anchor's far side edges do not sit at v, so they are folded into the
    // singleton classes; every fold must leave its class non dominating,
    // hence the assignment search.
    for (int v = 0; v < g.n(); ++v) {
        if (g.degree(v) != dmin) continue;
        EdgeSet at_v = g.incident_edges(v);
        std::vector<int> singles = at_v.indices();
        int k = (int)singles.size();
        for (int anchor : singles) {
            EdgeSet closed = edge_neighborhood(g, anchor, true);
            EdgeSet residue = EdgeSet::all(m) - closed;
            if (residue.empty()) continue;
            std::vector<int> leaked = (closed - at_v).indices();
            int L = (int)leaked.size();
            uint64_t combos = 1;
            for (int i = 0; i < L && combos <= 100000; ++i) combos *= (uint64_t)k;
            if (combos > 100000) combos = 100000;
            std::vector<int> where(L, 0);
            for (uint64_t t = 0; t < combos; ++t) {
                uint64_t code = t;
                for (int i = 0; i < L; ++i) {
                    where[i] = (int)(code % k);
                    code /= k;
                }
                EdgePartition p;
                for (int e : singles) {
                    EdgeSet s(m);
                    s.set(e);
                    p.push_back(s);
                }
                for (int i = 0; i < L; ++i) p[where[i]].set(leaked[i]);
                p.push_back(residue);
                if (is_valid_partition(g, p)) return p;
            }
        }
    }
    throw InvalidConstruction("minimum degree construction failed to validate");
}

std::pair<Graph, EdgePartition> kr_s_construction(int r, int s) {
    if (r < 2 || s < r) throw InvalidFamilyParams("construction needs 2 <= r <= s");
    Graph g = complete_bipartite(r, s);
    int m = r * s;
    EdgePartition p;
    for (int v = 0; v < s; ++v) {
        EdgeSet head(m);
        head.set(v);
        EdgeSet tail(m);
        for (int u = 1; u < r; ++u) tail.set(u * s + v);
        p.push_back(head);
        p.push_back(tail);
    }
    if (!is_valid_partition(g, p))
        throw GraphError("internal: bipartite split failed to validate");
    return {g, p};
}

namespace {

// dominating[mask] over all 2^m edge subsets, packed one bit per mask
std::vector<uint64_t> build_dom_table(const Graph& g) {
    int m = g.m();
    std::vector<uint32_t> open(m, 0);
    for (int e = 0; e < m; ++e)
        for (int f : g.open_edge_neighborhood(e).indices()) open[e] |= 1u << f;
    size_t size = size_t(1) << m;
    uint32_t full = (uint32_t)(size - 1);
    std::vector<uint64_t> dom(size / 64 + 1, 0);
    std::vector<uint32_t> cover(size, 0);
    for (size_t mask = 1; mask < size; ++mask) {
        uint32_t low = (uint32_t)(mask & (~mask + 1));
        cover[mask] = cover[mask ^ low] | open[std::countr_zero(low)];
    }
    for (size_t mask = 1; mask < size; ++mask)
        if ((cover[mask] | (uint32_t)mask) == full) dom[mask >> 6] |= uint64_t(1) << (mask & 63);
    return dom;
}

struct BudgetHit {};

// Branch and bound over restricted growth assignments of edges 0..m-1 to
// classes. Strict reading invariant: every class is either a dominating
// singleton or non dominating, because joins that would create a dominating
// class of size two or more are pruned as dead ends.
struct EcSearch {
    int m;
    bool permissive;
    bool emit_all;
    int hi;
    const std::vector<uint64_t>& dom;
    const std::vector<uint32_t>& suffix;

    std::atomic<int>* incumbent;
    std::atomic<bool>* done;
    std::atomic<uint64_t>* nodes_total;
    uint64_t node_budget = 0;
    bool has_deadline = false;
    std::chrono::steady_clock::time_point deadline;

    std::vector<uint32_t> classes{};
    std::vector<uint8_t> class_dom{};
    std::vector<uint8_t> class_singdom{};
    uint64_t local_nodes = 0;

    int best_order = 0;
    std::vector<uint32_t> best_classes{};
    int optima_order = 0;
    std::vector<std::vector<uint32_t>> optima{};

    bool is_dom(uint32_t mask) const { return (dom[mask >> 6] >> (mask & 63)) & 1u; }

    // A class whose validity is already settled is skipped; any other class
    // must still be able to end valid against the unassigned edges U, either
    // by a partner carved out of U or together with another open class.
    // With U = 0 this is the exact validity condition.
    bool alive_all(uint32_t U) const {
        int k = (int)classes.size();
        for (int c = 0; c < k; ++c) {
            if (permissive ? class_dom[c] : class_singdom[c]) continue;
            if (is_dom(classes[c] | U)) continue;
            bool ok = false;
            for (int d = 0; d < k; ++d) {
                if (d == c || class_dom[d]) continue;
                if (is_dom(classes[c] | classes[d] | U)) {
                    ok = true;
                    break;
                }
            }
            if (!ok) return false;
        }
        return true;
    }

    void record_leaf() {
        int k = (int)classes.size();
        int inc = incumbent->load(std::memory_order_relaxed);
        while (k > inc && !incumbent->compare_exchange_weak(inc, k)) {
        }
        if (k > best_order) {
            best_order = k;
            best_classes = classes;
        }
        if (emit_all) {
            if (k > optima_order) {
                optima_order = k;
                optima.clear();
            }
            if (k == optima_order) optima.push_back(classes);
        } else if (incumbent->load(std::memory_order_relaxed) >= hi) {
            done->store(true, std::memory_order_relaxed);
        }
    }

    void dfs(int i) {
        if (done->load(std::memory_order_relaxed)) return;
        if ((++local_nodes & 4095) == 0) {
            uint64_t total = nodes_total->fetch_add(4096, std::memory_order_relaxed) + 4096;
            if (node_budget && total >= node_budget) throw BudgetHit{};
            if (has_deadline && std::chrono::steady_clock::now() >= deadline) throw BudgetHit{};
        }
        int k = (int)classes.size();
        if (i == m) {
            // alive_all(0) held when edge m-1 was placed, so this is valid
            record_leaf();
            return;
        }
        int inc = incumbent->load(std::memory_order_relaxed);
        if (emit_all ? (k + (m - i) < inc) : (k + (m - i) <= inc)) return;
        uint32_t bit = 1u << i;
        uint32_t U = suffix[i + 1];
        for (int c = 0; c <= k; ++c) {
            if (c == k) {
                bool d = is_dom(bit);
                classes.push_back(bit);
                class_dom.push_back(d);
                class_singdom.push_back(d);
                if (alive_all(U)) dfs(i + 1);
                classes.pop_back();
                class_dom.pop_back();
                class_singdom.pop_back();
            } else {
                uint32_t merged = classes[c] | bit;
                bool md = is_dom(merged);
                if (!permissive && md) continue;
                uint32_t saved = classes[c];
                uint8_t sd = class_dom[c];
                uint8_t ss = class_singdom[c];
                classes[c] = merged;
                class_dom[c] = md;
                class_singdom[c] = 0;
                if (alive_all(U)) dfs(i + 1);
                classes[c] = saved;
                class_dom[c] = sd;
                class_singdom[c] = ss;
            }
            if (done->load(std::memory_order_relaxed)) return;
        }
    }
};

struct FrontierState {
    std::vector<uint32_t> classes{};
    std::vector<uint8_t> class_dom{};
    std::vector<uint8_t> class_singdom{};
};

} // namespace

EcResult ec_exact(const Graph& g, const SolverConfig& cfg) {
    int m = g.m();
    if (m == 0) throw NoEdges("ec solver needs at least one edge");
    int limit = std::min(cfg.max_edges, 22);
    if (m > limit)
        throw SizeCapExceeded("solver capped at " + std::to_string(limit) + " edges, got " + std::to_string(m));

    EcResult res;
    res.bound_trace.emplace_back("edges", m);

    EdgePartition p1 = singleton_partition(g);
    if (validate_partition(g, p1, cfg.permissive).is_ec) {
        // the only partition with m classes is the all singleton one, so
        // its validity settles the value immediately
        res.value = m;
        res.certificate = p1;
        res.bound_trace.emplace_back("singleton_partition", m);
        if (cfg.emit_all_optima) res.all_optima.push_back(p1);
        return res;
    }

    LowerBound lb = lower_bound_impl(g);
    res.bound_trace.emplace_back("lower:" + lb.method, lb.order);
    int hi = upper_bound_impl(g, &res.bound_trace);
    res.bound_trace.emplace_back("upper_bound", hi);

    if (!cfg.emit_all_optima && lb.order >= hi) {
        res.value = lb.order;
        res.certificate = lb.witness;
        res.bound_trace.emplace_back("bounds_met", lb.order);
        return res;
    }

    std::vector<uint64_t> dom = build_dom_table(g);
    std::vector<uint32_t> suffix(m + 1, 0);
    for (int i = m - 1; i >= 0; --i) suffix[i] = suffix[i + 1] | (1u << i);

    std::atomic<int> incumbent{lb.order - 1};
    std::atomic<bool> done{false};
    std::atomic<uint64_t> nodes_total{0};
    std::atomic<bool> budget_hit{false};

    auto deadline = std::chrono::steady_clock::now() + cfg.time_budget;
    bool has_deadline = cfg.time_budget.count() > 0;

    auto make_search = [&]() {
        return EcSearch{m,          cfg.permissive, cfg.emit_all_optima, hi,
                        dom,        suffix,         &incumbent,          &done,
                        &nodes_total, cfg.node_budget, has_deadline,     deadline};
    };

    int best_order = 0;
    std::vector<uint32_t> best_classes;
    std::vector<std::vector<uint32_t>> optima;

    int threads = cfg.emit_all_optima ? 1 : std::max(1, cfg.threads);
    if (threads == 1) {
        EcSearch s = make_search();
        try {
            s.dfs(0);
        } catch (const BudgetHit&) {
            budget_hit.store(true);
        }
        best_order = s.best_order;
        best_classes = std::move(s.best_classes);
        optima = std::move(s.optima);
    } else {
        // expand a frontier, then let workers race on the subtrees; the
        // value is deterministic because pruning only uses orders of found
        // valid partitions, certificates may differ between runs
        std::vector<FrontierState> states(1);
        int depth = 0;
        while (depth < m && (int)states.size() < threads * 8) {
            std::vector<FrontierState> next;
            uint32_t bit = 1u << depth;
            uint32_t U = suffix[depth + 1];
            EcSearch probe = make_search();
            for (FrontierState& st : states) {
                int k = (int)st.classes.size();
                if (k + (m - depth) <= lb.order - 1) continue;
                for (int c = 0; c <= k; ++c) {
                    FrontierState child = st;
                    if (c == k) {
                        bool d = probe.is_dom(bit);
                        child.classes.push_back(bit);
                        child.class_dom.push_back(d);
                        child.class_singdom.push_back(d);
                    } else {
                        uint32_t merged = child.classes[c] | bit;
                        bool md = probe.is_dom(merged);
                        if (!cfg.permissive && md) continue;
                        child.classes[c] = merged;
                        child.class_dom[c] = md;
                        child.class_singdom[c] = 0;
                    }
                    probe.classes = child.classes;
                    probe.class_dom = child.class_dom;
                    probe.class_singdom = child.class_singdom;
                    if (probe.alive_all(U)) next.push_back(std::move(child));
                }
            }
            states = std::move(next);
            ++depth;
            if (states.empty()) break;
        }
        std::atomic<size_t> cursor{0};
        std::mutex merge_mutex;
        std::vector<std::pair<int, size_t>> found; // order, state index
        std::vector<std::vector<uint32_t>> found_classes;
        auto work = [&]() {
            for (;;) {
                size_t idx = cursor.fetch_add(1);
                if (idx >= states.size() || done.load(std::memory_order_relaxed)) return;
                EcSearch s = make_search();
                s.classes = states[idx].classes;
                s.class_dom = states[idx].class_dom;
                s.class_singdom = states[idx].class_singdom;
                try {
                    s.dfs(depth);
                } catch (const BudgetHit&) {
                    budget_hit.store(true);
                    done.store(true);
                }
                if (s.best_order > 0) {
                    std::lock_guard<std::mutex> lock(merge_mutex);
                    found.emplace_back(s.best_order, idx);
                    found_classes.push_back(std::move(s.best_classes));
                }
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
        for (size_t i = 0; i < found.size(); ++i) {
            if (found[i].first > best_order) {
                best_order = found[i].first;
                best_classes = found_classes[i];
            }
        }
    }

    uint64_t nodes = nodes_total.load();
    res.bound_trace.emplace_back("search_nodes", (int)std::min<uint64_t>(nodes, INT_MAX));

    int value = std::max(best_order, lb.order);
    EdgePartition cert;
    if (best_order >= lb.order && best_order > 0) {
        for (uint32_t c : best_classes) cert.push_back(set_of(c, m));
    } else {
        cert = lb.witness;
    }

    if (budget_hit.load()) {
        if (!validate_partition(g, cert, cfg.permissive).is_ec)
            throw GraphError("internal: budget witness failed to validate");
        throw TimeBudgetExceeded("search budget exhausted", value, hi, cert);
    }

    res.value = value;
    res.certificate = cert;
    if (cfg.emit_all_optima)
        for (const auto& cls : optima) {
            EdgePartition p;
            for (uint32_t c : cls) p.push_back(set_of(c, m));
            res.all_optima.push_back(std::move(p));
        }
    if (!validate_partition(g, res.certificate, cfg.permissive).is_ec)
        throw GraphError("internal: solver certificate failed to validate");
    return res;
}

} // namespace eckit
