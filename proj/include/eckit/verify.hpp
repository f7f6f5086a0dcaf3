#pragma once

#include "eckit/graph.hpp"
#include "eckit/solver.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace eckit {

// One line of the JSONL sweep output. Field order is frozen: key, n, m,
// connected, ec_lo, ec_hi, certificate, checks. The certificate is a
// validated partition of order ec_lo (empty when the graph has no edges).
struct SweepRecord {
    std::string key;
    int n = 0;
    int m = 0;
    bool connected = false;
    int ec_lo = 0;
    int ec_hi = 0;
    EdgePartition certificate;
    std::vector<std::pair<std::string, std::string>> checks; // name -> pass|fail|skipped(reason)
};

std::string to_jsonl(const SweepRecord& r);
SweepRecord record_from_jsonl(const std::string& line);

// A named claim evaluated against a solved record. Assert severity marks
// definitional facts whose failure is a build defect; report severity marks
// claims under test whose counterexamples are collected, not fatal.
struct CheckDefinition {
    std::string name;
    enum class Severity { Assert, Report } severity = Severity::Assert;
    std::function<std::string(const Graph&, const SweepRecord&)> eval;
};

// cert_valid, bound_sandwich, partner_cap, delta_bound, domatic_bound
// (assert) plus universal_bound, permissive_equal (report).
std::vector<CheckDefinition> default_checks();

struct SweepConfig {
    SolverConfig solver;  // per graph solve settings; budget hits yield intervals
    int threads = 1;      // graphs are independent work items
    std::string out_path; // JSONL persistence; empty disables it
};

// Solves and checks every graph6 line, in order. With out_path set, records
// already present in the file (matched by canonical key) are reused as is
// and new records are appended, so an interrupted sweep resumes cleanly.
std::vector<SweepRecord> sweep(const std::vector<std::string>& g6_lines,
                               const std::vector<CheckDefinition>& checks,
                               const SweepConfig& cfg);

struct CheckTally {
    int pass = 0;
    int fail = 0;
    int skipped = 0;
    std::vector<std::string> failing_keys;
};

std::map<std::string, CheckTally> tally_checks(const std::vector<SweepRecord>& records);

// Canonical keys (isolated vertices stripped before keying, since the value
// only depends on edges) of graphs whose exact value equals `value`.
// Records whose interval straddles `value` are returned through `undecided`.
std::vector<std::string> ec_value_classes(const std::vector<SweepRecord>& records, int value,
                                          bool connected_only,
                                          std::vector<std::string>* undecided = nullptr);

struct FamilyRow {
    std::string family;
    std::string param;
    std::string expected;
    int lo = 0;
    int hi = 0;
    bool exact = false;
    bool pass = false;
};

struct FamilyReport {
    std::vector<FamilyRow> rows;
    bool all_pass = true;
};

// Closed form and cap table: complete graphs 2..6, the four small complete
// bipartite shapes, stars, double stars, paths and cycles up to 14.
FamilyReport run_family_suite(const SolverConfig& base);
std::string family_suite_csv(const FamilyReport& report);

enum class GraphClass { Tree, Unicyclic, Connected };

// Canonical keys of all graphs of the class with EC equal to the edge count.
// An order m partition is necessarily the all singleton one, so membership
// reduces to singleton partition validity.
std::vector<std::string> characterize_ec_equals_m(int n_max, GraphClass cls);

struct EcgCatalogReport {
    struct Row {
        std::string name;
        bool pass = false;
        std::string detail;
    };
    std::vector<Row> k24_rows;                                   // six fixed partitions
    std::vector<Row> star_rows;                                  // orders 2..8
    std::vector<std::pair<std::string, std::string>> unicyclic_ecg; // graph key -> ecg key
    std::vector<std::string> self_ec_keys;                       // connected n <= 7
    bool required_pass = true;                                   // k24 and star rows
};

EcgCatalogReport verify_ecg_catalog();

// Textual family generators used by the characterization comparisons.
// Results are (item tag, canonical key) pairs deduplicated by key.
std::vector<std::pair<std::string, std::string>> theta_members(int n_max);
std::vector<std::pair<std::string, std::string>> phi_members(int n_max);

std::string report_text(const FamilyReport* family,
                        const std::vector<SweepRecord>* records,
                        const EcgCatalogReport* catalog);

} // namespace eckit
