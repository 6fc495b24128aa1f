#ifndef SGT_HARNESS_HPP
#define SGT_HARNESS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sgt/graph.hpp"

namespace sgt {

inline constexpr const char* kToolkitVersion = "1.0.0";

enum class Severity { Pass, Violation, Note };
std::string severity_name(Severity s);

/// One verification outcome. Violations and notes carry enough serialized
/// state (graph6, eigenvalue, expected vs. observed) to be re-checked
/// without rerunning the suite.
struct Finding {
    std::string check;
    std::string graph6;
    std::string eigenvalue;  // serialized algebraic number, may be empty
    std::string expected;
    std::string observed;
    Severity severity = Severity::Pass;
};

struct CheckStats {
    long graphs_scanned = 0;
    long eigenvalues_scanned = 0;
    long passes = 0;
    long violations = 0;
    long skipped = 0;
    long notes = 0;
    CheckStats& operator+=(const CheckStats& o);
};

struct SuiteConfig {
    int max_n = 8;        // connected-graph sweep bound (1..10)
    int trees_max_n = 12; // tree sweep bound (1..14)
    int lemma22_trials = 200;
    std::uint64_t seed = 1;
    int workers = 1;
    std::vector<std::string> checks;  // empty = all checks
    std::string graph6_file;          // optional external corpus for the
                                      // connected sweep (one graph6 per line)
};

// Check identifiers accepted in SuiteConfig::checks.
const std::vector<std::string>& all_check_ids();

struct SuiteReport {
    SuiteConfig config;
    std::map<std::string, CheckStats> stats;
    std::vector<Finding> findings;  // violations and notes, sorted by
                                    // (check, graph6, eigenvalue)
    double wall_seconds = 0.0;
    std::string version = kToolkitVersion;

    long total_violations() const;
    long total_notes() const;
    // stable_only drops the wall clock and worker count so that reports
    // from different worker configurations compare byte-identical.
    std::string to_json(bool stable_only = false) const;
    std::string to_csv() const;
};

SuiteReport run_suite(const SuiteConfig& config);

// Independent enumeration oracles (used to validate the generators).
// Connected graphs: all edge subsets of K_n, filter connected, dedup by
// canonical form (n <= 6). Trees: all Prufer sequences, dedup by a
// centroid-rooted certificate that does not use the canonical engine.
int oracle_connected_count(int n);
int oracle_tree_count(int n);

}  // namespace sgt

#endif
