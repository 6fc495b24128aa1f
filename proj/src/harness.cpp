#include "sgt/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "json.hpp"
#include "sgt/algnum.hpp"
#include "sgt/canonical.hpp"
#include "sgt/enumerate.hpp"
#include "sgt/families.hpp"
#include "sgt/graph_io.hpp"
#include "sgt/matching.hpp"
#include "sgt/spectral.hpp"

namespace sgt {

std::string severity_name(Severity s) {
    switch (s) {
        case Severity::Pass: return "pass";
        case Severity::Violation: return "violation";
        case Severity::Note: return "paper-discrepancy-note";
    }
    return "?";
}

CheckStats& CheckStats::operator+=(const CheckStats& o) {
    graphs_scanned += o.graphs_scanned;
    eigenvalues_scanned += o.eigenvalues_scanned;
    passes += o.passes;
    violations += o.violations;
    skipped += o.skipped;
    notes += o.notes;
    return *this;
}

const std::vector<std::string>& all_check_ids() {
    static const std::vector<std::string> ids = {
        "thm31",          "cor31",           "thm12",
        "thm11",          "thm32",           "thm32_positives",
        "thm33",          "thm33_positives", "lemma33",
        "lemma31",        "lemma22",         "lemma24",
        "lemma25",        "lemma26",         "lemma27",
        "m0_identity",    "path_identities", "spectra_formulas",
        "interlacing",    "graph6_roundtrip", "enum_counts",
    };
    return ids;
}

namespace {

struct Local {
    std::map<std::string, CheckStats> stats;
    std::vector<Finding> findings;

    void violation(const std::string& check, const std::string& g6, const std::string& eig,
                   const std::string& expected, const std::string& observed) {
        ++stats[check].violations;
        findings.push_back({check, g6, eig, expected, observed, Severity::Violation});
    }
    void note(const std::string& check, const std::string& g6, const std::string& eig,
              const std::string& expected, const std::string& observed) {
        ++stats[check].notes;
        findings.push_back({check, g6, eig, expected, observed, Severity::Note});
    }
    // One instance outcome: pass when no failure was recorded.
    void settle(const std::string& check, const std::string& g6, const std::string& eig,
                const std::vector<std::string>& fails, const std::string& expected) {
        if (fails.empty()) {
            ++stats[check].passes;
            return;
        }
        std::string obs;
        for (size_t i = 0; i < fails.size(); ++i) {
            if (i) obs += "; ";
            obs += fails[i];
        }
        violation(check, g6, eig, expected, obs);
    }
};

struct Enabled {
    std::set<std::string> ids;
    bool operator()(const std::string& id) const { return ids.count(id) != 0; }
};

int nonzero_root_count(const IntPoly& squarefree_factor) {
    return SturmChain(squarefree_factor).count_all_roots() -
           (has_root_zero(squarefree_factor) ? 1 : 0);
}

// Distinct nonzero eigenvalues of a stratum, isolated.
std::vector<AlgNum> nonzero_roots(const IntPoly& q) {
    std::vector<AlgNum> out;
    for (AlgNum& r : isolate_real_roots(q))
        if (!r.is_zero()) out.push_back(std::move(r));
    return out;
}

// Lazily computed per-graph quantities shared by the sweep checks.
struct Facts {
    const Graph& g;
    std::string g6;
    int n, c;
    std::optional<int> diam_;
    std::optional<SquarefreeStrata> strata_;
    std::optional<std::vector<int>> nz_;
    std::optional<MatchingResult> bprime_, beta_;

    explicit Facts(const Graph& graph)
        : g(graph), g6(emit_graph6(graph)), n(graph.order()), c(cyclomatic_number(graph)) {}

    int diam() {
        if (!diam_) diam_ = diameter(g);
        return *diam_;
    }
    const SquarefreeStrata& strata() {
        if (!strata_) strata_ = spectral_strata(g);
        return *strata_;
    }
    // nz()[k] = number of distinct nonzero roots of strata()[k]
    const std::vector<int>& nz() {
        if (!nz_) {
            nz_.emplace();
            for (const auto& [q, i] : strata()) nz_->push_back(nonzero_root_count(q));
        }
        return *nz_;
    }
    const MatchingResult& bprime() {
        if (!bprime_) bprime_ = induced_matching_number(g);
        return *bprime_;
    }
    const MatchingResult& beta() {
        if (!beta_) beta_ = matching_number(g);
        return *beta_;
    }
};

std::vector<std::uint64_t> component_masks(const Graph& g, std::uint64_t keep) {
    std::vector<std::uint64_t> out;
    std::uint64_t left = keep;
    while (left) {
        std::uint64_t comp = left & -left;
        for (;;) {
            std::uint64_t grown = comp;
            for (std::uint64_t m = comp; m; m &= m - 1) {
                int v = popcount64((m & -m) - 1);
                grown |= g.neighbors(v) & keep;
            }
            if (grown == comp) break;
            comp = grown;
        }
        out.push_back(comp);
        left &= ~comp;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Connected-graph sweep checks
// ---------------------------------------------------------------------------

void check_thm31(Facts& f, Local& L) {
    auto& st = L.stats["thm31"];
    ++st.graphs_scanned;
    std::vector<std::string> fails;
    const int target = f.bprime().size + f.c;
    bool attained = false;
    const auto& strata = f.strata();
    for (size_t k = 0; k < strata.size(); ++k) {
        if (f.nz()[k] == 0) continue;
        st.eigenvalues_scanned += f.nz()[k];
        const int m = strata[k].second;
        if (m > target)
            fails.push_back("multiplicity " + std::to_string(m) + " exceeds beta'+c=" +
                            std::to_string(target));
        if (m == target) attained = true;
    }
    if (f.n >= 2) {  // K1 has no nonzero eigenvalue; the equality case is vacuous
        Classification cls = classify_thm31_equality(f.g);
        if (attained != cls.extremal())
            fails.push_back(std::string("equality ") + (attained ? "attained" : "not attained") +
                            " but classified " + cls.tag_name());
        if (is_tree(f.g) && f.diam() <= 3) {
            for (size_t k = 0; k < strata.size(); ++k)
                if (f.nz()[k] > 0 && strata[k].second != target)
                    fails.push_back("tree of diameter <= 3 with a nonzero eigenvalue of "
                                    "multiplicity " +
                                    std::to_string(strata[k].second) + " != beta'=" +
                                    std::to_string(target));
        }
    }
    L.settle("thm31", f.g6, "", fails,
             "m <= beta'+c for all nonzero eigenvalues; equality iff extremal class");
}

void check_cor31(Facts& f, Local& L) {
    auto& st = L.stats["cor31"];
    ++st.graphs_scanned;
    if (f.diam() < 4) {
        ++st.skipped;
        return;
    }
    std::vector<std::string> fails;
    const int target = f.bprime().size + f.c - 1;
    const auto& strata = f.strata();
    for (size_t k = 0; k < strata.size(); ++k) {
        if (f.nz()[k] == 0) continue;
        st.eigenvalues_scanned += f.nz()[k];
        if (strata[k].second > target)
            fails.push_back("multiplicity " + std::to_string(strata[k].second) +
                            " exceeds beta'+c-1=" + std::to_string(target));
    }
    L.settle("cor31", f.g6, "", fails, "m <= beta'+c-1 for all nonzero eigenvalues (diam >= 4)");
}

void check_lemma33(Facts& f, Local& L) {
    auto& st = L.stats["lemma33"];
    ++st.graphs_scanned;
    std::vector<std::string> fails;
    const int target = f.beta().size + f.c;
    bool attained = false;
    const auto& strata = f.strata();
    for (size_t k = 0; k < strata.size(); ++k) {
        if (f.nz()[k] == 0) continue;
        st.eigenvalues_scanned += f.nz()[k];
        const int m = strata[k].second;
        if (m > target)
            fails.push_back("multiplicity " + std::to_string(m) + " exceeds beta+c=" +
                            std::to_string(target));
        if (m == target) attained = true;
    }
    const bool expected = (is_c3aaa(f.g) == std::optional<int>(0)) || (f.n >= 2 && is_star(f.g));
    if (attained != expected)
        fails.push_back(std::string("equality ") + (attained ? "attained" : "not attained") +
                        " but G " + (expected ? "is" : "is not") + " C3 or a star");
    L.settle("lemma33", f.g6, "", fails, "m = beta+c for some nonzero eigenvalue iff C3 or K_{1,t}");
}

void check_thm33(Facts& f, Local& L) {
    auto& st = L.stats["thm33"];
    ++st.graphs_scanned;
    if (f.bprime().size < 3) {
        ++st.skipped;
        return;
    }
    std::vector<std::string> fails;
    std::string first_eig;
    const int target = f.beta().size + f.c - 1;
    const auto& strata = f.strata();
    for (size_t k = 0; k < strata.size(); ++k) {
        if (f.nz()[k] == 0) continue;
        const int m = strata[k].second;
        if (m > target)
            fails.push_back("multiplicity " + std::to_string(m) + " exceeds beta+c-1=" +
                            std::to_string(target));
        for (const AlgNum& lambda : nonzero_roots(strata[k].first)) {
            ++st.eigenvalues_scanned;
            const bool eq = (m == target);
            const bool ext = classify_thm33(f.g, lambda).extremal();
            if (eq != ext) {
                if (first_eig.empty()) first_eig = lambda.to_string();
                fails.push_back("at " + lambda.to_string() + ": m" + (eq ? "=" : "!=") +
                                "beta+c-1 but classifier says " + (ext ? "Thm33Form" : "NotExtremal"));
            }
        }
    }
    L.settle("thm33", f.g6, first_eig, fails,
             "m = beta+c-1 iff Thm33Form, for all nonzero eigenvalues (beta' >= 3)");
}

void check_thm32(Facts& f, Local& L) {
    auto& st = L.stats["thm32"];
    ++st.graphs_scanned;
    if (f.diam() < 4 || f.bprime().size < 3) {
        ++st.skipped;
        return;
    }
    std::vector<std::string> fails;
    std::string first_eig;
    const int target = f.bprime().size + f.c - 1;
    const auto& strata = f.strata();
    for (size_t k = 0; k < strata.size(); ++k) {
        if (f.nz()[k] == 0) continue;
        const int m = strata[k].second;
        for (const AlgNum& lambda : nonzero_roots(strata[k].first)) {
            ++st.eigenvalues_scanned;
            const bool eq = (m == target);
            const bool ext = classify_thm32(f.g, lambda).extremal();
            if (eq != ext) {
                if (first_eig.empty()) first_eig = lambda.to_string();
                fails.push_back("at " + lambda.to_string() + ": m" + (eq ? "=" : "!=") +
                                "beta'+c-1 but classifier says " + (ext ? "Thm32Form" : "NotExtremal"));
            }
        }
    }
    L.settle("thm32", f.g6, first_eig, fails,
             "m = beta'+c-1 iff Thm32Form, for all nonzero eigenvalues (diam >= 4, beta' >= 3)");
}

void check_lemma31(Facts& f, Local& L) {
    auto& st = L.stats["lemma31"];
    ++st.graphs_scanned;
    if (f.diam() < 4 || f.bprime().size < 3 || f.c < 1) {
        ++st.skipped;
        return;
    }
    const int target = f.bprime().size + f.c - 1;
    std::uint64_t sat = 0;
    for (const Edge& e : f.bprime().witness) sat |= (1ull << e.first) | (1ull << e.second);
    std::uint64_t unsat_cyc = cycle_vertices(f.g) & ~sat;
    std::vector<AlgNum> lambdas;
    const auto& strata = f.strata();
    for (size_t k = 0; k < strata.size(); ++k)
        if (f.nz()[k] > 0 && strata[k].second == target)
            for (AlgNum& r : nonzero_roots(strata[k].first)) lambdas.push_back(std::move(r));
    if (lambdas.empty() || unsat_cyc == 0) {
        ++st.skipped;
        return;
    }
    std::vector<std::string> fails;
    std::string first_eig;
    for (const AlgNum& lambda : lambdas) {
        ++st.eigenvalues_scanned;
        for (std::uint64_t m = unsat_cyc; m; m &= m - 1) {
            const int x = popcount64((m & -m) - 1);
            auto tag = [&](const std::string& msg) {
                if (first_eig.empty()) first_eig = lambda.to_string();
                fails.push_back("at " + lambda.to_string() + ", x=" + std::to_string(x) + ": " + msg);
            };
            const std::uint64_t keep = f.g.vertex_mask() & ~(1ull << x);
            InducedSubgraph gx = induced_subgraph(f.g, keep);
            if (cyclomatic_number(gx.graph) != f.c - 1) tag("c(G-x) != c(G)-1");
            const int mgx = multiplicity(gx.graph, lambda);
            const int tgt_gx =
                induced_matching_number(gx.graph).size + cyclomatic_number(gx.graph) - 1;
            if (mgx != tgt_gx) tag("m(G-x) != beta'(G-x)+c(G-x)-1");
            auto comps = component_masks(f.g, keep);
            if (comps.size() > 2) tag("G-x has more than two components");
            if (comps.size() == 2) {
                bool ok = false;
                for (int pick = 0; pick < 2 && !ok; ++pick) {
                    const std::uint64_t a = comps[static_cast<size_t>(pick)];
                    const std::uint64_t b = comps[static_cast<size_t>(1 - pick)];
                    InducedSubgraph ga = induced_subgraph(f.g, a);
                    InducedSubgraph gb = induced_subgraph(f.g, b);
                    const bool cond_a =
                        multiplicity(ga.graph, lambda) ==
                        induced_matching_number(ga.graph).size + cyclomatic_number(ga.graph) - 1;
                    const bool cond_b =
                        multiplicity(gb.graph, lambda) ==
                        induced_matching_number(gb.graph).size + cyclomatic_number(gb.graph);
                    const bool adj_b = popcount64(f.g.neighbors(x) & b) >= 2;
                    ok = cond_a && cond_b && adj_b;
                }
                if (!ok) tag("no component labeling satisfies the two-component conclusions");
            }
        }
    }
    L.settle("lemma31", f.g6, first_eig, fails,
             "deleting an unsaturated cycle vertex keeps m = beta'+c-1 and drops c by one");
}

void check_interlacing(Facts& f, Local& L) {
    auto& st = L.stats["interlacing"];
    ++st.graphs_scanned;
    if (f.n < 2) {
        ++st.passes;
        return;
    }
    std::vector<std::string> fails;
    IntPoly pg = char_poly(f.g);
    for (int v = 0; v < f.n; ++v) {
        InducedSubgraph sub = delete_vertices(f.g, 1ull << v);
        auto factors = joint_root_multiplicities({pg, char_poly(sub.graph)});
        for (const auto& fac : factors) {
            st.eigenvalues_scanned += 1;
            if (std::abs(fac.mult[0] - fac.mult[1]) > 1)
                fails.push_back("v=" + std::to_string(v) + ": multiplicities " +
                                std::to_string(fac.mult[0]) + " vs " + std::to_string(fac.mult[1]) +
                                " for factor " + fac.factor.to_string());
        }
    }
    L.settle("interlacing", f.g6, "", fails, "|m(G) - m(G-v)| <= 1 for every vertex and eigenvalue");
}

void check_graph6_roundtrip(Facts& f, Local& L) {
    auto& st = L.stats["graph6_roundtrip"];
    ++st.graphs_scanned;
    std::vector<std::string> fails;
    const std::string s = emit_graph6(f.g);
    if (parse_graph6(s) != f.g) fails.push_back("parse(emit(G)) != G");
    if (emit_graph6(parse_graph6(s)) != s) fails.push_back("emit(parse(s)) != s");
    L.settle("graph6_roundtrip", f.g6, "", fails, "byte-identical graph6 round-trip");
}

void check_connected_graph(const Graph& g, const Enabled& en, Local& L) {
    if (!is_connected(g)) {
        // external corpora may contain disconnected lines; every connected
        // check skips them
        for (const char* id : {"thm31", "cor31", "thm32", "thm33", "lemma33", "lemma31",
                               "interlacing", "graph6_roundtrip"})
            if (en(id)) {
                ++L.stats[id].graphs_scanned;
                ++L.stats[id].skipped;
            }
        return;
    }
    Facts f(g);
    if (en("thm31")) check_thm31(f, L);
    if (en("cor31")) check_cor31(f, L);
    if (en("lemma33")) check_lemma33(f, L);
    if (en("thm33")) check_thm33(f, L);
    if (en("thm32")) check_thm32(f, L);
    if (en("lemma31")) check_lemma31(f, L);
    if (en("interlacing")) check_interlacing(f, L);
    if (en("graph6_roundtrip")) check_graph6_roundtrip(f, L);
}

// ---------------------------------------------------------------------------
// Tree sweep checks
// ---------------------------------------------------------------------------

void check_thm12(Facts& f, Local& L) {
    auto& st = L.stats["thm12"];
    ++st.graphs_scanned;
    std::vector<std::string> fails;
    std::string first_eig;
    const int target = f.bprime().size - 1;
    const auto& strata = f.strata();
    for (size_t k = 0; k < strata.size(); ++k) {
        if (f.nz()[k] == 0) continue;
        const int m = strata[k].second;
        for (const AlgNum& lambda : nonzero_roots(strata[k].first)) {
            ++st.eigenvalues_scanned;
            const bool eq = (m == target);
            const bool ext = classify_thm12(f.g, lambda).extremal();
            if (eq != ext) {
                if (first_eig.empty()) first_eig = lambda.to_string();
                fails.push_back("at " + lambda.to_string() + ": m" + (eq ? "=" : "!=") +
                                "beta'-1 but classifier says " +
                                (ext ? "extremal" : "NotExtremal"));
            }
        }
    }
    L.settle("thm12", f.g6, first_eig, fails,
             "m = beta'-1 iff the tree matches an extremal form, for all nonzero eigenvalues");
}

void check_thm11(Facts& f, Local& L) {
    auto& st = L.stats["thm11"];
    ++st.graphs_scanned;
    if (f.diam() < 4) {
        ++st.skipped;
        return;
    }
    std::vector<std::string> fails;
    std::string first_eig;
    const auto& strata = f.strata();
    for (size_t k = 0; k < strata.size(); ++k) {
        if (f.nz()[k] == 0) continue;
        const int m = strata[k].second;
        for (const AlgNum& lambda : nonzero_roots(strata[k].first)) {
            ++st.eigenvalues_scanned;
            auto tag = [&](const std::string& msg) {
                if (first_eig.empty()) first_eig = lambda.to_string();
                fails.push_back("at " + lambda.to_string() + ": " + msg);
            };
            auto w = pendant_induced_matching_witness(f.g, lambda);
            if (!w) {
                tag("no pendant induced matching of size m+1 found");
                continue;
            }
            if (static_cast<int>(w->size()) != m + 1)
                tag("witness size " + std::to_string(w->size()) + " != m+1");
            if (!is_induced_matching(f.g, *w)) tag("witness is not an induced matching");
            for (const Edge& e : *w)
                if (f.g.degree(e.first) != 1 && f.g.degree(e.second) != 1)
                    tag("witness edge is not pendant");
        }
    }
    L.settle("thm11", f.g6, first_eig, fails,
             "every nonzero eigenvalue of multiplicity m admits m+1 pendant edges forming an "
             "induced matching (diam >= 4)");
}

void check_lemma24(Facts& f, Local& L) {
    auto& st = L.stats["lemma24"];
    ++st.graphs_scanned;
    std::vector<std::string> fails;
    const int bp = f.bprime().size;
    const auto& strata = f.strata();
    for (size_t k = 0; k < strata.size(); ++k) {
        if (f.nz()[k] == 0) continue;
        st.eigenvalues_scanned += f.nz()[k];
        const int m = strata[k].second;
        if (m > bp)
            fails.push_back("multiplicity " + std::to_string(m) + " exceeds beta'=" +
                            std::to_string(bp));
        if (f.diam() <= 3 && m != bp)
            fails.push_back("diameter <= 3 but multiplicity " + std::to_string(m) + " != beta'");
        if (f.diam() > 3 && m == bp)
            fails.push_back("diameter > 3 but multiplicity equals beta'");
    }
    L.settle("lemma24", f.g6, "", fails,
             "for trees, m <= beta' with equality exactly when the diameter is <= 3");
}

void check_lemma25(Facts& f, Local& L) {
    auto& st = L.stats["lemma25"];
    ++st.graphs_scanned;
    if (!is_caterpillar(f.g)) {
        ++st.skipped;
        return;
    }
    std::vector<std::string> fails;
    const auto& strata = f.strata();
    for (size_t k = 0; k < strata.size(); ++k) {
        if (f.nz()[k] == 0) continue;
        st.eigenvalues_scanned += f.nz()[k];
        if (strata[k].second >= 2)
            fails.push_back("nonzero eigenvalue of multiplicity " +
                            std::to_string(strata[k].second));
    }
    L.settle("lemma25", f.g6, "", fails, "caterpillars have simple nonzero eigenvalues");
}

void check_m0_identity(Facts& f, Local& L) {
    auto& st = L.stats["m0_identity"];
    ++st.graphs_scanned;
    int m0 = 0;
    for (const auto& [q, i] : f.strata())
        if (has_root_zero(q)) m0 = i;
    std::vector<std::string> fails;
    if (m0 != f.n - 2 * f.beta().size)
        fails.push_back("m_0 = " + std::to_string(m0) + " but n - 2*beta = " +
                        std::to_string(f.n - 2 * f.beta().size));
    L.settle("m0_identity", f.g6, "0", fails, "m_0(T) = |V(T)| - 2*beta(T)");
}

void check_tree(const Graph& t, const Enabled& en, Local& L) {
    Facts f(t);
    if (en("thm12")) check_thm12(f, L);
    if (en("thm11")) check_thm11(f, L);
    if (en("lemma24")) check_lemma24(f, L);
    if (en("lemma25")) check_lemma25(f, L);
    if (en("m0_identity")) check_m0_identity(f, L);
}

// ---------------------------------------------------------------------------
// Family / constructed checks
// ---------------------------------------------------------------------------

void check_spectra_formulas(Local& L) {
    auto& st = L.stats["spectra_formulas"];
    auto expect = [&](const Graph& g, std::vector<std::pair<AlgNum, int>> want,
                      const std::string& what) {
        ++st.graphs_scanned;
        std::sort(want.begin(), want.end(),
                  [](const auto& a, const auto& b) { return alg_less(a.first, b.first); });
        SpectrumSummary got = spectrum(g);
        st.eigenvalues_scanned += static_cast<long>(got.size());
        std::vector<std::string> fails;
        if (got.size() != want.size()) {
            fails.push_back(what + ": " + std::to_string(got.size()) + " distinct eigenvalues, " +
                            "expected " + std::to_string(want.size()));
        } else {
            for (size_t i = 0; i < got.size(); ++i)
                if (!alg_equal(got[i].value, want[i].first) || got[i].mult != want[i].second)
                    fails.push_back(what + ": entry " + std::to_string(i) + " is " +
                                    got[i].value.to_string() + "^" + std::to_string(got[i].mult) +
                                    ", expected " + want[i].first.to_string() + "^" +
                                    std::to_string(want[i].second));
        }
        L.settle("spectra_formulas", emit_graph6(g), "", fails, what);
    };

    for (int n = 2; n <= 10; ++n) {
        std::vector<std::pair<AlgNum, int>> want = {{AlgNum::minus_sqrt_of(n - 1), 1},
                                                    {AlgNum::sqrt_of(n - 1), 1}};
        if (n > 2) want.push_back({AlgNum::integer(0), n - 2});
        expect(star(n), std::move(want), "sigma(K_{1," + std::to_string(n - 1) + "})");
    }
    {
        auto golden = isolate_real_roots(IntPoly{-1, 1, 1});  // x^2 + x - 1
        expect(cycle(5), {{golden[0], 2}, {golden[1], 2}, {AlgNum::integer(2), 1}}, "sigma(C_5)");
    }
    for (int a = 1; a <= 4; ++a) {
        auto inner = isolate_real_roots(IntPoly{-a, 1, 1});   // x^2 + x - a, each twice
        auto outer = isolate_real_roots(IntPoly{-a, -2, 1});  // x^2 - 2x - a, simple
        std::vector<std::pair<AlgNum, int>> want = {
            {inner[0], 2}, {inner[1], 2}, {outer[0], 1}, {outer[1], 1}};
        if (a >= 2) want.push_back({AlgNum::integer(0), 3 * (a - 1)});
        expect(c3aaa(a), std::move(want), "sigma(C_3(" + std::to_string(a) + ",...))");
    }
    {
        // The source statement prints "m_3(C_3)=2"; sigma(C_3) = {2, -1, -1},
        // so the intended eigenvalue is -1. Verify the corrected reading and
        // flag the printed one.
        const Graph c3 = cycle(3);
        ++st.graphs_scanned;
        std::vector<std::string> fails;
        if (multiplicity(c3, AlgNum::integer(-1)) != 2) fails.push_back("m_{-1}(C_3) != 2");
        if (is_eigenvalue(c3, AlgNum::integer(3))) fails.push_back("3 is an eigenvalue of C_3");
        L.settle("spectra_formulas", emit_graph6(c3), "-1", fails, "m_{-1}(C_3) = 2");
        L.note("spectra_formulas", emit_graph6(c3), "-1", "m_{-1}(C_3)=2",
               "source statement prints m_3(C_3)=2, but 3 is not an eigenvalue of C_3; "
               "sigma(C_3) = {2, -1, -1}, so the intended claim is m_{-1}(C_3)=2");
    }
}

void check_path_identities(Local& L) {
    auto& st = L.stats["path_identities"];
    for (int n = 2; n <= 20; ++n) {
        ++st.graphs_scanned;
        const Graph p = path(n);
        std::vector<std::string> fails;
        const int b = matching_number(p).size;
        const int bp = induced_matching_number(p).size;
        if (b != n / 2)
            fails.push_back("beta(P_" + std::to_string(n) + ") = " + std::to_string(b) +
                            " != floor(n/2)");
        if (bp != (n + 1) / 3)
            fails.push_back("beta'(P_" + std::to_string(n) + ") = " + std::to_string(bp) +
                            " != floor((n+1)/3)");
        L.settle("path_identities", emit_graph6(p), "", fails,
                 "beta(P_n) = floor(n/2), beta'(P_n) = floor((n+1)/3)");
    }
}

void check_lemma22(const SuiteConfig& cfg, Local& L) {
    auto& st = L.stats["lemma22"];
    std::mt19937_64 rng(cfg.seed);
    auto rand_connected = [&](int n) {
        std::vector<Edge> e;
        for (int v = 1; v < n; ++v) e.emplace_back(static_cast<int>(rng() % v), v);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 4 == 0) e.emplace_back(u, v);
        return Graph::from_edge_list(n, e);
    };
    long done = 0;
    long attempts = 0;
    const long max_attempts = 100L * cfg.lemma22_trials + 100;
    while (done < cfg.lemma22_trials && attempts < max_attempts) {
        ++attempts;
        const int ng = 2 + static_cast<int>(rng() % 5);
        const int nh = 2 + static_cast<int>(rng() % 5);
        const Graph g = rand_connected(ng);
        const Graph h = rand_connected(nh);
        const int u = static_cast<int>(rng() % ng);
        const int v = static_cast<int>(rng() % nh);
        const Graph guvh = join_bridge(g, u, h, v);
        const IntPoly pg = char_poly(g);
        const IntPoly pgu = char_poly(delete_vertices(g, 1ull << u).graph);
        const IntPoly pc = char_poly(guvh);
        const IntPoly phv = char_poly(delete_vertices(h, 1ull << v).graph);
        auto factors = joint_root_multiplicities({pg, pgu, pc, phv});
        std::vector<std::string> fails;
        bool hypothesis = false;
        for (const auto& fac : factors) {
            // lambda ranges over eigenvalues of GuvH with m(G) = m(G-u) + 1
            if (fac.mult[2] < 1 || fac.mult[0] != fac.mult[1] + 1) continue;
            hypothesis = true;
            ++st.eigenvalues_scanned;
            if (fac.mult[2] != fac.mult[3] + fac.mult[0] - 1)
                fails.push_back("factor " + fac.factor.to_string() + ": m(GuvH)=" +
                                std::to_string(fac.mult[2]) + " != m(H-v)+m(G)-1=" +
                                std::to_string(fac.mult[3] + fac.mult[0] - 1));
        }
        if (!hypothesis) continue;  // trial does not meet the hypothesis; draw again
        ++st.graphs_scanned;
        ++done;
        L.settle("lemma22", emit_graph6(guvh), "", fails,
                 "m(GuvH) = m(H-v) + m(G) - 1 whenever m(G) = m(G-u) + 1");
    }
}

std::vector<Graph> lemma26_27_bases() {
    std::vector<Graph> bases;
    for (int a = 0; a <= 3; ++a) bases.push_back(c3aaa(a));
    bases.push_back(cycle(5));
    return bases;
}

void check_lemma26(Local& L) {
    auto& st = L.stats["lemma26"];
    for (const Graph& g : lemma26_27_bases()) {
        ++st.graphs_scanned;
        std::vector<std::string> fails;
        std::string first_eig;
        for (const auto& [q, i] : spectral_strata(g)) {
            if (i != 2) continue;
            for (const AlgNum& lambda : nonzero_roots(q)) {
                ++st.eigenvalues_scanned;
                for (int v = 0; v < g.order(); ++v) {
                    InducedSubgraph sub = delete_vertices(g, 1ull << v);
                    if (multiplicity(sub.graph, lambda) != 1) {
                        if (first_eig.empty()) first_eig = lambda.to_string();
                        fails.push_back("at " + lambda.to_string() + ", v=" + std::to_string(v) +
                                        ": m(G-v) != 1");
                    }
                }
            }
        }
        L.settle("lemma26", emit_graph6(g), first_eig, fails,
                 "each multiplicity-2 eigenvalue drops to 1 under every vertex deletion");
    }
}

void check_lemma27(Local& L) {
    auto& st = L.stats["lemma27"];
    for (const Graph& base : lemma26_27_bases()) {
        for (int s = 1; s <= 4; ++s) {
            for (int x = 0; x < base.order(); ++x) {
                for (int y = x + 1; y < base.order(); ++y) {
                    ++st.graphs_scanned;
                    Graph g = disjoint_union(base, star(s + 1));
                    const int center = base.order();
                    std::vector<Edge> e = g.edges();
                    e.emplace_back(x, center);
                    e.emplace_back(y, center);
                    g = Graph::from_edge_list(g.order(), e);
                    std::vector<std::string> fails;
                    for (const auto& [q, i] : spectral_strata(g)) {
                        const int nz = nonzero_root_count(q);
                        if (nz == 0) continue;
                        st.eigenvalues_scanned += nz;
                        if (i > 2)
                            fails.push_back("nonzero eigenvalue of multiplicity " +
                                            std::to_string(i) + " (x=" + std::to_string(x) +
                                            ", y=" + std::to_string(y) + ")");
                    }
                    L.settle("lemma27", emit_graph6(g), "", fails,
                             "joining a star center to two base vertices keeps m <= 2 for "
                             "nonzero eigenvalues");
                }
            }
        }
    }
}

// Hub composites in the decomposition shape: w joined to c3aaa cycle
// vertices, tree parts with the target eigenvalue, optional pendants at w.
struct HubPart {
    Graph g;
    int attach;  // vertex of g that receives the edge to the hub
};

Graph assemble_hub(const std::vector<HubPart>& parts, int pendants) {
    std::vector<Edge> edges;
    int next = 1;  // 0 is the hub
    for (const HubPart& p : parts) {
        for (const Edge& e : p.g.edges())
            edges.emplace_back(next + e.first, next + e.second);
        edges.emplace_back(0, next + p.attach);
        next += p.g.order();
    }
    for (int i = 0; i < pendants; ++i) edges.emplace_back(0, next + i);
    next += pendants;
    return Graph::from_edge_list(next, edges);
}

void check_thm32_positives(Local& L) {
    auto& st = L.stats["thm32_positives"];
    struct Family {
        int a;        // hair count of the cyclic parts
        long lambda;  // shared integer eigenvalue
        std::vector<HubPart> trees;  // tree parts carrying lambda, with diam(H+w) <= 3
        std::vector<int> diam2;      // indices into trees whose H+w has diameter 2
    };
    std::vector<Family> fams;
    fams.push_back({2, -2, {{star(5), 0}, {star(5), 1}, {y6(), 0}}, {0}});
    fams.push_back({2, 1, {{star(2), 0}, {y6(), 0}}, {0}});
    fams.push_back({6, 2, {{star(5), 0}, {y6(), 0}}, {0}});
    fams.push_back({6, -3, {{star(10), 0}}, {0}});

    for (const Family& fam : fams) {
        const Graph cyclic = c3aaa(fam.a);
        for (int c = 1; c <= 2; ++c) {
            for (int ntree = 2; ntree <= 4; ++ntree) {
                for (int variant = 0; variant < static_cast<int>(fam.trees.size()); ++variant) {
                    for (int pendants : {0, 2}) {
                        std::vector<HubPart> parts;
                        bool has_diam2 = false;
                        for (int i = 0; i < c; ++i) parts.push_back({cyclic, 0});
                        for (int i = 0; i < ntree; ++i) {
                            const HubPart& tp =
                                fam.trees[static_cast<size_t>((variant + i) % fam.trees.size())];
                            parts.push_back(tp);
                            const int idx = (variant + i) % static_cast<int>(fam.trees.size());
                            if (std::find(fam.diam2.begin(), fam.diam2.end(), idx) !=
                                fam.diam2.end())
                                has_diam2 = true;
                        }
                        if (pendants > 0 && !has_diam2) continue;  // would violate the diameter rule
                        int order = 1 + pendants;
                        for (const HubPart& p : parts) order += p.g.order();
                        if (order > 62) continue;  // stay within graph6 short form
                        ++st.graphs_scanned;
                        ++st.eigenvalues_scanned;
                        const Graph g = assemble_hub(parts, pendants);
                        const AlgNum lambda = AlgNum::integer(fam.lambda);
                        std::vector<std::string> fails;
                        const int cyc = cyclomatic_number(g);
                        const int bp = induced_matching_number(g).size;
                        if (diameter(g) < 4 || bp < 3) {
                            fails.push_back("construction misses the diam/beta' preconditions");
                        } else {
                            const int m = multiplicity_rational(g, Rat(fam.lambda));
                            const bool eq = (m == bp + cyc - 1);
                            const bool ext = classify_thm32(g, lambda).extremal();
                            if (!eq)
                                fails.push_back("m = " + std::to_string(m) + " != beta'+c-1 = " +
                                                std::to_string(bp + cyc - 1));
                            if (!ext) fails.push_back("classifier says NotExtremal");
                        }
                        L.settle("thm32_positives", emit_graph6(g), lambda.to_string(), fails,
                                 "constructed hub composite attains m = beta'+c-1 and classifies "
                                 "as Thm32Form");
                    }
                }
            }
        }
    }
}

void check_thm33_positives(Local& L) {
    auto& st = L.stats["thm33_positives"];
    for (int t = 1; t <= 5; ++t) {
        for (int copies = 3; copies <= 6; ++copies) {
            ++st.graphs_scanned;
            std::vector<HubPart> parts(static_cast<size_t>(copies), HubPart{star(t + 1), 0});
            const Graph g = assemble_hub(parts, 0);
            std::vector<std::string> fails;
            const int b = matching_number(g).size;
            const int cyc = cyclomatic_number(g);
            for (const AlgNum& lambda : {AlgNum::sqrt_of(t), AlgNum::minus_sqrt_of(t)}) {
                ++st.eigenvalues_scanned;
                const int m = multiplicity(g, lambda);
                const bool eq = (m == b + cyc - 1);
                const bool ext = classify_thm33(g, lambda).extremal();
                if (!eq)
                    fails.push_back("at " + lambda.to_string() + ": m = " + std::to_string(m) +
                                    " != beta+c-1 = " + std::to_string(b + cyc - 1));
                if (!ext)
                    fails.push_back("at " + lambda.to_string() + ": classifier says NotExtremal");
            }
            L.settle("thm33_positives", emit_graph6(g), "+-sqrt(" + std::to_string(t) + ")", fails,
                     "hub of star copies attains m = beta+c-1 at lambda^2 = t and classifies as "
                     "Thm33Form");
        }
    }
}

void check_enum_counts(Local& L) {
    auto& st = L.stats["enum_counts"];
    for (int n = 1; n <= 6; ++n) {
        ++st.graphs_scanned;
        const int got = static_cast<int>(enumerate_connected_graphs(n).size());
        const int want = oracle_connected_count(n);
        std::vector<std::string> fails;
        if (got != want)
            fails.push_back("connected n=" + std::to_string(n) + ": " + std::to_string(got) +
                            " classes vs oracle " + std::to_string(want));
        L.settle("enum_counts", "n=" + std::to_string(n) + " connected", "", fails,
                 "enumeration counts match the brute-force oracle");
    }
    for (int n = 1; n <= 9; ++n) {
        ++st.graphs_scanned;
        const int got = static_cast<int>(enumerate_trees(n).size());
        const int want = oracle_tree_count(n);
        std::vector<std::string> fails;
        if (got != want)
            fails.push_back("trees n=" + std::to_string(n) + ": " + std::to_string(got) +
                            " classes vs oracle " + std::to_string(want));
        L.settle("enum_counts", "n=" + std::to_string(n) + " trees", "", fails,
                 "enumeration counts match the Prufer oracle");
    }
}

// ---------------------------------------------------------------------------
// Orchestration
// ---------------------------------------------------------------------------

template <class Fn>
void parallel_sweep(const std::vector<Graph>& pool, int workers, std::vector<Local>& locals,
                    const Fn& fn) {
    if (workers <= 1) {
        for (const Graph& g : pool) fn(g, locals[0]);
        return;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w)
        threads.emplace_back([&, w]() {
            for (size_t i = next.fetch_add(1); i < pool.size(); i = next.fetch_add(1))
                fn(pool[i], locals[static_cast<size_t>(w)]);
        });
    for (auto& th : threads) th.join();
}

}  // namespace

long SuiteReport::total_violations() const {
    long v = 0;
    for (const auto& [id, st] : stats) v += st.violations;
    return v;
}

long SuiteReport::total_notes() const {
    long v = 0;
    for (const auto& [id, st] : stats) v += st.notes;
    return v;
}

std::string SuiteReport::to_json(bool stable_only) const {
    nlohmann::ordered_json j;
    j["version"] = version;
    nlohmann::ordered_json cfg;
    cfg["max_n"] = config.max_n;
    cfg["trees_max_n"] = config.trees_max_n;
    cfg["lemma22_trials"] = config.lemma22_trials;
    cfg["seed"] = config.seed;
    if (!stable_only) cfg["workers"] = config.workers;
    cfg["checks"] = config.checks;
    cfg["graph6_file"] = config.graph6_file;
    j["config"] = std::move(cfg);
    nlohmann::ordered_json jstats;
    for (const auto& [id, st] : stats) {
        nlohmann::ordered_json s;
        s["graphs_scanned"] = st.graphs_scanned;
        s["eigenvalues_scanned"] = st.eigenvalues_scanned;
        s["passes"] = st.passes;
        s["violations"] = st.violations;
        s["skipped"] = st.skipped;
        s["notes"] = st.notes;
        jstats[id] = std::move(s);
    }
    j["stats"] = std::move(jstats);
    nlohmann::ordered_json jf = nlohmann::ordered_json::array();
    for (const Finding& f : findings) {
        nlohmann::ordered_json e;
        e["check"] = f.check;
        e["graph6"] = f.graph6;
        e["eigenvalue"] = f.eigenvalue;
        e["expected"] = f.expected;
        e["observed"] = f.observed;
        e["severity"] = severity_name(f.severity);
        jf.push_back(std::move(e));
    }
    j["findings"] = std::move(jf);
    j["total_violations"] = total_violations();
    if (!stable_only) j["wall_seconds"] = wall_seconds;
    return j.dump(2);
}

std::string SuiteReport::to_csv() const {
    auto quote = [](const std::string& s) {
        std::string out = "\"";
        for (char ch : s) {
            if (ch == '"') out += "\"\"";
            else out += ch;
        }
        out += "\"";
        return out;
    };
    std::string out = "check,graph6,eigenvalue,expected,observed,severity\n";
    for (const Finding& f : findings)
        out += quote(f.check) + "," + quote(f.graph6) + "," + quote(f.eigenvalue) + "," +
               quote(f.expected) + "," + quote(f.observed) + "," + quote(severity_name(f.severity)) +
               "\n";
    return out;
}

SuiteReport run_suite(const SuiteConfig& config) {
    const auto t0 = std::chrono::steady_clock::now();
    if (config.graph6_file.empty() && (config.max_n < 1 || config.max_n > 10))
        throw std::invalid_argument("run_suite: max_n must be 1..10");
    if (config.trees_max_n < 1 || config.trees_max_n > 14)
        throw std::invalid_argument("run_suite: trees_max_n must be 1..14");
    if (config.workers < 1) throw std::invalid_argument("run_suite: workers must be >= 1");
    Enabled en;
    if (config.checks.empty()) {
        en.ids.insert(all_check_ids().begin(), all_check_ids().end());
    } else {
        const auto& known = all_check_ids();
        for (const std::string& id : config.checks) {
            if (std::find(known.begin(), known.end(), id) == known.end())
                throw std::invalid_argument("run_suite: unknown check id '" + id + "'");
            en.ids.insert(id);
        }
    }

    const int workers = config.workers;
    std::vector<Local> locals(static_cast<size_t>(std::max(workers, 1)));

    const bool connected_sweep = en("thm31") || en("cor31") || en("thm32") || en("thm33") ||
                                 en("lemma33") || en("lemma31") || en("interlacing") ||
                                 en("graph6_roundtrip");
    if (connected_sweep) {
        std::vector<Graph> pool;
        if (!config.graph6_file.empty()) {
            std::ifstream in(config.graph6_file);
            if (!in) throw std::runtime_error("run_suite: cannot open " + config.graph6_file);
            std::string line;
            while (std::getline(in, line)) {
                if (!line.empty() && line.back() == '\r') line.pop_back();
                if (!line.empty()) pool.push_back(parse_graph6(line));
            }
        } else {
            for (int n = 1; n <= config.max_n; ++n)
                for (const Graph& g : enumerate_connected_graphs(n)) pool.push_back(g);
        }
        parallel_sweep(pool, workers, locals,
                       [&](const Graph& g, Local& L) { check_connected_graph(g, en, L); });
    }

    if (en("thm12") || en("thm11") || en("lemma24") || en("lemma25") || en("m0_identity")) {
        std::vector<Graph> pool;
        for (int n = 1; n <= config.trees_max_n; ++n)
            for (const Graph& t : enumerate_trees(n)) pool.push_back(t);
        parallel_sweep(pool, workers, locals,
                       [&](const Graph& t, Local& L) { check_tree(t, en, L); });
    }

    Local& solo = locals[0];
    if (en("spectra_formulas")) check_spectra_formulas(solo);
    if (en("path_identities")) check_path_identities(solo);
    if (en("lemma22")) check_lemma22(config, solo);
    if (en("lemma26")) check_lemma26(solo);
    if (en("lemma27")) check_lemma27(solo);
    if (en("thm32_positives")) check_thm32_positives(solo);
    if (en("thm33_positives")) check_thm33_positives(solo);
    if (en("enum_counts")) check_enum_counts(solo);

    SuiteReport rep;
    rep.config = config;
    for (const std::string& id : en.ids) rep.stats[id];  // stable key set
    for (Local& L : locals) {
        for (auto& [id, st] : L.stats) rep.stats[id] += st;
        rep.findings.insert(rep.findings.end(), L.findings.begin(), L.findings.end());
    }
    std::sort(rep.findings.begin(), rep.findings.end(), [](const Finding& a, const Finding& b) {
        return std::tie(a.check, a.graph6, a.eigenvalue, a.expected, a.observed) <
               std::tie(b.check, b.graph6, b.eigenvalue, b.expected, b.observed);
    });
    rep.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

// ---------------------------------------------------------------------------
// Independent enumeration oracles
// ---------------------------------------------------------------------------

int oracle_connected_count(int n) {
    if (n < 1 || n > 6) throw std::invalid_argument("oracle_connected_count: n must be 1..6");
    std::set<std::string> forms;
    const int pairs = n * (n - 1) / 2;
    for (long mask = 0; mask < (1L << pairs); ++mask) {
        std::vector<Edge> e;
        int bit = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v, ++bit)
                if ((mask >> bit) & 1) e.emplace_back(u, v);
        Graph g = Graph::from_edge_list(n, e);
        if (is_connected(g)) forms.insert(canonical_form(g));
    }
    return static_cast<int>(forms.size());
}

namespace {

std::string ahu_cert(const std::vector<std::vector<int>>& adj, int v, int parent) {
    std::vector<std::string> kids;
    for (int w : adj[static_cast<size_t>(v)])
        if (w != parent) kids.push_back(ahu_cert(adj, w, v));
    std::sort(kids.begin(), kids.end());
    std::string out = "(";
    for (auto& k : kids) out += k;
    out += ")";
    return out;
}

std::string tree_cert(const std::vector<std::vector<int>>& adj, int n) {
    std::vector<int> deg(static_cast<size_t>(n));
    std::vector<int> layer, next;
    int remaining = n;
    for (int v = 0; v < n; ++v) {
        deg[static_cast<size_t>(v)] = static_cast<int>(adj[static_cast<size_t>(v)].size());
        if (deg[static_cast<size_t>(v)] <= 1) layer.push_back(v);
    }
    while (remaining > 2) {
        remaining -= static_cast<int>(layer.size());
        next.clear();
        for (int v : layer)
            for (int w : adj[static_cast<size_t>(v)])
                if (--deg[static_cast<size_t>(w)] == 1) next.push_back(w);
        layer.swap(next);
    }
    std::string best;
    for (int c : layer) {
        std::string cert = ahu_cert(adj, c, -1);
        if (best.empty() || cert < best) best = cert;
    }
    return best;
}

}  // namespace

int oracle_tree_count(int n) {
    if (n < 1 || n > 10) throw std::invalid_argument("oracle_tree_count: n must be 1..10");
    if (n <= 2) return 1;
    std::set<std::string> forms;
    std::vector<int> seq(static_cast<size_t>(n - 2), 0);
    std::vector<int> deg(static_cast<size_t>(n));
    std::vector<std::vector<int>> adj(static_cast<size_t>(n));
    while (true) {
        for (int v = 0; v < n; ++v) {
            deg[static_cast<size_t>(v)] = 1;
            adj[static_cast<size_t>(v)].clear();
        }
        for (int x : seq) ++deg[static_cast<size_t>(x)];
        deg[static_cast<size_t>(n - 1)] += n;
        auto add_edge = [&](int a, int b) {
            adj[static_cast<size_t>(a)].push_back(b);
            adj[static_cast<size_t>(b)].push_back(a);
        };
        int ptr = 0;
        while (deg[static_cast<size_t>(ptr)] != 1) ++ptr;
        int leaf = ptr;
        for (int x : seq) {
            add_edge(leaf, x);
            if (--deg[static_cast<size_t>(x)] == 1 && x < ptr) {
                leaf = x;
            } else {
                while (deg[static_cast<size_t>(++ptr)] != 1) {}
                leaf = ptr;
            }
        }
        add_edge(leaf, n - 1);
        forms.insert(tree_cert(adj, n));
        int i = n - 3;
        while (i >= 0 && seq[static_cast<size_t>(i)] == n - 1) seq[static_cast<size_t>(i--)] = 0;
        if (i < 0) break;
        ++seq[static_cast<size_t>(i)];
    }
    return static_cast<int>(forms.size());
}

}  // namespace sgt
