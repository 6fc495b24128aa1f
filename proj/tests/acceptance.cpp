// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Exercises the full verification suite at desk scale.

#include <cstdio>
#include <string>

#include "sgt/families.hpp"
#include "sgt/graph_io.hpp"
#include "sgt/harness.hpp"
#include "sgt/matching.hpp"
#include "sgt/spectral.hpp"

using namespace sgt;

namespace {

int failures = 0;

void crit(int id, const std::string& desc, bool ok) {
    std::printf("%s  criterion %2d: %s\n", ok ? "PASS" : "FAIL", id, desc.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

const CheckStats& st(const SuiteReport& rep, const std::string& id) { return rep.stats.at(id); }

}  // namespace

int main() {
    // Main sweep: all checks, connected graphs n <= 8, trees n <= 12.
    SuiteConfig main_cfg;  // defaults: max_n 8, trees_max_n 12, 200 trials, seed 1
    std::printf("running main suite (connected n <= %d, trees n <= %d)...\n", main_cfg.max_n,
                main_cfg.trees_max_n);
    SuiteReport rep = run_suite(main_cfg);
    std::printf("main suite done in %.1fs, %ld violations\n", rep.wall_seconds,
                rep.total_violations());

    const long kConnected8 = 1 + 1 + 2 + 6 + 21 + 112 + 853 + 11117;
    const long kTrees12 = 1 + 1 + 1 + 2 + 3 + 6 + 11 + 23 + 47 + 106 + 235 + 551;

    crit(1, "m <= beta'+c for every nonzero eigenvalue, all connected graphs n <= 8",
         st(rep, "thm31").violations == 0 && st(rep, "thm31").graphs_scanned == kConnected8 &&
             st(rep, "thm31").passes == kConnected8);

    const bool equality_classes_ok =
        classify_thm31_equality(c3aaa(0)).extremal() && classify_thm31_equality(c3aaa(1)).extremal() &&
        classify_thm31_equality(cycle(5)).extremal() && classify_thm31_equality(star(4)).extremal() &&
        !classify_thm31_equality(path(5)).extremal() && !classify_thm31_equality(cycle(4)).extremal();
    crit(2, "equality in the bound holds exactly for C3(a,a,a), C5 and trees of diameter <= 3",
         st(rep, "thm31").violations == 0 && equality_classes_ok);

    crit(3, "m <= beta'+c-1 for every nonzero eigenvalue when the diameter is >= 4",
         st(rep, "cor31").violations == 0 &&
             st(rep, "cor31").graphs_scanned == kConnected8);

    crit(4, "trees n <= 12: m = beta'-1 iff the extremal-form classifier fires",
         st(rep, "thm12").violations == 0 && st(rep, "thm12").graphs_scanned == kTrees12 &&
             st(rep, "thm12").passes == kTrees12);

    crit(5, "trees n <= 12, diam >= 4: every multiplicity-k eigenvalue yields k+1 pendant edges "
            "forming an induced matching",
         st(rep, "thm11").violations == 0 && st(rep, "thm11").graphs_scanned == kTrees12);

    // Criterion 6 runs its own sweep at n <= 9 restricted to the relevant checks.
    std::printf("running hub-decomposition sweep (connected n <= 9)...\n");
    SuiteConfig thm32_cfg;
    thm32_cfg.max_n = 9;
    thm32_cfg.checks = {"thm32", "thm32_positives"};
    SuiteReport rep9 = run_suite(thm32_cfg);
    std::printf("hub-decomposition sweep done in %.1fs, %ld violations\n", rep9.wall_seconds,
                rep9.total_violations());
    const long kConnected9 = kConnected8 + 261080;
    crit(6, "connected n <= 9, diam >= 4, beta' >= 3 plus >= 50 constructed positives: "
            "m = beta'+c-1 iff Thm32Form",
         st(rep9, "thm32").violations == 0 && st(rep9, "thm32").graphs_scanned == kConnected9 &&
             st(rep9, "thm32_positives").violations == 0 &&
             st(rep9, "thm32_positives").passes >= 50);

    {
        const Graph g = fig2_graph();
        const int m = multiplicity_rational(g, Rat(-2));
        const int bp = induced_matching_number(g).size;
        const int c = cyclomatic_number(g);
        Classification cls = classify_thm32(g, AlgNum::integer(-2));
        int twos = 0;
        for (int a : cls.cyclic_part_a)
            if (a == 2) ++twos;
        crit(7, "worked 51-vertex example: m_{-2} = 8 = beta'+c-1 with beta' = 7, c = 2, "
                "classified Thm32Form with s = 7 and two C3(2,2,2) parts",
             m == 8 && bp == 7 && c == 2 && m == bp + c - 1 &&
                 cls.tag == Classification::Tag::Thm32Form && cls.s == 7 && twos == 2);
    }

    crit(8, "closed-form spectra of K_{1,n-1} (n <= 10), C5 and C3(a,a,a) (a <= 4) match "
            "exactly; the printed m_3(C_3)=2 is flagged as a discrepancy note",
         st(rep, "spectra_formulas").violations == 0 && st(rep, "spectra_formulas").notes == 1);

    crit(9, "200 random bridge composites satisfying the hypothesis reproduce "
            "m(GuvH) = m(H-v)+m(G)-1",
         st(rep, "lemma22").violations == 0 && st(rep, "lemma22").graphs_scanned == 200);

    crit(10, "interlacing |m(G)-m(G-v)| <= 1 over all deletions (n <= 8) and, for trees, "
             "m = beta' iff diameter <= 3",
         st(rep, "interlacing").violations == 0 &&
             st(rep, "interlacing").graphs_scanned == kConnected8 &&
             st(rep, "lemma24").violations == 0 &&
             st(rep, "lemma24").graphs_scanned == kTrees12);

    crit(11, "caterpillars n <= 12 have simple nonzero eigenvalues; multiplicity-2 eigenvalues "
             "of C3(a,a,a)/C5 drop on every deletion; star-center joins keep m <= 2",
         st(rep, "lemma25").violations == 0 && st(rep, "lemma26").violations == 0 &&
             st(rep, "lemma26").graphs_scanned == 5 && st(rep, "lemma27").violations == 0 &&
             st(rep, "lemma27").graphs_scanned > 0);

    crit(12, "m = beta+c for some nonzero eigenvalue iff C3 or a star (n <= 8); with beta' >= 3 "
             "and >= 20 constructed positives, m = beta+c-1 iff Thm33Form",
         st(rep, "lemma33").violations == 0 && st(rep, "lemma33").graphs_scanned == kConnected8 &&
             st(rep, "thm33").violations == 0 && st(rep, "thm33_positives").violations == 0 &&
             st(rep, "thm33_positives").passes >= 20);

    crit(13, "m_0(T) = |V|-2*beta(T) for trees n <= 12; beta(P_n) = floor(n/2) and "
             "beta'(P_n) = floor((n+1)/3) for n <= 20",
         st(rep, "m0_identity").violations == 0 &&
             st(rep, "m0_identity").graphs_scanned == kTrees12 &&
             st(rep, "path_identities").violations == 0 &&
             st(rep, "path_identities").graphs_scanned == 19);

    {
        SuiteConfig da;
        da.max_n = 5;
        da.trees_max_n = 7;
        da.lemma22_trials = 20;
        SuiteConfig db = da;
        da.workers = 1;
        db.workers = 4;
        const bool deterministic =
            run_suite(da).to_json(true) == run_suite(db).to_json(true);
        crit(14, "graph6 round-trip byte-identical on the full n <= 8 stream; enumeration counts "
                 "match the oracles; reports identical across worker counts",
             st(rep, "graph6_roundtrip").violations == 0 &&
                 st(rep, "graph6_roundtrip").passes == kConnected8 &&
                 st(rep, "enum_counts").violations == 0 && deterministic);
    }

    if (failures == 0) {
        std::printf("all 14 criteria passed\n");
        return 0;
    }
    std::printf("%d criteria FAILED\n", failures);
    return 1;
}
