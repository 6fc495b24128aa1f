#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>

#include "sgt/families.hpp"
#include "sgt/graph_io.hpp"
#include "sgt/harness.hpp"
#include "sgt/serialize.hpp"

using namespace sgt;

TEST_CASE("small full suite passes with exactly one discrepancy note") {
    SuiteConfig cfg;
    cfg.max_n = 5;
    cfg.trees_max_n = 7;
    cfg.lemma22_trials = 20;
    SuiteReport rep = run_suite(cfg);
    CHECK(rep.total_violations() == 0);
    CHECK(rep.total_notes() == 1);
    CHECK(rep.stats.at("thm31").graphs_scanned == 1 + 1 + 2 + 6 + 21);
    CHECK(rep.stats.at("thm12").graphs_scanned == 1 + 1 + 1 + 2 + 3 + 6 + 11);
    CHECK(rep.stats.at("lemma22").graphs_scanned == 20);
    // skip/pass/violation counters sum to the instances scanned
    for (const auto& [id, st] : rep.stats)
        CHECK(st.passes + st.violations + st.skipped == st.graphs_scanned);
    // the violations counter matches the findings list
    long viols = 0;
    for (const Finding& f : rep.findings)
        if (f.severity == Severity::Violation) ++viols;
    CHECK(viols == rep.total_violations());
    CHECK(rep.version == std::string(kToolkitVersion));
}

TEST_CASE("reports are deterministic across worker counts") {
    SuiteConfig a;
    a.max_n = 5;
    a.trees_max_n = 6;
    a.lemma22_trials = 10;
    SuiteConfig b = a;
    a.workers = 1;
    b.workers = 4;
    SuiteReport ra = run_suite(a);
    SuiteReport rb = run_suite(b);
    CHECK(ra.to_json(/*stable_only=*/true) == rb.to_json(/*stable_only=*/true));
    CHECK(ra.to_csv() == rb.to_csv());
}

TEST_CASE("check filtering restricts the stat set") {
    SuiteConfig cfg;
    cfg.trees_max_n = 6;
    cfg.checks = {"thm12", "m0_identity"};
    SuiteReport rep = run_suite(cfg);
    CHECK(rep.stats.size() == 2);
    CHECK(rep.stats.count("thm12") == 1);
    CHECK(rep.stats.count("m0_identity") == 1);
    CHECK(rep.total_violations() == 0);
    CHECK_THROWS_AS(run_suite([] {
                        SuiteConfig c;
                        c.checks = {"no_such_check"};
                        return c;
                    }()),
                    std::invalid_argument);
}

TEST_CASE("external graph6 corpora feed the connected sweep") {
    const char* fname = "harness_corpus.g6";
    {
        std::ofstream out(fname);
        out << emit_graph6(cycle(5)) << "\n";
        out << emit_graph6(star(4)) << "\n";
        out << emit_graph6(disjoint_union(path(2), path(2))) << "\n";  // skipped: disconnected
    }
    SuiteConfig cfg;
    cfg.graph6_file = fname;
    cfg.checks = {"thm31"};
    SuiteReport rep = run_suite(cfg);
    std::remove(fname);
    CHECK(rep.stats.at("thm31").graphs_scanned == 3);
    CHECK(rep.stats.at("thm31").passes == 2);
    CHECK(rep.stats.at("thm31").skipped == 1);
    CHECK(rep.total_violations() == 0);
}

TEST_CASE("report serialization carries the findings") {
    SuiteConfig cfg;
    cfg.checks = {"spectra_formulas"};
    SuiteReport rep = run_suite(cfg);
    const std::string json = rep.to_json();
    CHECK(json.find("\"paper-discrepancy-note\"") != std::string::npos);
    CHECK(json.find("m_{-1}(C_3)=2") != std::string::npos);
    const std::string csv = rep.to_csv();
    CHECK(csv.rfind("check,graph6,eigenvalue,expected,observed,severity\n", 0) == 0);
    CHECK(csv.find("paper-discrepancy-note") != std::string::npos);
}

TEST_CASE("enumeration oracles") {
    CHECK(oracle_connected_count(5) == 21);
    CHECK(oracle_connected_count(6) == 112);
    CHECK(oracle_tree_count(7) == 11);
    CHECK(oracle_tree_count(9) == 47);
    CHECK_THROWS(oracle_connected_count(7));
}

TEST_CASE("polynomial and algebraic-number JSON round-trips") {
    IntPoly p{-1, 1, 1};
    Json j = poly_to_json(p);
    CHECK(j.dump() == "[\"-1\",\"1\",\"1\"]");
    CHECK(poly_from_json(j) == p);

    AlgNum golden = AlgNum::root_of(p, Rat(0), Rat(1));
    AlgNum back = algnum_from_json(algnum_to_json(golden));
    CHECK(alg_equal(golden, back));

    AlgNum half = AlgNum::rational(Rat(1, 2));
    Json jh = algnum_to_json(half);
    CHECK(jh["lo"] == "1/2");
    CHECK(algnum_from_json(jh).is_rational());
}

TEST_CASE("eigenvalue spec parsing") {
    CHECK(parse_eigenvalue_spec("3/2").rational_value() == Rat(3, 2));
    CHECK(parse_eigenvalue_spec("-2").rational_value() == Rat(-2));
    AlgNum golden = parse_eigenvalue_spec("poly:-1,1,1;interval:0,1");
    CHECK(!golden.is_rational());
    CHECK(alg_equal(golden, AlgNum::root_of(IntPoly{-1, 1, 1}, Rat(0), Rat(1))));
    CHECK_THROWS(parse_eigenvalue_spec("poly:-1,1,1"));
    CHECK_THROWS(parse_eigenvalue_spec("poly:;interval:0,1"));
    CHECK_THROWS(parse_eigenvalue_spec("abc"));
}

TEST_CASE("classification serialization names the decomposition") {
    Classification c = classify_thm32(fig2_graph(), AlgNum::integer(-2));
    Json j = classification_to_json(c);
    CHECK(j["tag"] == "Thm32Form");
    CHECK(j["extremal"] == true);
    CHECK(j["s"] == 7);
    CHECK(j["cyclic_part_a"].size() == 2);
}
