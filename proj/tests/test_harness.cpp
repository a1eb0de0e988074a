#include "synckit/harness.hpp"

#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "synckit/congruence.hpp"
#include "synckit/letters.hpp"
#include "synckit/sync.hpp"

using namespace synckit;

TEST_CASE("fixtures encode the intended tables") {
    CHECK(fixture("fig2-left").table() == std::vector<State>{1, 0, 3, 3, 0, 0, 2, 3, 4, 1});
    CHECK(fixture("fig2-right").table() ==
          std::vector<State>{3, 0, 3, 4, 0, 2, 4, 0, 3, 1, 0, 2, 1, 3, 4});
    CHECK(fixture("fig3").table() ==
          std::vector<State>{0, 0, 0, 4, 4, 4, 8, 8, 8, 3, 4, 5, 0, 1, 2, 6, 7, 8,
                             0, 1, 2, 6, 7, 8, 3, 4, 5, 0, 3, 6, 1, 4, 7, 2, 5, 8});
    CHECK(fixture("fig1-cluster").table() ==
          std::vector<State>{1, 2, 3, 0, 5, 1, 5, 0, 0, 2, 9, 9, 11, 11, 10});
    CHECK(fixture("sink3").table() == std::vector<State>{1, 2, 2, 0, 0, 2});

    CHECK(fixture_names().size() == 5);
    CHECK_THROWS_AS(fixture("unknown"), std::invalid_argument);

    CHECK(rank_and_defect(fixture("fig2-left"), {0}).second == 2);
    CHECK(word_rank(fixture("fig3"), {0}) == 3);
    CHECK(is_unimodal(fixture("fig1-cluster"), 0));
}

TEST_CASE("cerny series") {
    CHECK(cerny(2).table() == std::vector<State>{1, 0, 1, 1});
    CHECK(cerny(4).table() == std::vector<State>{1, 2, 3, 0, 1, 1, 2, 3});
    CHECK(shortest_reset_word(cerny(2)).threshold == 1);
    CHECK(shortest_reset_word(cerny(4)).threshold == 9);
    CHECK(is_primitive(cerny(4)).primitive);
    CHECK(is_permutation_primitive(cerny(4)) == PermutationPrimitivity::not_primitive);
    CHECK_THROWS_AS(cerny(1), std::invalid_argument);
}

TEST_CASE("enumeration is total, ordered, and guarded") {
    CHECK(AutomatonEnumeration(2, 1).total() == 4);
    CHECK(AutomatonEnumeration(3, 2).total() == 729);
    CHECK(AutomatonEnumeration(4, 2).total() == 65536);

    AutomatonEnumeration small(2, 1);
    CHECK(small.at(0).table() == std::vector<State>{0, 0});
    CHECK(small.at(1).table() == std::vector<State>{0, 1});
    CHECK(small.at(2).table() == std::vector<State>{1, 0});
    CHECK(small.at(3).table() == std::vector<State>{1, 1});
    CHECK_THROWS_AS(small.at(4), std::out_of_range);

    CHECK_THROWS_AS(AutomatonEnumeration(6, 2), CapacityError);
    CHECK(AutomatonEnumeration(6, 2, true).total() == 2176782336ull);
    CHECK_THROWS_AS(AutomatonEnumeration(20, 2, true), CapacityError);  // beyond 64 bits
}

TEST_CASE("random automata are reproducible and uniform-ish") {
    CHECK(random_automaton(5, 2, 42) == random_automaton(5, 2, 42));
    CHECK_FALSE(random_automaton(5, 2, 42) == random_automaton(5, 2, 43));
    CHECK(sample_seed(7, 3) == sample_seed(7, 3));
    CHECK(sample_seed(7, 3) != sample_seed(7, 4));

    // Constructor validation would throw on any out-of-range entry.
    for (std::uint64_t seed = 0; seed < 10'000; ++seed) (void)random_automaton(5, 2, seed);

    // A random map of 4 states is a permutation with probability 4!/4^4 =
    // 3/32; check the observed letter count within 3 sigma.
    const int samples = 100'000;
    std::int64_t permutations = 0;
    for (int i = 0; i < samples; ++i) {
        Automaton aut = random_automaton(4, 2, sample_seed(2024, i));
        permutations += static_cast<std::int64_t>(permutation_letters(aut).size());
    }
    const double trials = 2.0 * samples;
    const double p = 3.0 / 32.0;
    const double sigma = std::sqrt(trials * p * (1 - p));
    CHECK(std::abs(permutations - trials * p) <= 3 * sigma);
}

TEST_CASE("claim names round-trip") {
    CHECK(all_claims().size() == 11);
    for (Claim c : all_claims()) CHECK(claim_from_name(claim_name(c)) == c);
    CHECK_FALSE(claim_from_name("nope").has_value());
}

TEST_CASE("claim reports on the fixtures") {
    ClaimReport left = check_claims(fixture("fig2-left"));
    CHECK_FALSE(left.any_violated);
    CHECK(left.certificate.empty());
    for (const auto& [claim, result] : left.results) {
        CHECK_FALSE(result.violated);
        if (claim == Claim::unimodal_sync) {
            CHECK_FALSE(result.hypotheses_hold);  // primitive, but no unimodal letter
            CHECK_FALSE(result.conclusion_holds);
        }
        if (claim == Claim::dichotomy) {
            CHECK(result.hypotheses_hold);
            CHECK(result.conclusion_holds);  // strongly connected
        }
        if (claim == Claim::rank2_sync) CHECK_FALSE(result.hypotheses_hold);
    }

    ClaimReport series = check_claims(cerny(5), {Claim::small_defect_sync});
    REQUIRE(series.results.size() == 1);
    CHECK(series.results[0].second.hypotheses_hold);
    CHECK(series.results[0].second.conclusion_holds);
    CHECK_FALSE(series.results[0].second.violated);

    ClaimReport identity = check_claims(Automaton(3, 2, {0, 1, 2, 0, 1, 2}));
    CHECK_FALSE(identity.any_violated);
    for (const auto& [claim, result] : identity.results) {
        if (claim == Claim::stability_laws) {
            CHECK(result.hypotheses_hold);
            CHECK(result.conclusion_holds);
        } else if (claim != Claim::kernel_type_unimodal) {
            CHECK_FALSE(result.hypotheses_hold);  // nothing else applies
        }
    }
}

TEST_CASE("sweep over tiny spaces finds no counterexamples") {
    SweepOptions one;
    one.n = 1;
    one.k = 1;
    SweepReport r1 = sweep(one);
    CHECK(r1.total == 1);
    CHECK_FALSE(r1.any_violated());
    CHECK(r1.primitive_count == 1);
    CHECK(r1.synchronizing_count == 1);

    SweepOptions opts;
    opts.n = 3;
    opts.k = 2;
    SweepReport report = sweep(opts);
    CHECK(report.total == 729);
    CHECK(report.total_violations() == 0);
    CHECK(report.primitive_count > 0);
    CHECK(report.synchronizing_count > 0);
    CHECK(report.to_text().find("counterexamples: none") != std::string::npos);
}

TEST_CASE("sweep output is independent of the worker count") {
    SweepOptions opts;
    opts.n = 3;
    opts.k = 2;
    SweepReport base = sweep(opts);
    for (int workers : {2, 3, 8}) {
        opts.workers = workers;
        CHECK(sweep(opts).to_text() == base.to_text());
    }

    SweepOptions sampled;
    sampled.n = 6;
    sampled.k = 2;
    sampled.sample_count = 500;
    sampled.seed = 99;
    SweepReport sample_base = sweep(sampled);
    CHECK(sample_base.total == 500);
    CHECK(sample_base.total_violations() == 0);
    sampled.workers = 8;
    CHECK(sweep(sampled).to_text() == sample_base.to_text());
}

TEST_CASE("sweep report renders counterexamples when present") {
    SweepReport report;
    report.n = 3;
    report.k = 2;
    report.total = 729;
    report.claims = {Claim::defect1_sync};
    report.violations = {1};
    report.first_counterexample = {CounterexampleRecord{17, "dfa 3 2\n0 0 2\n0 1 2\n"}};
    CHECK(report.any_violated());
    std::string text = report.to_text();
    CHECK(text.find("counterexample[defect1-sync]: index 17") != std::string::npos);
    CHECK(text.find("dfa 3 2") != std::string::npos);
}

TEST_CASE("sweep guard and argument validation") {
    SweepOptions opts;
    opts.n = 6;
    opts.k = 2;
    CHECK_THROWS_AS(sweep(opts), CapacityError);
    opts.workers = 0;
    CHECK_THROWS_AS(sweep(opts), std::invalid_argument);
}
