#include "apv/llull.hpp"
#include "apv/properties.hpp"
#include "apv/reference_profiles.hpp"

#include "doctest.h"

#include <algorithm>

using namespace apv;
using namespace apv::properties;

TEST_CASE("generators are deterministic and respect their bounds") {
    CHECK(random_profile(1, 3, 4, 9) == random_profile(1, 3, 4, 9));
    CHECK(random_llull(5, 4) == random_llull(5, 4));
    const Profile two = random_profile(2, 2, 6, 3);
    CHECK(two.universe == std::vector<OptionId>{OptionId("a"), OptionId("b"), kDefaultOption});
    for (const auto& e : two.entries) {
        CHECK(validate_ballot(e.ballot, two.universe).empty());
        CHECK(e.weight >= 1);
        CHECK(e.weight <= 3);
    }
    CHECK_THROWS_AS(random_profile(1, 1, 4, 9), std::invalid_argument);
    CHECK_THROWS_AS(random_profile(1, 8, 4, 9), std::invalid_argument);
    CHECK_THROWS_AS(random_profile(1, 3, 0, 9), std::invalid_argument);
    CHECK_THROWS_AS(random_llull(1, 1), std::invalid_argument);
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        const ScoreMatrix m = random_llull(seed, 2 + seed % 6);
        CHECK(m.kind() == MatrixKind::Relative);
        for (std::size_t x = 0; x < m.size(); ++x)
            for (std::size_t y = 0; y < m.size(); ++y)
                if (x != y) {
                    CHECK(m.at(x, y) >= 0);
                    CHECK(m.at(x, y) + m.at(y, x) <= 1);
                }
    }
}

TEST_CASE("raise_option changes only the raised option's pairs") {
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
        const ScoreMatrix m = random_llull(seed, 3 + seed % 4);
        const OptionId a = m.options()[seed % m.size()];
        ScoreMatrix r;
        try {
            r = raise_option(m, a, seed);
        } catch (const std::invalid_argument&) {
            continue;
        }
        const std::size_t ai = m.index_of(a);
        bool changed = false;
        for (std::size_t x = 0; x < m.size(); ++x)
            for (std::size_t y = 0; y < m.size(); ++y) {
                if (x == y) continue;
                if (x == ai) CHECK(r.at(x, y) >= m.at(x, y));
                else if (y == ai) CHECK(r.at(x, y) <= m.at(x, y));
                else CHECK(r.at(x, y) == m.at(x, y));
                CHECK(r.at(x, y) + r.at(y, x) <= 1);
                changed = changed || r.at(x, y) != m.at(x, y);
            }
        CHECK(changed);
    }
}

TEST_CASE("raise_option rejects a maximal option") {
    std::vector<Rational> v{0, 1, 0, 0};
    const ScoreMatrix top = ScoreMatrix::from_rows({OptionId("a"), kDefaultOption}, MatrixKind::Relative, v);
    CHECK_THROWS_AS(raise_option(top, OptionId("a"), 1), std::invalid_argument);
    CHECK_THROWS_AS(raise_option(top, OptionId("a"), 1, std::nullopt), std::invalid_argument);
    ScoreMatrix abs = top;
    abs.set_kind(MatrixKind::Absolute);
    CHECK_THROWS_AS(raise_option(abs, OptionId("0"), 1), std::invalid_argument);
    CHECK_NOTHROW(raise_option(abs, OptionId("0"), 1, Rational(1)));
}

TEST_CASE("the ballot-level raise of d reproduces the modified profile") {
    const Profile before = parse_profile(reference::path_top_nonmonotone_text(false));
    const Profile after = parse_profile(reference::path_top_nonmonotone_text(true));
    CHECK(raise_in_ballot(before, before.entries.size() - 1, OptionId("d")) == after);
    const ScoreMatrix mb = build_llull(before, Interp{}), ma = build_llull(after, Interp{});
    CHECK(ma.at(OptionId("d"), OptionId("b")) == mb.at(OptionId("d"), OptionId("b")) + 1);
    CHECK(ma.at(OptionId("b"), OptionId("d")) == mb.at(OptionId("b"), OptionId("d")) - 1);
}

TEST_CASE("raise_in_ballot steps") {
    const Profile p = parse_profile("options: a b c\n1: b = a > c\n1: c > a\n");
    CHECK(to_string(raise_in_ballot(p, 0, OptionId("a")).entries[0].ballot) == "a > b > c");
    CHECK(to_string(raise_in_ballot(p, 1, OptionId("a")).entries[1].ballot) == "a > c");
    CHECK(to_string(raise_in_ballot(p, 1, OptionId("b")).entries[1].ballot) == "b > c > a");
    CHECK_THROWS_AS(raise_in_ballot(p, 1, OptionId("c")), std::invalid_argument);
    CHECK_THROWS_AS(raise_in_ballot(p, 5, OptionId("a")), std::out_of_range);
}

TEST_CASE("inject_clones keeps every comparison with outsiders") {
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        const Profile p = random_profile(seed, 3, 5, 9);
        const OptionId x = p.universe[seed % (p.universe.size() - 1)];
        const std::size_t k = 2 + seed % 2;
        const Profile q = inject_clones(p, x, k, seed);
        const auto clones = clone_names(p, x, k);
        for (const auto policy : {UnrankedPolicy::BelowRanked, UnrankedPolicy::Incomparable}) {
            const ScoreMatrix mp = build_llull(p, Interp{policy}), mq = build_llull(q, Interp{policy});
            for (const auto& y : p.universe) {
                if (y == x) continue;
                for (const auto& c : clones) {
                    CHECK(mq.at(c, y) == mp.at(x, y));
                    CHECK(mq.at(y, c) == mp.at(y, x));
                }
                for (const auto& z : p.universe)
                    if (z != x && z != y) CHECK(mq.at(y, z) == mp.at(y, z));
            }
        }
    }
}

TEST_CASE("inject_clones on one ballot") {
    const Profile p = parse_profile("1: a > x > b\n");
    const Profile q = inject_clones(p, OptionId("x"), 2, 3);
    const auto& groups = q.entries[0].ballot.groups;
    REQUIRE(groups.size() == 4);
    CHECK(groups[1].size() == 1);
    CHECK(groups[2].size() == 1);
    CHECK(groups[1][0] != groups[2][0]);
    CHECK_THROWS_AS(inject_clones(p, kDefaultOption, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(inject_clones(p, OptionId("x"), 1, 1), std::invalid_argument);
}

TEST_CASE("the adjacent pair in the boundary example behaves as a clone block") {
    const Profile p = parse_profile(reference::pareto_boundary_text());
    const ScoreMatrix m = build_llull(p, Interp{});
    const OptionId a("a"), b("b"), c("c");
    for (const OptionId& y : {c, kDefaultOption}) {
        CHECK(m.at(a, y) == m.at(b, y));
        CHECK(m.at(y, a) == m.at(y, b));
    }
}

TEST_CASE("perturb stays inside its radius and the constraints") {
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
        const ScoreMatrix m = random_llull(seed, 2 + seed % 6);
        const Rational eps(1, 1 + static_cast<long>(seed % 50));
        const ScoreMatrix p = perturb(m, eps, seed);
        CHECK(p == perturb(m, eps, seed));
        CHECK(sup_distance(m, p) < eps);
        for (std::size_t x = 0; x < m.size(); ++x)
            for (std::size_t y = 0; y < m.size(); ++y)
                if (x != y) {
                    CHECK(p.at(x, y) >= 0);
                    CHECK(p.at(x, y) <= 1);
                    CHECK(p.at(x, y) + p.at(y, x) <= 1);
                }
    }
    CHECK_THROWS_AS(perturb(random_llull(1, 3), 0, 1), std::invalid_argument);
}

TEST_CASE("suite registry") {
    const auto& names = suite_names();
    for (const char* n : {"schulze-transitivity", "min-inequality", "laia", "prac-monotonicity",
                          "path-top-singleton-monotonicity", "usc-prac", "usc-path-top", "clones", "pareto",
                          "confidence-dominance", "oracle-equivalence"})
        CHECK(std::find(names.begin(), names.end(), n) != names.end());
    CHECK(default_trials("schulze-transitivity") == 10000);
    CHECK(default_trials("clones") == 1000);
    CHECK_THROWS_AS(default_trials("nosuch"), std::invalid_argument);
    CHECK_THROWS_AS(run_suite("nosuch", 1, 1), std::invalid_argument);
}

TEST_CASE("every suite passes a short seeded run") {
    for (const auto& name : suite_names()) {
        const SuiteReport r = run_suite(name, 200, 7);
        CAPTURE(name);
        CHECK(r.trials == 200);
        if (!r.passed()) FAIL(r.failures.front().counterexample);
    }
}

TEST_CASE("trials replay from their seed") {
    CHECK(run_trial("schulze-transitivity", 12345) == run_trial("schulze-transitivity", 12345));
    CHECK_FALSE(run_trial("oracle-equivalence", 99).has_value());
}
