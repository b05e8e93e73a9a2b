#include "apv/baselines.hpp"
#include "apv/choosers.hpp"
#include "apv/llull.hpp"
#include "apv/oracle.hpp"
#include "apv/path_scores.hpp"
#include "apv/properties.hpp"
#include "apv/reference_profiles.hpp"

#include "doctest.h"

using namespace apv;

namespace {

ScoreMatrix pm_of(const std::string& text, Interp interp = {}) {
    return path_scores(build_llull(parse_profile(text), interp));
}

// Fills every pair up to v(x,y) + v(y,x) = 1, as when nobody abstains.
ScoreMatrix complete(ScoreMatrix m) {
    for (std::size_t x = 0; x < m.size(); ++x)
        for (std::size_t y = x + 1; y < m.size(); ++y) m.at(y, x) = 1 - m.at(x, y);
    return m;
}

ChoiceSet set_of(const ScoreMatrix& m, std::vector<std::string> names) { return choice_of(m.options(), names); }

}  // namespace

TEST_CASE("two-proposal cycle: the status quo wins both ways") {
    const ScoreMatrix pm = pm_of(reference::two_proposal_cycle_text());
    CHECK(to_string(ranking(pm)) == "0 > b > a");
    CHECK(path_top(pm) == set_of(pm, {"0"}));
    CHECK(prac_winners(pm) == set_of(pm, {"0"}));
    const Relation r = ranking_relation(pm);
    const std::size_t a = pm.index_of(OptionId("a")), b = pm.index_of(OptionId("b")), z = pm.default_index();
    CHECK(r(z, a));
    CHECK(r(z, b));
    CHECK(r(b, a));
    CHECK_FALSE(r(a, b));
    CHECK_FALSE(r(a, z));
    CHECK_FALSE(r(b, z));
}

TEST_CASE("Bern referendum") {
    const ScoreMatrix pm = path_scores(reference::bern_2004_matrix());
    CHECK(to_string(ranking(pm)) == "b > a > 0");
    CHECK(path_top(pm) == set_of(pm, {"b"}));
    CHECK(prac_winners(pm) == set_of(pm, {"a"}));
}

TEST_CASE("Condorcet winner, revised approval and path-top disagree") {
    const ScoreMatrix pm = pm_of(reference::condorcet_approval_split_text());
    CHECK(path_top(pm) == set_of(pm, {"a"}));
    CHECK(prac_winners(pm) == set_of(pm, {"c"}));
    CHECK(is_dominant_set(path_top(pm), pm));
    CHECK(is_dominant_set(set_of(pm, {"a", "b", "c", "d", "0"}), pm));
    CHECK_FALSE(is_dominant_set(set_of(pm, {"d"}), pm));
    CHECK_THROWS_AS(is_dominant_set(ChoiceSet{}, pm), std::invalid_argument);
}

TEST_CASE("raising d in one ballot removes it from the path-top set") {
    const ScoreMatrix before = pm_of(reference::path_top_nonmonotone_text(false));
    const ScoreMatrix after = pm_of(reference::path_top_nonmonotone_text(true));
    CHECK(path_top(before) == set_of(before, {"a", "b", "c", "d", "e"}));
    const Relation r = ranking_relation(before);
    for (std::size_t x = 0; x < 5; ++x)
        for (std::size_t y = 0; y < 5; ++y) CHECK(r(x, y));
    CHECK(to_string(ranking(after)) == "a > b > c > d > e > 0");
    CHECK(path_top(after) == set_of(after, {"a"}));
}

TEST_CASE("Pareto-dominated option survives both sets") {
    const ScoreMatrix pm = pm_of(reference::pareto_boundary_text());
    CHECK(ranking(pm).levels.size() == 1);
    CHECK(path_top(pm) == set_of(pm, {"a", "b", "c", "0"}));
    CHECK(prac_winners(pm) == set_of(pm, {"a", "b"}));
}

TEST_CASE("a slight majority against unanimous approval") {
    const Rational eps(1, 1000);
    const ScoreMatrix m = build_llull(parse_profile(reference::slight_preference_text(eps)), Interp{});
    const ScoreMatrix pm = oracle::brute_path_scores(m);
    CHECK(margin0(pm, OptionId("a")) == 2 * eps);
    CHECK(margin0(pm, OptionId("b")) == Rational(1, 2) + eps);
    CHECK(prac_winners(path_scores(m)) == set_of(pm, {"b"}));
}

TEST_CASE("revised approval edge cases") {
    auto rel = [](std::vector<long> v) {
        std::vector<Rational> r(v.begin(), v.end());
        return ScoreMatrix::from_rows({OptionId("a"), OptionId("b"), kDefaultOption}, MatrixKind::PathAbsolute, r);
    };
    // Best margin exactly zero: the boundary option joins 0.
    const ScoreMatrix zero_best = rel({0, 3, 2, 1, 0, 1, 2, 4, 0});
    CHECK(prac_winners(zero_best) == set_of(zero_best, {"a", "0"}));
    const ScoreMatrix negative = rel({0, 3, 1, 1, 0, 1, 2, 4, 0});
    CHECK(prac_winners(negative) == set_of(negative, {"0"}));
    const ScoreMatrix tie = rel({0, 1, 5, 1, 0, 5, 2, 2, 0});
    CHECK(prac_winners(tie) == set_of(tie, {"a", "b"}));
}

TEST_CASE("all-zero matrix ties everything") {
    const ScoreMatrix z({OptionId("a"), OptionId("b"), kDefaultOption}, MatrixKind::PathAbsolute);
    CHECK(path_top(z).size() == 3);
    CHECK(to_string(ranking(z)) == "a = b = 0");
    CHECK(prac_winners(z) == set_of(z, {"a", "b", "0"}));
}

TEST_CASE("ranking levels are the mutual-reachability classes") {
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
        const ScoreMatrix pm = path_scores(properties::random_llull(seed, 2 + seed % 6));
        const Relation r = ranking_relation(pm);
        const WeakOrder w = ranking(pm);
        std::vector<std::size_t> level(pm.size());
        std::size_t covered = 0;
        for (std::size_t l = 0; l < w.levels.size(); ++l)
            for (const auto& x : w.levels[l]) {
                level[pm.index_of(x)] = l;
                ++covered;
            }
        CHECK(covered == pm.size());
        for (std::size_t x = 0; x < pm.size(); ++x)
            for (std::size_t y = 0; y < pm.size(); ++y) {
                CHECK((level[x] == level[y]) == (r(x, y) && r(y, x)));
                if (level[x] < level[y]) CHECK((r(x, y) && !r(y, x)));
            }
    }
}

TEST_CASE("path-top matches the brute-force minimal dominant set") {
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
        const ScoreMatrix pm = path_scores(properties::random_llull(seed, 2 + seed % 6));
        const ChoiceSet top = path_top(pm);
        CHECK(top == oracle::brute_minimal_dominant(pm));
        CHECK(is_dominant_set(top, pm));
        CHECK(oracle::brute_minimal_dominant_sets(pm).size() == 1);
    }
}

TEST_CASE("singleton path-top criterion, and Condorcet consistency without abstentions") {
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
        const ScoreMatrix m = complete(properties::random_llull(seed, 2 + seed % 6));
        const ScoreMatrix pm = path_scores(m);
        const std::size_t n = m.size();
        for (std::size_t x = 0; x < n; ++x) {
            bool beats_path = true, beats_raw = true;
            for (std::size_t y = 0; y < n; ++y) {
                if (y == x) continue;
                beats_path = beats_path && pm.at(x, y) > pm.at(y, x);
                beats_raw = beats_raw && m.at(x, y) > m.at(y, x);
            }
            const bool singleton = path_top(pm) == ChoiceSet{{m.options()[x]}};
            CHECK(singleton == beats_path);
            if (beats_raw) CHECK(singleton);
        }
    }
}

TEST_CASE("with abstentions a Condorcet winner can miss the path-top set") {
    // 0 beats e 1/7 to 0, yet e reaches 0 through e > b > c > 0 at 1/3 while
    // the best path from 0 to e only carries 3/10.
    const std::vector<OptionId> opts{OptionId("b"), OptionId("c"), OptionId("e"), kDefaultOption};
    std::vector<Rational> v(16, 0);
    auto set = [&](std::size_t x, std::size_t y, long p, long q) {
        v[x * 4 + y] = Rational(p, q);
        v[x * 4 + y].canonicalize();
    };
    set(0, 1, 1, 3), set(1, 0, 1, 6);
    set(0, 3, 3, 11), set(3, 0, 6, 11);
    set(1, 2, 3, 10);
    set(1, 3, 1, 3), set(3, 1, 1, 2);
    set(2, 0, 1, 1);
    set(3, 2, 1, 7);
    const ScoreMatrix m = ScoreMatrix::from_rows(opts, MatrixKind::Relative, v);
    REQUIRE(condorcet_winner(m) == kDefaultOption);
    const ScoreMatrix pm = path_scores(m);
    CHECK(pm.at(2, 3) == Rational(1, 3));
    CHECK(pm.at(3, 2) == Rational(3, 10));
    CHECK_FALSE(path_top(pm).contains(kDefaultOption));
}

TEST_CASE("choosers ignore a positive rescaling") {
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const ScoreMatrix m = properties::random_llull(seed, 2 + seed % 6);
        ScoreMatrix scaled = m;
        for (std::size_t x = 0; x < m.size(); ++x)
            for (std::size_t y = 0; y < m.size(); ++y) scaled.at(x, y) *= 37;
        scaled.set_kind(MatrixKind::Absolute);
        CHECK(path_top(path_scores(m)) == path_top(path_scores(scaled)));
        CHECK(prac_winners(path_scores(m)) == prac_winners(path_scores(scaled)));
    }
}

TEST_CASE("choice set helpers") {
    const std::vector<OptionId> order{OptionId("a"), OptionId("b"), kDefaultOption};
    const ChoiceSet s = choice_of(order, {"0", "a"});
    CHECK(to_string(s) == "{a, 0}");
    CHECK(s.subset_of(choice_of(order, {"a", "b", "0"})));
    CHECK_FALSE(s.subset_of(choice_of(order, {"a"})));
    CHECK_THROWS_AS(choice_of(order, {"z"}), std::invalid_argument);
}
