#include "apv/baselines.hpp"
#include "apv/llull.hpp"
#include "apv/path_scores.hpp"
#include "apv/properties.hpp"
#include "apv/reference_profiles.hpp"

#include "doctest.h"

#include <algorithm>
#include <random>

using namespace apv;

namespace {

ScoreMatrix llull_of(const std::string& text) { return build_llull(parse_profile(text), Interp{}); }

ChoiceSet set_of(const std::vector<OptionId>& order, std::vector<std::string> names) {
    return choice_of(order, names);
}

ScoreMatrix abs_matrix(std::vector<OptionId> opts, std::vector<long> v) {
    return ScoreMatrix::from_rows(std::move(opts), MatrixKind::Absolute, std::vector<Rational>(v.begin(), v.end()));
}

}  // namespace

TEST_CASE("approval choice") {
    const ScoreMatrix cycle = llull_of(reference::two_proposal_cycle_text());
    CHECK(approval_winners(cycle) == set_of(cycle.options(), {"a"}));
    const ScoreMatrix split = llull_of(reference::condorcet_approval_split_text());
    CHECK(approval_winners(split) == set_of(split.options(), {"d"}));
    const ScoreMatrix tie = llull_of("1: a = b | \n");
    CHECK(approval_winners(tie) == set_of(tie.options(), {"a", "b"}));
    CHECK_THROWS_AS(approval_winners(ScoreMatrix({kDefaultOption}, MatrixKind::Absolute)), std::invalid_argument);
}

TEST_CASE("approval ignores the order below the bar") {
    std::mt19937_64 rng(9);
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        const Profile p = properties::random_profile(seed, 5, 6, 9);
        Profile q = p;
        for (auto& e : q.entries) {
            const int bar = e.ballot.group_of(kDefaultOption);
            if (bar >= 0) std::shuffle(e.ballot.groups.begin() + bar + 1, e.ballot.groups.end(), rng);
        }
        CHECK(approval_winners(build_llull(p, Interp{})) == approval_winners(build_llull(q, Interp{})));
    }
}

TEST_CASE("Condorcet winner detection") {
    const ScoreMatrix split = llull_of(reference::condorcet_approval_split_text());
    CHECK(condorcet_winner(split) == OptionId("a"));
    CHECK_FALSE(condorcet_winner(llull_of(reference::two_proposal_cycle_text())).has_value());
    CHECK(condorcet_winner(llull_of("5: x |\n")) == OptionId("x"));
}

TEST_CASE("without abstentions a Condorcet winner is the path-top set") {
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
        ScoreMatrix m = properties::random_llull(seed, 2 + seed % 6);
        for (std::size_t x = 0; x < m.size(); ++x)
            for (std::size_t y = x + 1; y < m.size(); ++y) m.at(y, x) = 1 - m.at(x, y);
        if (auto w = condorcet_winner(m)) CHECK(path_top(path_scores(m)) == ChoiceSet{{*w}});
    }
}

TEST_CASE("Copeland") {
    const ScoreMatrix bern = reference::bern_2004_matrix();
    CHECK(copeland(bern, set_of(bern.options(), {"a", "b"})) == set_of(bern.options(), {"b"}));
    CHECK(copeland(bern, set_of(bern.options(), {"a"})) == set_of(bern.options(), {"a"}));
    const std::vector<OptionId> xyz{OptionId("x"), OptionId("y"), OptionId("z"), kDefaultOption};
    const ScoreMatrix cycle = abs_matrix(xyz, {0, 2, 1, 0, 1, 0, 2, 0, 2, 1, 0, 0, 0, 0, 0, 0});
    CHECK(copeland(cycle, set_of(xyz, {"x", "y", "z"})) == set_of(xyz, {"x", "y", "z"}));
    CHECK_THROWS_AS(copeland(cycle, ChoiceSet{}), std::invalid_argument);
}

TEST_CASE("Swiss procedure") {
    const ScoreMatrix cycle = llull_of(reference::two_proposal_cycle_text());
    CHECK(swiss_procedure(cycle) == set_of(cycle.options(), {"a"}));
    const ScoreMatrix bern = reference::bern_2004_matrix();
    CHECK(swiss_procedure(bern) == set_of(bern.options(), {"a"}));
    const ScoreMatrix rejected = llull_of("3: | a > b\n");
    CHECK(swiss_procedure(rejected) == set_of(rejected.options(), {"0"}));
    const ScoreMatrix only_default({kDefaultOption}, MatrixKind::Absolute);
    CHECK(swiss_procedure(only_default) == ChoiceSet{{kDefaultOption}});
    const ScoreMatrix both = llull_of("1: a > b |\n1: b > a |\n");
    CHECK(swiss_procedure(both) == set_of(both.options(), {"a", "b"}));
}

TEST_CASE("Swiss and Bucklin ignore a slight majority's lack of approval") {
    const Profile p = parse_profile(reference::slight_preference_text(Rational(1, 1000)));
    const ScoreMatrix m = build_llull(p, Interp{});
    CHECK(swiss_procedure(m) == set_of(m.options(), {"a"}));
    CHECK(condorcet_bucklin(p) == set_of(p.universe, {"a"}));
    CHECK(approval_winners(m) == set_of(m.options(), {"b"}));
}

TEST_CASE("Bucklin flips with the sign of a tiny weight shift") {
    const Rational eps(1, 100);
    const Profile up = parse_profile(reference::bucklin_flip_text(eps));
    const BucklinOutcome pos = bucklin_tally(up);
    CHECK(pos.winners == set_of(up.universe, {"a"}));
    CHECK(pos.depth == 3);
    CHECK(pos.cumulative[2][up.index_of(OptionId("a"))] == 7);

    const Profile down = parse_profile(reference::bucklin_flip_text(-eps));
    const BucklinOutcome neg = bucklin_tally(down);
    CHECK(neg.winners == set_of(down.universe, {"b"}));
    CHECK(neg.depth == 2);
    const std::size_t b = down.index_of(OptionId("b")), c = down.index_of(OptionId("c"));
    CHECK(neg.cumulative[1][b] == 4 + eps);
    CHECK(neg.cumulative[1][c] == 4 + eps);
    CHECK(neg.cumulative[0][b] == 3 + eps);
    CHECK(neg.cumulative[0][c] == 2);
}

TEST_CASE("Bucklin basics") {
    const Profile one = parse_profile("1: x > y\n");
    const BucklinOutcome o = bucklin_tally(one);
    CHECK(o.winners == set_of(one.universe, {"x"}));
    CHECK(o.depth == 1);

    const Profile none = parse_profile("1: | a\n1: | b\n");
    CHECK(condorcet_bucklin(none) == set_of(none.universe, {"0"}));
    CHECK(bucklin_tally(none).depth == 0);

    const Profile tied = parse_profile("1: a = b > c |\n");
    CHECK(condorcet_bucklin(tied) == set_of(tied.universe, {"a", "b"}));
    CHECK_THROWS_AS(bucklin_tally(make_profile({OptionId("a")}, {})), DegenerateInput);
}

TEST_CASE("Bucklin cumulative counts never decrease") {
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        const BucklinOutcome o = bucklin_tally(properties::random_profile(seed, 5, 8, 9));
        for (std::size_t k = 1; k < o.cumulative.size(); ++k)
            for (std::size_t i = 0; i < o.cumulative[k].size(); ++i)
                CHECK(o.cumulative[k][i] >= o.cumulative[k - 1][i]);
    }
}
