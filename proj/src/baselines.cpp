#include "apv/baselines.hpp"

#include "apv/llull.hpp"

#include <algorithm>
#include <stdexcept>

namespace apv {

ChoiceSet approval_winners(const ScoreMatrix& m) {
    const std::size_t n = m.size();
    const std::size_t d = m.default_index();
    if (d == n) throw std::invalid_argument("approval_winners: matrix has no default option");
    if (n < 2) throw std::invalid_argument("approval_winners: no option besides 0");

    std::vector<Rational> score(n);
    std::optional<Rational> best;
    for (std::size_t x = 0; x < n; ++x) {
        if (x == d) continue;
        score[x] = m.at(x, d) - m.at(d, x);
        if (!best || score[x] > *best) best = score[x];
    }
    std::vector<bool> mask(n, false);
    for (std::size_t x = 0; x < n; ++x) mask[x] = x != d && score[x] == *best;
    return choice_from_mask(m.options(), mask);
}

std::optional<OptionId> condorcet_winner(const ScoreMatrix& m) {
    const std::size_t n = m.size();
    for (std::size_t x = 0; x < n; ++x) {
        bool beats_all = true;
        for (std::size_t y = 0; y < n && beats_all; ++y) beats_all = x == y || m.at(x, y) > m.at(y, x);
        if (beats_all) return m.options()[x];
    }
    return std::nullopt;
}

ChoiceSet copeland(const ScoreMatrix& m, const ChoiceSet& subset) {
    if (subset.members.empty()) throw std::invalid_argument("copeland: empty subset");
    std::vector<std::size_t> idx;
    for (const auto& x : subset.members) idx.push_back(m.index_of(x));

    std::vector<long> score(idx.size(), 0);
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = 0; b < idx.size(); ++b) {
            if (a == b) continue;
            const int c = cmp(m.at(idx[a], idx[b]), m.at(idx[b], idx[a]));
            score[a] += c > 0 ? 1 : (c < 0 ? -1 : 0);
        }
    const long best = *std::max_element(score.begin(), score.end());
    std::vector<bool> mask(m.size(), false);
    for (std::size_t a = 0; a < idx.size(); ++a)
        if (score[a] == best) mask[idx[a]] = true;
    return choice_from_mask(m.options(), mask);
}

ChoiceSet swiss_procedure(const ScoreMatrix& m) {
    const std::size_t n = m.size();
    const std::size_t d = m.default_index();
    if (d == n) throw std::invalid_argument("swiss_procedure: matrix has no default option");

    std::vector<bool> approved(n, false);
    for (std::size_t x = 0; x < n; ++x) approved[x] = x != d && m.at(x, d) > m.at(d, x);
    const ChoiceSet set = choice_from_mask(m.options(), approved);

    if (set.members.empty()) return ChoiceSet{{kDefaultOption}};
    if (set.members.size() == 1) return set;
    if (set.members.size() == 2) {
        const std::size_t a = m.index_of(set.members[0]);
        const std::size_t b = m.index_of(set.members[1]);
        const int c = cmp(m.at(a, b), m.at(b, a));
        if (c > 0) return ChoiceSet{{set.members[0]}};
        if (c < 0) return ChoiceSet{{set.members[1]}};
        return set;
    }
    return copeland(m, set);
}

BucklinOutcome bucklin_tally(const Profile& profile) {
    const Rational total = total_weight(profile);
    if (total <= 0) throw DegenerateInput("profile has no votes");
    const std::size_t n = profile.universe.size();

    // Approved prefix of each ballot, as group lists of universe indices.
    std::size_t max_depth = 0;
    std::vector<std::vector<std::vector<std::size_t>>> approved;
    approved.reserve(profile.entries.size());
    for (const auto& e : profile.entries) {
        const int bar = e.ballot.group_of(kDefaultOption);
        const std::size_t end = bar < 0 ? e.ballot.groups.size() : static_cast<std::size_t>(bar);
        std::vector<std::vector<std::size_t>> groups;
        for (std::size_t g = 0; g < end; ++g) {
            std::vector<std::size_t> group;
            for (const auto& x : e.ballot.groups[g]) group.push_back(profile.index_of(x));
            groups.push_back(std::move(group));
        }
        max_depth = std::max(max_depth, groups.size());
        approved.push_back(std::move(groups));
    }

    BucklinOutcome out;
    std::vector<Rational> running(n, 0);
    for (std::size_t k = 1; k <= max_depth; ++k) {
        for (std::size_t b = 0; b < approved.size(); ++b)
            if (k <= approved[b].size())
                for (std::size_t x : approved[b][k - 1]) running[x] += profile.entries[b].weight;
        out.cumulative.push_back(running);

        std::vector<bool> alive(n, false);
        bool any = false;
        for (std::size_t x = 0; x < n; ++x)
            if (2 * running[x] > total) alive[x] = any = true;
        if (!any) continue;

        // Keep the largest counts at depth k, then k-1, ... down to 1.
        for (std::size_t level = k; level >= 1; --level) {
            const auto& counts = out.cumulative[level - 1];
            std::optional<Rational> best;
            for (std::size_t x = 0; x < n; ++x)
                if (alive[x] && (!best || counts[x] > *best)) best = counts[x];
            for (std::size_t x = 0; x < n; ++x)
                if (alive[x] && counts[x] != *best) alive[x] = false;
        }
        out.winners = choice_from_mask(profile.universe, alive);
        out.depth = k;
        return out;
    }
    out.winners = ChoiceSet{{kDefaultOption}};
    return out;
}

ChoiceSet condorcet_bucklin(const Profile& profile) { return bucklin_tally(profile).winners; }

}  // namespace apv
