#pragma once

#include "apv/ballot.hpp"
#include "apv/choosers.hpp"
#include "apv/score_matrix.hpp"

#include <optional>
#include <vector>

namespace apv {

/// Options maximizing approvals minus disapprovals, m(x,0) - m(0,x).
/// Throws std::invalid_argument when there is no non-default option.
ChoiceSet approval_winners(const ScoreMatrix& m);

/// The option beating every other pairwise, if any. `0` takes part.
std::optional<OptionId> condorcet_winner(const ScoreMatrix& m);

/// Copeland (wins minus losses) restricted to `subset`.
/// Throws std::invalid_argument when `subset` is empty.
ChoiceSet copeland(const ScoreMatrix& m, const ChoiceSet& subset);

/// Options approved by a majority of those comparing them with `0`; with two,
/// the pairwise winner; with more, Copeland among them; with none, `0`.
ChoiceSet swiss_procedure(const ScoreMatrix& m);

struct BucklinOutcome {
    ChoiceSet winners;
    /// Depth at which a majority first appeared; 0 when none did.
    std::size_t depth = 0;
    /// cumulative[k-1][i]: weight ranking option i within the first k
    /// approved groups, in profile.universe order.
    std::vector<std::vector<Rational>> cumulative;
};

/// Condorcet-Bucklin over the approved prefix of each ballot (groups above
/// `0`, or every ranked group when `0` is unranked). Ties among majority
/// reachers cascade to shallower depths. Throws DegenerateInput on an
/// empty profile.
BucklinOutcome bucklin_tally(const Profile& profile);
ChoiceSet condorcet_bucklin(const Profile& profile);

}  // namespace apv
