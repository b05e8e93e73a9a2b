#pragma once

// Worked-example inputs used by the verification suites, the tests and the
// files under data/.

#include "apv/ballot.hpp"
#include "apv/score_matrix.hpp"

#include <string>

namespace apv::reference {

/// Two proposals whose majorities cycle with the status quo (a > 0 > b > a).
std::string two_proposal_cycle_text();
/// Four options where the Condorcet winner, the approval choice and the
/// revised approval choice all differ. Read with unranked-below semantics.
std::string condorcet_approval_split_text();
/// Five options, no default, whose path-top set is everything; `modified`
/// swaps b and d in the last ballot.
std::string path_top_nonmonotone_text(bool modified = false);
/// All voters rank a directly above b, yet both are chosen.
std::string pareto_boundary_text();
/// 1/2+eps: a > b > 0 and 1/2-eps: b > 0 > a.
std::string slight_preference_text(const Rational& eps);
/// Full rankings over five options where Bucklin flips with the sign of eps.
std::string bucklin_flip_text(const Rational& eps);

/// Pairwise counts of the 2004 Bern referendum (a: parliament's amendment,
/// b: people's amendment, 0: status quo); 225758 voters in total.
ScoreMatrix bern_2004_matrix();
inline constexpr long kBern2004Voters = 225758;

}  // namespace apv::reference
