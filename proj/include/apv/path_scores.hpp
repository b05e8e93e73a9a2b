#pragma once

#include "apv/kernels/widest_path.hpp"
#include "apv/score_matrix.hpp"

namespace apv {

/// Max-min path scores: for every ordered pair, the largest over simple paths
/// x..y of the smallest score along the path. Input must be Absolute or
/// Relative; the result is PathAbsolute or PathRelative accordingly.
///
/// The closure only ever selects existing values, so the scores are replaced
/// by their ranks in sorted order, closed with the fastest available int32
/// kernel, and mapped back. The result is exact.
ScoreMatrix path_scores(const ScoreMatrix& m);
ScoreMatrix path_scores(const ScoreMatrix& m, kernels::Isa isa);

/// Floyd-Warshall directly over rationals. Reference for path_scores.
ScoreMatrix path_scores_reference(const ScoreMatrix& m);

/// Revised approval margin pm(x,0) - pm(0,x); zero for x = 0.
/// Throws std::out_of_range when x or `0` is missing from the matrix.
Rational margin0(const ScoreMatrix& pm, const OptionId& x);
Rational margin0(const ScoreMatrix& pm, std::size_t x);

}  // namespace apv
