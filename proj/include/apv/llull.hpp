#pragma once

#include "apv/ballot.hpp"
#include "apv/score_matrix.hpp"

namespace apv {

/// Pairwise contributions of one ballot over `universe`, as a dense 0/(1/2)/1
/// matrix of kind Absolute (i.e. for unit weight). Throws std::invalid_argument
/// when the ballot is invalid for the universe.
ScoreMatrix ballot_pairwise(const Ballot& ballot, const std::vector<OptionId>& universe, Interp interp);

/// Absolute Llull matrix: weighted sum of ballot contributions.
/// Throws DegenerateInput when the profile has no weight.
ScoreMatrix build_llull(const Profile& profile, Interp interp);

/// Divides every score by `total`. Throws std::invalid_argument unless
/// `m` is Absolute and total > 0.
ScoreMatrix to_relative(const ScoreMatrix& m, const Rational& total);

MarginMatrix margins(const ScoreMatrix& m);

class DegenerateInput : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace apv
