#pragma once

// Brute-force references for certifying the fast algorithms on small inputs.

#include "apv/choosers.hpp"
#include "apv/score_matrix.hpp"

#include <string>
#include <vector>

namespace apv::oracle {

inline constexpr std::size_t kMaxOptions = 8;

/// Enumerates every simple path for every ordered pair and keeps the best
/// path minimum. Throws std::invalid_argument above kMaxOptions options.
ScoreMatrix brute_path_scores(const ScoreMatrix& m);

/// All minimal dominant sets, ordered by size then lexicographically by
/// option index.
std::vector<ChoiceSet> brute_minimal_dominant_sets(const ScoreMatrix& pm);

/// First minimal dominant set in size-then-lexicographic order.
ChoiceSet brute_minimal_dominant(const ScoreMatrix& pm);

struct CrossCheckReport {
    std::vector<std::string> mismatches;
    bool passed() const noexcept { return mismatches.empty(); }
};

/// Compares path_scores against brute_path_scores, and path_top against
/// brute_minimal_dominant; every mismatch carries the serialized matrix.
CrossCheckReport cross_check(const ScoreMatrix& m);

}  // namespace apv::oracle
