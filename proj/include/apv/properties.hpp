#pragma once

// Seeded generators, profile and matrix transforms, and the property suites
// that check the theorems behind the choice rules on random instances.

#include "apv/ballot.hpp"
#include "apv/score_matrix.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace apv::properties {

struct Failure {
    std::uint64_t seed;  // replay with run_trial(suite, seed)
    std::string counterexample;
};

struct SuiteReport {
    std::string suite;
    std::size_t trials = 0;
    std::vector<Failure> failures;

    bool passed() const noexcept { return failures.empty(); }
};

/// Deterministic in `seed`. Options are named a, b, c, ... and `0` is
/// appended; each ballot is a random truncated weak order, with the bar
/// placed in it about half the time.
/// n_options: 2..7 (excluding 0), n_entries: 1..12, max_weight >= 1.
Profile random_profile(std::uint64_t seed, std::size_t n_options, std::size_t n_entries, unsigned max_weight);

/// Random relative matrix over n_options options (the last one `0`), with
/// v(x,y) + v(y,x) <= 1. Requires n_options >= 2.
ScoreMatrix random_llull(std::uint64_t seed, std::size_t n_options);

/// Raises `a`: never lowers a's row, never raises a's column, leaves every
/// other pair alone and strictly changes at least one entry. The pair bound
/// is 1 for relative matrices and `total` for absolute ones. Throws
/// std::invalid_argument when nothing can be raised.
ScoreMatrix raise_option(const ScoreMatrix& m, const OptionId& a, std::uint64_t seed,
                         std::optional<Rational> total = std::nullopt);

/// Moves `a` up one step in ballot `entry`: out of its tie-group, or above
/// the preceding group; an unranked `a` becomes the new top. Throws
/// std::invalid_argument when `a` is already alone at the top.
Profile raise_in_ballot(const Profile& p, std::size_t entry, const OptionId& a);

/// Replaces non-default `x` by `k` >= 2 clones. A lone `x` becomes a random
/// strict order of clones in its place; a tied `x` turns into tied clones.
Profile inject_clones(const Profile& p, const OptionId& x, std::size_t k, std::uint64_t seed);
/// Names of the clones created by inject_clones for the same arguments.
std::vector<OptionId> clone_names(const Profile& p, const OptionId& x, std::size_t k);

/// Moves each entry of a relative matrix by less than `eps` in absolute
/// value, keeping entries in [0,1] and pair sums <= 1.
ScoreMatrix perturb(const ScoreMatrix& m, const Rational& eps, std::uint64_t seed);

/// Smallest positive distance between the best revised approval margin and
/// any other option's (0 counting as margin zero), if any.
std::optional<Rational> prac_gap(const ScoreMatrix& pm);
/// Smallest nonzero |pm(x,y) - pm(y,x)|, if any.
std::optional<Rational> path_top_gap(const ScoreMatrix& pm);

const std::vector<std::string>& suite_names();
/// Throws std::invalid_argument on an unknown suite.
std::size_t default_trials(const std::string& suite);

/// One seeded instance; returns a counterexample description on failure.
std::optional<std::string> run_trial(const std::string& suite, std::uint64_t trial_seed);

/// Runs `trials` instances with seeds derived from `seed`, plus the pinned
/// cases of the suite. Throws std::invalid_argument on an unknown suite.
SuiteReport run_suite(const std::string& suite, std::size_t trials, std::uint64_t seed);

}  // namespace apv::properties
