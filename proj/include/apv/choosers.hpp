#pragma once

#include "apv/score_matrix.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace apv {

/// Nonempty set of options, held in the matrix's option order.
struct ChoiceSet {
    std::vector<OptionId> members;

    bool contains(const OptionId& x) const;
    std::size_t size() const noexcept { return members.size(); }
    /// Every member of *this is in `other`.
    bool subset_of(const ChoiceSet& other) const;

    friend bool operator==(const ChoiceSet&, const ChoiceSet&) = default;
};

/// Builds a ChoiceSet from option names, reordered to follow `order`.
ChoiceSet choice_of(const std::vector<OptionId>& order, const std::vector<std::string>& names);
ChoiceSet choice_from_mask(const std::vector<OptionId>& order, const std::vector<bool>& mask);

std::string to_string(const ChoiceSet& s);  // "{a, b}"

/// Indifference classes, best first.
struct WeakOrder {
    std::vector<std::vector<OptionId>> levels;

    friend bool operator==(const WeakOrder&, const WeakOrder&) = default;
};

std::string to_string(const WeakOrder& w);  // "b > a = c > 0"

/// Dense boolean relation over the matrix options.
class Relation {
public:
    explicit Relation(std::size_t n) : n_(n), bits_(n * n, false) {}
    std::size_t size() const noexcept { return n_; }
    bool operator()(std::size_t x, std::size_t y) const { return bits_[x * n_ + y]; }
    void set(std::size_t x, std::size_t y, bool v = true) { bits_[x * n_ + y] = v; }

private:
    std::size_t n_;
    std::vector<bool> bits_;
};

/// Transitive closure of {(x,y) : pm(x,y) >= pm(y,x)}, reflexive.
Relation ranking_relation(const ScoreMatrix& pm);

/// Mutual-reachability classes of ranking_relation, best first.
WeakOrder ranking(const ScoreMatrix& pm);

/// Options that reach every other option under ranking_relation; this is the
/// unique minimal dominant set.
ChoiceSet path_top(const ScoreMatrix& pm);

/// Options maximizing the revised approval margin. `0` joins the set when no
/// margin is positive; when the best margin is exactly zero the boundary
/// options are kept as well.
ChoiceSet prac_winners(const ScoreMatrix& pm);

/// pm(x,y) > pm(y,x) for all x in `set`, y outside it.
/// Throws std::invalid_argument for an empty set.
bool is_dominant_set(const ChoiceSet& set, const ScoreMatrix& pm);

}  // namespace apv
