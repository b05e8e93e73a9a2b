#pragma once

#include "apv/ballot.hpp"
#include "apv/rational.hpp"

#include <cstddef>
#include <string_view>
#include <vector>

namespace apv {

enum class MatrixKind { Absolute, Relative, PathAbsolute, PathRelative };

std::string_view to_string(MatrixKind kind);
bool is_path_kind(MatrixKind kind);

/// Dense square matrix of exact pairwise scores, row x column y holding the
/// score of "x preferred to y". Diagonal cells are unused and held at zero.
class ScoreMatrix {
public:
    ScoreMatrix() = default;
    ScoreMatrix(std::vector<OptionId> options, MatrixKind kind);

    /// Row-major `values` of size n*n; diagonal entries are ignored.
    static ScoreMatrix from_rows(std::vector<OptionId> options, MatrixKind kind, const std::vector<Rational>& values);

    std::size_t size() const noexcept { return options_.size(); }
    const std::vector<OptionId>& options() const noexcept { return options_; }
    MatrixKind kind() const noexcept { return kind_; }
    void set_kind(MatrixKind kind) noexcept { kind_ = kind; }

    std::size_t index_of(const OptionId& x) const;  // throws std::out_of_range
    bool contains(const OptionId& x) const;
    /// Index of `0`, or size() when absent.
    std::size_t default_index() const;

    const Rational& at(std::size_t x, std::size_t y) const { return scores_[x * size() + y]; }
    Rational& at(std::size_t x, std::size_t y) { return scores_[x * size() + y]; }
    const Rational& at(const OptionId& x, const OptionId& y) const { return at(index_of(x), index_of(y)); }

    friend bool operator==(const ScoreMatrix& a, const ScoreMatrix& b) {
        return a.kind_ == b.kind_ && a.options_ == b.options_ && a.scores_ == b.scores_;
    }

private:
    std::vector<OptionId> options_;
    MatrixKind kind_ = MatrixKind::Absolute;
    std::vector<Rational> scores_;
};

/// Antisymmetric matrix of score differences.
class MarginMatrix {
public:
    explicit MarginMatrix(std::vector<OptionId> options);

    std::size_t size() const noexcept { return options_.size(); }
    const std::vector<OptionId>& options() const noexcept { return options_; }
    const Rational& at(std::size_t x, std::size_t y) const { return margins_[x * size() + y]; }
    Rational& at(std::size_t x, std::size_t y) { return margins_[x * size() + y]; }
    const Rational& at(const OptionId& x, const OptionId& y) const;

private:
    std::vector<OptionId> options_;
    std::vector<Rational> margins_;
};

/// Largest |a(x,y) - b(x,y)| over off-diagonal cells; matrices must share options.
Rational sup_distance(const ScoreMatrix& a, const ScoreMatrix& b);

}  // namespace apv
