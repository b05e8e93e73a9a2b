#include "apv/score_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace apv {

std::string_view to_string(MatrixKind kind) {
    switch (kind) {
        case MatrixKind::Absolute: return "absolute";
        case MatrixKind::Relative: return "relative";
        case MatrixKind::PathAbsolute: return "path-absolute";
        case MatrixKind::PathRelative: return "path-relative";
    }
    return "?";
}

bool is_path_kind(MatrixKind kind) {
    return kind == MatrixKind::PathAbsolute || kind == MatrixKind::PathRelative;
}

ScoreMatrix::ScoreMatrix(std::vector<OptionId> options, MatrixKind kind)
    : options_(std::move(options)), kind_(kind), scores_(options_.size() * options_.size()) {}

ScoreMatrix ScoreMatrix::from_rows(std::vector<OptionId> options, MatrixKind kind,
                                   const std::vector<Rational>& values) {
    ScoreMatrix m(std::move(options), kind);
    const std::size_t n = m.size();
    if (values.size() != n * n) throw std::invalid_argument("from_rows: expected n*n values");
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (x != y) {
                if (values[x * n + y] < 0) throw std::invalid_argument("scores must be nonnegative");
                m.at(x, y) = values[x * n + y];
            }
    return m;
}

std::size_t ScoreMatrix::index_of(const OptionId& x) const {
    auto it = std::find(options_.begin(), options_.end(), x);
    if (it == options_.end()) throw std::out_of_range("option '" + x.name() + "' is not in the matrix");
    return static_cast<std::size_t>(it - options_.begin());
}

bool ScoreMatrix::contains(const OptionId& x) const {
    return std::find(options_.begin(), options_.end(), x) != options_.end();
}

std::size_t ScoreMatrix::default_index() const {
    return static_cast<std::size_t>(std::find(options_.begin(), options_.end(), kDefaultOption) - options_.begin());
}

MarginMatrix::MarginMatrix(std::vector<OptionId> options)
    : options_(std::move(options)), margins_(options_.size() * options_.size()) {}

const Rational& MarginMatrix::at(const OptionId& x, const OptionId& y) const {
    auto find = [&](const OptionId& o) {
        auto it = std::find(options_.begin(), options_.end(), o);
        if (it == options_.end()) throw std::out_of_range("option '" + o.name() + "' is not in the matrix");
        return static_cast<std::size_t>(it - options_.begin());
    };
    return at(find(x), find(y));
}

Rational sup_distance(const ScoreMatrix& a, const ScoreMatrix& b) {
    if (a.options() != b.options()) throw std::invalid_argument("sup_distance: option sets differ");
    Rational best = 0;
    for (std::size_t x = 0; x < a.size(); ++x)
        for (std::size_t y = 0; y < a.size(); ++y) {
            if (x == y) continue;
            Rational d = abs(a.at(x, y) - b.at(x, y));
            if (d > best) best = d;
        }
    return best;
}

}  // namespace apv
