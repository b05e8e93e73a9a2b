#include "apv/path_scores.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace apv {

namespace {

MatrixKind path_kind_of(MatrixKind k) {
    switch (k) {
        case MatrixKind::Absolute: return MatrixKind::PathAbsolute;
        case MatrixKind::Relative: return MatrixKind::PathRelative;
        default: throw std::invalid_argument("path_scores expects an absolute or relative matrix");
    }
}

}  // namespace

ScoreMatrix path_scores(const ScoreMatrix& m) { return path_scores(m, kernels::best_isa()); }

ScoreMatrix path_scores(const ScoreMatrix& m, kernels::Isa isa) {
    const MatrixKind out_kind = path_kind_of(m.kind());
    const std::size_t n = m.size();

    std::vector<std::size_t> cells;
    cells.reserve(n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (x != y) cells.push_back(x * n + y);
    auto value = [&](std::size_t c) -> const Rational& { return m.at(c / n, c % n); };
    std::sort(cells.begin(), cells.end(), [&](std::size_t a, std::size_t b) { return cmp(value(a), value(b)) < 0; });

    // Rank 0 is reserved for the diagonal, below every score.
    std::vector<std::int32_t> ranks(n * n, 0);
    std::vector<const Rational*> distinct;
    for (std::size_t c : cells) {
        if (distinct.empty() || *distinct.back() != value(c)) distinct.push_back(&value(c));
        ranks[c] = static_cast<std::int32_t>(distinct.size());
    }

    kernels::kernel_for(isa)(ranks, n);

    ScoreMatrix out(m.options(), out_kind);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (x != y) out.at(x, y) = *distinct[static_cast<std::size_t>(ranks[x * n + y]) - 1];
    return out;
}

ScoreMatrix path_scores_reference(const ScoreMatrix& m) {
    ScoreMatrix w = m;
    w.set_kind(path_kind_of(m.kind()));
    const std::size_t n = w.size();
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == k || j == i) continue;
                const Rational& via = std::min(w.at(i, k), w.at(k, j));
                if (via > w.at(i, j)) w.at(i, j) = via;
            }
        }
    return w;
}

Rational margin0(const ScoreMatrix& pm, std::size_t x) {
    const std::size_t d = pm.default_index();
    if (d == pm.size()) throw std::out_of_range("matrix has no default option");
    if (x >= pm.size()) throw std::out_of_range("option index out of range");
    if (x == d) return 0;
    return pm.at(x, d) - pm.at(d, x);
}

Rational margin0(const ScoreMatrix& pm, const OptionId& x) { return margin0(pm, pm.index_of(x)); }

}  // namespace apv
