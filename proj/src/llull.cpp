#include "apv/llull.hpp"

#include <stdexcept>

namespace apv {

namespace {

// Adds weight * contribution of `ballot` into `m`, whose options are `universe`.
void accumulate(ScoreMatrix& m, const Ballot& ballot, const Rational& weight, Interp interp) {
    const std::size_t n = m.size();
    std::vector<int> level(n, -1);
    for (std::size_t g = 0; g < ballot.groups.size(); ++g)
        for (const auto& x : ballot.groups[g]) level[m.index_of(x)] = static_cast<int>(g);

    const bool below = interp.unranked_policy == UnrankedPolicy::BelowRanked;
    const Rational half = weight / 2;
    for (std::size_t x = 0; x < n; ++x) {
        if (level[x] < 0) continue;
        for (std::size_t y = 0; y < n; ++y) {
            if (x == y) continue;
            if (level[y] < 0) {
                if (below) m.at(x, y) += weight;
            } else if (level[x] < level[y]) {
                m.at(x, y) += weight;
            } else if (level[x] == level[y]) {
                m.at(x, y) += half;
            }
        }
    }
}

}  // namespace

ScoreMatrix ballot_pairwise(const Ballot& ballot, const std::vector<OptionId>& universe, Interp interp) {
    if (auto v = validate_ballot(ballot, universe); !v.empty()) throw std::invalid_argument(v.front().message);
    ScoreMatrix m(universe, MatrixKind::Absolute);
    accumulate(m, ballot, Rational(1), interp);
    return m;
}

ScoreMatrix build_llull(const Profile& profile, Interp interp) {
    if (total_weight(profile) <= 0) throw DegenerateInput("profile has no votes");
    ScoreMatrix m(profile.universe, MatrixKind::Absolute);
    for (const auto& e : profile.entries) accumulate(m, e.ballot, e.weight, interp);
    return m;
}

ScoreMatrix to_relative(const ScoreMatrix& m, const Rational& total) {
    if (m.kind() != MatrixKind::Absolute) throw std::invalid_argument("to_relative expects an absolute matrix");
    if (total <= 0) throw std::invalid_argument("to_relative: total must be positive");
    ScoreMatrix r(m.options(), MatrixKind::Relative);
    for (std::size_t x = 0; x < m.size(); ++x)
        for (std::size_t y = 0; y < m.size(); ++y)
            if (x != y) r.at(x, y) = m.at(x, y) / total;
    return r;
}

MarginMatrix margins(const ScoreMatrix& m) {
    MarginMatrix d(m.options());
    for (std::size_t x = 0; x < m.size(); ++x)
        for (std::size_t y = 0; y < m.size(); ++y)
            if (x != y) d.at(x, y) = m.at(x, y) - m.at(y, x);
    return d;
}

}  // namespace apv
