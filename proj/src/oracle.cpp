#include "apv/oracle.hpp"

#include "apv/path_scores.hpp"
#include "apv/report.hpp"

#include <stdexcept>

namespace apv::oracle {

namespace {

struct PathSearch {
    const ScoreMatrix& m;
    std::size_t target;
    std::vector<bool> on_path;
    bool found = false;
    Rational best;

    void extend(std::size_t at, const Rational& bottleneck) {
        for (std::size_t next = 0; next < m.size(); ++next) {
            if (on_path[next]) continue;
            Rational b = std::min(bottleneck, m.at(at, next));
            if (next == target) {
                if (!found || b > best) best = b;
                found = true;
                continue;
            }
            on_path[next] = true;
            extend(next, b);
            on_path[next] = false;
        }
    }
};

}  // namespace

ScoreMatrix brute_path_scores(const ScoreMatrix& m) {
    if (m.size() > kMaxOptions) throw std::invalid_argument("brute_path_scores: too many options");
    MatrixKind kind;
    switch (m.kind()) {
        case MatrixKind::Absolute: kind = MatrixKind::PathAbsolute; break;
        case MatrixKind::Relative: kind = MatrixKind::PathRelative; break;
        default: throw std::invalid_argument("brute_path_scores expects an absolute or relative matrix");
    }
    ScoreMatrix out(m.options(), kind);
    const std::size_t n = m.size();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            if (x == y) continue;
            PathSearch s{m, y, std::vector<bool>(n, false), false, Rational(0)};
            s.on_path[x] = true;
            for (std::size_t first = 0; first < n; ++first) {
                if (first == x) continue;
                if (first == y) {
                    if (!s.found || m.at(x, y) > s.best) s.best = m.at(x, y);
                    s.found = true;
                    continue;
                }
                s.on_path[first] = true;
                s.extend(first, m.at(x, first));
                s.on_path[first] = false;
            }
            out.at(x, y) = s.best;
        }
    return out;
}

namespace {

bool dominant(const std::vector<bool>& in, const ScoreMatrix& pm) {
    const std::size_t n = pm.size();
    for (std::size_t x = 0; x < n; ++x) {
        if (!in[x]) continue;
        for (std::size_t y = 0; y < n; ++y)
            if (!in[y] && !(pm.at(x, y) > pm.at(y, x))) return false;
    }
    return true;
}

// Visits the size-k subsets of {0..n-1} in lexicographic order.
template <typename Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    while (true) {
        std::vector<bool> mask(n, false);
        for (std::size_t i : pick) mask[i] = true;
        fn(mask);
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
}

}  // namespace

std::vector<ChoiceSet> brute_minimal_dominant_sets(const ScoreMatrix& pm) {
    const std::size_t n = pm.size();
    if (n > kMaxOptions) throw std::invalid_argument("brute_minimal_dominant: too many options");
    std::vector<std::vector<bool>> found;
    for (std::size_t k = 1; k <= n; ++k)
        for_each_subset(n, k, [&](const std::vector<bool>& mask) {
            if (!dominant(mask, pm)) return;
            for (const auto& smaller : found) {
                bool contained = true;
                for (std::size_t i = 0; i < n && contained; ++i) contained = !smaller[i] || mask[i];
                if (contained) return;
            }
            found.push_back(mask);
        });
    std::vector<ChoiceSet> out;
    for (const auto& mask : found) out.push_back(choice_from_mask(pm.options(), mask));
    return out;
}

ChoiceSet brute_minimal_dominant(const ScoreMatrix& pm) {
    auto sets = brute_minimal_dominant_sets(pm);
    // The full universe is always dominant, so at least one set exists.
    return sets.front();
}

CrossCheckReport cross_check(const ScoreMatrix& m) {
    CrossCheckReport report;
    const ScoreMatrix fast = path_scores(m);
    const ScoreMatrix brute = brute_path_scores(m);
    if (!(fast == brute))
        report.mismatches.push_back("path scores differ on " + describe(m) + ": fast " + describe(fast) +
                                    " brute " + describe(brute));
    const ChoiceSet top = path_top(fast);
    const ChoiceSet minimal = brute_minimal_dominant(brute);
    if (!(top == minimal))
        report.mismatches.push_back("path-top " + to_string(top) + " != minimal dominant " + to_string(minimal) +
                                    " on " + describe(m));
    return report;
}

}  // namespace apv::oracle
