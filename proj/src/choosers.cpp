#include "apv/choosers.hpp"

#include "apv/path_scores.hpp"

#include <algorithm>
#include <stdexcept>

namespace apv {

bool ChoiceSet::contains(const OptionId& x) const {
    return std::find(members.begin(), members.end(), x) != members.end();
}

bool ChoiceSet::subset_of(const ChoiceSet& other) const {
    return std::all_of(members.begin(), members.end(), [&](const OptionId& x) { return other.contains(x); });
}

ChoiceSet choice_of(const std::vector<OptionId>& order, const std::vector<std::string>& names) {
    ChoiceSet s;
    for (const auto& x : order)
        if (std::find(names.begin(), names.end(), x.name()) != names.end()) s.members.push_back(x);
    if (s.members.size() != names.size()) throw std::invalid_argument("choice_of: unknown or repeated option");
    return s;
}

ChoiceSet choice_from_mask(const std::vector<OptionId>& order, const std::vector<bool>& mask) {
    ChoiceSet s;
    for (std::size_t i = 0; i < order.size(); ++i)
        if (mask[i]) s.members.push_back(order[i]);
    return s;
}

std::string to_string(const ChoiceSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.members.size(); ++i) {
        if (i > 0) out += ", ";
        out += s.members[i].name();
    }
    return out + "}";
}

std::string to_string(const WeakOrder& w) {
    std::string out;
    for (std::size_t l = 0; l < w.levels.size(); ++l) {
        if (l > 0) out += " > ";
        for (std::size_t i = 0; i < w.levels[l].size(); ++i) {
            if (i > 0) out += " = ";
            out += w.levels[l][i].name();
        }
    }
    return out;
}

Relation ranking_relation(const ScoreMatrix& pm) {
    const std::size_t n = pm.size();
    Relation r(n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) r.set(x, y, x == y || pm.at(x, y) >= pm.at(y, x));
    // Warshall closure.
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t x = 0; x < n; ++x)
            if (r(x, k))
                for (std::size_t y = 0; y < n; ++y)
                    if (r(k, y)) r.set(x, y);
    return r;
}

WeakOrder ranking(const ScoreMatrix& pm) {
    const std::size_t n = pm.size();
    const Relation r = ranking_relation(pm);

    // The base relation is complete, so the closure is a total preorder and
    // the number of options an option reaches orders the classes.
    std::vector<std::size_t> reach(n, 0);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) reach[x] += r(x, y) ? 1 : 0;

    std::vector<bool> placed(n, false);
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return reach[a] > reach[b]; });

    WeakOrder w;
    for (std::size_t x : order) {
        if (placed[x]) continue;
        std::vector<OptionId> level;
        for (std::size_t y = 0; y < n; ++y)
            if (!placed[y] && r(x, y) && r(y, x)) {
                placed[y] = true;
                level.push_back(pm.options()[y]);
            }
        w.levels.push_back(std::move(level));
    }
    return w;
}

ChoiceSet path_top(const ScoreMatrix& pm) {
    const std::size_t n = pm.size();
    const Relation r = ranking_relation(pm);
    std::vector<bool> mask(n, false);
    for (std::size_t x = 0; x < n; ++x) {
        bool top = true;
        for (std::size_t y = 0; y < n && top; ++y) top = r(x, y);
        mask[x] = top;
    }
    return choice_from_mask(pm.options(), mask);
}

ChoiceSet prac_winners(const ScoreMatrix& pm) {
    const std::size_t n = pm.size();
    const std::size_t d = pm.default_index();
    if (d == n) throw std::invalid_argument("prac_winners: matrix has no default option");

    std::vector<Rational> margin(n);
    bool any = false;
    Rational best;
    for (std::size_t x = 0; x < n; ++x) {
        if (x == d) continue;
        margin[x] = margin0(pm, x);
        if (!any || margin[x] > best) best = margin[x];
        any = true;
    }

    std::vector<bool> mask(n, false);
    if (!any || best < 0) {
        mask[d] = true;
    } else {
        for (std::size_t x = 0; x < n; ++x)
            if (x != d && margin[x] == best) mask[x] = true;
        if (best == 0) mask[d] = true;
    }
    return choice_from_mask(pm.options(), mask);
}

bool is_dominant_set(const ChoiceSet& set, const ScoreMatrix& pm) {
    if (set.members.empty()) throw std::invalid_argument("is_dominant_set: empty set");
    const std::size_t n = pm.size();
    std::vector<bool> in(n, false);
    for (const auto& x : set.members) in[pm.index_of(x)] = true;
    for (std::size_t x = 0; x < n; ++x) {
        if (!in[x]) continue;
        for (std::size_t y = 0; y < n; ++y)
            if (!in[y] && !(pm.at(x, y) > pm.at(y, x))) return false;
    }
    return true;
}

}  // namespace apv
