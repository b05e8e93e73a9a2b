#include "apv/properties.hpp"

#include "apv/choosers.hpp"
#include "apv/llull.hpp"
#include "apv/oracle.hpp"
#include "apv/path_scores.hpp"
#include "apv/reference_profiles.hpp"
#include "apv/report.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>

namespace apv::properties {

namespace {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Inclusive bounds.
    std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
        return std::uniform_int_distribution<std::uint64_t>(lo, hi)(engine_);
    }
    bool chance(unsigned num, unsigned den) { return uniform(1, den) <= num; }
    std::uint64_t next() { return engine_(); }
    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

std::vector<OptionId> letters(std::size_t n) {
    std::vector<OptionId> out;
    for (std::size_t i = 0; i < n; ++i) out.emplace_back(std::string(1, static_cast<char>('a' + i)));
    return out;
}

Ballot random_ballot(Rng& rng, const std::vector<OptionId>& candidates) {
    std::vector<OptionId> ranked;
    for (const auto& x : candidates)
        if (rng.chance(3, 4)) ranked.push_back(x);
    if (rng.chance(1, 2)) ranked.push_back(kDefaultOption);
    if (ranked.empty()) ranked.push_back(candidates[rng.uniform(0, candidates.size() - 1)]);
    std::shuffle(ranked.begin(), ranked.end(), rng.engine());

    Ballot b;
    for (const auto& x : ranked) {
        if (b.groups.empty() || !rng.chance(1, 4))
            b.groups.push_back({x});
        else
            b.groups.back().push_back(x);
    }
    return b;
}

// Pair bound for the sum m(x,y) + m(y,x).
Rational pair_bound(const ScoreMatrix& m, const std::optional<Rational>& total) {
    if (total) return *total;
    if (m.kind() == MatrixKind::Relative) return 1;
    throw std::invalid_argument("absolute matrices need an explicit total");
}

Rational fraction(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Random fraction k/4 with k in [lo, 4].
Rational quarter(Rng& rng, unsigned lo) { return fraction(static_cast<long>(rng.uniform(lo, 4)), 4); }

bool satisfies_raise(const ScoreMatrix& before, const ScoreMatrix& after, std::size_t a) {
    for (std::size_t x = 0; x < before.size(); ++x)
        for (std::size_t y = 0; y < before.size(); ++y) {
            if (x == y) continue;
            if (x == a) {
                if (after.at(x, y) < before.at(x, y)) return false;
            } else if (y == a) {
                if (after.at(x, y) > before.at(x, y)) return false;
            } else if (after.at(x, y) != before.at(x, y)) {
                return false;
            }
        }
    return true;
}

std::size_t pick_matrix_size(Rng& rng) { return static_cast<std::size_t>(rng.uniform(2, 6)); }

Profile pick_profile(Rng& rng, std::size_t max_options = 5) {
    const auto n = static_cast<std::size_t>(rng.uniform(2, max_options));
    const auto entries = static_cast<std::size_t>(rng.uniform(1, 12));
    return random_profile(rng.next(), n, entries, 9);
}

Interp pick_interp(Rng& rng) {
    return Interp{rng.chance(1, 2) ? UnrankedPolicy::BelowRanked : UnrankedPolicy::Incomparable};
}

std::string profile_case(const Profile& p, Interp interp) {
    return "interp=" + std::string(to_string(interp.unranked_policy)) + "\n" + serialize_profile(p);
}

using Check = std::optional<std::string>;

// ----- path-score lemmas ---------------------------------------------------

Check check_schulze(const ScoreMatrix& m) {
    const ScoreMatrix pm = path_scores(m);
    const std::size_t n = pm.size();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                if (x == y || y == z || x == z) continue;
                if (pm.at(x, y) > pm.at(y, x) && pm.at(y, z) > pm.at(z, y) && !(pm.at(x, z) > pm.at(z, x)))
                    return "transitivity broken at " + pm.options()[x].name() + pm.options()[y].name() +
                           pm.options()[z].name() + " on " + describe(m);
            }
    return std::nullopt;
}

Check check_min_inequality(const ScoreMatrix& m) {
    const ScoreMatrix pm = path_scores(m);
    const std::size_t n = pm.size();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                if (x == y || y == z || x == z) continue;
                if (pm.at(x, z) < std::min(pm.at(x, y), pm.at(y, z)))
                    return "min inequality broken on " + describe(m);
            }
    return std::nullopt;
}

Check check_laia(const ScoreMatrix& m) {
    const ScoreMatrix pm = path_scores(m);
    const std::size_t n = pm.size();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                if (x == y || y == z || x == z) continue;
                if (pm.at(y, z) > pm.at(x, z) && pm.at(x, z) < pm.at(x, y))
                    return "first implication broken on " + describe(m);
                if (pm.at(x, y) > pm.at(x, z) && pm.at(x, z) < pm.at(y, z))
                    return "second implication broken on " + describe(m);
            }
    return std::nullopt;
}

Check check_confidence(const ScoreMatrix& m) {
    const ScoreMatrix pm = path_scores(m);
    const std::size_t n = pm.size();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            if (x == y) continue;
            const Rational mx = margin0(pm, x);
            const Rational my = margin0(pm, y);
            if (!(mx >= 0 && mx > my)) continue;
            const Rational against = pm.at(y, x) - pm.at(x, y);
            if (mx < against || (mx > 0 && !(mx > against)))
                return "confidence of " + pm.options()[x].name() + " over " + pm.options()[y].name() + " on " +
                       describe(m);
        }
    return std::nullopt;
}

Check check_oracle(const ScoreMatrix& m) {
    auto report = oracle::cross_check(m);
    if (!report.passed()) return report.mismatches.front();
    const ScoreMatrix pm = path_scores(m);
    if (!(path_scores_reference(m) == pm)) return "rational reference differs on " + describe(m);
    if (oracle::brute_minimal_dominant_sets(pm).size() != 1) return "minimal dominant set not unique on " + describe(m);
    return std::nullopt;
}

// ----- monotonicity ----------------------------------------------------------

Check check_prac_monotone_matrix(Rng& rng) {
    const ScoreMatrix m = random_llull(rng.next(), pick_matrix_size(rng));
    const ChoiceSet w = prac_winners(path_scores(m));
    const OptionId a = w.members[rng.uniform(0, w.size() - 1)];
    ScoreMatrix raised;
    try {
        raised = raise_option(m, a, rng.next());
    } catch (const std::invalid_argument&) {
        return std::nullopt;  // a already maximal everywhere
    }
    if (!prac_winners(path_scores(raised)).contains(a))
        return "raising " + a.name() + " dropped it: " + describe(m) + " -> " + describe(raised);
    return std::nullopt;
}

struct BallotRaise {
    Profile before;
    Profile after;
    OptionId raised;
    Interp interp;
};

// Raises `a` in a random ballot where that is possible.
std::optional<Profile> raise_somewhere(Rng& rng, const Profile& p, const OptionId& a) {
    std::vector<std::size_t> order(p.entries.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng.engine());
    for (std::size_t e : order) {
        try {
            return raise_in_ballot(p, e, a);
        } catch (const std::invalid_argument&) {
        }
    }
    return std::nullopt;
}

Check check_raise_contract(const BallotRaise& r) {
    const ScoreMatrix before = build_llull(r.before, r.interp);
    const ScoreMatrix after = build_llull(r.after, r.interp);
    if (!satisfies_raise(before, after, before.index_of(r.raised)))
        return "ballot raise of " + r.raised.name() + " is not monotone:\n" + profile_case(r.before, r.interp);
    return std::nullopt;
}

Check check_prac_monotone_profile(Rng& rng) {
    const Profile p = pick_profile(rng);
    const Interp interp = pick_interp(rng);
    const ChoiceSet w = prac_winners(path_scores(build_llull(p, interp)));
    const OptionId a = w.members[rng.uniform(0, w.size() - 1)];
    auto raised = raise_somewhere(rng, p, a);
    if (!raised) return std::nullopt;
    if (auto bad = check_raise_contract({p, *raised, a, interp})) return bad;
    if (!prac_winners(path_scores(build_llull(*raised, interp))).contains(a))
        return "raising " + a.name() + " in a ballot dropped it:\n" + profile_case(p, interp) + "after:\n" +
               serialize_profile(*raised);
    return std::nullopt;
}

Check check_prac_monotonicity(Rng& rng) {
    if (auto bad = check_prac_monotone_matrix(rng)) return bad;
    return check_prac_monotone_profile(rng);
}

Check check_path_top_singleton(Rng& rng) {
    {
        const ScoreMatrix m = random_llull(rng.next(), pick_matrix_size(rng));
        const ChoiceSet top = path_top(path_scores(m));
        if (top.size() == 1) {
            const OptionId a = top.members.front();
            try {
                const ScoreMatrix raised = raise_option(m, a, rng.next());
                if (!(path_top(path_scores(raised)) == top))
                    return "sole path-top " + a.name() + " lost on raise: " + describe(m) + " -> " + describe(raised);
            } catch (const std::invalid_argument&) {
            }
        }
    }
    const Profile p = pick_profile(rng);
    const Interp interp = pick_interp(rng);
    const ChoiceSet top = path_top(path_scores(build_llull(p, interp)));
    if (top.size() != 1) return std::nullopt;
    const OptionId a = top.members.front();
    auto raised = raise_somewhere(rng, p, a);
    if (!raised) return std::nullopt;
    if (auto bad = check_raise_contract({p, *raised, a, interp})) return bad;
    if (!(path_top(path_scores(build_llull(*raised, interp))) == top))
        return "sole path-top " + a.name() + " lost on ballot raise:\n" + profile_case(p, interp);
    return std::nullopt;
}

// The non-singleton case has a known counterexample; it has to show up.
Check check_path_top_counterexample() {
    const Interp interp{};
    const Profile before = parse_profile(reference::path_top_nonmonotone_text(false));
    const Profile after = parse_profile(reference::path_top_nonmonotone_text(true));
    const OptionId d("d");
    if (auto bad = check_raise_contract({before, after, d, interp})) return bad;
    const ChoiceSet top_before = path_top(path_scores(build_llull(before, interp)));
    const ChoiceSet top_after = path_top(path_scores(build_llull(after, interp)));
    if (!top_before.contains(d) || top_after.contains(d))
        return "pinned path-top monotonicity counterexample did not reproduce: before " + to_string(top_before) +
               ", after " + to_string(top_after);
    return std::nullopt;
}

// ----- upper semicontinuity ----------------------------------------------------

template <typename Chooser, typename Gap>
Check check_usc(Rng& rng, Chooser choose, Gap gap, const char* what) {
    const ScoreMatrix m = random_llull(rng.next(), pick_matrix_size(rng));
    const ScoreMatrix pm = path_scores(m);
    const ChoiceSet original = choose(pm);
    const Rational eps = gap(pm).value_or(Rational(1, 10)) / 4;
    const ScoreMatrix moved = perturb(m, eps, rng.next());
    if (!(sup_distance(m, moved) < eps)) return std::string("perturbation exceeded its radius on ") + describe(m);
    const ChoiceSet after = choose(path_scores(moved));
    if (!after.subset_of(original))
        return std::string(what) + " grew from " + to_string(original) + " to " + to_string(after) + ": " +
               describe(m) + " -> " + describe(moved);
    return std::nullopt;
}

// ----- clones ------------------------------------------------------------------

Check check_clones(Rng& rng) {
    const Profile p = pick_profile(rng, 4);
    const Interp interp = pick_interp(rng);
    const OptionId x = p.universe[rng.uniform(0, p.universe.size() - 2)];
    const auto k = static_cast<std::size_t>(rng.uniform(2, 3));
    const Profile q = inject_clones(p, x, k, rng.next());
    const std::vector<OptionId> clones = clone_names(p, x, k);
    const std::string where = "cloning " + x.name() + ":\n" + profile_case(p, interp);

    // Construction contract: each voter compares every clone alike with outsiders.
    for (const auto& e : q.entries) {
        const ScoreMatrix c = ballot_pairwise(e.ballot, q.universe, interp);
        for (const auto& y : q.universe) {
            if (std::find(clones.begin(), clones.end(), y) != clones.end()) continue;
            for (const auto& other : clones)
                if (c.at(other, y) != c.at(clones.front(), y) || c.at(y, other) != c.at(y, clones.front()))
                    return "clone contract broken, " + where;
        }
    }

    const ScoreMatrix pm_before = path_scores(build_llull(p, interp));
    const ScoreMatrix pm_after = path_scores(build_llull(q, interp));
    const Rational expected = margin0(pm_before, x);
    for (const auto& c : clones)
        if (margin0(pm_after, c) != expected) return "clone margin differs, " + where;

    const ChoiceSet w = prac_winners(pm_after);
    const auto in = std::count_if(clones.begin(), clones.end(), [&](const OptionId& c) { return w.contains(c); });
    if (in != 0 && static_cast<std::size_t>(in) != clones.size()) return "clones split by the choice set, " + where;

    // Outsiders keep their margins, so the choice set maps across.
    const ChoiceSet w_before = prac_winners(pm_before);
    for (const auto& y : p.universe) {
        if (y == x) continue;
        if (margin0(pm_before, y) != margin0(pm_after, y)) return "outsider margin moved, " + where;
        if (w_before.contains(y) != w.contains(y)) return "outsider membership changed, " + where;
    }
    if (w_before.contains(x) != (in > 0)) return "clone block membership differs from original, " + where;
    return std::nullopt;
}

// ----- Pareto ------------------------------------------------------------------

// Reorders one ballot so that x is weakly above y.
void make_weakly_above(Ballot& b, const OptionId& x, const OptionId& y) {
    const int gx = b.group_of(x);
    const int gy = b.group_of(y);
    if (gy < 0) return;
    auto& ygroup = b.groups[static_cast<std::size_t>(gy)];
    if (gx < 0) {
        *std::find(ygroup.begin(), ygroup.end(), y) = x;
    } else if (gy < gx) {
        auto& xgroup = b.groups[static_cast<std::size_t>(gx)];
        *std::find(ygroup.begin(), ygroup.end(), y) = x;
        *std::find(xgroup.begin(), xgroup.end(), x) = y;
    }
}

bool strictly_above(const Ballot& b, const OptionId& x, const OptionId& y) {
    const int gx = b.group_of(x);
    const int gy = b.group_of(y);
    return gx >= 0 && (gy < 0 || gx < gy);
}

void make_strictly_above(Ballot& b, const OptionId& x, const OptionId& y) {
    make_weakly_above(b, x, y);
    if (strictly_above(b, x, y)) return;
    const int gx = b.group_of(x);
    if (gx < 0) {
        b.groups.push_back({x});  // both unranked
        return;
    }
    auto& group = b.groups[static_cast<std::size_t>(gx)];
    group.erase(std::find(group.begin(), group.end(), y));
    b.groups.insert(b.groups.begin() + gx + 1, std::vector<OptionId>{y});
}

Check check_pareto(Rng& rng) {
    Profile p = pick_profile(rng);
    const Interp interp{UnrankedPolicy::BelowRanked};
    const std::size_t n = p.universe.size();
    const std::size_t xi = rng.uniform(0, n - 1);
    std::size_t yi = rng.uniform(0, n - 2);
    if (yi >= xi) ++yi;
    const OptionId x = p.universe[xi];
    const OptionId y = p.universe[yi];

    const bool all_strict = rng.chance(1, 3);
    for (auto& e : p.entries) {
        if (all_strict)
            make_strictly_above(e.ballot, x, y);
        else
            make_weakly_above(e.ballot, x, y);
    }
    if (!std::any_of(p.entries.begin(), p.entries.end(), [&](const auto& e) { return strictly_above(e.ballot, x, y); }))
        make_strictly_above(p.entries.front().ballot, x, y);

    const std::string where = x.name() + " dominates " + y.name() + ":\n" + serialize_profile(p);
    const ScoreMatrix m = build_llull(p, interp);
    const ScoreMatrix pm = path_scores(m);
    for (std::size_t a = 0; a < n; ++a) {
        if (a == xi || a == yi) continue;
        if (m.at(xi, a) < m.at(yi, a) || m.at(a, yi) < m.at(a, xi)) return "raw score inequality broken, " + where;
        if (pm.at(xi, a) < pm.at(yi, a) || pm.at(a, yi) < pm.at(a, xi)) return "path score inequality broken, " + where;
    }
    if (pm.at(xi, yi) < pm.at(yi, xi)) return "path margin of the dominating option negative, " + where;
    if (all_strict && !(pm.at(xi, yi) > pm.at(yi, xi))) return "strict path margin expected, " + where;
    if (path_top(pm).contains(y) && !path_top(pm).contains(x)) return "path-top not Pareto consistent, " + where;
    const ChoiceSet w = prac_winners(pm);
    if (w.contains(y) && !w.contains(x)) return "revised approval choice not Pareto consistent, " + where;
    return std::nullopt;
}

// ----- registry ------------------------------------------------------------------

std::vector<ScoreMatrix> golden_matrices() {
    std::vector<ScoreMatrix> out;
    const Interp below{};
    for (const auto& text : {reference::two_proposal_cycle_text(), reference::condorcet_approval_split_text(),
                             reference::path_top_nonmonotone_text(false), reference::path_top_nonmonotone_text(true),
                             reference::pareto_boundary_text()})
        out.push_back(build_llull(parse_profile(text), below));
    out.push_back(reference::bern_2004_matrix());
    return out;
}

using MatrixCheck = Check (*)(const ScoreMatrix&);

struct Suite {
    std::size_t default_trials;
    std::function<Check(std::uint64_t)> trial;
    std::function<std::vector<Check>()> pinned;
};

std::function<Check(std::uint64_t)> on_random_matrix(MatrixCheck check) {
    return [check](std::uint64_t seed) {
        Rng rng(seed);
        return check(random_llull(rng.next(), pick_matrix_size(rng)));
    };
}

std::function<std::vector<Check>()> on_golden(MatrixCheck check) {
    return [check] {
        std::vector<Check> out;
        for (const auto& m : golden_matrices()) out.push_back(check(m));
        return out;
    };
}

std::function<Check(std::uint64_t)> seeded(Check (*fn)(Rng&)) {
    return [fn](std::uint64_t seed) {
        Rng rng(seed);
        return fn(rng);
    };
}

Check usc_prac(Rng& rng) {
    return check_usc(rng, [](const ScoreMatrix& pm) { return prac_winners(pm); }, &prac_gap, "revised approval choice");
}

Check usc_path_top(Rng& rng) {
    return check_usc(rng, [](const ScoreMatrix& pm) { return path_top(pm); }, &path_top_gap, "path-top set");
}

const std::map<std::string, Suite>& registry() {
    static const std::map<std::string, Suite> suites = [] {
        std::map<std::string, Suite> s;
        const auto none = [] { return std::vector<Check>{}; };
        s["schulze-transitivity"] = {10000, on_random_matrix(&check_schulze), on_golden(&check_schulze)};
        s["min-inequality"] = {10000, on_random_matrix(&check_min_inequality), on_golden(&check_min_inequality)};
        s["laia"] = {10000, on_random_matrix(&check_laia), on_golden(&check_laia)};
        s["confidence-dominance"] = {10000, on_random_matrix(&check_confidence), on_golden(&check_confidence)};
        s["oracle-equivalence"] = {10000, on_random_matrix(&check_oracle), on_golden(&check_oracle)};
        s["prac-monotonicity"] = {1000, seeded(&check_prac_monotonicity), none};
        s["path-top-singleton-monotonicity"] = {1000, seeded(&check_path_top_singleton),
                                                [] { return std::vector<Check>{check_path_top_counterexample()}; }};
        s["usc-prac"] = {1000, seeded(&usc_prac), none};
        s["usc-path-top"] = {1000, seeded(&usc_path_top), none};
        s["clones"] = {1000, seeded(&check_clones), none};
        s["pareto"] = {1000, seeded(&check_pareto), none};
        return s;
    }();
    return suites;
}

const Suite& suite_of(const std::string& name) {
    const auto& r = registry();
    auto it = r.find(name);
    if (it == r.end()) throw std::invalid_argument("unknown suite '" + name + "'");
    return it->second;
}

}  // namespace

Profile random_profile(std::uint64_t seed, std::size_t n_options, std::size_t n_entries, unsigned max_weight) {
    if (n_options < 2 || n_options > 7) throw std::invalid_argument("random_profile: n_options must be in 2..7");
    if (n_entries < 1 || n_entries > 12) throw std::invalid_argument("random_profile: n_entries must be in 1..12");
    if (max_weight < 1) throw std::invalid_argument("random_profile: max_weight must be positive");
    Rng rng(seed);
    const std::vector<OptionId> candidates = letters(n_options);
    std::vector<ProfileEntry> entries;
    for (std::size_t i = 0; i < n_entries; ++i)
        entries.push_back({Rational(static_cast<long>(rng.uniform(1, max_weight))), random_ballot(rng, candidates)});
    return make_profile(candidates, std::move(entries));
}

ScoreMatrix random_llull(std::uint64_t seed, std::size_t n_options) {
    if (n_options < 2) throw std::invalid_argument("random_llull: need at least two options");
    Rng rng(seed);
    std::vector<OptionId> opts = letters(n_options - 1);
    opts.push_back(kDefaultOption);
    ScoreMatrix m(std::move(opts), MatrixKind::Relative);

    // A shared denominator makes exact ties common.
    const bool shared = rng.chance(1, 2);
    const long shared_den = static_cast<long>(rng.uniform(1, 8));
    for (std::size_t x = 0; x < n_options; ++x)
        for (std::size_t y = x + 1; y < n_options; ++y) {
            const long den = shared ? shared_den : static_cast<long>(rng.uniform(1, 12));
            const long sum = static_cast<long>(rng.uniform(0, static_cast<std::uint64_t>(den)));
            const long forward = static_cast<long>(rng.uniform(0, static_cast<std::uint64_t>(sum)));
            m.at(x, y) = fraction(forward, den);
            m.at(y, x) = fraction(sum - forward, den);
        }
    return m;
}

ScoreMatrix raise_option(const ScoreMatrix& m, const OptionId& a, std::uint64_t seed, std::optional<Rational> total) {
    const Rational bound = pair_bound(m, total);
    const std::size_t ai = m.index_of(a);
    const std::size_t n = m.size();

    std::vector<std::size_t> raisable;
    for (std::size_t y = 0; y < n; ++y)
        if (y != ai && (m.at(y, ai) > 0 || m.at(ai, y) + m.at(y, ai) < bound)) raisable.push_back(y);
    if (raisable.empty()) throw std::invalid_argument("raise_option: " + a.name() + " cannot be raised further");

    Rng rng(seed);
    const std::size_t forced = raisable[rng.uniform(0, raisable.size() - 1)];
    ScoreMatrix out = m;
    for (std::size_t y : raisable) {
        const bool must = y == forced;
        if (!must && !rng.chance(1, 2)) continue;
        Rational& up = out.at(ai, y);
        Rational& down = out.at(y, ai);
        bool changed = false;
        if (down > 0 && (rng.chance(1, 2) || up + down == bound)) {
            const Rational cut = down * quarter(rng, 1);
            down -= cut;
            changed = true;
        }
        const Rational slack = bound - up - down;
        if (slack > 0) {
            const Rational step = slack * quarter(rng, changed ? 0 : 1);
            up += step;
        }
    }
    return out;
}

Profile raise_in_ballot(const Profile& p, std::size_t entry, const OptionId& a) {
    if (entry >= p.entries.size()) throw std::out_of_range("raise_in_ballot: no such entry");
    if (!p.contains(a)) throw std::out_of_range("raise_in_ballot: unknown option " + a.name());
    Profile out = p;
    auto& groups = out.entries[entry].ballot.groups;
    const int g = out.entries[entry].ballot.group_of(a);
    if (g < 0) {
        groups.insert(groups.begin(), std::vector<OptionId>{a});
        return out;
    }
    const auto gi = static_cast<std::size_t>(g);
    if (groups[gi].size() > 1) {
        groups[gi].erase(std::find(groups[gi].begin(), groups[gi].end(), a));
        groups.insert(groups.begin() + g, std::vector<OptionId>{a});
        return out;
    }
    if (gi == 0) throw std::invalid_argument("raise_in_ballot: " + a.name() + " is already alone at the top");
    groups.erase(groups.begin() + g);
    groups.insert(groups.begin() + g - 1, std::vector<OptionId>{a});
    return out;
}

std::vector<OptionId> clone_names(const Profile& p, const OptionId& x, std::size_t k) {
    std::vector<OptionId> out;
    for (std::size_t i = 1; i <= k; ++i) {
        std::string name = x.name() + "_" + std::to_string(i);
        while (p.contains(OptionId(name))) name += "_";
        out.emplace_back(std::move(name));
    }
    return out;
}

Profile inject_clones(const Profile& p, const OptionId& x, std::size_t k, std::uint64_t seed) {
    if (x.is_default()) throw std::invalid_argument("inject_clones: the default option cannot be cloned");
    if (k < 2) throw std::invalid_argument("inject_clones: need at least two clones");
    if (!p.contains(x)) throw std::out_of_range("inject_clones: unknown option " + x.name());
    const std::vector<OptionId> clones = clone_names(p, x, k);
    Rng rng(seed);

    std::vector<OptionId> universe;
    for (const auto& y : p.universe) {
        if (y == x)
            universe.insert(universe.end(), clones.begin(), clones.end());
        else
            universe.push_back(y);
    }

    std::vector<ProfileEntry> entries = p.entries;
    for (auto& e : entries) {
        auto& groups = e.ballot.groups;
        const int g = e.ballot.group_of(x);
        if (g < 0) continue;
        auto& group = groups[static_cast<std::size_t>(g)];
        if (group.size() > 1) {
            group.erase(std::find(group.begin(), group.end(), x));
            group.insert(group.end(), clones.begin(), clones.end());
            continue;
        }
        std::vector<OptionId> order = clones;
        std::shuffle(order.begin(), order.end(), rng.engine());
        groups.erase(groups.begin() + g);
        for (std::size_t i = 0; i < order.size(); ++i)
            groups.insert(groups.begin() + g + static_cast<long>(i), std::vector<OptionId>{order[i]});
    }
    return make_profile(std::move(universe), std::move(entries));
}

ScoreMatrix perturb(const ScoreMatrix& m, const Rational& eps, std::uint64_t seed) {
    if (eps <= 0) throw std::invalid_argument("perturb: eps must be positive");
    if (m.kind() != MatrixKind::Relative) throw std::invalid_argument("perturb expects a relative matrix");
    constexpr long kSteps = 64;
    Rng rng(seed);
    ScoreMatrix out = m;
    const std::size_t n = m.size();
    auto draw = [&]() -> Rational {
        // Open interval (-eps, eps).
        const long j = static_cast<long>(rng.uniform(0, 2 * kSteps - 2)) - (kSteps - 1);
        return eps * fraction(j, kSteps);
    };
    auto clamp01 = [](Rational v) { return v < 0 ? Rational(0) : (v > 1 ? Rational(1) : v); };
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y) {
            Rational fwd = clamp01(m.at(x, y) + draw());
            Rational back = clamp01(m.at(y, x) + draw());
            Rational excess = fwd + back - 1;
            if (excess > 0) {
                // Only upward moves can push the sum over 1; undo them.
                const Rational fwd_up = std::max(Rational(0), Rational(fwd - m.at(x, y)));
                const Rational cut = std::min(excess, fwd_up);
                fwd -= cut;
                excess -= cut;
                back -= excess;
            }
            out.at(x, y) = fwd;
            out.at(y, x) = back;
        }
    return out;
}

std::optional<Rational> prac_gap(const ScoreMatrix& pm) {
    std::vector<Rational> values;
    for (std::size_t x = 0; x < pm.size(); ++x) values.push_back(margin0(pm, x));
    const Rational best = *std::max_element(values.begin(), values.end());
    std::optional<Rational> gap;
    for (const auto& v : values)
        if (v < best && (!gap || best - v < *gap)) gap = best - v;
    return gap;
}

std::optional<Rational> path_top_gap(const ScoreMatrix& pm) {
    std::optional<Rational> gap;
    for (std::size_t x = 0; x < pm.size(); ++x)
        for (std::size_t y = 0; y < pm.size(); ++y) {
            if (x == y) continue;
            const Rational d = pm.at(x, y) - pm.at(y, x);
            if (d > 0 && (!gap || d < *gap)) gap = d;
        }
    return gap;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, suite] : registry()) out.push_back(name);
        return out;
    }();
    return names;
}

std::size_t default_trials(const std::string& suite) { return suite_of(suite).default_trials; }

std::optional<std::string> run_trial(const std::string& suite, std::uint64_t trial_seed) {
    return suite_of(suite).trial(trial_seed);
}

SuiteReport run_suite(const std::string& suite, std::size_t trials, std::uint64_t seed) {
    const Suite& s = suite_of(suite);
    SuiteReport report{suite, trials, {}};
    for (const auto& pinned : s.pinned())
        if (pinned) report.failures.push_back({0, "pinned case: " + *pinned});
    for (std::size_t i = 0; i < trials; ++i) {
        const std::uint64_t trial_seed = splitmix64(seed * 0x100000001B3ull + i);
        if (auto bad = s.trial(trial_seed)) report.failures.push_back({trial_seed, *bad});
    }
    return report;
}

}  // namespace apv::properties
