#include "apv/cli.hpp"

#include "apv/baselines.hpp"
#include "apv/choosers.hpp"
#include "apv/llull.hpp"
#include "apv/path_scores.hpp"
#include "apv/properties.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace apv::cli {

namespace {

void require_nondegenerate(const Profile& profile) {
    if (profile.entries.empty()) throw DegenerateInput("the profile has no ballots");
    if (profile.universe.size() < 2) throw DegenerateInput("no option besides 0");
}

struct Matrices {
    ScoreMatrix llull;
    ScoreMatrix path;
};

Matrices compute(const Profile& profile, Interp interp, bool relative) {
    ScoreMatrix m = build_llull(profile, interp);
    if (relative) m = to_relative(m, total_weight(profile));
    ScoreMatrix pm = path_scores(m);
    return {std::move(m), std::move(pm)};
}

std::vector<Table> tables_for(const Matrices& mats, const std::string& which) {
    std::vector<Table> out;
    if (which == "llull" || which == "all") out.push_back(table_of("llull", mats.llull));
    if (which == "margins" || which == "all") out.push_back(table_of("margins", margins(mats.llull)));
    if (which == "path" || which == "all") out.push_back(table_of("path", mats.path));
    if (which == "path-margins" || which == "all") out.push_back(table_of("path-margins", margins(mats.path)));
    return out;
}

Profile load_profile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read ballot file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_profile(buf.str());
}

Interp interp_from(const std::string& s) {
    return Interp{s == "incomparable" ? UnrankedPolicy::Incomparable : UnrankedPolicy::BelowRanked};
}

}  // namespace

TallyReport tally(const Profile& profile, Interp interp, const std::string& method, bool with_matrices,
                  bool relative) {
    require_nondegenerate(profile);
    const Matrices mats = compute(profile, interp, relative);
    const ScoreMatrix& m = mats.llull;
    const ScoreMatrix& pm = mats.path;
    const std::size_t d = m.default_index();

    TallyReport r;
    r.method = method;
    r.total_weight = total_weight(profile);
    r.interp = interp.unranked_policy;

    ChoiceSet winners;
    if (method == "prac") {
        winners = prac_winners(pm);
        for (std::size_t x = 0; x < m.size(); ++x)
            if (x != d) r.margins.emplace_back(m.options()[x], margin0(pm, x));
    } else if (method == "path-top") {
        winners = path_top(pm);
        // Weakest path margin of each option; positive exactly for a sole winner.
        for (std::size_t x = 0; x < m.size(); ++x) {
            std::optional<Rational> worst;
            for (std::size_t y = 0; y < m.size(); ++y) {
                if (x == y) continue;
                Rational v = pm.at(x, y) - pm.at(y, x);
                if (!worst || v < *worst) worst = v;
            }
            r.margins.emplace_back(m.options()[x], worst.value_or(Rational(0)));
        }
    } else if (method == "approval" || method == "swiss") {
        winners = method == "approval" ? approval_winners(m) : swiss_procedure(m);
        for (std::size_t x = 0; x < m.size(); ++x)
            if (x != d) r.margins.emplace_back(m.options()[x], m.at(x, d) - m.at(d, x));
    } else if (method == "bucklin") {
        const BucklinOutcome b = bucklin_tally(profile);
        winners = b.winners;
        if (!b.cumulative.empty()) {
            const auto& counts = b.depth > 0 ? b.cumulative[b.depth - 1] : b.cumulative.back();
            for (std::size_t x = 0; x < profile.universe.size(); ++x)
                if (!profile.universe[x].is_default()) r.margins.emplace_back(profile.universe[x], counts[x]);
        }
    } else {
        throw std::invalid_argument("unknown method '" + method + "'");
    }
    r.winners = winners.members;
    if (with_matrices) r.matrices = tables_for(mats, "all");
    return r;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Approval-preferential vote tallying"};
    app.require_subcommand(1);

    std::string ballots;
    std::string unranked = "below";
    std::string format = "text";
    std::string method = "prac";
    std::string which = "all";
    bool relative = false;
    bool with_matrices = false;

    auto add_input = [&](CLI::App* sub) {
        sub->add_option("--ballots", ballots, "Ballot file")->required();
        sub->add_option("--unranked", unranked, "How unranked options compare with ranked ones")
            ->check(CLI::IsMember({"below", "incomparable"}));
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
        sub->add_flag("--relative", relative, "Divide scores by the total weight");
    };

    CLI::App* tally_cmd = app.add_subcommand("tally", "Compute choice sets");
    add_input(tally_cmd);
    tally_cmd->add_option("--method", method, "Choice rule")
        ->check(CLI::IsMember({"prac", "path-top", "approval", "swiss", "bucklin", "all"}));
    tally_cmd->add_flag("--matrices", with_matrices, "Embed the score matrices");

    CLI::App* matrix_cmd = app.add_subcommand("matrix", "Print score matrices");
    add_input(matrix_cmd);
    matrix_cmd->add_option("--which", which, "Matrices to print")
        ->check(CLI::IsMember({"llull", "margins", "path", "path-margins", "all"}));

    CLI::App* rank_cmd = app.add_subcommand("rank", "Print the ranking by path scores");
    add_input(rank_cmd);

    std::string suite = "all";
    std::optional<std::size_t> trials;
    std::uint64_t seed = 1;
    std::string verify_format = "text";
    CLI::App* verify_cmd = app.add_subcommand("verify", "Run property suites");
    verify_cmd->add_option("--suite", suite, "Suite name or 'all'");
    verify_cmd->add_option("--trials", trials, "Trials per suite (default depends on the suite)");
    verify_cmd->add_option("--seed", seed, "Base seed");
    verify_cmd->add_option("--format", verify_format, "Output format")->check(CLI::IsMember({"text", "json"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (verify_cmd->parsed()) {
            std::vector<std::string> names;
            if (suite == "all") {
                names = properties::suite_names();
            } else {
                properties::default_trials(suite);  // rejects unknown names
                names.push_back(suite);
            }
            bool all_passed = true;
            Json summary = Json::object();
            summary["suites"] = Json::array();
            for (const auto& name : names) {
                const auto report =
                    properties::run_suite(name, trials.value_or(properties::default_trials(name)), seed);
                all_passed = all_passed && report.passed();
                if (verify_format == "json") {
                    Json s;
                    s["suite"] = report.suite;
                    s["trials"] = report.trials;
                    s["passed"] = report.passed();
                    s["failures"] = Json::array();
                    for (const auto& f : report.failures)
                        s["failures"].push_back({{"seed", f.seed}, {"counterexample", f.counterexample}});
                    summary["suites"].push_back(std::move(s));
                } else {
                    out << (report.passed() ? "PASS " : "FAIL ") << report.suite << ": " << report.trials
                        << " trials, " << report.failures.size() << " failures\n";
                    for (std::size_t i = 0; i < report.failures.size() && i < 5; ++i)
                        out << "  seed " << report.failures[i].seed << ": " << report.failures[i].counterexample
                            << "\n";
                }
            }
            if (verify_format == "json") {
                summary["passed"] = all_passed;
                out << summary.dump(2) << "\n";
            }
            return all_passed ? kOk : kFailure;
        }

        const Profile profile = load_profile(ballots);
        const Interp interp = interp_from(unranked);
        require_nondegenerate(profile);

        if (tally_cmd->parsed()) {
            const std::vector<std::string> methods = method == "all" ? kMethods : std::vector<std::string>{method};
            Json reports = Json::array();
            for (std::size_t i = 0; i < methods.size(); ++i) {
                const TallyReport r = tally(profile, interp, methods[i], with_matrices, relative);
                if (format == "json") {
                    reports.push_back(to_json(r));
                } else {
                    if (i) out << "\n";
                    out << to_text(r);
                }
            }
            if (format == "json") out << (methods.size() == 1 ? reports[0] : reports).dump(2) << "\n";
            return kOk;
        }

        const Matrices mats = compute(profile, interp, relative);
        if (matrix_cmd->parsed()) {
            const auto tables = tables_for(mats, which);
            if (format == "json") {
                Json j;
                j["total_weight"] = to_string(total_weight(profile));
                j["interp"] = std::string(to_string(interp.unranked_policy));
                j["matrices"] = Json::object();
                for (const auto& t : tables) j["matrices"][t.name] = table_to_json(t);
                out << j.dump(2) << "\n";
            } else {
                for (std::size_t i = 0; i < tables.size(); ++i) out << (i ? "\n" : "") << format_table(tables[i]);
            }
            return kOk;
        }

        if (rank_cmd->parsed()) {
            const WeakOrder w = ranking(mats.path);
            if (format == "json") {
                Json j;
                j["ranking"] = Json::array();
                for (const auto& level : w.levels) {
                    Json l = Json::array();
                    for (const auto& x : level) l.push_back(x.name());
                    j["ranking"].push_back(std::move(l));
                }
                out << j.dump(2) << "\n";
            } else {
                out << to_string(w) << "\n";
            }
            return kOk;
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const DegenerateInput& e) {
        err << "degenerate input: " << e.what() << "\n";
        return kDegenerate;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace apv::cli
