#include "apv/ballot.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace apv {

bool is_valid_token(std::string_view token) {
    if (token.empty()) return false;
    return std::all_of(token.begin(), token.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

int Ballot::group_of(const OptionId& x) const {
    for (std::size_t g = 0; g < groups.size(); ++g)
        if (std::find(groups[g].begin(), groups[g].end(), x) != groups[g].end())
            return static_cast<int>(g);
    return -1;
}

std::size_t Profile::index_of(const OptionId& x) const {
    auto it = std::find(universe.begin(), universe.end(), x);
    if (it == universe.end()) throw std::out_of_range("option '" + x.name() + "' is not in the universe");
    return static_cast<std::size_t>(it - universe.begin());
}

bool Profile::contains(const OptionId& x) const {
    return std::find(universe.begin(), universe.end(), x) != universe.end();
}

std::string_view to_string(UnrankedPolicy p) {
    return p == UnrankedPolicy::BelowRanked ? "below" : "incomparable";
}

std::vector<Violation> validate_ballot(const Ballot& ballot, const std::vector<OptionId>& universe) {
    std::vector<Violation> out;
    if (ballot.groups.empty()) {
        out.push_back({Violation::Rule::EmptyBallot, {}, "ballot has no groups"});
        return out;
    }
    std::set<OptionId> seen;
    bool default_seen = false;
    for (const auto& group : ballot.groups) {
        if (group.empty()) out.push_back({Violation::Rule::EmptyGroup, {}, "empty tie-group"});
        for (const auto& x : group) {
            if (x.is_default()) {
                if (default_seen) {
                    out.push_back({Violation::Rule::DefaultRepeated, x, "default option appears twice"});
                    continue;
                }
                default_seen = true;
            } else if (!seen.insert(x).second) {
                out.push_back({Violation::Rule::DuplicateOption, x, "duplicate option " + x.name()});
                continue;
            }
            if (std::find(universe.begin(), universe.end(), x) == universe.end())
                out.push_back({Violation::Rule::UnknownOption, x, "option " + x.name() + " not in universe"});
        }
    }
    return out;
}

Rational total_weight(const Profile& profile) {
    Rational sum = 0;
    for (const auto& e : profile.entries) sum += e.weight;
    return sum;
}

Profile make_profile(std::vector<OptionId> universe, std::vector<ProfileEntry> entries) {
    Profile p;
    for (auto& x : universe) {
        if (x.is_default() || p.contains(x)) continue;
        if (!is_valid_token(x.name())) throw std::invalid_argument("invalid option name '" + x.name() + "'");
        p.universe.push_back(std::move(x));
    }
    p.universe.push_back(kDefaultOption);
    for (auto& e : entries) {
        if (e.weight <= 0) throw std::invalid_argument("weight must be positive, got " + to_string(e.weight));
        if (auto v = validate_ballot(e.ballot, p.universe); !v.empty())
            throw std::invalid_argument(v.front().message);
    }
    p.entries = std::move(entries);
    return p;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

struct Token {
    enum Kind { Item, Greater, Equal } kind;
    std::string text;
};

// Throws std::invalid_argument; the caller attaches the line number.
std::vector<Token> tokenize_ballot(std::string_view s) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (c == '>') {
            tokens.push_back({Token::Greater, ">"});
            ++i;
        } else if (c == '=') {
            tokens.push_back({Token::Equal, "="});
            ++i;
        } else if (c == '|') {
            tokens.push_back({Token::Item, "0"});
            ++i;
        } else {
            std::size_t j = i;
            while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j])) && s[j] != '>' && s[j] != '=' &&
                   s[j] != '|')
                ++j;
            std::string tok(s.substr(i, j - i));
            if (!is_valid_token(tok)) throw std::invalid_argument("unknown token '" + tok + "'");
            tokens.push_back({Token::Item, tok});
            i = j;
        }
    }
    return tokens;
}

Ballot parse_ballot_body(std::string_view body) {
    std::vector<Token> raw = tokenize_ballot(body);
    if (raw.empty()) throw std::invalid_argument("empty ballot");

    // A bare bar acts as its own group: `a | b` reads as `a > 0 > b`.
    std::vector<Token> tokens;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (i > 0 && raw[i].kind == Token::Item && raw[i - 1].kind == Token::Item) {
            bool bar_involved = raw[i].text == "0" || raw[i - 1].text == "0";
            if (!bar_involved)
                throw std::invalid_argument("missing '>' or '=' between '" + raw[i - 1].text + "' and '" +
                                            raw[i].text + "'");
            tokens.push_back({Token::Greater, ">"});
        }
        tokens.push_back(raw[i]);
    }

    Ballot b;
    b.groups.emplace_back();
    bool expect_item = true;
    for (const auto& t : tokens) {
        if (expect_item) {
            if (t.kind != Token::Item) throw std::invalid_argument("expected an option before '" + t.text + "'");
            b.groups.back().emplace_back(t.text);
            expect_item = false;
        } else {
            if (t.kind == Token::Greater) b.groups.emplace_back();
            expect_item = true;
        }
    }
    if (expect_item) throw std::invalid_argument("ballot ends with a separator");
    return b;
}

}  // namespace

Ballot ballot_from_string(std::string_view text) {
    Ballot b = parse_ballot_body(text);
    std::vector<OptionId> universe;
    for (const auto& g : b.groups)
        for (const auto& x : g)
            if (std::find(universe.begin(), universe.end(), x) == universe.end()) universe.push_back(x);
    if (auto v = validate_ballot(b, universe); !v.empty()) throw std::invalid_argument(v.front().message);
    return b;
}

Profile parse_profile(std::string_view text) {
    std::vector<OptionId> declared;
    std::vector<OptionId> mentioned;
    std::vector<ProfileEntry> entries;

    auto note = [](std::vector<OptionId>& list, const OptionId& x) {
        if (!x.is_default() && std::find(list.begin(), list.end(), x) == list.end()) list.push_back(x);
    };

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = trim(text.substr(pos, eol - pos));
        pos = eol + 1;
        ++line_no;

        if (line.empty() || line.front() == '#') continue;

        if (line.starts_with("options:")) {
            std::istringstream in{std::string(line.substr(8))};
            std::string tok;
            bool any = false;
            while (in >> tok) {
                any = true;
                if (tok == "0" || tok == "|")
                    throw ParseError(line_no, "the default option 0 may not be declared");
                if (!is_valid_token(tok)) throw ParseError(line_no, "unknown token '" + tok + "'");
                OptionId x(tok);
                if (std::find(declared.begin(), declared.end(), x) != declared.end())
                    throw ParseError(line_no, "option " + tok + " declared twice");
                declared.push_back(std::move(x));
            }
            if (!any) throw ParseError(line_no, "empty options header");
            continue;
        }

        const auto colon = line.find(':');
        if (colon == std::string_view::npos) throw ParseError(line_no, "expected 'weight: ballot'");
        std::string_view weight_text = trim(line.substr(0, colon));
        std::string_view body = trim(line.substr(colon + 1));

        ProfileEntry entry;
        try {
            entry.weight = parse_rational(weight_text);
        } catch (const std::invalid_argument& e) {
            throw ParseError(line_no, std::string("bad weight: ") + e.what());
        }
        if (entry.weight <= 0) throw ParseError(line_no, "weight must be positive, got " + std::string(weight_text));
        if (body.empty()) throw ParseError(line_no, "empty ballot");
        try {
            entry.ballot = parse_ballot_body(body);
        } catch (const std::invalid_argument& e) {
            throw ParseError(line_no, e.what());
        }

        std::vector<OptionId> local;
        for (const auto& g : entry.ballot.groups)
            for (const auto& x : g) note(local, x);
        if (auto v = validate_ballot(entry.ballot, [&] {
                auto u = local;
                u.push_back(kDefaultOption);
                return u;
            }());
            !v.empty())
            throw ParseError(line_no, v.front().message);
        for (const auto& x : local) note(mentioned, x);
        entries.push_back(std::move(entry));
    }

    std::vector<OptionId> universe = declared;
    for (const auto& x : mentioned) note(universe, x);
    return make_profile(std::move(universe), std::move(entries));
}

std::string to_string(const Ballot& ballot) {
    std::string out;
    for (std::size_t g = 0; g < ballot.groups.size(); ++g) {
        if (g > 0) out += " > ";
        for (std::size_t i = 0; i < ballot.groups[g].size(); ++i) {
            if (i > 0) out += " = ";
            out += ballot.groups[g][i].name();
        }
    }
    return out;
}

std::string serialize_profile(const Profile& profile) {
    std::string out;
    if (profile.universe.size() > 1) {
        out = "options:";
        for (const auto& x : profile.universe)
            if (!x.is_default()) out += " " + x.name();
        out += "\n";
    }
    for (const auto& e : profile.entries) out += to_string(e.weight) + ": " + to_string(e.ballot) + "\n";
    return out;
}

}  // namespace apv
