#include "apv/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace apv {

std::string describe(const ScoreMatrix& m) {
    std::string out = "{options:[";
    for (std::size_t i = 0; i < m.size(); ++i) out += (i ? "," : "") + m.options()[i].name();
    out += "], rows:[";
    for (std::size_t x = 0; x < m.size(); ++x) {
        out += x ? ",[" : "[";
        for (std::size_t y = 0; y < m.size(); ++y) {
            if (y) out += ",";
            out += x == y ? std::string("-") : to_string(m.at(x, y));
        }
        out += "]";
    }
    return out + "]}";
}

Table table_of(std::string name, const ScoreMatrix& m) {
    Table t{std::move(name), m.options(), std::vector<Rational>(m.size() * m.size())};
    for (std::size_t x = 0; x < m.size(); ++x)
        for (std::size_t y = 0; y < m.size(); ++y)
            if (x != y) t.cells[x * m.size() + y] = m.at(x, y);
    return t;
}

Table table_of(std::string name, const MarginMatrix& m) {
    Table t{std::move(name), m.options(), std::vector<Rational>(m.size() * m.size())};
    for (std::size_t x = 0; x < m.size(); ++x)
        for (std::size_t y = 0; y < m.size(); ++y)
            if (x != y) t.cells[x * m.size() + y] = m.at(x, y);
    return t;
}

std::string format_table(const Table& t) {
    const std::size_t n = t.options.size();
    std::vector<std::vector<std::string>> grid(n + 1, std::vector<std::string>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        grid[0][i + 1] = t.options[i].name();
        grid[i + 1][0] = t.options[i].name();
        for (std::size_t j = 0; j < n; ++j) grid[i + 1][j + 1] = i == j ? "-" : to_string(t.cells[i * n + j]);
    }
    std::size_t width = 1;
    for (const auto& row : grid)
        for (const auto& cell : row) width = std::max(width, cell.size());

    std::ostringstream out;
    out << "matrix " << t.name << "\n";
    for (const auto& row : grid) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out << ' ';
            out << std::string(width - row[c].size(), ' ') << row[c];
        }
        out << "\n";
    }
    return out.str();
}

Json table_to_json(const Table& t) {
    const std::size_t n = t.options.size();
    Json j;
    j["options"] = Json::array();
    for (const auto& x : t.options) j["options"].push_back(x.name());
    j["rows"] = Json::array();
    for (std::size_t x = 0; x < n; ++x) {
        Json row = Json::array();
        for (std::size_t y = 0; y < n; ++y) row.push_back(x == y ? Json(nullptr) : Json(to_string(t.cells[x * n + y])));
        j["rows"].push_back(std::move(row));
    }
    return j;
}

Table table_from_json(const std::string& name, const Json& j) {
    Table t;
    t.name = name;
    for (const auto& x : j.at("options")) t.options.emplace_back(x.get<std::string>());
    const std::size_t n = t.options.size();
    t.cells.assign(n * n, Rational(0));
    const auto& rows = j.at("rows");
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (x != y) t.cells[x * n + y] = parse_rational(rows.at(x).at(y).get<std::string>());
    return t;
}

Json to_json(const TallyReport& r) {
    Json j;
    j["method"] = r.method;
    j["winners"] = Json::array();
    for (const auto& w : r.winners) j["winners"].push_back(w.name());
    j["margins"] = Json::object();
    for (const auto& [x, v] : r.margins) j["margins"][x.name()] = to_string(v);
    j["total_weight"] = to_string(r.total_weight);
    j["interp"] = std::string(to_string(r.interp));
    if (!r.matrices.empty()) {
        j["matrices"] = Json::object();
        for (const auto& t : r.matrices) j["matrices"][t.name] = table_to_json(t);
    }
    return j;
}

namespace {

UnrankedPolicy policy_from(const std::string& s) {
    if (s == "below") return UnrankedPolicy::BelowRanked;
    if (s == "incomparable") return UnrankedPolicy::Incomparable;
    throw std::invalid_argument("unknown interpretation '" + s + "'");
}

}  // namespace

TallyReport tally_report_from_json(const Json& j) {
    TallyReport r;
    r.method = j.at("method").get<std::string>();
    for (const auto& w : j.at("winners")) r.winners.emplace_back(w.get<std::string>());
    for (const auto& [k, v] : j.at("margins").items()) r.margins.emplace_back(OptionId(k), parse_rational(v.get<std::string>()));
    r.total_weight = parse_rational(j.at("total_weight").get<std::string>());
    r.interp = policy_from(j.at("interp").get<std::string>());
    if (j.contains("matrices"))
        for (const auto& [name, t] : j.at("matrices").items()) r.matrices.push_back(table_from_json(name, t));
    return r;
}

std::string to_text(const TallyReport& r) {
    std::ostringstream out;
    out << "method: " << r.method << "\n";
    out << "winners:";
    for (const auto& w : r.winners) out << ' ' << w.name();
    out << "\n";
    out << "total_weight: " << to_string(r.total_weight) << "\n";
    out << "interp: " << to_string(r.interp) << "\n";
    for (const auto& [x, v] : r.margins) out << "margin " << x.name() << ": " << to_string(v) << "\n";
    for (const auto& t : r.matrices) out << format_table(t);
    return out.str();
}

TallyReport tally_report_from_text(const std::string& text) {
    TallyReport r;
    std::istringstream in(text);
    std::string line;
    auto value_of = [](const std::string& l, std::size_t key_len) { return l.substr(key_len); };
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line.starts_with("method: ")) {
            r.method = value_of(line, 8);
        } else if (line.starts_with("winners:")) {
            std::istringstream ws(line.substr(8));
            std::string w;
            while (ws >> w) r.winners.emplace_back(w);
        } else if (line.starts_with("total_weight: ")) {
            r.total_weight = parse_rational(value_of(line, 14));
        } else if (line.starts_with("interp: ")) {
            r.interp = policy_from(value_of(line, 8));
        } else if (line.starts_with("margin ")) {
            const auto colon = line.find(": ");
            if (colon == std::string::npos) throw std::invalid_argument("bad margin line: " + line);
            r.margins.emplace_back(OptionId(line.substr(7, colon - 7)), parse_rational(line.substr(colon + 2)));
        } else if (line.starts_with("matrix ")) {
            Table t;
            t.name = line.substr(7);
            std::string header;
            std::getline(in, header);
            std::istringstream hs(header);
            std::string tok;
            while (hs >> tok) t.options.emplace_back(tok);
            const std::size_t n = t.options.size();
            t.cells.assign(n * n, Rational(0));
            for (std::size_t x = 0; x < n; ++x) {
                std::string row;
                if (!std::getline(in, row)) throw std::invalid_argument("truncated matrix " + t.name);
                std::istringstream rs(row);
                rs >> tok;  // row label
                for (std::size_t y = 0; y < n; ++y) {
                    if (!(rs >> tok)) throw std::invalid_argument("short row in matrix " + t.name);
                    if (x != y) t.cells[x * n + y] = parse_rational(tok);
                }
            }
            r.matrices.push_back(std::move(t));
        } else {
            throw std::invalid_argument("unrecognized report line: " + line);
        }
    }
    return r;
}

}  // namespace apv
