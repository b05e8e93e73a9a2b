#pragma once

#include "apv/ballot.hpp"
#include "apv/choosers.hpp"
#include "apv/score_matrix.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace apv {

using Json = nlohmann::ordered_json;

/// One-line rendering used in diagnostics and counterexample reports.
std::string describe(const ScoreMatrix& m);

/// Labelled square table; the diagonal is empty.
struct Table {
    std::string name;
    std::vector<OptionId> options;
    std::vector<Rational> cells;  // row-major n*n, diagonal ignored

    friend bool operator==(const Table&, const Table&) = default;
};

Table table_of(std::string name, const ScoreMatrix& m);
Table table_of(std::string name, const MarginMatrix& m);

/// Aligned text table, `-` on the diagonal.
std::string format_table(const Table& t);

struct TallyReport {
    std::string method;
    std::vector<OptionId> winners;
    std::vector<std::pair<OptionId, Rational>> margins;
    Rational total_weight;
    UnrankedPolicy interp = UnrankedPolicy::BelowRanked;
    std::vector<Table> matrices;

    friend bool operator==(const TallyReport&, const TallyReport&) = default;
};

Json to_json(const TallyReport& r);
TallyReport tally_report_from_json(const Json& j);

std::string to_text(const TallyReport& r);
/// Parses one report produced by to_text. Throws std::invalid_argument.
TallyReport tally_report_from_text(const std::string& text);

Json table_to_json(const Table& t);
Table table_from_json(const std::string& name, const Json& j);

}  // namespace apv
