#include "apv/reference_profiles.hpp"

namespace apv::reference {

std::string two_proposal_cycle_text() {
    return "options: a b\n"
           "25: a | b\n"
           "35: b > a |\n"
           "40: | b > a\n";
}

std::string condorcet_approval_split_text() {
    return "options: a b c d\n"
           "9: a > b > c > d > 0\n"
           "1: b > a > c > d > 0\n"
           "1: d > 0\n"
           "5: a > d > 0 > b > c\n"
           "9: c\n";
}

std::string path_top_nonmonotone_text(bool modified) {
    std::string text =
        "options: a b c d e\n"
        "1: a > d > b > e > c\n"
        "1: b > a > c > e > d\n"
        "1: b > c > a > d > e\n"
        "1: b > c > d > e > a\n"
        "1: b > e > c > a > d\n"
        "1: d > a > b > c > e\n"
        "2: e > a > c > d > b\n"
        "1: e > c > a > d > b\n";
    text += modified ? "1: d > b > c > a > e\n" : "1: b > d > c > a > e\n";
    return text;
}

std::string pareto_boundary_text() {
    return "options: a b c\n"
           "6: a > b > 0 > c\n"
           "6: c > a > b > 0\n"
           "5: 0 > c > a > b\n";
}

std::string slight_preference_text(const Rational& eps) {
    const Rational half(1, 2);
    return "options: a b\n" + to_string(half + eps) + ": a > b > 0\n" + to_string(half - eps) + ": b > 0 > a\n";
}

std::string bucklin_flip_text(const Rational& eps) {
    return "options: a b c d e\n" + to_string(2 + eps) + ": a > e > b > c > d\n" + to_string(2 - eps) +
           ": b > c > a > d > e\n"
           "1: a > b > c > d > e\n"
           "1: b > d > c > a > e\n"
           "2: c > d > a > b > e\n";
}

ScoreMatrix bern_2004_matrix() {
    std::vector<OptionId> opts{OptionId("a"), OptionId("b"), kDefaultOption};
    // clang-format off
    std::vector<Rational> rows{
        0,      101586, 109812,
        106863, 0,      104144,
        102796, 106832, 0};
    // clang-format on
    return ScoreMatrix::from_rows(std::move(opts), MatrixKind::Absolute, rows);
}

}  // namespace apv::reference
