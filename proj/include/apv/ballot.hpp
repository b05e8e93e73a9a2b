#pragma once

#include "apv/rational.hpp"

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace apv {

/// Name of an option. The token `0` is reserved for the default option
/// (status quo); approving x means preferring x to `0`.
class OptionId {
public:
    OptionId() = default;
    explicit OptionId(std::string name) : name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }
    bool is_default() const noexcept { return name_ == "0"; }

    friend auto operator<=>(const OptionId&, const OptionId&) = default;

private:
    std::string name_;
};

inline const OptionId kDefaultOption{"0"};

/// True for nonempty tokens of ASCII alphanumerics and underscores.
bool is_valid_token(std::string_view token);

/// A truncated weak order: tie-groups best first. Options not mentioned are
/// unranked. The weight lives on the ProfileEntry.
struct Ballot {
    std::vector<std::vector<OptionId>> groups;

    /// Index of the group containing `x`, or -1 when unranked.
    int group_of(const OptionId& x) const;

    friend bool operator==(const Ballot&, const Ballot&) = default;
};

struct ProfileEntry {
    Rational weight;
    Ballot ballot;

    friend bool operator==(const ProfileEntry&, const ProfileEntry&) = default;
};

/// Weighted ballots over a declared universe. The universe always contains
/// the default option, stored last.
struct Profile {
    std::vector<OptionId> universe;
    std::vector<ProfileEntry> entries;

    std::size_t index_of(const OptionId& x) const;  // throws std::out_of_range
    bool contains(const OptionId& x) const;

    friend bool operator==(const Profile&, const Profile&) = default;
};

/// How a ranked option compares with an unranked one. Two unranked options
/// are never compared.
enum class UnrankedPolicy { BelowRanked, Incomparable };

struct Interp {
    UnrankedPolicy unranked_policy = UnrankedPolicy::BelowRanked;
};

std::string_view to_string(UnrankedPolicy p);

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Parses the line-based ballot format:
///
///     # comment
///     options: a b c
///     25: a | b
///     1/2: a = b > c
///
/// `|` is an alias of `0`. Without an `options:` header the universe is the
/// mentioned options in order of first appearance. Throws ParseError.
Profile parse_profile(std::string_view text);

/// Inverse of parse_profile up to formatting.
std::string serialize_profile(const Profile& profile);

/// Builds a profile from a universe (without or with `0`) and entries,
/// normalizing the universe so that `0` comes last. Throws
/// std::invalid_argument when a ballot is invalid or a weight not positive.
Profile make_profile(std::vector<OptionId> universe, std::vector<ProfileEntry> entries);

struct Violation {
    enum class Rule { EmptyBallot, EmptyGroup, DuplicateOption, DefaultRepeated, UnknownOption };
    Rule rule;
    OptionId option;
    std::string message;
};

/// All rule violations of `ballot` against `universe`; empty iff valid.
std::vector<Violation> validate_ballot(const Ballot& ballot, const std::vector<OptionId>& universe);

Rational total_weight(const Profile& profile);

/// Ballot from a compact description such as "a > b = c > 0".
Ballot ballot_from_string(std::string_view text);

std::string to_string(const Ballot& ballot);

}  // namespace apv
