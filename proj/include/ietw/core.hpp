// core.hpp -- symbols, rules, input-erasing two-way automata and classical NFAs

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ietw {

using Symbol = std::string;
using StateId = std::string;
using Word = std::vector<Symbol>;

/// Orders words by length first, then lexicographically by symbol name.
struct ShortLex {
    bool operator()(const Word& lhs, const Word& rhs) const;
};

/// A bounded view of a language: a set of words kept in shortlex order.
using Language = std::set<Word, ShortLex>;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A word contains a symbol the automaton or grammar does not know.
class InputError : public Error {
public:
    using Error::Error;
};

/// An operation was called on an object that does not satisfy its requirements.
class PreconditionError : public Error {
public:
    using Error::Error;
};

enum class Direction : std::uint8_t { Left, Right, Neutral };

std::string_view to_string(Direction d);

/// A rule `x q -> p` (left), `q x -> p` (right) or `q -> p` (epsilon).
///
/// Epsilon rules have no reading direction: a left rule and a right rule that
/// both read nothing are the same rule, so they are stored in one neutral form.
class Rule {
public:
    static Rule left(Word read, StateId source, StateId target);
    static Rule right(StateId source, Word read, StateId target);
    static Rule epsilon(StateId source, StateId target);
    static Rule make(Direction d, StateId source, Word read, StateId target);

    Direction direction() const noexcept { return direction_; }
    const StateId& source() const noexcept { return source_; }
    const Word& read() const noexcept { return read_; }
    const StateId& target() const noexcept { return target_; }

    /// Length of the left-hand side, counting the state itself.
    std::size_t lhs_length() const noexcept { return read_.size() + 1; }
    bool is_epsilon() const noexcept { return read_.empty(); }

    /// True if the rule may be read as `x q -> p` (left rules and epsilon rules).
    bool matches_left_form() const noexcept { return direction_ != Direction::Right; }
    /// True if the rule may be read as `q x -> p` (right rules and epsilon rules).
    bool matches_right_form() const noexcept { return direction_ != Direction::Left; }

    friend bool operator==(const Rule&, const Rule&) = default;
    friend auto operator<=>(const Rule&, const Rule&) = default;

private:
    Rule(Direction d, StateId source, Word read, StateId target);

    Direction direction_;
    StateId source_;
    Word read_;
    StateId target_;
};

struct RuleHash {
    std::size_t operator()(const Rule& r) const noexcept;
};

/// Human-readable form of a rule, e.g. `a s -> q`.
std::string to_string(const Rule& r);

Direction rule_direction(const Rule& r);

/// Input-erasing two-way general finite automaton (Q, Sigma, R, s, F).
struct Ietwgfa {
    std::set<StateId> states;
    std::set<Symbol> alphabet;
    std::vector<Rule> rules;
    StateId start;
    std::set<StateId> finals;

    friend bool operator==(const Ietwgfa&, const Ietwgfa&) = default;
};

struct Classification {
    bool simple = true;
    bool epsilon_free = true;
    /// Maximum of |lhs(r)| over all rules; 0 for an empty rule set.
    std::size_t max_lhs_len = 0;

    friend bool operator==(const Classification&, const Classification&) = default;
};

Classification classify(const Ietwgfa& m);

/// Transition `from a -> to`, or `from -> to` when `symbol` is empty.
struct NfaRule {
    StateId from;
    std::optional<Symbol> symbol;
    StateId to;

    friend bool operator==(const NfaRule&, const NfaRule&) = default;
    friend auto operator<=>(const NfaRule&, const NfaRule&) = default;
};

/// Classical one-way finite automaton, optionally with epsilon transitions.
struct Nfa {
    std::set<StateId> states;
    std::set<Symbol> alphabet;
    std::vector<NfaRule> rules;
    StateId start;
    std::set<StateId> finals;

    bool epsilon_free() const;

    friend bool operator==(const Nfa&, const Nfa&) = default;
};

struct Violation {
    std::string element;
    std::string message;

    friend bool operator==(const Violation&, const Violation&) = default;
};

using ValidationReport = std::vector<Violation>;

ValidationReport validate_automaton(const Ietwgfa& m);
ValidationReport validate_automaton(const Nfa& n);

/// Throws PreconditionError listing every violation when the report is non-empty.
void require_valid(const ValidationReport& report, std::string_view what);

/// Throws InputError when `w` uses a symbol outside `alphabet`.
void require_word_over(const Word& w, const std::set<Symbol>& alphabet);

bool nfa_accepts(const Nfa& n, const Word& w);
Language nfa_enumerate(const Nfa& n, std::size_t max_len);

/// Calls `visit` on every word over `alphabet` of length at most `max_len`, in shortlex order.
void for_each_word(const std::set<Symbol>& alphabet, std::size_t max_len,
                   const std::function<void(const Word&)>& visit);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

} // namespace ietw
