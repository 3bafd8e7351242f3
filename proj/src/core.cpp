// core.cpp -- value types, validation and classical NFA semantics

#include "ietw/core.hpp"

#include <algorithm>
#include <map>

namespace ietw {

bool ShortLex::operator()(const Word& lhs, const Word& rhs) const {
    if (lhs.size() != rhs.size())
        return lhs.size() < rhs.size();
    return lhs < rhs;
}

std::string_view to_string(Direction d) {
    switch (d) {
    case Direction::Left:
        return "L";
    case Direction::Right:
        return "R";
    case Direction::Neutral:
        return "N";
    }
    return "?";
}

Rule::Rule(Direction d, StateId source, Word read, StateId target)
    : direction_(read.empty() ? Direction::Neutral : d),
      source_(std::move(source)),
      read_(std::move(read)),
      target_(std::move(target)) {
    if (direction_ == Direction::Neutral && !read_.empty())
        throw PreconditionError("a rule reading symbols needs a direction");
}

Rule Rule::left(Word read, StateId source, StateId target) {
    return Rule(Direction::Left, std::move(source), std::move(read), std::move(target));
}

Rule Rule::right(StateId source, Word read, StateId target) {
    return Rule(Direction::Right, std::move(source), std::move(read), std::move(target));
}

Rule Rule::epsilon(StateId source, StateId target) {
    return Rule(Direction::Neutral, std::move(source), {}, std::move(target));
}

Rule Rule::make(Direction d, StateId source, Word read, StateId target) {
    return Rule(d, std::move(source), std::move(read), std::move(target));
}

std::size_t RuleHash::operator()(const Rule& r) const noexcept {
    std::hash<std::string> h;
    std::size_t seed = static_cast<std::size_t>(r.direction());
    auto mix = [&seed](std::size_t v) { seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2); };
    mix(h(r.source()));
    for (const auto& a : r.read())
        mix(h(a));
    mix(h(r.target()));
    return seed;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i)
            out += sep;
        out += parts[i];
    }
    return out;
}

std::string to_string(const Rule& r) {
    std::vector<std::string> lhs;
    switch (r.direction()) {
    case Direction::Left:
        lhs = r.read();
        lhs.push_back(r.source());
        break;
    case Direction::Right:
        lhs.push_back(r.source());
        lhs.insert(lhs.end(), r.read().begin(), r.read().end());
        break;
    case Direction::Neutral:
        lhs.push_back(r.source());
        break;
    }
    return join(lhs, " ") + " -> " + r.target();
}

Direction rule_direction(const Rule& r) { return r.direction(); }

Classification classify(const Ietwgfa& m) {
    Classification c;
    for (const auto& r : m.rules) {
        c.max_lhs_len = std::max(c.max_lhs_len, r.lhs_length());
        if (r.lhs_length() > 2)
            c.simple = false;
        if (r.lhs_length() == 1)
            c.epsilon_free = false;
    }
    return c;
}

bool Nfa::epsilon_free() const {
    return std::none_of(rules.begin(), rules.end(), [](const NfaRule& r) { return !r.symbol; });
}

namespace {

template <typename Machine>
void validate_header(const Machine& m, ValidationReport& report) {
    if (m.states.empty())
        report.push_back({"states", "state set is empty"});
    if (m.alphabet.empty())
        report.push_back({"alphabet", "input alphabet is empty"});
    for (const auto& q : m.states) {
        if (m.alphabet.count(q))
            report.push_back({q, "disjointness: '" + q + "' is both a state and an input symbol"});
    }
    if (!m.states.count(m.start))
        report.push_back({m.start, "start state '" + m.start + "' is not a declared state"});
    for (const auto& f : m.finals) {
        if (!m.states.count(f))
            report.push_back({f, "final state '" + f + "' is not a declared state"});
    }
}

void check_state(const std::set<StateId>& states, const StateId& q, const std::string& where,
                 ValidationReport& report) {
    if (!states.count(q))
        report.push_back({q, "rule '" + where + "' uses undeclared state '" + q + "'"});
}

void check_symbol(const std::set<Symbol>& alphabet, const Symbol& a, const std::string& where,
                  ValidationReport& report) {
    if (!alphabet.count(a))
        report.push_back({a, "rule '" + where + "' uses undeclared symbol '" + a + "'"});
}

} // namespace

ValidationReport validate_automaton(const Ietwgfa& m) {
    ValidationReport report;
    validate_header(m, report);
    for (const auto& r : m.rules) {
        const auto where = to_string(r);
        check_state(m.states, r.source(), where, report);
        check_state(m.states, r.target(), where, report);
        for (const auto& a : r.read())
            check_symbol(m.alphabet, a, where, report);
    }
    return report;
}

ValidationReport validate_automaton(const Nfa& n) {
    ValidationReport report;
    validate_header(n, report);
    for (const auto& r : n.rules) {
        const auto where = r.from + " " + r.symbol.value_or("_") + " -> " + r.to;
        check_state(n.states, r.from, where, report);
        check_state(n.states, r.to, where, report);
        if (r.symbol)
            check_symbol(n.alphabet, *r.symbol, where, report);
    }
    return report;
}

void require_valid(const ValidationReport& report, std::string_view what) {
    if (report.empty())
        return;
    std::string msg = std::string(what) + " is not well-formed:";
    for (const auto& v : report)
        msg += "\n  " + v.message;
    throw PreconditionError(msg);
}

void require_word_over(const Word& w, const std::set<Symbol>& alphabet) {
    for (const auto& a : w) {
        if (!alphabet.count(a))
            throw InputError("symbol '" + a + "' is not in the input alphabet");
    }
}

namespace {

using StateSet = std::set<StateId>;

StateSet epsilon_closure(const Nfa& n, StateSet current) {
    std::vector<StateId> stack(current.begin(), current.end());
    while (!stack.empty()) {
        auto q = std::move(stack.back());
        stack.pop_back();
        for (const auto& r : n.rules) {
            if (!r.symbol && r.from == q && current.insert(r.to).second)
                stack.push_back(r.to);
        }
    }
    return current;
}

StateSet step(const Nfa& n, const StateSet& current, const Symbol& a) {
    StateSet next;
    for (const auto& r : n.rules) {
        if (r.symbol && *r.symbol == a && current.count(r.from))
            next.insert(r.to);
    }
    return epsilon_closure(n, std::move(next));
}

bool any_final(const Nfa& n, const StateSet& current) {
    return std::any_of(current.begin(), current.end(), [&](const StateId& q) { return n.finals.count(q) > 0; });
}

} // namespace

bool nfa_accepts(const Nfa& n, const Word& w) {
    require_word_over(w, n.alphabet);
    auto current = epsilon_closure(n, {n.start});
    for (const auto& a : w) {
        current = step(n, current, a);
        if (current.empty())
            return false;
    }
    return any_final(n, current);
}

Language nfa_enumerate(const Nfa& n, std::size_t max_len) {
    Language out;
    Word prefix;
    std::function<void(const StateSet&)> walk = [&](const StateSet& current) {
        if (any_final(n, current))
            out.insert(prefix);
        if (prefix.size() == max_len)
            return;
        for (const auto& a : n.alphabet) {
            auto next = step(n, current, a);
            if (next.empty())
                continue;
            prefix.push_back(a);
            walk(next);
            prefix.pop_back();
        }
    };
    walk(epsilon_closure(n, {n.start}));
    return out;
}

void for_each_word(const std::set<Symbol>& alphabet, std::size_t max_len,
                   const std::function<void(const Word&)>& visit) {
    const std::vector<Symbol> letters(alphabet.begin(), alphabet.end());
    Word w;
    for (std::size_t len = 0; len <= max_len; ++len) {
        if (len > 0 && letters.empty())
            break;
        std::vector<std::size_t> digits(len, 0);
        w.assign(len, letters.empty() ? Symbol{} : letters.front());
        while (true) {
            visit(w);
            std::size_t i = len;
            while (i > 0 && digits[i - 1] + 1 == letters.size()) {
                digits[i - 1] = 0;
                w[i - 1] = letters[0];
                --i;
            }
            if (i == 0)
                break;
            ++digits[i - 1];
            w[i - 1] = letters[digits[i - 1]];
        }
    }
}

} // namespace ietw
