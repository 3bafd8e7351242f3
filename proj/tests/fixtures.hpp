// fixtures.hpp -- machines and grammars used across the test suites

#pragma once

#include "ietw/core.hpp"
#include "ietw/grammar.hpp"

#include <sstream>
#include <string>

namespace fixtures {

using namespace ietw;

/// Splits "a b c" into symbols; "" is the empty word.
inline Word w(const std::string& text) {
    Word out;
    for (char c : text) {
        if (c != ' ')
            out.emplace_back(1, c);
    }
    return out;
}

inline Language lang(std::initializer_list<const char*> words) {
    Language out;
    for (const char* s : words)
        out.insert(w(s));
    return out;
}

/// {as -> q, qb -> s}, F = {s}: the language a^n b^n.
inline Ietwgfa m_ab() {
    return Ietwgfa{{"s", "q"}, {"a", "b"}, {Rule::left(w("a"), "s", "q"), Rule::right("q", w("b"), "s")}, "s", {"s"}};
}

/// {sa -> f}, F = {f}.
inline Ietwgfa m_a() { return Ietwgfa{{"s", "f"}, {"a"}, {Rule::right("s", w("a"), "f")}, "s", {"f"}}; }

/// a^n b^n c^m under alternating computations.
inline Ietwgfa m_abc() {
    return Ietwgfa{{"s", "q", "v", "w"},
                   {"a", "b", "c"},
                   {Rule::left(w("a"), "s", "q"), Rule::right("q", w("b"), "s"), Rule::epsilon("s", "v"),
                    Rule::right("v", w("c"), "w"), Rule::epsilon("w", "v")},
                   "s",
                   {"s", "v"}};
}

/// S -> aSb | eps.
inline LinearGrammar g_ab() {
    return LinearGrammar{{"S"},
                         {"a", "b"},
                         {GrammarRule::nonterminal("S", w("a"), "S", w("b")), GrammarRule::terminal("S", {})},
                         "S"};
}

/// NFA accepting x* over the given alphabet.
inline Nfa star(const std::set<Symbol>& alphabet, const std::string& x) {
    return Nfa{{"i"}, alphabet, {{"i", x, "i"}}, "i", {"i"}};
}

/// NFA accepting exactly the listed words.
inline Nfa finite(const std::set<Symbol>& alphabet, std::initializer_list<const char*> words) {
    Nfa n{{"i"}, alphabet, {}, "i", {}};
    int next = 0;
    for (const char* s : words) {
        StateId cur = "i";
        for (const auto& a : w(s)) {
            StateId to = "n" + std::to_string(next++);
            n.states.insert(to);
            n.rules.push_back({cur, a, to});
            cur = to;
        }
        n.finals.insert(cur);
    }
    return n;
}

inline std::string show(const Language& l) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& word : l) {
        os << (first ? "" : ",") << (word.empty() ? std::string("_") : join(word, ""));
        first = false;
    }
    os << "}";
    return os.str();
}

} // namespace fixtures
