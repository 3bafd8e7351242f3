// grammar.hpp -- linear and even linear grammars

#pragma once

#include "ietw/core.hpp"

#include <optional>

namespace ietw {

using NonterminalId = std::string;

/// `lhs -> x mid y`, or the terminal rule `lhs -> x` when `mid` is empty (then y is empty).
struct GrammarRule {
    NonterminalId lhs;
    Word x;
    std::optional<NonterminalId> mid;
    Word y;

    static GrammarRule terminal(NonterminalId lhs, Word x);
    static GrammarRule nonterminal(NonterminalId lhs, Word x, NonterminalId mid, Word y);

    friend bool operator==(const GrammarRule&, const GrammarRule&) = default;
    friend auto operator<=>(const GrammarRule&, const GrammarRule&) = default;
};

std::string to_string(const GrammarRule& r);

struct LinearGrammar {
    std::set<NonterminalId> nonterminals;
    std::set<Symbol> terminals;
    std::vector<GrammarRule> rules;
    NonterminalId start;

    friend bool operator==(const LinearGrammar&, const LinearGrammar&) = default;
};

ValidationReport validate_grammar(const LinearGrammar& g);

struct EvenLinearWitness {
    bool even = true;
    /// Index into g.rules of the first rule with |x| != |y|.
    std::optional<std::size_t> offending_rule;
};

EvenLinearWitness is_even_linear(const LinearGrammar& g);

bool lg_accepts(const LinearGrammar& g, const Word& w);
Language lg_enumerate(const LinearGrammar& g, std::size_t max_len);

} // namespace ietw
