// oracle.hpp -- brute-force recognizers, bounded equivalence and random instances

#pragma once

#include "ietw/core.hpp"
#include "ietw/grammar.hpp"
#include "ietw/restrictions.hpp"
#include "ietw/simulation.hpp"

#include <cstdint>
#include <optional>

namespace ietw {

/// Membership by explicit exploration of string configurations u q v.
/// Shares no search code with the simulation module.
bool oracle_accepts(const Ietwgfa& m, const Word& w, Mode mode);
Language oracle_language(const Ietwgfa& m, Mode mode, std::size_t max_len);

/// All words of length <= max_len derivable from the start symbol, found by
/// expanding sentential forms u A v directly.
Language oracle_grammar_language(const LinearGrammar& g, std::size_t max_len);

/// Restriction languages computed word by word from accepts_from and nfa_accepts.
Language oracle_sides(const Ietwgfa& m, const Nfa& a, const Nfa& b, std::size_t max_len);
Language oracle_whole(const Ietwgfa& m, const Nfa& a, std::size_t max_len);
Language oracle_finite_prefix(const Ietwgfa& m, const FiniteLanguage& a, const Nfa& b, std::size_t max_len);

/// Middle parts v with |v| <= max_len, trying every u in L(a) and w in L(c)
/// up to context_len. Exact when both languages are finite and within the bound.
Language oracle_middle(const Ietwgfa& m, const Nfa& a, const Nfa& b, const Nfa& c, std::size_t max_len,
                       std::size_t context_len);

struct EquivResult {
    bool equal = true;
    std::optional<Word> counterexample;
    std::size_t bound = 0;
};

/// Compares the words of length <= max_len; the counterexample is the
/// shortlex-smallest word in exactly one of the two sets.
EquivResult equiv_up_to(const Language& l1, const Language& l2, std::size_t max_len);

struct GenConfig {
    std::size_t max_states = 4;
    std::size_t max_rules = 6;
    std::size_t max_segment_len = 2;
    std::size_t alphabet_size = 3;
    std::uint64_t seed = 0;
};

Ietwgfa random_gfa(const GenConfig& cfg);
LinearGrammar random_lg(const GenConfig& cfg);
/// Like random_lg, but every nonterminal rule has |x| = |y|.
LinearGrammar random_elg(const GenConfig& cfg);
/// An epsilon-free NFA over `alphabet`.
Nfa random_nfa(const GenConfig& cfg, const std::set<Symbol>& alphabet);
/// An epsilon-free NFA whose transitions never return to an earlier state, so its language is finite.
Nfa random_acyclic_nfa(const GenConfig& cfg, const std::set<Symbol>& alphabet);

/// The first `n` symbols of a, b, c, ...
std::set<Symbol> letters(std::size_t n);

} // namespace ietw
