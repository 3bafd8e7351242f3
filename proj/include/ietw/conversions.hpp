// conversions.hpp -- automaton/grammar conversions and normal forms

#pragma once

#include "ietw/core.hpp"
#include "ietw/grammar.hpp"

namespace ietw {

/// Linear grammar generating L(m): S -> f, s -> eps, p -> x q, p -> q x.
LinearGrammar gfa_to_lg(const Ietwgfa& m);

/// Machine accepting L(g) that simulates derivations of g in reverse.
Ietwgfa lg_to_gfa(const LinearGrammar& g);

/// Splits every rule reading n >= 2 symbols into n single-symbol moves.
Ietwgfa gfa_to_sfa(const Ietwgfa& m);

/// Removes epsilon rules by re-sourcing reading rules along epsilon closures.
Ietwgfa remove_epsilon(const Ietwgfa& m, bool require_simple);

/// Epsilon-free simple machine M' with L(M') = L(M')_even = L(m)_even.
Ietwgfa even_to_efree_sfa(const Ietwgfa& m);

/// Adds a fresh start state s' and the rule s' -> s, so L(out)_init-even = L(m)_even.
Ietwgfa lift_even_to_init_even(const Ietwgfa& m);

/// Simple machine M' with L(M') = L(M')_init-even = L(m)_init-even. No rule of
/// M' enters its start state and only the start state has epsilon rules.
Ietwgfa init_even_to_sfa(const Ietwgfa& m);

/// Even linear grammar generating L(m)_init-even.
LinearGrammar init_even_to_elg(const Ietwgfa& m);

/// lg_to_gfa restricted to even linear grammars, where L(out)_init-even = L(g).
Ietwgfa elg_to_gfa_init_even(const LinearGrammar& g);

} // namespace ietw
