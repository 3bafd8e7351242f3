// restrictions.hpp -- product constructions restricting parts of the input

#pragma once

#include "ietw/core.hpp"

namespace ietw {

/// An explicitly listed finite language.
using FiniteLanguage = std::set<Word>;

/// Machine accepting {uv : usv =>* f in m, u in L(a), v in L(b)}.
/// m must be epsilon-free and simple; a and b epsilon-free. The output starts
/// with epsilon rules s' -> <s f1 s2>, exactly as the construction prescribes.
Ietwgfa restrict_sides(const Ietwgfa& m, const Nfa& a, const Nfa& b);

/// Machine accepting {uv : usv =>* f in m, uv in L(a)}.
Ietwgfa restrict_whole(const Ietwgfa& m, const Nfa& a);

/// Finite automaton accepting {uv : usv =>* f in m, u in a, v in L(b)}.
Nfa restrict_finite_prefix(const Ietwgfa& m, const FiniteLanguage& a, const Nfa& b);

/// Finite automaton accepting {v : usvw =>* f in m, u in L(a), v in L(b), w in L(c)}.
Nfa restrict_middle(const Ietwgfa& m, const Nfa& a, const Nfa& b, const Nfa& c);

/// The words of an NFA whose language is finite; throws PreconditionError otherwise.
FiniteLanguage finite_language(const Nfa& n);

} // namespace ietw
