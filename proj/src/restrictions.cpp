// restrictions.cpp -- products of a simple machine with finite automata

#include "ietw/restrictions.hpp"

#include "ietw/naming.hpp"

#include <algorithm>

namespace ietw {

namespace {

void require_simple_efree(const Ietwgfa& m) {
    require_valid(validate_automaton(m), "input machine");
    const auto c = classify(m);
    if (!c.simple)
        throw PreconditionError("input machine is not simple");
    if (!c.epsilon_free)
        throw PreconditionError("input machine is not epsilon-free");
}

void require_restrictor(const Nfa& n, const Ietwgfa& m, std::string_view what) {
    require_valid(validate_automaton(n), what);
    if (!n.epsilon_free())
        throw PreconditionError(std::string(what) + " is not epsilon-free");
    for (const auto& a : n.alphabet) {
        if (!m.alphabet.count(a))
            throw PreconditionError(std::string(what) + " uses symbol '" + a + "' outside the machine's alphabet");
    }
}

/// Transitions p a -> q of an epsilon-free NFA.
std::vector<const NfaRule*> reading(const Nfa& n, const Symbol& a) {
    std::vector<const NfaRule*> out;
    for (const auto& r : n.rules) {
        if (r.symbol && *r.symbol == a)
            out.push_back(&r);
    }
    return out;
}

class Product {
public:
    explicit Product(const std::set<Symbol>& alphabet) : names_(alphabet) {}

    StateId state(const std::vector<std::string>& parts) {
        return names_.intern(NameRegistry::key(parts), bracket(parts));
    }

    StateId word_state(const Word& x, const std::vector<std::string>& rest) {
        std::vector<std::string> key{std::to_string(x.size())};
        key.insert(key.end(), x.begin(), x.end());
        key.insert(key.end(), rest.begin(), rest.end());
        std::vector<std::string> shown = x;
        shown.insert(shown.end(), rest.begin(), rest.end());
        return names_.intern(NameRegistry::key(key), bracket(shown));
    }

    StateId fresh(const std::string& base) { return names_.fresh(base); }

private:
    NameRegistry names_;
};

template <typename Out, typename R>
void add_unique(Out& rules, std::set<R>& seen, R r) {
    if (seen.insert(r).second)
        rules.push_back(std::move(r));
}

template <typename Machine>
void collect_states(Machine& out) {
    out.states = out.finals;
    out.states.insert(out.start);
    for (const auto& r : out.rules) {
        if constexpr (std::is_same_v<Machine, Nfa>) {
            out.states.insert(r.from);
            out.states.insert(r.to);
        } else {
            out.states.insert(r.source());
            out.states.insert(r.target());
        }
    }
}

} // namespace

Ietwgfa restrict_sides(const Ietwgfa& m, const Nfa& a, const Nfa& b) {
    require_simple_efree(m);
    require_restrictor(a, m, "left restrictor");
    require_restrictor(b, m, "right restrictor");
    Product names(m.alphabet);
    Ietwgfa out;
    out.alphabet = m.alphabet;
    out.start = names.fresh(m.start + "'");
    std::set<Rule> seen;

    for (const auto& f1 : a.finals)
        add_unique(out.rules, seen, Rule::epsilon(out.start, names.state({m.start, f1, b.start})));
    for (const auto& r : m.rules) {
        const auto& x = r.read().front();
        if (r.direction() == Direction::Left) {
            // The left part is read backwards, so a's transitions run from target to source.
            for (const auto* t : reading(a, x)) {
                for (const auto& q2 : b.states)
                    add_unique(out.rules, seen,
                               Rule::left({x}, names.state({r.source(), t->to, q2}),
                                          names.state({r.target(), t->from, q2})));
            }
        } else {
            for (const auto* t : reading(b, x)) {
                for (const auto& q1 : a.states)
                    add_unique(out.rules, seen,
                               Rule::right(names.state({r.source(), q1, t->from}), {x},
                                           names.state({r.target(), q1, t->to})));
            }
        }
    }
    for (const auto& f : m.finals) {
        for (const auto& f2 : b.finals)
            out.finals.insert(names.state({f, a.start, f2}));
    }
    collect_states(out);
    return out;
}

Ietwgfa restrict_whole(const Ietwgfa& m, const Nfa& a) {
    require_simple_efree(m);
    require_restrictor(a, m, "restrictor");
    Product names(m.alphabet);
    Ietwgfa out;
    out.alphabet = m.alphabet;
    out.start = names.fresh(m.start + "'");
    std::set<Rule> seen;

    // <q p q'>: p tracks a backwards over the left part, q' forwards over the right part.
    for (const auto& guess : a.states)
        add_unique(out.rules, seen, Rule::epsilon(out.start, names.state({m.start, guess, guess})));
    for (const auto& r : m.rules) {
        const auto& x = r.read().front();
        for (const auto* t : reading(a, x)) {
            for (const auto& other : a.states) {
                if (r.direction() == Direction::Left)
                    add_unique(out.rules, seen,
                               Rule::left({x}, names.state({r.source(), t->to, other}),
                                          names.state({r.target(), t->from, other})));
                else
                    add_unique(out.rules, seen,
                               Rule::right(names.state({r.source(), other, t->from}), {x},
                                           names.state({r.target(), other, t->to})));
            }
        }
    }
    for (const auto& f : m.finals) {
        for (const auto& fa : a.finals)
            out.finals.insert(names.state({f, a.start, fa}));
    }
    collect_states(out);
    return out;
}

Nfa restrict_finite_prefix(const Ietwgfa& m, const FiniteLanguage& a, const Nfa& b) {
    require_simple_efree(m);
    require_restrictor(b, m, "right restrictor");
    for (const auto& x : a)
        require_word_over(x, m.alphabet);
    std::size_t n = 0;
    for (const auto& x : a)
        n = std::max(n, x.size());

    Product names(m.alphabet);
    Nfa out;
    out.alphabet = m.alphabet;
    out.start = names.word_state({}, {});
    std::set<NfaRule> seen;

    // Record the prefix symbol by symbol.
    std::vector<Word> prefixes{Word{}};
    for (std::size_t i = 0; i < prefixes.size(); ++i) {
        const Word x = prefixes[i];
        if (x.size() == n)
            continue;
        for (const auto& sym : m.alphabet) {
            Word xa = x;
            xa.push_back(sym);
            add_unique(out.rules, seen, NfaRule{names.word_state(x, {}), sym, names.word_state(xa, {})});
            prefixes.push_back(std::move(xa));
        }
    }
    for (const auto& x : a)
        add_unique(out.rules, seen, NfaRule{names.word_state(x, {}), std::nullopt, names.word_state(x, {m.start, b.start})});

    for (const auto& x : prefixes) {
        for (const auto& r : m.rules) {
            const auto& sym = r.read().front();
            if (r.direction() == Direction::Left) {
                // Left moves erase the end of the recorded prefix without reading input.
                if (x.empty() || x.back() != sym)
                    continue;
                Word shorter(x.begin(), x.end() - 1);
                for (const auto& qb : b.states)
                    add_unique(out.rules, seen,
                               NfaRule{names.word_state(x, {r.source(), qb}), std::nullopt,
                                       names.word_state(shorter, {r.target(), qb})});
            } else {
                for (const auto* t : reading(b, sym))
                    add_unique(out.rules, seen,
                               NfaRule{names.word_state(x, {r.source(), t->from}), sym,
                                       names.word_state(x, {r.target(), t->to})});
            }
        }
    }
    for (const auto& f : m.finals) {
        for (const auto& fb : b.finals)
            out.finals.insert(names.word_state({}, {f, fb}));
    }
    collect_states(out);
    return out;
}

Nfa restrict_middle(const Ietwgfa& m, const Nfa& a, const Nfa& b, const Nfa& c) {
    require_simple_efree(m);
    require_restrictor(a, m, "left restrictor");
    require_restrictor(b, m, "middle restrictor");
    require_restrictor(c, m, "right restrictor");
    Product names(m.alphabet);
    Nfa out;
    out.alphabet = m.alphabet;
    out.start = names.fresh(m.start + "'");
    std::set<NfaRule> seen;
    auto phase1 = [&](const StateId& q, const StateId& q1, const StateId& q2) {
        return names.state({q, q1, q2, c.start, "1"});
    };
    auto phase2 = [&](const StateId& q, const StateId& q1, const StateId& f2, const StateId& q3) {
        return names.state({q, q1, f2, q3, "2"});
    };

    for (const auto& f1 : a.finals)
        add_unique(out.rules, seen, NfaRule{out.start, std::nullopt, phase1(m.start, f1, b.start)});
    // Switch to the second phase once the middle part is a word of L(b).
    for (const auto& q : m.states) {
        for (const auto& q1 : a.states) {
            for (const auto& f2 : b.finals)
                add_unique(out.rules, seen, NfaRule{phase1(q, q1, f2), std::nullopt, phase2(q, q1, f2, c.start)});
        }
    }
    for (const auto& r : m.rules) {
        const auto& sym = r.read().front();
        if (r.direction() == Direction::Left) {
            for (const auto* t : reading(a, sym)) {
                for (const auto& q2 : b.states)
                    add_unique(out.rules, seen,
                               NfaRule{phase1(r.source(), t->to, q2), std::nullopt, phase1(r.target(), t->from, q2)});
                for (const auto& f2 : b.finals) {
                    for (const auto& q3 : c.states)
                        add_unique(out.rules, seen,
                                   NfaRule{phase2(r.source(), t->to, f2, q3), std::nullopt,
                                           phase2(r.target(), t->from, f2, q3)});
                }
            }
        } else {
            for (const auto* t : reading(b, sym)) {
                for (const auto& q1 : a.states)
                    add_unique(out.rules, seen,
                               NfaRule{phase1(r.source(), q1, t->from), sym, phase1(r.target(), q1, t->to)});
            }
            // The right part is not part of the accepted word: it is erased without reading.
            for (const auto* t : reading(c, sym)) {
                for (const auto& q1 : a.states) {
                    for (const auto& f2 : b.finals)
                        add_unique(out.rules, seen,
                                   NfaRule{phase2(r.source(), q1, f2, t->from), std::nullopt,
                                           phase2(r.target(), q1, f2, t->to)});
                }
            }
        }
    }
    for (const auto& f : m.finals) {
        for (const auto& f2 : b.finals) {
            for (const auto& f3 : c.finals)
                out.finals.insert(phase2(f, a.start, f2, f3));
        }
    }
    collect_states(out);
    return out;
}

FiniteLanguage finite_language(const Nfa& n) {
    require_valid(validate_automaton(n), "automaton");
    const auto k = n.states.size();
    const auto upto = nfa_enumerate(n, 2 * k);
    for (const auto& w : upto) {
        if (w.size() >= k)
            throw PreconditionError("automaton accepts an infinite language");
    }
    return FiniteLanguage(upto.begin(), upto.end());
}

} // namespace ietw
