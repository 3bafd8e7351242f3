// conversions.cpp -- constructions between machines, grammars and normal forms

#include "ietw/conversions.hpp"

#include "ietw/naming.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <tuple>

namespace ietw {

namespace {

void require_machine(const Ietwgfa& m) { require_valid(validate_automaton(m), "input machine"); }

void require_grammar(const LinearGrammar& g) { require_valid(validate_grammar(g), "input grammar"); }

/// Output machine under construction: keeps rule order and drops duplicates.
class MachineBuilder {
public:
    explicit MachineBuilder(std::set<Symbol> alphabet) { m_.alphabet = std::move(alphabet); }

    void add(Rule r) {
        if (seen_.insert(r).second)
            m_.rules.push_back(std::move(r));
    }

    bool has(const Rule& r) const { return seen_.count(r) > 0; }
    const std::vector<Rule>& rules() const { return m_.rules; }
    void drop_rules_from(const StateId& q) {
        std::erase_if(m_.rules, [&](const Rule& r) { return r.source() == q; });
        seen_.clear();
        seen_.insert(m_.rules.begin(), m_.rules.end());
    }

    /// States become those used by rules plus the start and final states.
    Ietwgfa finish(StateId start, std::set<StateId> finals) {
        m_.start = std::move(start);
        m_.finals = std::move(finals);
        m_.states = m_.finals;
        m_.states.insert(m_.start);
        for (const auto& r : m_.rules) {
            m_.states.insert(r.source());
            m_.states.insert(r.target());
        }
        return std::move(m_);
    }

private:
    Ietwgfa m_;
    std::set<Rule> seen_;
};

void add_grammar_rule(LinearGrammar& g, std::set<GrammarRule>& seen, GrammarRule r) {
    if (seen.insert(r).second)
        g.rules.push_back(std::move(r));
}

Word slice(const Word& w, std::size_t from, std::size_t to) {
    return Word(w.begin() + static_cast<std::ptrdiff_t>(from), w.begin() + static_cast<std::ptrdiff_t>(to));
}

std::string concat(const Word& w) { return join(w, ""); }

} // namespace

LinearGrammar gfa_to_lg(const Ietwgfa& m) {
    require_machine(m);
    std::set<std::string> reserved = m.states;
    reserved.insert(m.alphabet.begin(), m.alphabet.end());
    NameRegistry names(reserved);
    const auto start = names.fresh("S");

    LinearGrammar g;
    g.nonterminals = m.states;
    g.nonterminals.insert(start);
    g.terminals = m.alphabet;
    g.start = start;
    std::set<GrammarRule> seen;
    for (const auto& f : m.finals)
        add_grammar_rule(g, seen, GrammarRule::nonterminal(start, {}, f, {}));
    add_grammar_rule(g, seen, GrammarRule::terminal(m.start, {}));
    for (const auto& r : m.rules) {
        if (r.direction() == Direction::Left)
            add_grammar_rule(g, seen, GrammarRule::nonterminal(r.target(), r.read(), r.source(), {}));
        else
            add_grammar_rule(g, seen, GrammarRule::nonterminal(r.target(), {}, r.source(), r.read()));
    }
    return g;
}

Ietwgfa lg_to_gfa(const LinearGrammar& g) {
    require_grammar(g);
    std::set<std::string> reserved = g.nonterminals;
    reserved.insert(g.terminals.begin(), g.terminals.end());
    NameRegistry names(reserved);
    const auto start = names.fresh("s");

    MachineBuilder out(g.terminals);
    for (const auto& r : g.rules) {
        if (!r.mid) {
            out.add(Rule::right(start, r.x, r.lhs));
            continue;
        }
        const auto& mid = names.intern(NameRegistry::key({"rule", to_string(r)}),
                                       "<" + r.lhs + "->" + concat(r.x) + "." + *r.mid + "." + concat(r.y) + ">");
        out.add(Rule::left(r.x, *r.mid, mid));
        out.add(Rule::right(mid, r.y, r.lhs));
    }
    auto m = out.finish(start, {g.start});
    m.states.insert(g.nonterminals.begin(), g.nonterminals.end());
    return m;
}

Ietwgfa gfa_to_sfa(const Ietwgfa& m) {
    require_machine(m);
    if (classify(m).simple)
        return m;
    std::set<std::string> reserved = m.states;
    reserved.insert(m.alphabet.begin(), m.alphabet.end());
    NameRegistry names(reserved);
    // A pending state remembers what is still to be read, in which direction, and where to go afterwards.
    auto pending = [&](const Word& rest, const StateId& target, Direction d) {
        std::vector<std::string> parts{d == Direction::Left ? "L" : "R", target, std::to_string(rest.size())};
        parts.insert(parts.end(), rest.begin(), rest.end());
        std::vector<std::string> shown = rest;
        if (d == Direction::Left)
            shown.push_back(target);
        else
            shown.insert(shown.begin(), target);
        return names.intern(NameRegistry::key(parts), bracket(shown));
    };

    MachineBuilder out(m.alphabet);
    for (const auto& r : m.rules) {
        const auto& x = r.read();
        if (x.size() <= 1) {
            out.add(r);
            continue;
        }
        if (r.direction() == Direction::Left) {
            // Consume the symbol next to the head first, i.e. the rightmost one.
            StateId current = r.source();
            for (std::size_t len = x.size(); len > 0; --len) {
                const auto rest = slice(x, 0, len - 1);
                StateId next = rest.empty() ? r.target() : pending(rest, r.target(), Direction::Left);
                out.add(Rule::left({x[len - 1]}, current, next));
                current = next;
            }
        } else {
            StateId current = r.source();
            for (std::size_t i = 0; i < x.size(); ++i) {
                const auto rest = slice(x, i + 1, x.size());
                StateId next = rest.empty() ? r.target() : pending(rest, r.target(), Direction::Right);
                out.add(Rule::right(current, {x[i]}, next));
                current = next;
            }
        }
    }
    auto result = out.finish(m.start, m.finals);
    result.states.insert(m.states.begin(), m.states.end());
    return result;
}

Ietwgfa remove_epsilon(const Ietwgfa& m, bool require_simple) {
    require_machine(m);
    const auto c = classify(m);
    if (require_simple && !c.simple)
        throw PreconditionError("remove_epsilon: input machine is not simple");
    if (c.epsilon_free)
        return m;

    std::set<StateId> states = m.states;
    std::map<StateId, std::set<StateId>> closure;
    for (const auto& q : states) {
        auto& e = closure[q];
        e.insert(q);
        std::vector<StateId> todo{q};
        while (!todo.empty()) {
            auto p = todo.back();
            todo.pop_back();
            for (const auto& r : m.rules) {
                if (r.is_epsilon() && r.source() == p && e.insert(r.target()).second)
                    todo.push_back(r.target());
            }
        }
    }

    // A computation can only be in these states right before a reading move (after its epsilon prefix).
    std::set<StateId> entry{m.start};
    std::set<StateId> epsilon_targets;
    for (const auto& r : m.rules) {
        if (r.is_epsilon())
            epsilon_targets.insert(r.target());
        else
            entry.insert(r.target());
    }
    for (const auto& q : states) {
        if (!epsilon_targets.count(q))
            entry.insert(q);
    }

    MachineBuilder out(m.alphabet);
    for (const auto& r : m.rules) {
        if (r.is_epsilon())
            continue;
        for (const auto& q : entry) {
            if (closure[q].count(r.source()))
                out.add(Rule::make(r.direction(), q, r.read(), r.target()));
        }
    }
    std::set<StateId> finals;
    for (const auto& q : states) {
        const auto& e = closure[q];
        if (std::any_of(e.begin(), e.end(), [&](const StateId& p) { return m.finals.count(p) > 0; }))
            finals.insert(q);
    }
    return out.finish(m.start, finals);
}

namespace {

enum class Tag { L, R };

/// The construction behind even_to_efree_sfa; init_even_to_sfa builds on it.
struct EvenConstruction {
    const Ietwgfa& m;
    NameRegistry& names;
    MachineBuilder out;
    StateId start;
    std::set<StateId> finals;

    EvenConstruction(const Ietwgfa& machine, NameRegistry& registry)
        : m(machine), names(registry), out(machine.alphabet) {}

    StateId tagged(const StateId& q, Tag t) {
        const std::string tag = t == Tag::L ? "L" : "R";
        return names.intern(NameRegistry::key({"q", tag, q}), bracket({q, tag}));
    }

    StateId tagged(const Word& x, const StateId& q, const Word& y, Tag t) {
        if (x.empty() && y.empty())
            return tagged(q, t);
        const std::string tag = t == Tag::L ? "L" : "R";
        std::vector<std::string> key{"xqy", tag, std::to_string(x.size())};
        key.insert(key.end(), x.begin(), x.end());
        key.push_back(q);
        key.insert(key.end(), y.begin(), y.end());
        std::vector<std::string> shown = x;
        shown.push_back(q);
        shown.insert(shown.end(), y.begin(), y.end());
        shown.push_back(tag);
        return names.intern(NameRegistry::key(key), bracket(shown));
    }

    /// Emits the remaining single-symbol moves from <x o y t> down to <o t>.
    void chain(Word x, const StateId& o, Word y, Tag t) {
        while (!x.empty() || !y.empty()) {
            const auto from = tagged(x, o, y, t);
            // A left pair reads right next while y is longer; a right pair reads left next while x is longer.
            const bool read_right = t == Tag::L ? y.size() > x.size() : y.size() >= x.size();
            if (read_right) {
                Symbol a = y.front();
                y.erase(y.begin());
                out.add(Rule::right(from, {a}, tagged(x, o, y, t)));
            } else {
                Symbol a = x.back();
                x.pop_back();
                out.add(Rule::left({a}, from, tagged(x, o, y, t)));
            }
        }
    }

    void run() {
        start = names.fresh(m.start + "'");
        const auto& R = m.rules;

        // Left-then-right pairs reading n symbols each.
        for (const auto& r1 : R) {
            if (r1.direction() != Direction::Left)
                continue;
            const auto n = r1.read().size();
            for (const auto& r2 : R) {
                if (r2.direction() != Direction::Right || r2.source() != r1.target() || r2.read().size() != n)
                    continue;
                const auto& o = r2.target();
                Word x = slice(r1.read(), 0, n - 1);
                const Symbol an = r1.read().back();
                const auto first = tagged(x, o, r2.read(), Tag::L);
                out.add(Rule::left({an}, tagged(r1.source(), Tag::L), first));
                if (r1.source() == m.start)
                    out.add(Rule::left({an}, start, first));
                chain(x, o, r2.read(), Tag::L);
            }
        }
        // Right-then-left pairs.
        for (const auto& r1 : R) {
            if (r1.direction() != Direction::Right)
                continue;
            const auto n = r1.read().size();
            for (const auto& r2 : R) {
                if (r2.direction() != Direction::Left || r2.source() != r1.target() || r2.read().size() != n)
                    continue;
                const auto& o = r2.target();
                Word y = slice(r1.read(), 1, n);
                const Symbol an = r1.read().front();
                const auto first = tagged(r2.read(), o, y, Tag::R);
                out.add(Rule::right(tagged(r1.source(), Tag::R), {an}, first));
                if (r1.source() == m.start)
                    out.add(Rule::right(start, {an}, first));
                chain(r2.read(), o, y, Tag::R);
            }
        }

        std::vector<std::pair<StateId, StateId>> epsilon_pairs; // (p, o) for p -> q, q -> o
        for (const auto& r1 : R) {
            if (!r1.is_epsilon())
                continue;
            for (const auto& r2 : R) {
                if (r2.is_epsilon() && r2.source() == r1.target())
                    epsilon_pairs.emplace_back(r1.source(), r2.target());
            }
        }

        // Skip over pairs of epsilon moves, until nothing new appears.
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& [p, o] : epsilon_pairs) {
                for (Tag t : {Tag::L, Tag::R}) {
                    const auto from = tagged(o, t);
                    const auto to = tagged(p, t);
                    const auto snapshot = out.rules();
                    for (const auto& r : snapshot) {
                        if (r.source() != from)
                            continue;
                        if ((t == Tag::L) != (r.direction() == Direction::Left))
                            continue;
                        std::vector<Rule> fresh{Rule::make(r.direction(), to, r.read(), r.target())};
                        if (p == m.start)
                            fresh.push_back(Rule::make(r.direction(), start, r.read(), r.target()));
                        for (auto& nr : fresh) {
                            if (!out.has(nr)) {
                                out.add(std::move(nr));
                                changed = true;
                            }
                        }
                    }
                }
            }
        }

        for (const auto& f : m.finals) {
            finals.insert(tagged(f, Tag::L));
            finals.insert(tagged(f, Tag::R));
        }
        if (m.finals.count(m.start))
            finals.insert(start);
        changed = true;
        while (changed) {
            changed = false;
            for (const auto& [p, o] : epsilon_pairs) {
                if (!finals.count(tagged(o, Tag::L)) || !finals.count(tagged(o, Tag::R)))
                    continue;
                for (const auto& q : {tagged(p, Tag::L), tagged(p, Tag::R)})
                    changed |= finals.insert(q).second;
                if (p == m.start)
                    changed |= finals.insert(start).second;
            }
        }
    }
};

} // namespace

Ietwgfa even_to_efree_sfa(const Ietwgfa& m) {
    require_machine(m);
    NameRegistry names(m.alphabet);
    EvenConstruction c(m, names);
    c.run();
    return c.out.finish(c.start, c.finals);
}

Ietwgfa lift_even_to_init_even(const Ietwgfa& m) {
    require_machine(m);
    std::set<std::string> reserved = m.states;
    reserved.insert(m.alphabet.begin(), m.alphabet.end());
    NameRegistry names(reserved);
    Ietwgfa out = m;
    out.start = names.fresh(m.start + "'");
    out.states.insert(out.start);
    out.rules.push_back(Rule::epsilon(out.start, m.start));
    return out;
}

Ietwgfa init_even_to_sfa(const Ietwgfa& m) {
    require_machine(m);
    NameRegistry names(m.alphabet);
    EvenConstruction c(m, names);
    c.run();
    // The new start state takes over the name of the even machine's start, whose rules are dropped.
    const StateId start = c.start;
    c.out.drop_rules_from(start);
    std::set<StateId> finals = c.finals;
    finals.erase(start);
    auto& out = c.out;

    auto bar = [&](const Word& x, const StateId& q, const Word& y) {
        std::vector<std::string> key{"bar", std::to_string(x.size())};
        key.insert(key.end(), x.begin(), x.end());
        key.push_back(q);
        key.insert(key.end(), y.begin(), y.end());
        std::vector<std::string> shown = x;
        shown.push_back(q);
        shown.insert(shown.end(), y.begin(), y.end());
        return names.intern(NameRegistry::key(key), bracket(shown));
    };

    // Single-symbol moves through <x q y> until both sides are read.
    std::set<std::tuple<Word, StateId, Word>> done;
    std::function<void(const Word&, const StateId&, const Word&)> expand = [&](const Word& x, const StateId& q,
                                                                              const Word& y) {
        if (!done.insert({x, q, y}).second)
            return;
        const auto from = bar(x, q, y);
        if (!x.empty() && x.size() >= y.size()) {
            Word nx(x.begin(), x.end() - 1);
            if (nx.empty() && y.empty()) {
                out.add(Rule::left({x.back()}, from, c.tagged(q, Tag::R)));
            } else {
                out.add(Rule::left({x.back()}, from, bar(nx, q, y)));
                expand(nx, q, y);
            }
        }
        if (!y.empty() && y.size() >= x.size()) {
            Word ny(y.begin() + 1, y.end());
            if (x.empty() && ny.empty()) {
                out.add(Rule::right(from, {y.front()}, c.tagged(q, Tag::L)));
            } else {
                out.add(Rule::right(from, {y.front()}, bar(x, q, ny)));
                expand(x, q, ny);
            }
        }
    };

    for (const auto& r : m.rules) {
        if (r.source() != m.start)
            continue;
        const auto& z = r.read();
        const auto& q = r.target();
        if (z.size() <= 1) {
            for (Tag t : {Tag::L, Tag::R})
                out.add(Rule::right(start, z, c.tagged(q, t)));
        } else if (z.size() % 2 == 0) {
            const auto n = z.size() / 2;
            const auto x = slice(z, 0, n), y = slice(z, n, z.size());
            out.add(Rule::epsilon(start, bar(x, q, y)));
            expand(x, q, y);
        } else {
            const auto n = z.size() / 2;
            const auto x = slice(z, 0, n), y = slice(z, n + 1, z.size());
            out.add(Rule::right(start, {z[n]}, bar(x, q, y)));
            expand(x, q, y);
        }
    }
    return out.finish(start, finals);
}

LinearGrammar init_even_to_elg(const Ietwgfa& m) {
    require_machine(m);
    NameRegistry names(m.alphabet);
    auto tagged = [&](const StateId& q, const std::string& tag) {
        return names.intern(NameRegistry::key({"q", tag, q}), bracket({q, tag}));
    };
    LinearGrammar g;
    g.terminals = m.alphabet;
    for (const auto& q : m.states) {
        g.nonterminals.insert(tagged(q, "L"));
        g.nonterminals.insert(tagged(q, "R"));
    }
    g.start = names.fresh("S");
    g.nonterminals.insert(g.start);

    std::set<GrammarRule> seen;
    for (const auto& f : m.finals) {
        add_grammar_rule(g, seen, GrammarRule::nonterminal(g.start, {}, tagged(f, "L"), {}));
        add_grammar_rule(g, seen, GrammarRule::nonterminal(g.start, {}, tagged(f, "R"), {}));
    }
    for (const auto& r : m.rules) {
        if (r.source() != m.start)
            continue;
        add_grammar_rule(g, seen, GrammarRule::terminal(tagged(r.target(), "L"), r.read()));
        add_grammar_rule(g, seen, GrammarRule::terminal(tagged(r.target(), "R"), r.read()));
    }
    for (const auto& r1 : m.rules) {
        for (const auto& r2 : m.rules) {
            if (r2.source() != r1.target() || r1.read().size() != r2.read().size())
                continue;
            // x q -> p then p y -> o
            if (r1.matches_left_form() && r2.matches_right_form())
                add_grammar_rule(g, seen,
                                 GrammarRule::nonterminal(tagged(r2.target(), "L"), r1.read(),
                                                          tagged(r1.source(), "L"), r2.read()));
        }
    }
    for (const auto& r1 : m.rules) {
        for (const auto& r2 : m.rules) {
            if (r2.source() != r1.target() || r1.read().size() != r2.read().size())
                continue;
            // q y -> p then x p -> o
            if (r1.matches_right_form() && r2.matches_left_form())
                add_grammar_rule(g, seen,
                                 GrammarRule::nonterminal(tagged(r2.target(), "R"), r2.read(),
                                                          tagged(r1.source(), "R"), r1.read()));
        }
    }
    return g;
}

Ietwgfa elg_to_gfa_init_even(const LinearGrammar& g) {
    require_grammar(g);
    auto witness = is_even_linear(g);
    if (!witness.even)
        throw PreconditionError("elg_to_gfa_init_even: grammar is not even linear (rule '" +
                                to_string(g.rules[*witness.offending_rule]) + "')");
    return lg_to_gfa(g);
}

} // namespace ietw
