// oracle.cpp -- independent recognizers and seeded generators

#include "ietw/oracle.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <tuple>

namespace ietw {

namespace {

// Phase bookkeeping kept deliberately separate from the simulation module.
struct Bookkeeping {
    bool first_done = true;
    char last = '-';
    int open = -1; // length of the first move of an unfinished pair

    auto tie() const { return std::tuple(first_done, last, open); }
    bool operator<(const Bookkeeping& o) const { return tie() < o.tie(); }
};

struct OracleRun {
    const Ietwgfa& m;
    Mode mode;
    std::size_t epsilon_cap;
    // Failed configurations with the smallest epsilon chain length they were tried at.
    std::map<std::tuple<Word, StateId, Word, Bookkeeping>, std::size_t> failed;

    bool free_move(const Bookkeeping& b) const {
        return mode == Mode::General || (mode == Mode::InitEven && !b.first_done);
    }

    std::optional<Bookkeeping> step(const Bookkeeping& b, char dir, std::size_t len) const {
        if (free_move(b)) {
            Bookkeeping next;
            return next;
        }
        if (dir == b.last)
            return std::nullopt;
        Bookkeeping next = b;
        next.last = dir;
        if (mode == Mode::Alternating)
            return next;
        if (b.open < 0)
            next.open = static_cast<int>(len);
        else if (b.open == static_cast<int>(len))
            next.open = -1;
        else
            return std::nullopt;
        return next;
    }

    bool done(const Word& u, const StateId& q, const Word& v, const Bookkeeping& b) const {
        if (!u.empty() || !v.empty() || !m.finals.count(q))
            return false;
        switch (mode) {
        case Mode::General:
        case Mode::Alternating:
            return true;
        case Mode::Even:
            return b.open < 0;
        case Mode::InitEven:
            return b.first_done && b.open < 0;
        }
        return false;
    }

    bool explore(const Word& u, const StateId& q, const Word& v, const Bookkeeping& b, std::size_t chain) {
        if (done(u, q, v, b))
            return true;
        auto key = std::make_tuple(u, q, v, b);
        auto seen = failed.find(key);
        if (seen != failed.end() && seen->second <= chain)
            return false;
        for (const auto& r : m.rules) {
            if (r.source() != q)
                continue;
            const Word& x = r.read();
            if (x.empty()) {
                if (chain >= epsilon_cap)
                    continue;
                std::vector<char> dirs = free_move(b) ? std::vector<char>{'N'} : std::vector<char>{'L', 'R'};
                for (char d : dirs) {
                    auto nb = step(b, d, 0);
                    if (nb && explore(u, r.target(), v, *nb, chain + 1))
                        return true;
                }
                continue;
            }
            if (r.direction() == Direction::Left) {
                if (u.size() < x.size() || !std::equal(x.begin(), x.end(), u.end() - static_cast<std::ptrdiff_t>(x.size())))
                    continue;
                auto nb = step(b, 'L', x.size());
                if (nb && explore(Word(u.begin(), u.end() - static_cast<std::ptrdiff_t>(x.size())), r.target(), v, *nb, 0))
                    return true;
            } else {
                if (v.size() < x.size() || !std::equal(x.begin(), x.end(), v.begin()))
                    continue;
                auto nb = step(b, 'R', x.size());
                if (nb && explore(u, r.target(), Word(v.begin() + static_cast<std::ptrdiff_t>(x.size()), v.end()), *nb, 0))
                    return true;
            }
        }
        failed[key] = seen == failed.end() ? chain : std::min(seen->second, chain);
        return false;
    }
};

std::size_t phase_count(Mode mode) {
    switch (mode) {
    case Mode::General:
        return 1;
    case Mode::Alternating:
        return 3;
    case Mode::Even:
        return 6;
    case Mode::InitEven:
        return 7;
    }
    return 1;
}

} // namespace

bool oracle_accepts(const Ietwgfa& m, const Word& w, Mode mode) {
    require_word_over(w, m.alphabet);
    std::set<StateId> states = m.states;
    for (const auto& r : m.rules) {
        states.insert(r.source());
        states.insert(r.target());
    }
    OracleRun run{m, mode, std::max<std::size_t>(states.size(), 1) * phase_count(mode), {}};
    Bookkeeping b0;
    b0.first_done = mode != Mode::InitEven;
    for (std::size_t k = 0; k <= w.size(); ++k) {
        Word u(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
        Word v(w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
        if (run.explore(u, m.start, v, b0, 0))
            return true;
    }
    return false;
}

Language oracle_language(const Ietwgfa& m, Mode mode, std::size_t max_len) {
    Language out;
    for_each_word(m.alphabet, max_len, [&](const Word& w) {
        if (oracle_accepts(m, w, mode))
            out.insert(w);
    });
    return out;
}

Language oracle_grammar_language(const LinearGrammar& g, std::size_t max_len) {
    // A sentential form u A v; flanks only grow, so length pruning makes the set finite.
    using Form = std::tuple<Word, NonterminalId, Word>;
    std::set<Form> seen;
    std::vector<Form> todo{{Word{}, g.start, Word{}}};
    seen.insert(todo.front());
    Language out;
    while (!todo.empty()) {
        auto [u, a, v] = todo.back();
        todo.pop_back();
        for (const auto& r : g.rules) {
            if (r.lhs != a)
                continue;
            const auto flank = u.size() + v.size() + r.x.size() + r.y.size();
            if (flank > max_len)
                continue;
            Word left = u;
            left.insert(left.end(), r.x.begin(), r.x.end());
            Word right = r.y;
            right.insert(right.end(), v.begin(), v.end());
            if (!r.mid) {
                left.insert(left.end(), right.begin(), right.end());
                out.insert(left);
                continue;
            }
            Form next{left, *r.mid, right};
            if (seen.insert(next).second)
                todo.push_back(std::move(next));
        }
    }
    return out;
}

namespace {

Word slice(const Word& w, std::size_t from, std::size_t to) {
    return Word(w.begin() + static_cast<std::ptrdiff_t>(from), w.begin() + static_cast<std::ptrdiff_t>(to));
}

template <typename Pred>
Language split_language(const Ietwgfa& m, std::size_t max_len, Pred keep) {
    Language out;
    for_each_word(m.alphabet, max_len, [&](const Word& w) {
        for (std::size_t k = 0; k <= w.size(); ++k) {
            if (keep(slice(w, 0, k), slice(w, k, w.size())) && accepts_from(m, w, k, Mode::General)) {
                out.insert(w);
                return;
            }
        }
    });
    return out;
}

} // namespace

Language oracle_sides(const Ietwgfa& m, const Nfa& a, const Nfa& b, std::size_t max_len) {
    return split_language(m, max_len,
                          [&](const Word& u, const Word& v) { return nfa_accepts(a, u) && nfa_accepts(b, v); });
}

Language oracle_whole(const Ietwgfa& m, const Nfa& a, std::size_t max_len) {
    Language out;
    for_each_word(m.alphabet, max_len, [&](const Word& w) {
        if (nfa_accepts(a, w) && accepts(m, w, Mode::General))
            out.insert(w);
    });
    return out;
}

Language oracle_finite_prefix(const Ietwgfa& m, const FiniteLanguage& a, const Nfa& b, std::size_t max_len) {
    return split_language(m, max_len,
                          [&](const Word& u, const Word& v) { return a.count(u) && nfa_accepts(b, v); });
}

Language oracle_middle(const Ietwgfa& m, const Nfa& a, const Nfa& b, const Nfa& c, std::size_t max_len,
                       std::size_t context_len) {
    const auto us = nfa_enumerate(a, context_len);
    const auto ws = nfa_enumerate(c, context_len);
    Language out;
    for_each_word(m.alphabet, max_len, [&](const Word& v) {
        if (!nfa_accepts(b, v))
            return;
        for (const auto& u : us) {
            for (const auto& w : ws) {
                Word whole = u;
                whole.insert(whole.end(), v.begin(), v.end());
                whole.insert(whole.end(), w.begin(), w.end());
                if (accepts_from(m, whole, u.size(), Mode::General)) {
                    out.insert(v);
                    return;
                }
            }
        }
    });
    return out;
}

EquivResult equiv_up_to(const Language& l1, const Language& l2, std::size_t max_len) {
    EquivResult result;
    result.bound = max_len;
    Language diff;
    std::set_symmetric_difference(l1.begin(), l1.end(), l2.begin(), l2.end(), std::inserter(diff, diff.end()),
                                  ShortLex{});
    for (const auto& w : diff) {
        if (w.size() <= max_len) {
            result.equal = false;
            result.counterexample = w;
            break;
        }
    }
    return result;
}

std::set<Symbol> letters(std::size_t n) {
    std::set<Symbol> out;
    for (std::size_t i = 0; i < n; ++i)
        out.insert(i < 26 ? std::string(1, static_cast<char>('a' + i)) : "a" + std::to_string(i));
    return out;
}

namespace {

class Dice {
public:
    explicit Dice(std::uint64_t seed) : rng_(seed) {}

    /// Uniform in [lo, hi]; modulo bounding keeps results identical across standard libraries.
    std::size_t between(std::size_t lo, std::size_t hi) {
        return lo + static_cast<std::size_t>(rng_() % (hi - lo + 1));
    }

    template <typename T>
    const T& pick(const std::vector<T>& items) {
        return items[between(0, items.size() - 1)];
    }

    bool coin() { return between(0, 1) == 1; }

private:
    std::mt19937_64 rng_;
};

std::vector<std::string> numbered(const std::string& first, const std::string& prefix, std::size_t n) {
    std::vector<std::string> out{first};
    for (std::size_t i = 1; i < n; ++i)
        out.push_back(prefix + std::to_string(i));
    return out;
}

Word random_word(Dice& dice, const std::vector<Symbol>& sigma, std::size_t len) {
    Word w;
    for (std::size_t i = 0; i < len; ++i)
        w.push_back(dice.pick(sigma));
    return w;
}

template <typename Machine>
void pick_finals(Dice& dice, const std::vector<StateId>& states, Machine& m) {
    for (const auto& q : states) {
        if (dice.coin())
            m.finals.insert(q);
    }
    m.finals.insert(dice.pick(states));
}

LinearGrammar random_grammar(const GenConfig& cfg, bool even) {
    Dice dice(cfg.seed);
    const auto n = dice.between(1, std::max<std::size_t>(cfg.max_states, 1));
    const auto sigma_set = letters(dice.between(1, std::max<std::size_t>(cfg.alphabet_size, 1)));
    const std::vector<Symbol> sigma(sigma_set.begin(), sigma_set.end());
    const auto nts = numbered("S", "A", n);
    LinearGrammar g;
    g.nonterminals.insert(nts.begin(), nts.end());
    g.terminals = sigma_set;
    g.start = "S";
    const auto count = dice.between(0, cfg.max_rules);
    for (std::size_t i = 0; i < count; ++i) {
        const auto& lhs = dice.pick(nts);
        GrammarRule r;
        if (dice.between(0, 2) == 0) {
            r = GrammarRule::terminal(lhs, random_word(dice, sigma, dice.between(0, cfg.max_segment_len)));
        } else {
            const auto lx = dice.between(0, cfg.max_segment_len);
            const auto ly = even ? lx : dice.between(0, cfg.max_segment_len);
            auto x = random_word(dice, sigma, lx);
            auto mid = dice.pick(nts);
            r = GrammarRule::nonterminal(lhs, std::move(x), mid, random_word(dice, sigma, ly));
        }
        if (std::find(g.rules.begin(), g.rules.end(), r) == g.rules.end())
            g.rules.push_back(std::move(r));
    }
    return g;
}

} // namespace

Ietwgfa random_gfa(const GenConfig& cfg) {
    Dice dice(cfg.seed);
    const auto n = dice.between(1, std::max<std::size_t>(cfg.max_states, 1));
    const auto sigma_set = letters(dice.between(1, std::max<std::size_t>(cfg.alphabet_size, 1)));
    const std::vector<Symbol> sigma(sigma_set.begin(), sigma_set.end());
    const auto states = numbered("s", "q", n);
    Ietwgfa m;
    m.states.insert(states.begin(), states.end());
    m.alphabet = sigma_set;
    m.start = "s";
    const auto count = dice.between(0, cfg.max_rules);
    for (std::size_t i = 0; i < count; ++i) {
        const auto form = dice.between(0, 2);
        const auto& source = dice.pick(states);
        const auto& target = dice.pick(states);
        Rule r = Rule::epsilon(source, target);
        if (form != 2) {
            auto x = random_word(dice, sigma, dice.between(1, std::max<std::size_t>(cfg.max_segment_len, 1)));
            r = form == 0 ? Rule::left(std::move(x), source, target) : Rule::right(source, std::move(x), target);
        }
        if (std::find(m.rules.begin(), m.rules.end(), r) == m.rules.end())
            m.rules.push_back(std::move(r));
    }
    pick_finals(dice, states, m);
    return m;
}

LinearGrammar random_lg(const GenConfig& cfg) { return random_grammar(cfg, false); }

LinearGrammar random_elg(const GenConfig& cfg) { return random_grammar(cfg, true); }

namespace {

Nfa random_nfa_impl(const GenConfig& cfg, const std::set<Symbol>& alphabet, bool acyclic) {
    Dice dice(cfg.seed);
    const std::vector<Symbol> sigma(alphabet.begin(), alphabet.end());
    const auto n = dice.between(1, std::max<std::size_t>(cfg.max_states, 1));
    const auto states = numbered("i", "n", n);
    Nfa a;
    a.states.insert(states.begin(), states.end());
    a.alphabet = alphabet;
    a.start = "i";
    const auto count = dice.between(0, cfg.max_rules);
    for (std::size_t k = 0; k < count; ++k) {
        auto from = dice.between(0, n - 1);
        auto to = dice.between(0, n - 1);
        if (acyclic) {
            if (n == 1)
                break;
            if (from == to)
                to = (to + 1) % n;
            if (from > to)
                std::swap(from, to);
        }
        NfaRule r{states[from], dice.pick(sigma), states[to]};
        if (std::find(a.rules.begin(), a.rules.end(), r) == a.rules.end())
            a.rules.push_back(std::move(r));
    }
    pick_finals(dice, states, a);
    return a;
}

} // namespace

Nfa random_nfa(const GenConfig& cfg, const std::set<Symbol>& alphabet) {
    return random_nfa_impl(cfg, alphabet, false);
}

Nfa random_acyclic_nfa(const GenConfig& cfg, const std::set<Symbol>& alphabet) {
    return random_nfa_impl(cfg, alphabet, true);
}

} // namespace ietw
