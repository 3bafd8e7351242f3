// simulation.cpp -- breadth-first search over configurations

#include "ietw/simulation.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

namespace ietw {

std::string_view to_string(Mode mode) {
    switch (mode) {
    case Mode::General:
        return "general";
    case Mode::Alternating:
        return "alt";
    case Mode::Even:
        return "even";
    case Mode::InitEven:
        return "init-even";
    }
    return "?";
}

std::optional<Mode> parse_mode(std::string_view text) {
    if (text == "general")
        return Mode::General;
    if (text == "alt" || text == "alternating")
        return Mode::Alternating;
    if (text == "even")
        return Mode::Even;
    if (text == "init-even")
        return Mode::InitEven;
    return std::nullopt;
}

ModePhase initial_phase(Mode mode) {
    ModePhase p;
    p.mode = mode;
    p.initialized = mode != Mode::InitEven;
    return p;
}

bool is_accepting_phase(const ModePhase& phase) {
    switch (phase.mode) {
    case Mode::General:
    case Mode::Alternating:
        return true;
    case Mode::Even:
        return !phase.pending;
    case Mode::InitEven:
        return phase.initialized && !phase.pending;
    }
    return false;
}

bool phase_needs_direction(const ModePhase& phase) {
    return phase.mode != Mode::General && phase.initialized;
}

std::optional<ModePhase> advance(const ModePhase& phase, Direction assigned, std::size_t read_len) {
    if (!phase_needs_direction(phase))
        return phase.initialized ? phase : ModePhase{phase.mode, true, Direction::Neutral, std::nullopt};
    if (assigned == Direction::Neutral)
        return std::nullopt;
    if (phase.last == assigned)
        return std::nullopt;
    ModePhase next = phase;
    next.last = assigned;
    if (phase.mode == Mode::Alternating)
        return next;
    if (phase.pending) {
        if (*phase.pending != read_len)
            return std::nullopt;
        next.pending.reset();
    } else {
        next.pending = read_len;
    }
    return next;
}

Configuration initial_configuration(const Ietwgfa& m, const Word& w, std::size_t split, Mode mode) {
    if (split > w.size())
        throw PreconditionError("split point lies outside the word");
    return Configuration{w, split, split, m.start, initial_phase(mode)};
}

namespace {

bool reads_at(const Word& w, std::size_t pos, const Word& x) {
    return pos + x.size() <= w.size() && std::equal(x.begin(), x.end(), w.begin() + static_cast<std::ptrdiff_t>(pos));
}

} // namespace

std::optional<Configuration> apply_rule(const Configuration& c, const Rule& r, Direction dir) {
    if (r.source() != c.state)
        return std::nullopt;
    if (!r.is_epsilon() && dir != r.direction())
        return std::nullopt;
    Direction assigned = phase_needs_direction(c.phase) ? dir : r.direction();
    auto phase = advance(c.phase, assigned, r.read().size());
    if (!phase)
        return std::nullopt;
    Configuration next = c;
    const auto n = r.read().size();
    if (r.direction() == Direction::Left) {
        if (c.a < n || !reads_at(c.word, c.a - n, r.read()))
            return std::nullopt;
        next.a -= n;
    } else if (r.direction() == Direction::Right) {
        if (!reads_at(c.word, c.b, r.read()))
            return std::nullopt;
        next.b += n;
    }
    next.state = r.target();
    next.phase = *phase;
    return next;
}

bool is_accepting(const Ietwgfa& m, const Configuration& c) {
    return c.a == 0 && c.b == c.word.size() && m.finals.count(c.state) && is_accepting_phase(c.phase);
}

namespace {

/// Integer-coded search over (a, b, state, phase) for one word.
class Search {
public:
    Search(const Ietwgfa& m, const Word& w, Mode mode) : m_(m), w_(w), mode_(mode) {
        std::size_t idx = 0;
        for (const auto& q : m.states)
            state_index_[q] = idx++;
        state_index_.try_emplace(m.start, idx++);
        for (const auto& r : m.rules) {
            state_index_.try_emplace(r.source(), idx++);
            state_index_.try_emplace(r.target(), idx++);
            max_read_ = std::max(max_read_, r.read().size());
        }
        state_count_ = idx;
        by_source_.resize(state_count_);
        for (std::size_t i = 0; i < m.rules.size(); ++i)
            by_source_[state_index_.at(m.rules[i].source())].push_back(i);
        final_.assign(state_count_, false);
        for (const auto& f : m.finals) {
            auto it = state_index_.find(f);
            if (it != state_index_.end())
                final_[it->second] = true;
        }
    }

    /// Runs BFS from the given splits and returns the accepting node, if any.
    std::optional<std::uint64_t> run(const std::vector<std::size_t>& splits, bool keep_parents) {
        keep_parents_ = keep_parents;
        std::deque<std::uint64_t> queue;
        const auto start = state_index_.at(m_.start);
        const auto phase0 = encode(initial_phase(mode_));
        for (auto k : splits) {
            auto node = pack(k, k, start, phase0);
            if (visit(node, node, 0, Direction::Neutral))
                queue.push_back(node);
        }
        while (!queue.empty()) {
            auto node = queue.front();
            queue.pop_front();
            auto [a, b, q, code] = unpack(node);
            auto phase = decode(code);
            if (a == 0 && b == w_.size() && final_[q] && is_accepting_phase(phase))
                return node;
            for (auto ri : by_source_[q]) {
                const Rule& r = m_.rules[ri];
                const auto n = r.read().size();
                std::size_t na = a, nb = b;
                if (r.direction() == Direction::Left) {
                    if (a < n || !reads_at(w_, a - n, r.read()))
                        continue;
                    na = a - n;
                } else if (r.direction() == Direction::Right) {
                    if (!reads_at(w_, b, r.read()))
                        continue;
                    nb = b + n;
                }
                const auto target = state_index_.at(r.target());
                auto expand = [&](Direction assigned) {
                    auto next_phase = advance(phase, assigned, n);
                    if (!next_phase)
                        return;
                    auto next = pack(na, nb, target, encode(*next_phase));
                    if (visit(next, node, ri, assigned))
                        queue.push_back(next);
                };
                if (r.is_epsilon() && phase_needs_direction(phase)) {
                    expand(Direction::Left);
                    expand(Direction::Right);
                } else {
                    expand(r.direction());
                }
            }
        }
        return std::nullopt;
    }

    Trace build_trace(std::uint64_t node) const {
        Trace t;
        while (true) {
            const auto& p = parents_.at(node);
            if (p.parent == node)
                break;
            t.moves.push_back({p.rule, p.assigned, m_.rules[p.rule].read()});
            node = p.parent;
        }
        t.split = std::get<0>(unpack(node));
        std::reverse(t.moves.begin(), t.moves.end());
        return t;
    }

private:
    struct Parent {
        std::uint64_t parent;
        std::size_t rule;
        Direction assigned;
    };

    std::uint64_t phase_codes() const { return 2 * 3 * (max_read_ + 2); }

    std::uint64_t encode(const ModePhase& p) const {
        std::uint64_t pend = p.pending ? *p.pending + 1 : 0;
        return (pend * 3 + static_cast<std::uint64_t>(p.last)) * 2 + (p.initialized ? 1 : 0);
    }

    ModePhase decode(std::uint64_t code) const {
        ModePhase p;
        p.mode = mode_;
        p.initialized = code % 2 == 1;
        code /= 2;
        p.last = static_cast<Direction>(code % 3);
        code /= 3;
        if (code > 0)
            p.pending = code - 1;
        return p;
    }

    std::uint64_t pack(std::size_t a, std::size_t b, std::size_t q, std::uint64_t code) const {
        const std::uint64_t len = w_.size() + 1;
        return ((static_cast<std::uint64_t>(a) * len + b) * state_count_ + q) * phase_codes() + code;
    }

    std::tuple<std::size_t, std::size_t, std::size_t, std::uint64_t> unpack(std::uint64_t node) const {
        const std::uint64_t len = w_.size() + 1;
        auto code = node % phase_codes();
        node /= phase_codes();
        auto q = node % state_count_;
        node /= state_count_;
        auto b = node % len;
        auto a = node / len;
        return {a, b, q, code};
    }

    bool visit(std::uint64_t node, std::uint64_t parent, std::size_t rule, Direction assigned) {
        if (keep_parents_)
            return parents_.try_emplace(node, Parent{parent, rule, assigned}).second;
        return seen_.insert(node).second;
    }

    const Ietwgfa& m_;
    const Word& w_;
    Mode mode_;
    std::map<StateId, std::size_t> state_index_;
    std::size_t state_count_ = 0;
    std::size_t max_read_ = 0;
    std::vector<std::vector<std::size_t>> by_source_;
    std::vector<bool> final_;
    bool keep_parents_ = false;
    std::unordered_map<std::uint64_t, Parent> parents_;
    std::unordered_set<std::uint64_t> seen_;
};

std::vector<std::size_t> all_splits(const Word& w) {
    std::vector<std::size_t> splits(w.size() + 1);
    for (std::size_t k = 0; k <= w.size(); ++k)
        splits[k] = k;
    return splits;
}

} // namespace

bool accepts(const Ietwgfa& m, const Word& w, Mode mode) {
    require_word_over(w, m.alphabet);
    return Search(m, w, mode).run(all_splits(w), false).has_value();
}

bool accepts_from(const Ietwgfa& m, const Word& w, std::size_t split, Mode mode) {
    require_word_over(w, m.alphabet);
    if (split > w.size())
        throw PreconditionError("split point lies outside the word");
    return Search(m, w, mode).run({split}, false).has_value();
}

std::optional<Trace> trace(const Ietwgfa& m, const Word& w, Mode mode) {
    require_word_over(w, m.alphabet);
    Search search(m, w, mode);
    auto node = search.run(all_splits(w), true);
    if (!node)
        return std::nullopt;
    return search.build_trace(*node);
}

std::optional<Configuration> replay(const Ietwgfa& m, const Word& w, Mode mode, const Trace& t) {
    auto c = initial_configuration(m, w, t.split, mode);
    for (const auto& mv : t.moves) {
        if (mv.rule_index >= m.rules.size())
            return std::nullopt;
        auto next = apply_rule(c, m.rules[mv.rule_index], mv.assigned);
        if (!next)
            return std::nullopt;
        c = std::move(*next);
    }
    return c;
}

Language enumerate_language(const Ietwgfa& m, Mode mode, std::size_t max_len) {
    Language out;
    for_each_word(m.alphabet, max_len, [&](const Word& w) {
        if (accepts(m, w, mode))
            out.insert(w);
    });
    return out;
}

} // namespace ietw
