// grammar.cpp -- validation, span DP membership and bounded enumeration

#include "ietw/grammar.hpp"

#include <algorithm>
#include <map>

namespace ietw {

GrammarRule GrammarRule::terminal(NonterminalId lhs, Word x) {
    return GrammarRule{std::move(lhs), std::move(x), std::nullopt, {}};
}

GrammarRule GrammarRule::nonterminal(NonterminalId lhs, Word x, NonterminalId mid, Word y) {
    return GrammarRule{std::move(lhs), std::move(x), std::move(mid), std::move(y)};
}

std::string to_string(const GrammarRule& r) {
    std::vector<std::string> rhs = r.x;
    if (r.mid)
        rhs.push_back(*r.mid);
    rhs.insert(rhs.end(), r.y.begin(), r.y.end());
    return r.lhs + " -> " + (rhs.empty() ? std::string("_") : join(rhs, " "));
}

ValidationReport validate_grammar(const LinearGrammar& g) {
    ValidationReport report;
    if (g.nonterminals.empty())
        report.push_back({"nonterminals", "nonterminal set is empty"});
    if (g.terminals.empty())
        report.push_back({"terminals", "terminal set is empty"});
    for (const auto& n : g.nonterminals) {
        if (g.terminals.count(n))
            report.push_back({n, "disjointness: '" + n + "' is both a nonterminal and a terminal"});
    }
    if (!g.nonterminals.count(g.start))
        report.push_back({g.start, "start symbol '" + g.start + "' is not a declared nonterminal"});
    for (const auto& r : g.rules) {
        const auto where = to_string(r);
        if (!g.nonterminals.count(r.lhs))
            report.push_back({r.lhs, "rule '" + where + "' has undeclared nonterminal '" + r.lhs + "'"});
        if (r.mid && !g.nonterminals.count(*r.mid))
            report.push_back({*r.mid, "rule '" + where + "' has undeclared nonterminal '" + *r.mid + "'"});
        if (!r.mid && !r.y.empty())
            report.push_back({r.lhs, "terminal rule '" + where + "' must keep its string in x"});
        for (const auto* part : {&r.x, &r.y}) {
            for (const auto& a : *part) {
                if (!g.terminals.count(a))
                    report.push_back({a, "rule '" + where + "' has undeclared terminal '" + a + "'"});
            }
        }
    }
    return report;
}

EvenLinearWitness is_even_linear(const LinearGrammar& g) {
    for (std::size_t i = 0; i < g.rules.size(); ++i) {
        const auto& r = g.rules[i];
        if (r.mid && r.x.size() != r.y.size())
            return {false, i};
    }
    return {};
}

namespace {

bool matches(const Word& w, std::size_t pos, const Word& x) {
    return pos + x.size() <= w.size() && std::equal(x.begin(), x.end(), w.begin() + static_cast<std::ptrdiff_t>(pos));
}

} // namespace

bool lg_accepts(const LinearGrammar& g, const Word& w) {
    require_word_over(w, g.terminals);
    const std::size_t n = w.size();
    // derives[i][j] holds the nonterminals A with A =>* w[i..j).
    std::vector<std::vector<std::set<NonterminalId>>> derives(n + 1, std::vector<std::set<NonterminalId>>(n + 1));
    for (std::size_t len = 0; len <= n; ++len) {
        for (std::size_t i = 0; i + len <= n; ++i) {
            const std::size_t j = i + len;
            auto& cell = derives[i][j];
            bool changed = true;
            // Rules with empty flanks refer back to the same span; iterate to a fixpoint.
            while (changed) {
                changed = false;
                for (const auto& r : g.rules) {
                    if (cell.count(r.lhs))
                        continue;
                    bool ok = false;
                    if (!r.mid) {
                        ok = r.x.size() == len && matches(w, i, r.x);
                    } else if (r.x.size() + r.y.size() <= len && matches(w, i, r.x) &&
                               matches(w, j - r.y.size(), r.y)) {
                        ok = derives[i + r.x.size()][j - r.y.size()].count(*r.mid) > 0;
                    }
                    if (ok) {
                        cell.insert(r.lhs);
                        changed = true;
                    }
                }
            }
        }
    }
    return derives[0][n].count(g.start) > 0;
}

Language lg_enumerate(const LinearGrammar& g, std::size_t max_len) {
    std::map<NonterminalId, Language> words;
    for (const auto& r : g.rules) {
        if (!r.mid && r.x.size() <= max_len)
            words[r.lhs].insert(r.x);
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& r : g.rules) {
            if (!r.mid)
                continue;
            const auto flank = r.x.size() + r.y.size();
            if (flank > max_len)
                continue;
            auto it = words.find(*r.mid);
            if (it == words.end())
                continue;
            std::vector<Word> fresh;
            for (const auto& u : it->second) {
                if (flank + u.size() > max_len)
                    break;
                Word w = r.x;
                w.insert(w.end(), u.begin(), u.end());
                w.insert(w.end(), r.y.begin(), r.y.end());
                fresh.push_back(std::move(w));
            }
            auto& target = words[r.lhs];
            for (auto& w : fresh)
                changed |= target.insert(std::move(w)).second;
        }
    }
    return words[g.start];
}

} // namespace ietw
