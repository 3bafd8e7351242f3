// text_format.cpp -- tokenizer, parser and canonical printer for the text documents

#include "ietw/text_format.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace ietw {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line), column_(column) {}

namespace {

constexpr const char* kEmpty = "_";
constexpr const char* kArrow = "->";

struct Token {
    std::string text;
    std::size_t column = 0;
    bool quoted = false;

    bool is(const char* s) const { return !quoted && text == s; }
};

struct Line {
    std::size_t number = 0;
    std::string key;
    std::size_t key_column = 0;
    std::vector<Token> values;
};

std::vector<Token> tokenize(std::string_view s, std::size_t line, std::size_t offset) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        if (s[i] == ' ' || s[i] == '\t' || s[i] == '\r') {
            ++i;
            continue;
        }
        if (s[i] == '#')
            break;
        Token t;
        t.column = offset + i + 1;
        if (s[i] == '"') {
            t.quoted = true;
            ++i;
            bool closed = false;
            while (i < s.size()) {
                if (s[i] == '\\') {
                    if (i + 1 == s.size() || (s[i + 1] != '"' && s[i + 1] != '\\'))
                        throw ParseError(line, offset + i + 1, "bad escape in quoted token");
                    t.text += s[i + 1];
                    i += 2;
                } else if (s[i] == '"') {
                    ++i;
                    closed = true;
                    break;
                } else {
                    t.text += s[i++];
                }
            }
            if (!closed)
                throw ParseError(line, t.column, "unterminated quoted token");
            if (t.text.empty())
                throw ParseError(line, t.column, "empty quoted token");
        } else {
            while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\r') {
                if (s[i] == '"')
                    throw ParseError(line, offset + i + 1, "quote inside a bare token");
                t.text += s[i++];
            }
        }
        out.push_back(std::move(t));
    }
    return out;
}

std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> out;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        auto raw = text.substr(pos, end - pos);
        ++number;
        pos = end + 1;
        std::size_t first = raw.find_first_not_of(" \t\r");
        if (first == std::string_view::npos || raw[first] == '#')
            continue;
        auto colon = raw.find(':');
        if (colon == std::string_view::npos)
            throw ParseError(number, first + 1, "expected 'key: values'");
        Line l;
        l.number = number;
        l.key_column = first + 1;
        auto key = raw.substr(first, colon - first);
        while (!key.empty() && (key.back() == ' ' || key.back() == '\t'))
            key.remove_suffix(1);
        l.key = std::string(key);
        l.values = tokenize(raw.substr(colon + 1), number, colon + 1);
        out.push_back(std::move(l));
    }
    return out;
}

/// Headers and rule lines of one document, before interpretation.
struct Raw {
    std::string kind;
    std::map<std::string, Line> headers;
    std::vector<Line> rules;
    std::size_t last_line = 0;
};

Raw collect(std::string_view text) {
    Raw raw;
    auto lines = split_lines(text);
    for (auto& l : lines) {
        raw.last_line = l.number;
        if (l.key == "rule") {
            raw.rules.push_back(std::move(l));
            continue;
        }
        if (l.key == "type") {
            if (l.values.size() != 1)
                throw ParseError(l.number, l.key_column, "type takes exactly one value");
            if (!raw.kind.empty())
                throw ParseError(l.number, l.key_column, "duplicate type header");
            raw.kind = l.values[0].text;
            continue;
        }
        if (raw.headers.count(l.key))
            throw ParseError(l.number, l.key_column, "duplicate header '" + l.key + "'");
        raw.headers.emplace(l.key, std::move(l));
    }
    if (raw.kind.empty())
        throw ParseError(lines.empty() ? 1 : lines.front().number, 1, "missing type header");
    return raw;
}

class Reader {
public:
    Reader(Raw raw, std::vector<std::string> keys) : raw_(std::move(raw)) {
        for (const auto& [key, line] : raw_.headers) {
            if (std::find(keys.begin(), keys.end(), key) == keys.end())
                throw ParseError(line.number, line.key_column, "unknown header '" + key + "' for type " + raw_.kind);
        }
    }

    const Line& header(const std::string& key) const {
        auto it = raw_.headers.find(key);
        if (it == raw_.headers.end())
            throw ParseError(raw_.last_line + 1, 1, "missing header '" + key + "'");
        return it->second;
    }

    std::set<std::string> names(const std::string& key) const {
        std::set<std::string> out;
        for (const auto& t : header(key).values) {
            if (t.is(kEmpty) || t.is(kArrow))
                throw ParseError(header(key).number, t.column, "reserved token '" + t.text + "' used as a name");
            if (!out.insert(t.text).second)
                throw ParseError(header(key).number, t.column, "'" + t.text + "' declared twice");
        }
        return out;
    }

    std::string single(const std::string& key, const std::set<std::string>& declared) const {
        const auto& l = header(key);
        if (l.values.size() != 1)
            throw ParseError(l.number, l.key_column, key + " takes exactly one value");
        if (!declared.count(l.values[0].text))
            throw ParseError(l.number, l.values[0].column, "undeclared identifier '" + l.values[0].text + "'");
        return l.values[0].text;
    }

    std::set<std::string> subset(const std::string& key, const std::set<std::string>& declared) const {
        for (const auto& t : header(key).values) {
            if (!declared.count(t.text))
                throw ParseError(header(key).number, t.column, "undeclared identifier '" + t.text + "'");
        }
        return names(key);
    }

    const std::vector<Line>& rules() const { return raw_.rules; }

private:
    Raw raw_;
};

/// Splits a rule line at its single arrow.
std::pair<std::vector<Token>, std::vector<Token>> sides(const Line& l) {
    std::size_t arrow = l.values.size();
    for (std::size_t i = 0; i < l.values.size(); ++i) {
        if (l.values[i].is(kArrow)) {
            if (arrow != l.values.size())
                throw ParseError(l.number, l.values[i].column, "more than one '->'");
            arrow = i;
        }
    }
    if (arrow == l.values.size())
        throw ParseError(l.number, l.key_column, "rule without '->'");
    return {std::vector<Token>(l.values.begin(), l.values.begin() + static_cast<std::ptrdiff_t>(arrow)),
            std::vector<Token>(l.values.begin() + static_cast<std::ptrdiff_t>(arrow) + 1, l.values.end())};
}

const Token& one_target(const Line& l, const std::vector<Token>& rhs, const std::set<std::string>& states) {
    if (rhs.size() != 1)
        throw ParseError(l.number, rhs.empty() ? l.key_column : rhs[1].column, "rule needs exactly one target state");
    if (!states.count(rhs[0].text))
        throw ParseError(l.number, rhs[0].column, "undeclared state '" + rhs[0].text + "'");
    return rhs[0];
}

Word symbols(const Line& l, const std::vector<Token>& toks, std::size_t from, std::size_t to,
             const std::set<Symbol>& alphabet) {
    Word out;
    for (std::size_t i = from; i < to; ++i) {
        if (toks[i].is(kEmpty))
            continue;
        if (!alphabet.count(toks[i].text))
            throw ParseError(l.number, toks[i].column, "undeclared identifier '" + toks[i].text + "'");
        out.push_back(toks[i].text);
    }
    return out;
}

Ietwgfa read_ietwgfa(Raw raw) {
    Reader r(std::move(raw), {"states", "alphabet", "start", "final"});
    Ietwgfa m;
    m.states = r.names("states");
    m.alphabet = r.names("alphabet");
    m.start = r.single("start", m.states);
    m.finals = r.subset("final", m.states);
    for (const auto& l : r.rules()) {
        auto [lhs, rhs] = sides(l);
        const auto& target = one_target(l, rhs, m.states).text;
        if (lhs.empty())
            throw ParseError(l.number, l.key_column, "rule without a source state");
        if (lhs.size() == 1 && m.states.count(lhs[0].text)) {
            m.rules.push_back(Rule::epsilon(lhs[0].text, target));
        } else if (m.states.count(lhs.front().text)) {
            auto x = symbols(l, lhs, 1, lhs.size(), m.alphabet);
            m.rules.push_back(x.empty() ? Rule::epsilon(lhs.front().text, target)
                                        : Rule::right(lhs.front().text, std::move(x), target));
        } else if (m.states.count(lhs.back().text)) {
            auto x = symbols(l, lhs, 0, lhs.size() - 1, m.alphabet);
            m.rules.push_back(x.empty() ? Rule::epsilon(lhs.back().text, target)
                                        : Rule::left(std::move(x), lhs.back().text, target));
        } else {
            throw ParseError(l.number, lhs.front().column, "rule has no declared source state at either end");
        }
    }
    return m;
}

Nfa read_nfa(Raw raw) {
    Reader r(std::move(raw), {"states", "alphabet", "start", "final"});
    Nfa n;
    n.states = r.names("states");
    n.alphabet = r.names("alphabet");
    n.start = r.single("start", n.states);
    n.finals = r.subset("final", n.states);
    for (const auto& l : r.rules()) {
        auto [lhs, rhs] = sides(l);
        const auto& target = one_target(l, rhs, n.states).text;
        if (lhs.empty() || lhs.size() > 2)
            throw ParseError(l.number, l.key_column, "nfa rule is 'p a -> q' or 'p -> q'");
        if (!n.states.count(lhs[0].text))
            throw ParseError(l.number, lhs[0].column, "undeclared state '" + lhs[0].text + "'");
        std::optional<Symbol> sym;
        if (lhs.size() == 2 && !lhs[1].is(kEmpty)) {
            if (!n.alphabet.count(lhs[1].text))
                throw ParseError(l.number, lhs[1].column, "undeclared identifier '" + lhs[1].text + "'");
            sym = lhs[1].text;
        }
        n.rules.push_back({lhs[0].text, sym, target});
    }
    return n;
}

LinearGrammar read_lg(Raw raw) {
    Reader r(std::move(raw), {"nonterminals", "terminals", "start"});
    LinearGrammar g;
    g.nonterminals = r.names("nonterminals");
    g.terminals = r.names("terminals");
    g.start = r.single("start", g.nonterminals);
    for (const auto& l : r.rules()) {
        auto [lhs, rhs] = sides(l);
        if (lhs.size() != 1)
            throw ParseError(l.number, l.key_column, "grammar rule needs exactly one left-hand nonterminal");
        if (!g.nonterminals.count(lhs[0].text))
            throw ParseError(l.number, lhs[0].column, "undeclared nonterminal '" + lhs[0].text + "'");
        if (rhs.empty())
            throw ParseError(l.number, l.key_column, "empty right-hand side; write '_' for the empty word");
        std::optional<std::size_t> mid;
        for (std::size_t i = 0; i < rhs.size(); ++i) {
            if (!g.nonterminals.count(rhs[i].text))
                continue;
            if (mid)
                throw ParseError(l.number, rhs[i].column, "more than one nonterminal on the right-hand side");
            mid = i;
        }
        if (mid)
            g.rules.push_back(GrammarRule::nonterminal(lhs[0].text, symbols(l, rhs, 0, *mid, g.terminals),
                                                       rhs[*mid].text,
                                                       symbols(l, rhs, *mid + 1, rhs.size(), g.terminals)));
        else
            g.rules.push_back(GrammarRule::terminal(lhs[0].text, symbols(l, rhs, 0, rhs.size(), g.terminals)));
    }
    return g;
}

bool plain(const std::string& token) {
    if (token.empty() || token == kEmpty || token == kArrow)
        return false;
    for (unsigned char c : token) {
        if (!(std::isalnum(c) || c == '_' || c == '\'' || c == '-' || c == '+' || c == '*' || c == '.'))
            return false;
    }
    return true;
}

std::string joined(const std::set<std::string>& names) {
    std::string out;
    for (const auto& n : names)
        out += " " + quote_token(n);
    return out;
}

std::string symbols_text(const Word& w) {
    std::string out;
    for (const auto& s : w)
        out += " " + quote_token(s);
    return out;
}

} // namespace

std::string quote_token(const std::string& token) {
    if (plain(token))
        return token;
    std::string out = "\"";
    for (char c : token) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out + "\"";
}

Document parse_document(std::string_view text) {
    auto raw = collect(text);
    if (raw.kind == "ietwgfa")
        return read_ietwgfa(std::move(raw));
    if (raw.kind == "nfa")
        return read_nfa(std::move(raw));
    if (raw.kind == "lg")
        return read_lg(std::move(raw));
    throw ParseError(1, 1, "unknown type '" + raw.kind + "'");
}

namespace {

template <typename T>
T parse_as(std::string_view text, const char* kind) {
    auto d = parse_document(text);
    if (auto* v = std::get_if<T>(&d))
        return std::move(*v);
    throw ParseError(1, 1, std::string("expected a document of type ") + kind);
}

} // namespace

Ietwgfa parse_ietwgfa(std::string_view text) { return parse_as<Ietwgfa>(text, "ietwgfa"); }
Nfa parse_nfa(std::string_view text) { return parse_as<Nfa>(text, "nfa"); }
LinearGrammar parse_lg(std::string_view text) { return parse_as<LinearGrammar>(text, "lg"); }

std::string serialize(const Ietwgfa& m) {
    std::string out = "type: ietwgfa\nstates:" + joined(m.states) + "\nalphabet:" + joined(m.alphabet) +
                      "\nstart: " + quote_token(m.start) + "\nfinal:" + joined(m.finals) + "\n";
    for (const auto& r : m.rules) {
        out += "rule:";
        switch (r.direction()) {
        case Direction::Left:
            out += symbols_text(r.read()) + " " + quote_token(r.source());
            break;
        case Direction::Right:
            out += " " + quote_token(r.source()) + symbols_text(r.read());
            break;
        case Direction::Neutral:
            out += " " + quote_token(r.source());
            break;
        }
        out += " -> " + quote_token(r.target()) + "\n";
    }
    return out;
}

std::string serialize(const Nfa& n) {
    std::string out = "type: nfa\nstates:" + joined(n.states) + "\nalphabet:" + joined(n.alphabet) +
                      "\nstart: " + quote_token(n.start) + "\nfinal:" + joined(n.finals) + "\n";
    for (const auto& r : n.rules) {
        out += "rule: " + quote_token(r.from);
        if (r.symbol)
            out += " " + quote_token(*r.symbol);
        out += " -> " + quote_token(r.to) + "\n";
    }
    return out;
}

std::string serialize(const LinearGrammar& g) {
    std::string out = "type: lg\nnonterminals:" + joined(g.nonterminals) + "\nterminals:" + joined(g.terminals) +
                      "\nstart: " + quote_token(g.start) + "\n";
    for (const auto& r : g.rules) {
        out += "rule: " + quote_token(r.lhs) + " ->";
        if (!r.mid && r.x.empty())
            out += std::string(" ") + kEmpty;
        out += symbols_text(r.x);
        if (r.mid)
            out += " " + quote_token(*r.mid) + symbols_text(r.y);
        out += "\n";
    }
    return out;
}

std::string serialize(const Document& d) {
    return std::visit([](const auto& x) { return serialize(x); }, d);
}

Word parse_word(std::string_view text, bool tokens) {
    Word out;
    if (text == kEmpty)
        return out;
    if (!tokens) {
        for (char c : text) {
            if (c == ' ' || c == '\t')
                throw InputError("word contains whitespace; use --tokens for multi-character symbols");
            out.emplace_back(1, c);
        }
        return out;
    }
    for (auto& t : tokenize(text, 1, 0)) {
        if (!t.is(kEmpty))
            out.push_back(std::move(t.text));
    }
    return out;
}

std::string format_word(const Word& w) {
    if (w.empty())
        return kEmpty;
    bool single = true;
    for (const auto& s : w)
        single = single && s.size() == 1 && s != kEmpty && s != " " && s != "\t";
    if (single)
        return join(w, "");
    std::string out;
    for (const auto& s : w)
        out += (out.empty() ? "" : " ") + quote_token(s);
    return out;
}

} // namespace ietw
