// text_format.hpp -- line-based text documents for machines, NFAs and grammars

#pragma once

#include "ietw/core.hpp"
#include "ietw/grammar.hpp"

#include <variant>

namespace ietw {

/// Malformed document; line and column are 1-based.
class ParseError : public InputError {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message);

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

using Document = std::variant<Ietwgfa, Nfa, LinearGrammar>;

Document parse_document(std::string_view text);
Ietwgfa parse_ietwgfa(std::string_view text);
Nfa parse_nfa(std::string_view text);
LinearGrammar parse_lg(std::string_view text);

std::string serialize(const Ietwgfa& m);
std::string serialize(const Nfa& n);
std::string serialize(const LinearGrammar& g);
std::string serialize(const Document& d);

/// Quotes a token unless it is a plain identifier.
std::string quote_token(const std::string& token);

/// A word argument: single-character symbols, or whitespace-separated tokens
/// when `tokens` is set. "_" is the empty word.
Word parse_word(std::string_view text, bool tokens);
std::string format_word(const Word& w);

} // namespace ietw
