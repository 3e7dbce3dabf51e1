#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace libinvest {

enum class TokenKind {
    Operator,
    Operand,
};

// One lexical unit. Paired delimiters ("()", "{}", "[]") appear as a
// single token positioned at the opening character; `pair_end` then
// holds the index one past the last token enclosed by the pair, and
// `close_line`/`close_column` the position of the closing character.
// For ordinary tokens pair_end is 0.
struct Token {
    std::string lexeme;
    TokenKind kind = TokenKind::Operand;
    std::size_t line = 1;
    std::size_t column = 1;

    std::size_t pair_end = 0;
    std::size_t close_line = 0;
    std::size_t close_column = 0;

    bool is_pair() const { return pair_end != 0; }
    bool is_op(const char* text) const { return kind == TokenKind::Operator && lexeme == text; }
};

using TokenStream = std::vector<Token>;

}  // namespace libinvest
