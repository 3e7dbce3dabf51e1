#include "libinvest/lexer.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <vector>

#include "libinvest/error.hpp"

namespace libinvest {

namespace {

/* Census counting rules (cpp-thesis defaults):
 * 1. Comments and whitespace never become tokens.
 * 2. Keywords, symbolic operators, statement terminators and profile API
 *    names (cin, cout) are operators.
 * 3. Identifiers, numeric/char literals, string literals and header
 *    include names are operands; a header name is one operand token.
 * 4. Delimiter pairs count once per matched pair, at the open position.
 * 5. A negative literal in prefix position (`= -1`) is one operand.
 * 6. Census streams drop the tokens of library references: member calls
 *    keep only their parens pair, type instantiations vanish entirely,
 *    include lines keep only prefix + keyword + header name, and names
 *    in census_skip_names (stream manipulators) are dropped.
 */

bool valid_utf8(const std::string& text, std::size_t& bad_offset) {
    std::size_t i = 0;
    while (i < text.size()) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        std::size_t extra;
        if (c < 0x80) extra = 0;
        else if ((c & 0xE0) == 0xC0) extra = 1;
        else if ((c & 0xF0) == 0xE0) extra = 2;
        else if ((c & 0xF8) == 0xF0) extra = 3;
        else { bad_offset = i; return false; }
        if (i + extra >= text.size() && extra > 0) { bad_offset = i; return false; }
        for (std::size_t k = 1; k <= extra; ++k) {
            if ((static_cast<unsigned char>(text[i + k]) & 0xC0) != 0x80) {
                bad_offset = i;
                return false;
            }
        }
        i += extra + 1;
    }
    return true;
}

struct OpenPair {
    std::size_t token_index;
    SourcePos pos;
    char close;
    std::string lexeme;
};

class Scanner {
public:
    Scanner(const std::string& src, const LanguageProfile& prof, const std::string& file)
        : src_(src), prof_(prof), file_(file) {}

    TokenStream run() {
        std::size_t bad = 0;
        if (!valid_utf8(src_, bad))
            throw LexError("undecodable byte in input", pos_at_offset(bad), file_);

        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v') {
                advance();
                continue;
            }
            if (!prof_.line_comment.empty() && starts_with(prof_.line_comment)) {
                while (pos_ < src_.size() && src_[pos_] != '\n') advance();
                continue;
            }
            if (!prof_.block_comment_open.empty() && starts_with(prof_.block_comment_open)) {
                skip_block_comment();
                continue;
            }
            if (pending_include_line_ == line_ && c == '<') {
                if (lex_header_name()) continue;
            }
            pending_include_line_ = 0;
            if (prof_.string_delims.find(c) != std::string::npos) {
                lex_string(c);
                continue;
            }
            if (prof_.is_identifier_start(static_cast<unsigned char>(c))) {
                lex_identifier();
                continue;
            }
            if (std::isdigit(static_cast<unsigned char>(c))) {
                lex_number(false);
                continue;
            }
            if (c == '-' && prof_.join_negative_literals && pos_ + 1 < src_.size() &&
                std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])) && in_prefix_position()) {
                lex_number(true);
                continue;
            }
            if (lex_pair_char(c)) continue;
            if (lex_terminator()) continue;
            if (lex_symbolic()) continue;
            throw LexError(std::string("unexpected character '") + c + "'", here(), file_);
        }
        if (!pair_stack_.empty())
            throw LexError("unmatched '" + pair_stack_.back().lexeme.substr(0, 1) + "'",
                           pair_stack_.back().pos, file_);
        return std::move(tokens_);
    }

private:
    SourcePos here() const { return {line_, col_}; }

    SourcePos pos_at_offset(std::size_t offset) const {
        SourcePos p{1, 1};
        for (std::size_t i = 0; i < offset && i < src_.size(); ++i) {
            if (src_[i] == '\n') { ++p.line; p.column = 1; }
            else ++p.column;
        }
        return p;
    }

    void advance() {
        if (src_[pos_] == '\n') { ++line_; col_ = 1; }
        else ++col_;
        ++pos_;
    }

    bool starts_with(const std::string& s) const {
        return src_.compare(pos_, s.size(), s) == 0;
    }

    void emit(std::string lexeme, TokenKind kind, SourcePos pos) {
        Token t;
        t.lexeme = std::move(lexeme);
        t.kind = kind;
        t.line = pos.line;
        t.column = pos.column;
        tokens_.push_back(std::move(t));
    }

    void skip_block_comment() {
        SourcePos open = here();
        for (std::size_t i = 0; i < prof_.block_comment_open.size(); ++i) advance();
        while (pos_ < src_.size()) {
            if (starts_with(prof_.block_comment_close)) {
                for (std::size_t i = 0; i < prof_.block_comment_close.size(); ++i) advance();
                return;
            }
            advance();
        }
        throw LexError("unterminated block comment", open, file_);
    }

    // <name.h> after an include directive, single operand token.
    bool lex_header_name() {
        std::size_t end = pos_ + 1;
        while (end < src_.size() && src_[end] != '>' && src_[end] != '\n') ++end;
        if (end >= src_.size() || src_[end] != '>') return false;
        SourcePos start = here();
        std::string lexeme = src_.substr(pos_, end - pos_ + 1);
        while (pos_ <= end) advance();
        emit(std::move(lexeme), TokenKind::Operand, start);
        pending_include_line_ = 0;
        return true;
    }

    void lex_string(char delim) {
        SourcePos start = here();
        std::string lexeme(1, delim);
        advance();
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '\n') break;
            if (c == '\\' && pos_ + 1 < src_.size()) {
                lexeme += c;
                advance();
                lexeme += src_[pos_];
                advance();
                continue;
            }
            lexeme += c;
            advance();
            if (c == delim) {
                emit(std::move(lexeme), TokenKind::Operand, start);
                return;
            }
        }
        throw LexError("unterminated string literal", start, file_);
    }

    void lex_identifier() {
        SourcePos start = here();
        std::size_t begin = pos_;
        while (pos_ < src_.size() &&
               prof_.is_identifier_continue(static_cast<unsigned char>(src_[pos_])))
            advance();
        std::string lexeme = src_.substr(begin, pos_ - begin);
        bool is_op = prof_.is_keyword(lexeme) || prof_.is_api_operator(lexeme);
        emit(lexeme, is_op ? TokenKind::Operator : TokenKind::Operand, start);
        if (prof_.include_directives.count(lexeme) && tokens_.size() >= 2 &&
            tokens_[tokens_.size() - 2].is_op("#") && tokens_[tokens_.size() - 2].line == start.line)
            pending_include_line_ = start.line;
    }

    // Prefix position: nothing emitted yet, or the previous token is an
    // operator. A pair token counts only while still open (we are just
    // past `(`); once closed we are past `)` and a minus is binary.
    bool in_prefix_position() const {
        if (tokens_.empty()) return true;
        const Token& prev = tokens_.back();
        if (prev.kind != TokenKind::Operator) return false;
        if (prev.is_pair()) return false;     // closed pair: binary context
        return true;
    }

    void lex_number(bool negative) {
        SourcePos start = here();
        std::size_t begin = pos_;
        if (negative) advance();
        if (starts_with("0x") || starts_with("0X")) {
            advance();
            advance();
            while (pos_ < src_.size() && std::isxdigit(static_cast<unsigned char>(src_[pos_])))
                advance();
        } else {
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                advance();
            if (pos_ + 1 < src_.size() && src_[pos_] == '.' &&
                std::isdigit(static_cast<unsigned char>(src_[pos_ + 1]))) {
                advance();
                while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                    advance();
            }
            if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
                std::size_t mark = pos_;
                advance();
                if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) advance();
                if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                    while (pos_ < src_.size() &&
                           std::isdigit(static_cast<unsigned char>(src_[pos_])))
                        advance();
                } else {
                    while (pos_ > mark) { --pos_; --col_; }  // bare e: not an exponent
                }
            }
        }
        while (pos_ < src_.size() &&
               prof_.is_identifier_continue(static_cast<unsigned char>(src_[pos_])))
            advance();  // literal suffixes (u, l, f)
        emit(src_.substr(begin, pos_ - begin), TokenKind::Operand, start);
    }

    bool lex_pair_char(char c) {
        for (const auto& pair : prof_.paired_delimiters) {
            if (c == pair[0]) {
                Token t;
                t.lexeme = pair;
                t.kind = TokenKind::Operator;
                t.line = line_;
                t.column = col_;
                pair_stack_.push_back({tokens_.size(), here(), pair[1], pair});
                tokens_.push_back(std::move(t));
                advance();
                return true;
            }
            if (c == pair[1]) {
                if (pair_stack_.empty() || pair_stack_.back().close != c)
                    throw LexError(std::string("unmatched '") + c + "'", here(), file_);
                Token& open = tokens_[pair_stack_.back().token_index];
                open.pair_end = tokens_.size();
                open.close_line = line_;
                open.close_column = col_;
                pair_stack_.pop_back();
                advance();
                return true;
            }
        }
        return false;
    }

    bool lex_terminator() {
        for (const auto& term : prof_.statement_terminators) {
            if (starts_with(term)) {
                SourcePos start = here();
                for (std::size_t i = 0; i < term.size(); ++i) advance();
                emit(term, TokenKind::Operator, start);
                return true;
            }
        }
        return false;
    }

    bool lex_symbolic() {
        for (const auto& op : prof_.symbolic_operators) {  // longest first
            if (starts_with(op)) {
                SourcePos start = here();
                for (std::size_t i = 0; i < op.size(); ++i) advance();
                emit(op, TokenKind::Operator, start);
                return true;
            }
        }
        return false;
    }

    const std::string& src_;
    const LanguageProfile& prof_;
    const std::string& file_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
    std::size_t pending_include_line_ = 0;
    TokenStream tokens_;
    std::vector<OpenPair> pair_stack_;
};

bool is_identifier_operand(const Token& t, const LanguageProfile& prof) {
    return t.kind == TokenKind::Operand && !t.lexeme.empty() &&
           prof.is_identifier_start(static_cast<unsigned char>(t.lexeme[0]));
}

}  // namespace

std::size_t template_argument_close(const TokenStream& tokens, std::size_t open_index) {
    int depth = 1;
    for (std::size_t j = open_index + 1; j < tokens.size(); ++j) {
        const Token& t = tokens[j];
        if (t.kind != TokenKind::Operator) continue;
        if (t.lexeme == "<") ++depth;
        else if (t.lexeme == ">") {
            if (--depth == 0) return j;
        } else if (t.lexeme == ">>") {
            depth -= 2;
            if (depth == 0) return j;
            if (depth < 0) return std::string::npos;
        } else if (t.lexeme == ";" || t.is_pair()) {
            return std::string::npos;
        }
    }
    return std::string::npos;
}

TokenStream tokenize(const std::string& source, const LanguageProfile& profile,
                     const std::string& file) {
    Scanner scanner(source, profile, file);
    return scanner.run();
}

bool is_valid_text(const std::string& bytes) {
    std::size_t bad = 0;
    return valid_utf8(bytes, bad);
}

TokenStream census_stream(const TokenStream& tokens, const LanguageProfile& profile,
                          CensusRole role) {
    (void)role;  // program and component bodies currently share the rules
    TokenStream out;
    out.reserve(tokens.size());
    std::size_t i = 0;
    while (i < tokens.size()) {
        const Token& t = tokens[i];

        // include line: keep `#` + keyword + header name, drop the rest.
        if (t.is_op("#") && i + 1 < tokens.size() &&
            tokens[i + 1].kind == TokenKind::Operator &&
            profile.include_directives.count(tokens[i + 1].lexeme) &&
            tokens[i + 1].line == t.line) {
            std::size_t line = t.line;
            out.push_back(tokens[i]);
            out.push_back(tokens[i + 1]);
            i += 2;
            if (i < tokens.size() && tokens[i].line == line &&
                tokens[i].kind == TokenKind::Operand) {
                out.push_back(tokens[i]);
                ++i;
            }
            while (i < tokens.size() && tokens[i].line == line) ++i;
            continue;
        }

        if (profile.census_absorb_member_calls) {
            // recv . name ( args )  ->  ( )
            if (is_identifier_operand(t, profile) && i + 3 < tokens.size() &&
                tokens[i + 1].kind == TokenKind::Operator &&
                profile.is_member_access(tokens[i + 1].lexeme) &&
                is_identifier_operand(tokens[i + 2], profile) && tokens[i + 3].is_pair() &&
                tokens[i + 3].lexeme == "()") {
                out.push_back(tokens[i + 3]);
                i = tokens[i + 3].pair_end;
                continue;
            }
            // chained tail: . name ( args )  ->  ( )
            if (t.kind == TokenKind::Operator && profile.is_member_access(t.lexeme) &&
                i + 2 < tokens.size() && is_identifier_operand(tokens[i + 1], profile) &&
                tokens[i + 2].is_pair() && tokens[i + 2].lexeme == "()") {
                out.push_back(tokens[i + 2]);
                i = tokens[i + 2].pair_end;
                continue;
            }
        }

        if (profile.census_absorb_instantiations && is_identifier_operand(t, profile)) {
            // Type < args > var  ->  (nothing); trailing ctor parens keep
            // the pair, like the untemplated form below
            if (i + 1 < tokens.size() && tokens[i + 1].is_op("<")) {
                std::size_t close = template_argument_close(tokens, i + 1);
                if (close != std::string::npos && close + 1 < tokens.size() &&
                    is_identifier_operand(tokens[close + 1], profile)) {
                    i = close + 2;
                    if (i < tokens.size() && tokens[i].is_pair() && tokens[i].lexeme == "()") {
                        out.push_back(tokens[i]);
                        i = tokens[i].pair_end;
                    }
                    continue;
                }
            }
            // Type var ( args )  ->  ( )
            if (i + 2 < tokens.size() && is_identifier_operand(tokens[i + 1], profile) &&
                tokens[i + 2].is_pair() && tokens[i + 2].lexeme == "()") {
                out.push_back(tokens[i + 2]);
                i = tokens[i + 2].pair_end;
                continue;
            }
        }

        if (t.kind == TokenKind::Operand && profile.census_skip_names.count(t.lexeme)) {
            ++i;
            continue;
        }

        out.push_back(t);
        ++i;
    }
    return out;
}

std::size_t count_loc(const std::string& source, const LanguageProfile& profile) {
    std::size_t count = 0;
    bool in_block = false;
    bool line_has_code = false;
    char in_string = 0;
    std::size_t i = 0;
    while (i <= source.size()) {
        if (i == source.size() || source[i] == '\n') {
            if (line_has_code) ++count;
            line_has_code = false;
            in_string = 0;  // strings do not continue across lines
            ++i;
            continue;
        }
        char c = source[i];
        if (in_block) {
            if (!profile.block_comment_close.empty() &&
                source.compare(i, profile.block_comment_close.size(),
                               profile.block_comment_close) == 0) {
                in_block = false;
                i += profile.block_comment_close.size();
            } else {
                ++i;
            }
            continue;
        }
        if (in_string) {
            line_has_code = true;
            if (c == '\\') { i += 2; continue; }
            if (c == in_string) in_string = 0;
            ++i;
            continue;
        }
        if (!profile.line_comment.empty() &&
            source.compare(i, profile.line_comment.size(), profile.line_comment) == 0) {
            while (i < source.size() && source[i] != '\n') ++i;
            continue;
        }
        if (!profile.block_comment_open.empty() &&
            source.compare(i, profile.block_comment_open.size(), profile.block_comment_open) == 0) {
            in_block = true;
            i += profile.block_comment_open.size();
            continue;
        }
        if (profile.string_delims.find(c) != std::string::npos) {
            in_string = c;
            line_has_code = true;
            ++i;
            continue;
        }
        if (!std::isspace(static_cast<unsigned char>(c))) line_has_code = true;
        ++i;
    }
    return count;
}

}  // namespace libinvest
