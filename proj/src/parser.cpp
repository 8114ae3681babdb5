#include "deforma/parser.hpp"

#include <cctype>

namespace deforma {
namespace {

struct Token {
    enum class Kind { Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, End };
    Kind kind;
    std::size_t pos;
    Rational value;     // Number
    std::string text;   // Ident
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
        std::size_t start = i_;
        if (i_ >= src_.size()) {
            tok_ = {Token::Kind::End, start, 0, ""};
            return;
        }
        char c = src_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = read_digits();
            // a slash directly after digits makes a rational literal
            if (i_ < src_.size() && src_[i_] == '/') {
                ++i_;
                if (i_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[i_])))
                    throw ParseError("expected denominator digits", i_);
                std::string den = read_digits();
                if (Integer(den) == 0) throw ParseError("zero denominator", start);
                tok_ = {Token::Kind::Number, start, Rational(Integer(num), Integer(den)), ""};
            } else {
                tok_ = {Token::Kind::Number, start, Rational(Integer(num)), ""};
            }
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string id;
            while (i_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[i_])) || src_[i_] == '_'))
                id += src_[i_++];
            tok_ = {Token::Kind::Ident, start, 0, id};
            return;
        }
        ++i_;
        switch (c) {
            case '+': tok_ = {Token::Kind::Plus, start, 0, ""}; return;
            case '-': tok_ = {Token::Kind::Minus, start, 0, ""}; return;
            case '*': tok_ = {Token::Kind::Star, start, 0, ""}; return;
            case '^': tok_ = {Token::Kind::Caret, start, 0, ""}; return;
            case '(': tok_ = {Token::Kind::LParen, start, 0, ""}; return;
            case ')': tok_ = {Token::Kind::RParen, start, 0, ""}; return;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", start);
        }
    }

    std::string read_digits() {
        std::string s;
        while (i_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i_])))
            s += src_[i_++];
        return s;
    }

    const std::string& src_;
    std::size_t i_ = 0;
    Token tok_{Token::Kind::End, 0, 0, ""};
};

class Parser {
public:
    Parser(const std::string& src, RingPtr ring) : lex_(src), ring_(std::move(ring)) {}

    Polynomial parse() {
        Polynomial p = sum();
        if (lex_.peek().kind != Token::Kind::End)
            throw ParseError("unexpected trailing input", lex_.peek().pos);
        return p;
    }

private:
    Polynomial sum() {
        bool negate = false;
        if (lex_.peek().kind == Token::Kind::Minus) {
            lex_.take();
            negate = true;
        } else if (lex_.peek().kind == Token::Kind::Plus) {
            lex_.take();
        }
        Polynomial p = product();
        if (negate) p = -p;
        while (lex_.peek().kind == Token::Kind::Plus ||
               lex_.peek().kind == Token::Kind::Minus) {
            bool minus = lex_.take().kind == Token::Kind::Minus;
            Polynomial q = product();
            if (minus)
                p -= q;
            else
                p += q;
        }
        return p;
    }

    Polynomial product() {
        Polynomial p = power();
        while (lex_.peek().kind == Token::Kind::Star) {
            lex_.take();
            p = p * power();
        }
        // implicit multiplication (number/ident/paren adjacency) is an error
        auto k = lex_.peek().kind;
        if (k == Token::Kind::Number || k == Token::Kind::Ident ||
            k == Token::Kind::LParen)
            throw ParseError("implicit multiplication is not allowed; insert '*'",
                             lex_.peek().pos);
        return p;
    }

    Polynomial power() {
        Polynomial base = atom();
        if (lex_.peek().kind == Token::Kind::Caret) {
            lex_.take();
            Token e = lex_.take();
            if (e.kind != Token::Kind::Number || denominator(e.value) != 1 ||
                numerator(e.value) < 0)
                throw ParseError("exponent must be a nonnegative integer", e.pos);
            Integer n = numerator(e.value);
            if (n > 1024) throw ParseError("exponent too large", e.pos);
            return base.pow(static_cast<unsigned>(n));
        }
        return base;
    }

    Polynomial atom() {
        Token t = lex_.take();
        switch (t.kind) {
            case Token::Kind::Number:
                return Polynomial::constant(ring_, t.value);
            case Token::Kind::Ident: {
                auto idx = ring_->var_index(t.text);
                if (!idx) throw UnknownVariableError(t.text, t.pos);
                return Polynomial::variable(ring_, *idx);
            }
            case Token::Kind::LParen: {
                Polynomial p = sum();
                Token close = lex_.take();
                if (close.kind != Token::Kind::RParen)
                    throw ParseError("expected ')'", close.pos);
                return p;
            }
            case Token::Kind::Minus: {
                // unary minus inside a factor, e.g. "(-x)"
                return -atom();
            }
            default:
                throw ParseError("expected number, variable, or '('", t.pos);
        }
    }

    Lexer lex_;
    RingPtr ring_;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring) {
    return Parser(text, ring).parse();
}

}  // namespace deforma
