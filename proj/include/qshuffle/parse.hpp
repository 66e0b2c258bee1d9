#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "element.hpp"

namespace qshuffle {

// Parser for the element expression language:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := [scalar ('*'|' ')] word
//   scalar := product/quotient of factors; factor := ['-'] atom ['^' int]
//   atom   := integer | q | [n]_q | '(' scalar-expr ')'
//   word   := /[xy]+/ | "1"
// A bare "1" in word position is the empty word; '*' between the scalar and
// the word may be spelled as whitespace.
class ElementParser {
public:
    explicit ElementParser(std::string_view text) : text_(text) { tokenize(); }

    Element parse() {
        Element out;
        if (peek().kind == Tok::IntTok && peek().text == "0" && peek(1).kind == Tok::End) {
            pos_ += 2;  // the zero element prints as a bare "0"
            return out;
        }
        int sign = 1;
        if (accept(Tok::Minus)) sign = -1;
        for (;;) {
            Element term = parse_term();
            out += sign < 0 ? -term : term;
            if (accept(Tok::Plus)) {
                sign = 1;
            } else if (accept(Tok::Minus)) {
                sign = -1;
            } else {
                break;
            }
        }
        expect(Tok::End, "end of input");
        return out;
    }

private:
    enum class Tok { WordTok, IntTok, Q, Plus, Minus, Star, Slash, Caret, LParen, RParen, LBracket, RBracket, Underscore, End };

    struct Token {
        Tok kind;
        std::string text;
        size_t pos;
    };

    void tokenize() {
        size_t i = 0;
        while (i < text_.size()) {
            char c = text_[i];
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++i;
                continue;
            }
            size_t start = i;
            if (c == 'x' || c == 'y') {
                std::string w;
                while (i < text_.size() && (text_[i] == 'x' || text_[i] == 'y')) w.push_back(text_[i++]);
                tokens_.push_back({Tok::WordTok, w, start});
                continue;
            }
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::string d;
                while (i < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i]))) d.push_back(text_[i++]);
                tokens_.push_back({Tok::IntTok, d, start});
                continue;
            }
            ++i;
            switch (c) {
                case 'q': tokens_.push_back({Tok::Q, "q", start}); break;
                case '+': tokens_.push_back({Tok::Plus, "+", start}); break;
                case '-': tokens_.push_back({Tok::Minus, "-", start}); break;
                case '*': tokens_.push_back({Tok::Star, "*", start}); break;
                case '/': tokens_.push_back({Tok::Slash, "/", start}); break;
                case '^': tokens_.push_back({Tok::Caret, "^", start}); break;
                case '(': tokens_.push_back({Tok::LParen, "(", start}); break;
                case ')': tokens_.push_back({Tok::RParen, ")", start}); break;
                case '[': tokens_.push_back({Tok::LBracket, "[", start}); break;
                case ']': tokens_.push_back({Tok::RBracket, "]", start}); break;
                case '_': tokens_.push_back({Tok::Underscore, "_", start}); break;
                default:
                    throw std::invalid_argument("parse error at position " + std::to_string(start) +
                                                ": unknown token '" + std::string(1, c) + "'");
            }
        }
        tokens_.push_back({Tok::End, "", text_.size()});
    }

    const Token& peek(size_t ahead = 0) const {
        size_t i = pos_ + ahead;
        return i < tokens_.size() ? tokens_[i] : tokens_.back();
    }
    bool accept(Tok k) {
        if (peek().kind == k) {
            ++pos_;
            return true;
        }
        return false;
    }
    const Token& expect(Tok k, const std::string& what) {
        if (peek().kind != k)
            throw std::invalid_argument("parse error at position " + std::to_string(peek().pos) +
                                        ": expected " + what);
        return tokens_[pos_++];
    }

    bool at_term_boundary(size_t ahead) const {
        Tok k = peek(ahead).kind;
        return k == Tok::Plus || k == Tok::Minus || k == Tok::End;
    }

    Element parse_term() {
        Scalar coeff(1);
        bool divide = false;
        for (;;) {
            if (peek().kind == Tok::WordTok) {
                Word w = Word::from_string(tokens_[pos_++].text);
                return Element::of_word(w, coeff);
            }
            if (peek().kind == Tok::IntTok && peek().text == "1" && at_term_boundary(1)) {
                ++pos_;  // a bare 1 in word position is the empty word
                return Element::of_word(Word(), coeff);
            }
            if (peek().kind == Tok::End)
                throw std::invalid_argument("parse error at position " + std::to_string(peek().pos) +
                                            ": expected a word to end the term");
            Scalar f = parse_scalar_factor();
            coeff = divide ? coeff / f : coeff * f;
            if (accept(Tok::Star)) {
                divide = false;
            } else if (accept(Tok::Slash)) {
                divide = true;
            } else {
                divide = false;  // implicit multiplication before the word
            }
        }
    }

    Scalar parse_scalar_expr() {
        int sign = accept(Tok::Minus) ? -1 : 1;
        Scalar v = parse_scalar_product();
        if (sign < 0) v = -v;
        for (;;) {
            if (accept(Tok::Plus)) {
                v += parse_scalar_product();
            } else if (accept(Tok::Minus)) {
                v -= parse_scalar_product();
            } else {
                return v;
            }
        }
    }

    Scalar parse_scalar_product() {
        Scalar v = parse_scalar_factor();
        for (;;) {
            if (accept(Tok::Star)) {
                v *= parse_scalar_factor();
            } else if (accept(Tok::Slash)) {
                v /= parse_scalar_factor();
            } else {
                return v;
            }
        }
    }

    Scalar parse_scalar_factor() {
        int sign = accept(Tok::Minus) ? -1 : 1;
        Scalar v = parse_scalar_atom();
        if (accept(Tok::Caret)) {
            int esign = accept(Tok::Minus) ? -1 : 1;
            const Token& t = expect(Tok::IntTok, "integer exponent");
            v = v.pow(esign * std::stoi(t.text));
        }
        return sign < 0 ? -v : v;
    }

    Scalar parse_scalar_atom() {
        if (peek().kind == Tok::IntTok) {
            return Scalar(Int(tokens_[pos_++].text));
        }
        if (accept(Tok::Q)) return Scalar::q_power(1);
        if (accept(Tok::LBracket)) {
            const Token& t = expect(Tok::IntTok, "q-integer index");
            expect(Tok::RBracket, "']'");
            expect(Tok::Underscore, "'_q' suffix");
            expect(Tok::Q, "'_q' suffix");
            return q_int(std::stoi(t.text));
        }
        if (accept(Tok::LParen)) {
            Scalar v = parse_scalar_expr();
            expect(Tok::RParen, "')'");
            return v;
        }
        throw std::invalid_argument("parse error at position " + std::to_string(peek().pos) +
                                    ": expected a scalar atom");
    }

    std::string_view text_;
    std::vector<Token> tokens_;
    size_t pos_ = 0;
};

inline Element parse_element(std::string_view text) { return ElementParser(text).parse(); }

inline Scalar parse_scalar(std::string_view text) {
    Element e = ElementParser("(" + std::string(text) + ") * 1").parse();
    return e.coeff(Word());
}

}  // namespace qshuffle
