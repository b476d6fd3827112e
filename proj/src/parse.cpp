#include "groupdim/parse.hpp"

#include <cctype>
#include <cmath>
#include <memory>
#include <string>
#include <utility>

#include "groupdim/errors.hpp"

namespace groupdim {

namespace {

struct Expr {
    enum class Kind { Rat, Dec, Sqrt, Add, Sub, Mul, Neg };
    Kind kind;
    Rational rat;                    // Rat
    double dec = 0.0;                // Dec
    Int radicand;                    // Sqrt
    std::unique_ptr<Expr> lhs, rhs;  // Add/Sub/Mul; Neg uses lhs only
};

using ExprPtr = std::unique_ptr<Expr>;

class Parser {
public:
    Parser(const std::string& text, bool allow_decimal)
        : s_(text), allow_decimal_(allow_decimal) {}

    ExprPtr run() {
        ExprPtr e = expr();
        skip_ws();
        if (pos_ != s_.size()) throw SyntaxError(pos_, "operator or end of input");
        return e;
    }

private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    bool eat(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    void expect(char c, const char* what) {
        if (!eat(c)) throw SyntaxError(pos_, what);
    }

    ExprPtr expr() {
        ExprPtr e = term();
        while (true) {
            char op = peek();
            if (op != '+' && op != '-') break;
            ++pos_;
            auto node = std::make_unique<Expr>();
            node->kind = op == '+' ? Expr::Kind::Add : Expr::Kind::Sub;
            node->lhs = std::move(e);
            node->rhs = term();
            e = std::move(node);
        }
        return e;
    }

    ExprPtr term() {
        ExprPtr e = factor();
        while (eat('*')) {
            auto node = std::make_unique<Expr>();
            node->kind = Expr::Kind::Mul;
            node->lhs = std::move(e);
            node->rhs = factor();
            e = std::move(node);
        }
        return e;
    }

    ExprPtr factor() {
        char c = peek();
        if (c == '-') {
            ++pos_;
            auto node = std::make_unique<Expr>();
            node->kind = Expr::Kind::Neg;
            node->lhs = factor();
            return node;
        }
        if (c == '(') {
            ++pos_;
            ExprPtr e = expr();
            expect(')', "')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return number();
        if (std::isalpha(static_cast<unsigned char>(c))) return sqrt_call();
        throw SyntaxError(pos_, "number, sqrt(...), '(' or '-'");
    }

    ExprPtr sqrt_call() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (s_.compare(start, pos_ - start, "sqrt") != 0)
            throw SyntaxError(start, "the keyword 'sqrt'");
        expect('(', "'('");
        skip_ws();
        bool neg = eat('-');
        std::size_t arg_pos = pos_;
        Int n = digits("a positive integer");
        if (neg || n == 0)
            throw DomainError("sqrt argument at position " + std::to_string(arg_pos) +
                              " must be a positive integer");
        expect(')', "')'");
        auto node = std::make_unique<Expr>();
        node->kind = Expr::Kind::Sqrt;
        node->radicand = std::move(n);
        return node;
    }

    ExprPtr number() {
        skip_ws();
        std::size_t start = pos_;
        Int ip = digits("a digit");
        if (allow_decimal_ && pos_ < s_.size() && s_[pos_] == '.') {
            ++pos_;
            digits("fractional digits");
            auto node = std::make_unique<Expr>();
            node->kind = Expr::Kind::Dec;
            node->dec = std::stod(s_.substr(start, pos_ - start));
            return node;
        }
        auto node = std::make_unique<Expr>();
        node->kind = Expr::Kind::Rat;
        if (eat('/')) {
            skip_ws();
            std::size_t den_pos = pos_;
            Int den = digits("a positive integer denominator");
            if (den == 0)
                throw DivisionByZero("zero denominator at position " + std::to_string(den_pos));
            node->rat = Rational(std::move(ip), std::move(den));
        } else {
            node->rat = Rational(std::move(ip));
        }
        return node;
    }

    Int digits(const char* what) {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) throw SyntaxError(pos_, what);
        return Int(s_.substr(start, pos_ - start));
    }

    const std::string& s_;
    std::size_t pos_ = 0;
    bool allow_decimal_;
};

RealElement eval_exact(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Rat:
            return RealElement(e.rat);
        case Expr::Kind::Sqrt:
            return RealElement::surd(e.radicand);
        case Expr::Kind::Add:
            return eval_exact(*e.lhs) + eval_exact(*e.rhs);
        case Expr::Kind::Sub:
            return eval_exact(*e.lhs) - eval_exact(*e.rhs);
        case Expr::Kind::Mul:
            return eval_exact(*e.lhs) * eval_exact(*e.rhs);
        case Expr::Kind::Neg:
            return -eval_exact(*e.lhs);
        case Expr::Kind::Dec:
            break;
    }
    throw InternalInvariantViolation("decimal literal in exact evaluation");
}

double eval_dbl(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Rat:
            return e.rat.to_double();
        case Expr::Kind::Dec:
            return e.dec;
        case Expr::Kind::Sqrt:
            return std::sqrt(e.radicand.convert_to<double>());
        case Expr::Kind::Add:
            return eval_dbl(*e.lhs) + eval_dbl(*e.rhs);
        case Expr::Kind::Sub:
            return eval_dbl(*e.lhs) - eval_dbl(*e.rhs);
        case Expr::Kind::Mul:
            return eval_dbl(*e.lhs) * eval_dbl(*e.rhs);
        case Expr::Kind::Neg:
            return -eval_dbl(*e.lhs);
    }
    throw InternalInvariantViolation("unreachable expression kind");
}

}  // namespace

RealElement parse_real(const std::string& text) {
    Parser p(text, /*allow_decimal=*/false);
    return eval_exact(*p.run());
}

double parse_double(const std::string& text) {
    Parser p(text, /*allow_decimal=*/true);
    return eval_dbl(*p.run());
}

std::string render(const RealElement& a) {
    if (a.is_zero()) return "0";
    std::string out;
    for (const auto& [rad, c] : a.terms()) {
        bool neg = c.sign() < 0;
        Rational mag = c.abs();
        std::string piece;
        if (rad == 1) {
            piece = mag.str();
        } else if (mag == Rational(1)) {
            piece = "sqrt(" + rad.str() + ")";
        } else {
            piece = mag.str() + "*sqrt(" + rad.str() + ")";
        }
        if (out.empty()) {
            out = neg ? "-" + piece : piece;
        } else {
            out += (neg ? " - " : " + ") + piece;
        }
    }
    return out;
}

}  // namespace groupdim
