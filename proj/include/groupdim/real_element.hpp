#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "groupdim/rational.hpp"

namespace groupdim {

/// Splits n >= 1 into n = s^2 * m with m squarefree, so sqrt(n) = s*sqrt(m).
std::pair<Int, Int> normalize_radicand(const Int& n);

/// Prime factors of a squarefree positive integer, ascending. factor(1) = {}.
std::vector<Int> factor_squarefree(const Int& m);

/// Decimal approximation of a RealElement: value = k/10^digits with
/// |value - x| < 10^-digits.
struct DecimalApprox {
    Rational value;
    int digits = 0;

    double to_double() const { return value.to_double(); }
    std::string str() const;
};

/// An exact real number in the multi-quadratic field: a finite Q-linear
/// combination of square roots of squarefree positive integers. The radicand 1
/// carries the rational part; the empty combination is 0.
///
/// Exact zero testing rests on the classical fact that square roots of
/// distinct squarefree integers are linearly independent over Q (assumed, not
/// re-proven here).
class RealElement {
public:
    RealElement() = default;
    RealElement(int n) : RealElement(Rational(n)) {}    // NOLINT: implicit by design
    RealElement(Int n) : RealElement(Rational(std::move(n))) {}  // NOLINT
    RealElement(Rational r) {                           // NOLINT
        if (!r.is_zero()) terms_.emplace(Int(1), std::move(r));
    }

    /// coeff * sqrt(radicand); the radicand is normalized, so sqrt(8) stores 2*sqrt(2).
    static RealElement surd(const Int& radicand, const Rational& coeff = Rational(1));

    const std::map<Int, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
    }

    /// Rational part (coefficient of radicand 1).
    Rational rational_part() const {
        auto it = terms_.find(Int(1));
        return it == terms_.end() ? Rational() : it->second;
    }

    RealElement operator-() const;
    RealElement operator+(const RealElement& o) const;
    RealElement operator-(const RealElement& o) const;
    RealElement operator*(const RealElement& o) const;
    RealElement& operator+=(const RealElement& o) { return *this = *this + o; }
    RealElement& operator-=(const RealElement& o) { return *this = *this - o; }
    RealElement& operator*=(const RealElement& o) { return *this = *this * o; }

    bool operator==(const RealElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const RealElement& o) const { return !(*this == o); }

    /// Exact multiplicative inverse, found by solving a*x = 1 as a rational
    /// linear system over the subalgebra spanned by the squarefree products of
    /// the primes in this element's support (dimension 2^|P|).
    RealElement inverse() const;

    DecimalApprox eval(int digits) const;

    /// Fast approximation (~1e-15 relative error); for exact bounds use eval().
    double to_double() const;

    friend RealElement operator*(const Rational& c, const RealElement& a) {
        return RealElement(c) * a;
    }
    friend RealElement operator*(const Int& c, const RealElement& a) {
        return RealElement(Rational(c)) * a;
    }

private:
    void add_term(const Int& squarefree_radicand, const Rational& coeff);

    std::map<Int, Rational> terms_;  // squarefree radicand -> nonzero coefficient
};

}  // namespace groupdim
