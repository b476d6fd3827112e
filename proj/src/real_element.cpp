#include "groupdim/real_element.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstddef>
#include <set>
#include <vector>

#include "groupdim/errors.hpp"

namespace groupdim {

std::pair<Int, Int> normalize_radicand(const Int& n) {
    if (n < 1) throw DomainError("radicand must be a positive integer, got " + n.str());
    Int rest = n;
    Int s = 1;
    Int m = 1;
    for (Int d = 2; d * d <= rest; d += (d == 2 ? 1 : 2)) {
        if (rest % d != 0) continue;
        int e = 0;
        while (rest % d == 0) {
            rest /= d;
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) s *= d;
        if (e % 2) m *= d;
    }
    m *= rest;  // leftover factor is prime
    return {s, m};
}

std::vector<Int> factor_squarefree(const Int& m) {
    std::vector<Int> primes;
    Int rest = m;
    for (Int d = 2; d * d <= rest; d += (d == 2 ? 1 : 2)) {
        if (rest % d == 0) {
            primes.push_back(d);
            rest /= d;
        }
    }
    if (rest > 1) primes.push_back(rest);
    return primes;
}

RealElement RealElement::surd(const Int& radicand, const Rational& coeff) {
    auto [s, m] = normalize_radicand(radicand);
    RealElement out;
    out.add_term(m, coeff * Rational(s));
    return out;
}

void RealElement::add_term(const Int& squarefree_radicand, const Rational& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.emplace(squarefree_radicand, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

RealElement RealElement::operator-() const {
    RealElement out;
    for (const auto& [rad, c] : terms_) out.terms_.emplace(rad, -c);
    return out;
}

RealElement RealElement::operator+(const RealElement& o) const {
    RealElement out = *this;
    for (const auto& [rad, c] : o.terms_) out.add_term(rad, c);
    return out;
}

RealElement RealElement::operator-(const RealElement& o) const {
    RealElement out = *this;
    for (const auto& [rad, c] : o.terms_) out.add_term(rad, -c);
    return out;
}

RealElement RealElement::operator*(const RealElement& o) const {
    // sqrt(a)*sqrt(b) = g*sqrt(a'b') with g = gcd(a,b); a'b' is squarefree
    // because a and b are.
    RealElement out;
    for (const auto& [ra, ca] : terms_) {
        for (const auto& [rb, cb] : o.terms_) {
            Int g = gcd_int(ra, rb);
            Int rad = (ra / g) * (rb / g);
            out.add_term(rad, ca * cb * Rational(g));
        }
    }
    return out;
}

namespace {

// Solves the square rational system M x = rhs by Gaussian elimination.
// Returns false when M is singular.
bool solve_local(std::vector<std::vector<Rational>> M, std::vector<Rational> rhs,
                 std::vector<Rational>& out) {
    const std::size_t n = M.size();
    std::vector<std::size_t> perm(n);
    for (std::size_t c = 0, r = 0; c < n && r < n; ++c, ++r) {
        std::size_t pivot = r;
        while (pivot < n && M[pivot][c].is_zero()) ++pivot;
        if (pivot == n) return false;
        std::swap(M[pivot], M[r]);
        std::swap(rhs[pivot], rhs[r]);
        Rational inv = Rational(1) / M[r][c];
        for (std::size_t j = c; j < n; ++j) M[r][j] *= inv;
        rhs[r] *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == r || M[i][c].is_zero()) continue;
            Rational f = M[i][c];
            for (std::size_t j = c; j < n; ++j) M[i][j] -= f * M[r][j];
            rhs[i] -= f * rhs[r];
        }
    }
    out = rhs;
    return true;
}

}  // namespace

RealElement RealElement::inverse() const {
    if (terms_.empty()) throw DivisionByZero("inverse of zero");

    if (terms_.size() == 1) {
        // (c*sqrt(m))^-1 = sqrt(m)/(c*m)
        const auto& [m, c] = *terms_.begin();
        return surd(m, Rational(1) / (c * Rational(m)));
    }

    std::set<Int> prime_set;
    for (const auto& [rad, c] : terms_) {
        for (const auto& p : factor_squarefree(rad)) prime_set.insert(p);
    }
    std::vector<Int> primes(prime_set.begin(), prime_set.end());
    const std::size_t k = primes.size();
    const std::size_t dim = std::size_t(1) << k;

    std::vector<Int> basis(dim);
    std::map<Int, std::size_t> index;
    for (std::size_t mask = 0; mask < dim; ++mask) {
        Int rad = 1;
        for (std::size_t b = 0; b < k; ++b) {
            if (mask & (std::size_t(1) << b)) rad *= primes[b];
        }
        basis[mask] = rad;
        index[rad] = mask;
    }

    // Column j of M holds the coordinates of a*sqrt(basis[j]).
    std::vector<std::vector<Rational>> M(dim, std::vector<Rational>(dim));
    for (std::size_t j = 0; j < dim; ++j) {
        RealElement prod = *this * surd(basis[j]);
        for (const auto& [rad, c] : prod.terms_) M[index.at(rad)][j] = c;
    }

    std::vector<Rational> rhs(dim);
    rhs[index.at(Int(1))] = Rational(1);
    std::vector<Rational> x;
    if (!solve_local(std::move(M), std::move(rhs), x)) {
        throw InternalInvariantViolation("multiplication by a nonzero element must be invertible");
    }

    RealElement out;
    for (std::size_t j = 0; j < dim; ++j) out.add_term(basis[j], x[j]);
    return out;
}

namespace {

Int pow10(int e) {
    Int r = 1;
    for (int i = 0; i < e; ++i) r *= 10;
    return r;
}

}  // namespace

DecimalApprox RealElement::eval(int digits) const {
    if (digits < 1) throw DomainError("eval requires digits >= 1");
    if (terms_.empty()) return {Rational(), digits};

    // Bound the total coefficient mass to size the guard precision.
    Int mass = 1;
    for (const auto& [rad, c] : terms_) mass += abs_int(c.num()) / c.den() + 1;
    int guard = digits + static_cast<int>(mass.str().size()) + 4;

    Int scale = pow10(guard);
    Rational sum;
    for (const auto& [rad, c] : terms_) {
        if (rad == 1) {
            sum += c;
        } else {
            // floor(sqrt(rad * 10^(2g)))/10^g approximates sqrt(rad) within 10^-g.
            Int scaled_rad = rad * scale * scale;
            Int root = boost::multiprecision::sqrt(scaled_rad);
            sum += c * Rational(root, scale);
        }
    }

    Int grid = pow10(digits);
    Rational value((sum * Rational(grid)).round_nearest(), grid);
    return {value, digits};
}

double RealElement::to_double() const {
    double acc = 0.0;
    for (const auto& [rad, c] : terms_) {
        double term = c.to_double();
        if (rad != 1) term *= std::sqrt(rad.convert_to<double>());
        acc += term;
    }
    return acc;
}

std::string DecimalApprox::str() const {
    Int grid = pow10(digits);
    Int scaled = value.num() * (grid / value.den());  // exact: den divides 10^digits
    bool neg = scaled < 0;
    Int mag = abs_int(scaled);
    Int ip = mag / grid;
    Int fp = mag % grid;
    std::string frac = fp.str();
    frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
    return (neg ? "-" : "") + ip.str() + "." + frac;
}

}  // namespace groupdim
