#include "groupdim/lll.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <utility>

#include "groupdim/errors.hpp"

namespace groupdim {

namespace {

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

struct GramSchmidt {
    std::vector<std::vector<Rational>> star;  // orthogonal vectors b*_i
    std::vector<std::vector<Rational>> mu;    // mu[i][j], j < i
    std::vector<Rational> B;                  // |b*_i|^2

    void compute(const std::vector<std::vector<Rational>>& b) {
        std::size_t n = b.size();
        star.assign(n, {});
        mu.assign(n, std::vector<Rational>(n));
        B.assign(n, Rational());
        for (std::size_t i = 0; i < n; ++i) {
            star[i] = b[i];
            for (std::size_t j = 0; j < i; ++j) {
                mu[i][j] = dot(b[i], star[j]) / B[j];
                for (std::size_t t = 0; t < star[i].size(); ++t)
                    star[i][t] -= mu[i][j] * star[j][t];
            }
            B[i] = dot(star[i], star[i]);
            if (B[i].is_zero()) throw RankDeficient();
        }
    }
};

}  // namespace

LLLResult lll_reduce(const LatticeBasis& input, const Rational& delta) {
    if (!(delta > Rational(1, 4)) || delta > Rational(1))
        throw DomainError("LLL delta must lie in (1/4, 1]");
    const std::size_t n = input.vectors.size();

    LLLResult out;
    out.basis = input;
    out.transform = MatrixZ::identity(n);
    if (n <= 1) {
        if (n == 1 && dot(input.vectors[0], input.vectors[0]).is_zero()) throw RankDeficient();
        return out;
    }
    for (const auto& v : input.vectors)
        if (v.size() != input.vectors[0].size())
            throw InvalidInput("lattice basis vectors must share one length");

    auto& b = out.basis.vectors;
    MatrixZ& U = out.transform;
    GramSchmidt gs;
    gs.compute(b);

    // b_k -= round(mu[k][l]) * b_l; b* unchanged, mu row k updated exactly.
    auto red = [&](std::size_t k, std::size_t l) {
        Int q = gs.mu[k][l].round_nearest();
        if (q == 0) return;
        Rational qr(q);
        for (std::size_t t = 0; t < b[k].size(); ++t) b[k][t] -= qr * b[l][t];
        for (std::size_t i = 0; i < n; ++i) U(i, k) -= q * U(i, l);
        gs.mu[k][l] -= qr;
        for (std::size_t j = 0; j < l; ++j) gs.mu[k][j] -= qr * gs.mu[l][j];
    };

    std::size_t k = 1;
    while (k < n) {
        red(k, k - 1);
        if (gs.B[k] < (delta - gs.mu[k][k - 1] * gs.mu[k][k - 1]) * gs.B[k - 1]) {
            std::swap(b[k], b[k - 1]);
            U.swap_cols(k, k - 1);
            gs.compute(b);  // small dimensions; recompute keeps the state simple
            k = std::max<std::size_t>(k - 1, 1);
        } else {
            for (std::size_t l = k - 1; l-- > 0;) red(k, l);
            ++k;
        }
    }
    return out;
}

namespace {

Int pow10_int(int e) {
    Int r = 1;
    for (int i = 0; i < e; ++i) r *= 10;
    return r;
}

}  // namespace

RelationSearch find_integer_relation_detail(const std::vector<double>& xs, int scale_digits,
                                            const Int& max_coeff, const Rational& delta) {
    const std::size_t t = xs.size();
    if (t < 2) throw InvalidInput("relation search needs at least two values");
    if (scale_digits < 6) throw InvalidInput("relation search needs scale_digits >= 6");
    if (max_coeff < 1) throw InvalidInput("max_coeff must be >= 1");

    Int scale = pow10_int(scale_digits);
    std::vector<Int> X(t);
    for (std::size_t i = 0; i < t; ++i)
        X[i] = (Rational::from_double(xs[i]) * Rational(scale)).round_nearest();

    LatticeBasis lat;
    lat.vectors.assign(t, std::vector<Rational>(t + 1));
    for (std::size_t i = 0; i < t; ++i) {
        lat.vectors[i][i] = Rational(1);
        lat.vectors[i][t] = Rational(X[i]);
    }

    LLLResult red = lll_reduce(lat, delta);

    // Noise guard: approximations with |R| ~ ||c||_1 appear once coefficients
    // reach ~10^(s/t); stay one decade under that scale.
    double guard_f = std::pow(10.0, double(scale_digits - 1) / double(t));
    Int guard(static_cast<long long>(std::min(guard_f, 9e17)));
    Int cap = std::min(max_coeff, guard);

    RelationSearch out;
    bool have = false;
    Int best_norm2, best_absR;
    std::vector<Int> best_c;

    for (const auto& v : red.basis.vectors) {
        std::vector<Int> c(t);
        Int norm1 = 0, norm2 = 0, cinf = 0;
        for (std::size_t i = 0; i < t; ++i) {
            if (!v[i].is_integer())
                throw InternalInvariantViolation("relation lattice left integer coordinates");
            c[i] = v[i].num();
            norm1 += abs_int(c[i]);
            norm2 += c[i] * c[i];
            cinf = std::max(cinf, abs_int(c[i]));
        }
        if (norm1 == 0 || cinf > cap) continue;
        Int R = v[t].num();  // integer for the same reason
        Int absR = abs_int(R);

        double ratio = Rational(absR, norm1).to_double();
        if (!out.best_ratio || ratio < *out.best_ratio) out.best_ratio = ratio;

        if (4 * absR > 3 * norm1) continue;  // not within the rounding floor
        if (!have || norm2 < best_norm2 || (norm2 == best_norm2 && absR < best_absR)) {
            have = true;
            best_norm2 = norm2;
            best_absR = absR;
            best_c = std::move(c);
        }
    }

    if (have) {
        Int g = 0;
        for (const Int& ci : best_c) g = gcd_int(g, ci);
        for (Int& ci : best_c) ci /= g;
        for (const Int& ci : best_c) {
            if (ci == 0) continue;
            if (ci < 0)
                for (Int& cj : best_c) cj = -cj;
            break;
        }
        double acc = 0.0;
        for (std::size_t i = 0; i < t; ++i) acc += best_c[i].convert_to<double>() * xs[i];
        out.relation = RelationResult{std::move(best_c), std::fabs(acc)};
    }
    return out;
}

std::optional<RelationResult> find_integer_relation(const std::vector<double>& xs,
                                                    int scale_digits, const Int& max_coeff,
                                                    const Rational& delta) {
    return find_integer_relation_detail(xs, scale_digits, max_coeff, delta).relation;
}

}  // namespace groupdim
