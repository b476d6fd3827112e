#include "groupdim/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <utility>

#include "groupdim/errors.hpp"
#include "groupdim/linalg.hpp"

namespace groupdim {

NumericDependence numeric_rational_structure(const std::vector<double>& alpha,
                                             const NumericOptions& opts) {
    NumericDependence out;
    std::vector<double> values{1.0};
    values.insert(values.end(), alpha.begin(), alpha.end());

    std::vector<std::size_t> indep{0};  // value positions; 0 is the constant 1
    for (std::size_t p = 1; p < values.size(); ++p) {
        std::vector<double> vals;
        for (std::size_t ip : indep) vals.push_back(values[ip]);
        vals.push_back(values[p]);

        RelationSearch rs =
            find_integer_relation_detail(vals, opts.scale_digits, opts.max_coeff, opts.lll_delta);
        if (rs.relation) {
            const std::vector<Int>& c = rs.relation->coefficients;
            const Int& pivot = c.back();
            if (pivot == 0)
                throw PrecisionExhausted(
                    "relation found among values already accepted as independent");
            std::size_t i = p - 1;
            for (std::size_t idx = 0; idx < indep.size(); ++idx) {
                if (c[idx] == 0) continue;
                Rational coeff(-c[idx], pivot);
                if (indep[idx] == 0)
                    out.t[i] = coeff;
                else
                    out.gamma[i][indep[idx] - 1] = coeff;
            }
        } else {
            // A candidate just outside the acceptance floor makes the
            // independence verdict unsafe.
            if (rs.best_ratio && *rs.best_ratio <= 1.0)
                throw PrecisionExhausted(
                    "cannot certify independence: near-miss relation candidate at this scale");
            out.I.push_back(p - 1);
            indep.push_back(p);
        }
    }
    return out;
}

namespace {

// Greedy left-to-right independent columns of an n x m double matrix, mirror
// of the exact selection; Gram-Schmidt residual against a relative threshold.
std::vector<std::size_t> float_basis_columns(std::size_t n,
                                             const std::vector<std::vector<double>>& gens,
                                             double threshold) {
    double scale = 1.0;
    for (const auto& g : gens)
        for (double x : g) scale = std::max(scale, std::fabs(x));

    std::vector<std::vector<double>> ortho;
    std::vector<std::size_t> basis;
    for (std::size_t k = 0; k < gens.size(); ++k) {
        std::vector<double> r = gens[k];
        for (const auto& q : ortho) {
            double d = 0;
            for (std::size_t i = 0; i < n; ++i) d += r[i] * q[i];
            for (std::size_t i = 0; i < n; ++i) r[i] -= d * q[i];
        }
        double norm = 0;
        for (double x : r) norm = std::max(norm, std::fabs(x));
        if (norm <= threshold * scale) continue;
        double len = 0;
        for (double x : r) len += x * x;
        len = std::sqrt(len);
        for (double& x : r) x /= len;
        ortho.push_back(std::move(r));
        basis.push_back(k);
    }
    return basis;
}

// Least-squares coordinates of g over the basis columns via normal equations;
// the residual must vanish up to noise (g lies in the span by construction).
std::vector<double> float_coords(std::size_t n, const std::vector<std::vector<double>>& basis_cols,
                                 const std::vector<double>& g, double threshold) {
    const std::size_t q = basis_cols.size();
    std::vector<std::vector<double>> M(q, std::vector<double>(q + 1));
    for (std::size_t a = 0; a < q; ++a) {
        for (std::size_t b = 0; b < q; ++b)
            for (std::size_t i = 0; i < n; ++i) M[a][b] += basis_cols[a][i] * basis_cols[b][i];
        for (std::size_t i = 0; i < n; ++i) M[a][q] += basis_cols[a][i] * g[i];
    }
    for (std::size_t c = 0; c < q; ++c) {  // partial pivoting
        std::size_t p = c;
        for (std::size_t i = c + 1; i < q; ++i)
            if (std::fabs(M[i][c]) > std::fabs(M[p][c])) p = i;
        std::swap(M[p], M[c]);
        if (M[c][c] == 0.0) throw PrecisionExhausted("float basis is numerically singular");
        for (std::size_t i = 0; i < q; ++i) {
            if (i == c) continue;
            double f = M[i][c] / M[c][c];
            for (std::size_t j = c; j <= q; ++j) M[i][j] -= f * M[c][j];
        }
    }
    std::vector<double> x(q);
    for (std::size_t c = 0; c < q; ++c) x[c] = M[c][q] / M[c][c];

    double scale = 1.0, resid = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double acc = -g[i];
        for (std::size_t c = 0; c < q; ++c) acc += basis_cols[c][i] * x[c];
        resid = std::max(resid, std::fabs(acc));
        scale = std::max(scale, std::fabs(g[i]));
    }
    if (resid > 1e6 * threshold * scale)
        throw PrecisionExhausted("generator does not lie in the numeric span of the basis");
    return x;
}

}  // namespace

MHReport build_mh_float(std::size_t n, const std::vector<std::vector<double>>& generators,
                        const NumericOptions& opts) {
    if (n == 0) throw InvalidInput("ambient dimension must be positive");
    if (generators.empty()) throw InvalidInput("generator list must be nonempty");
    for (const auto& g : generators)
        if (g.size() != n) throw InvalidInput("generator length must equal the ambient dimension");

    MHReport rep;
    rep.heuristic = true;
    rep.span.basis_indices = float_basis_columns(n, generators, opts.rank_threshold);
    rep.span.q = rep.span.basis_indices.size();
    const std::size_t q = rep.span.q;

    std::vector<std::vector<double>> basis_cols;
    for (std::size_t b : rep.span.basis_indices) basis_cols.push_back(generators[b]);

    std::vector<std::vector<double>> coords(generators.size());
    std::set<std::size_t> basis(rep.span.basis_indices.begin(), rep.span.basis_indices.end());
    rep.span.coords.resize(generators.size());
    for (std::size_t k = 0; k < generators.size(); ++k) {
        auto pos = std::find(rep.span.basis_indices.begin(), rep.span.basis_indices.end(), k);
        if (pos != rep.span.basis_indices.end()) {
            coords[k].assign(q, 0.0);
            coords[k][std::size_t(pos - rep.span.basis_indices.begin())] = 1.0;
        } else {
            coords[k] = float_coords(n, basis_cols, generators[k], opts.rank_threshold);
        }
        std::vector<RealElement> trace;
        for (double x : coords[k]) trace.emplace_back(Rational::from_double(x));
        rep.span.coords[k] = std::move(trace);
    }

    for (std::size_t k = 0; k < generators.size(); ++k) {
        if (basis.count(k)) continue;
        NumericDependence dep = numeric_rational_structure(coords[k], opts);
        rep.per_gen.push_back(assemble_mh_generator(k, q, dep.I, dep.t, dep.gamma));
    }

    std::vector<std::vector<Int>> columns;
    for (const auto& g : rep.per_gen)
        for (const auto& col : g.u_prime) columns.push_back(col);
    rep.MH = MatrixZ::from_columns(q, columns);
    rep.rank = rank_int(rep.MH);
    return rep;
}

}  // namespace groupdim
