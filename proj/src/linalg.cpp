#include "groupdim/linalg.hpp"

#include <algorithm>
#include <utility>

#include "groupdim/errors.hpp"

namespace groupdim {

namespace {

Rational inv_of(const Rational& x) { return Rational(1) / x; }
RealElement inv_of(const RealElement& x) { return x.inverse(); }

// Row echelon form in place; returns the pivot column indices in order.
template <typename T>
std::vector<std::size_t> echelonize(Matrix<T>& M) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < M.cols() && r < M.rows(); ++c) {
        std::size_t p = r;
        while (p < M.rows() && M(p, c).is_zero()) ++p;
        if (p == M.rows()) continue;
        if (p != r)
            for (std::size_t j = c; j < M.cols(); ++j) std::swap(M(p, j), M(r, j));
        T inv = inv_of(M(r, c));
        for (std::size_t j = c; j < M.cols(); ++j) M(r, j) = M(r, j) * inv;
        for (std::size_t i = 0; i < M.rows(); ++i) {
            if (i == r || M(i, c).is_zero()) continue;
            T f = M(i, c);
            for (std::size_t j = c; j < M.cols(); ++j) M(i, j) = M(i, j) - f * M(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <typename T>
std::optional<std::vector<T>> solve_impl(const Matrix<T>& A, const std::vector<T>& b) {
    if (A.rows() != b.size()) throw InternalInvariantViolation("solve: rhs length mismatch");
    Matrix<T> aug(A.rows(), A.cols() + 1);
    for (std::size_t i = 0; i < A.rows(); ++i) {
        for (std::size_t j = 0; j < A.cols(); ++j) aug(i, j) = A(i, j);
        aug(i, A.cols()) = b[i];
    }
    std::vector<std::size_t> pivots = echelonize(aug);
    if (!pivots.empty() && pivots.back() == A.cols()) return std::nullopt;  // pivot in rhs

    std::vector<T> x(A.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, A.cols());

    // Reduced echelon form makes substitution direct; verify anyway.
    for (std::size_t i = 0; i < A.rows(); ++i) {
        T acc;
        for (std::size_t j = 0; j < A.cols(); ++j) acc += A(i, j) * x[j];
        if (!(acc - b[i]).is_zero())
            throw InternalInvariantViolation("solve: back-substitution residual is nonzero");
    }
    return x;
}

template <typename T>
std::vector<std::vector<T>> nullspace_impl(const Matrix<T>& A) {
    Matrix<T> M = A;
    std::vector<std::size_t> pivots = echelonize(M);
    std::vector<bool> is_pivot(A.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<std::vector<T>> basis;
    for (std::size_t f = 0; f < A.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<T> v(A.cols());
        v[f] = T(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -M(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace

std::size_t rank_field(const MatrixF& M) {
    MatrixF copy = M;
    return echelonize(copy).size();
}

std::size_t rank_rational(const MatrixQ& M) {
    MatrixQ copy = M;
    return echelonize(copy).size();
}

std::size_t rank_int(const MatrixZ& M) {
    MatrixZ A = M;
    Int prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < A.cols() && r < A.rows(); ++c) {
        std::size_t p = r;
        while (p < A.rows() && A(p, c) == 0) ++p;
        if (p == A.rows()) continue;
        if (p != r)
            for (std::size_t j = c; j < A.cols(); ++j) std::swap(A(p, j), A(r, j));
        for (std::size_t i = r + 1; i < A.rows(); ++i) {
            for (std::size_t j = c + 1; j < A.cols(); ++j)
                A(i, j) = (A(r, c) * A(i, j) - A(i, c) * A(r, j)) / prev;  // exact (Bareiss)
            A(i, c) = 0;
        }
        prev = A(r, c);
        ++r;
    }
    return r;
}

std::optional<std::vector<RealElement>> solve_field(const MatrixF& A,
                                                    const std::vector<RealElement>& b) {
    return solve_impl(A, b);
}

std::optional<std::vector<Rational>> solve_rational(const MatrixQ& A,
                                                    const std::vector<Rational>& b) {
    return solve_impl(A, b);
}

std::vector<std::size_t> select_basis_columns(const MatrixF& M) {
    MatrixF copy = M;
    return echelonize(copy);
}

std::vector<std::size_t> select_basis_columns_q(const MatrixQ& M) {
    MatrixQ copy = M;
    return echelonize(copy);
}

std::vector<std::vector<RealElement>> nullspace_field(const MatrixF& A) {
    return nullspace_impl(A);
}

namespace {

// Expresses `target` over the columns of `sel` (vectors[i] for i in selected),
// all vectors length `len`.
std::optional<std::vector<Rational>> express_over(
    const std::vector<std::vector<Rational>>& vectors, const std::vector<std::size_t>& selected,
    const std::vector<Rational>& target) {
    std::size_t len = target.size();
    MatrixQ A(len, selected.size());
    for (std::size_t j = 0; j < selected.size(); ++j)
        for (std::size_t i = 0; i < len; ++i) A(i, j) = vectors[selected[j]][i];
    return solve_rational(A, target);
}

}  // namespace

DependenceReport rational_dependence(const std::vector<std::vector<Rational>>& vectors) {
    DependenceReport rep;
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        auto expr = express_over(vectors, rep.independent, vectors[i]);
        if (expr) {
            rep.expressions.emplace(i, std::move(*expr));
        } else {
            rep.independent.push_back(i);
        }
    }
    // Expressions were found over a prefix of the final set; positions
    // selected later contribute with coefficient zero.
    for (auto& [pos, coeffs] : rep.expressions) coeffs.resize(rep.independent.size());
    return rep;
}

DependenceReport rational_dependence_forced(const std::vector<std::vector<Rational>>& vectors,
                                            const std::vector<std::size_t>& positions) {
    std::vector<std::size_t> chosen = positions;
    std::sort(chosen.begin(), chosen.end());
    if (std::adjacent_find(chosen.begin(), chosen.end()) != chosen.end())
        throw InvalidForcedI("duplicate position in forced independent set");
    for (std::size_t p : chosen)
        if (p >= vectors.size()) throw InvalidForcedI("forced position out of range");

    // Independence: each chosen vector must not be expressible over the earlier ones.
    std::vector<std::size_t> prefix;
    for (std::size_t p : chosen) {
        if (express_over(vectors, prefix, vectors[p]))
            throw InvalidForcedI("forced set is rationally dependent");
        prefix.push_back(p);
    }

    DependenceReport rep;
    rep.independent = chosen;
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (std::find(chosen.begin(), chosen.end(), i) != chosen.end()) continue;
        auto expr = express_over(vectors, chosen, vectors[i]);
        if (!expr) throw InvalidForcedI("forced set is not maximal");
        rep.expressions.emplace(i, std::move(*expr));
    }
    return rep;
}

}  // namespace groupdim
