#include "groupdim/intlattice.hpp"

#include <tuple>
#include <utility>

#include "groupdim/errors.hpp"

namespace groupdim {

namespace {

// g = gcd(a, b) >= 0 with x*a + y*b = g.
std::tuple<Int, Int, Int> xgcd(Int a, Int b) {
    Int x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
        Int q = a / b;  // truncated; consistency with the updates is all that matters
        a -= q * b;
        std::swap(a, b);
        x0 -= q * x1;
        std::swap(x0, x1);
        y0 -= q * y1;
        std::swap(y0, y1);
    }
    if (a < 0) {
        a = -a;
        x0 = -x0;
        y0 = -y0;
    }
    return {a, x0, y0};
}

// Columns a and b of both H and U get the unimodular 2x2 mix that zeroes
// H(row, b) and leaves gcd at H(row, a).
void mix_columns(MatrixZ& H, MatrixZ& U, std::size_t row, std::size_t a, std::size_t b) {
    Int pa = H(row, a), pb = H(row, b);
    if (pb == 0) return;
    auto [g, x, y] = xgcd(pa, pb);
    Int ua = pa / g, ub = pb / g;  // x*ua + y*ub = 1
    for (MatrixZ* M : {&H, &U}) {
        for (std::size_t i = 0; i < M->rows(); ++i) {
            Int va = (*M)(i, a), vb = (*M)(i, b);
            (*M)(i, a) = x * va + y * vb;
            (*M)(i, b) = ua * vb - ub * va;
        }
    }
}

}  // namespace

ColumnReduction column_reduce(const MatrixZ& A) {
    ColumnReduction out;
    out.H = A;
    out.U = MatrixZ::identity(A.cols());

    std::size_t c = 0;
    for (std::size_t row = 0; row < A.rows() && c < A.cols(); ++row) {
        std::size_t p = c;
        while (p < A.cols() && out.H(row, p) == 0) ++p;
        if (p == A.cols()) continue;
        out.H.swap_cols(c, p);
        out.U.swap_cols(c, p);
        for (std::size_t j = c + 1; j < A.cols(); ++j) mix_columns(out.H, out.U, row, c, j);
        if (out.H(row, c) < 0) {  // sign normalization keeps det(U) = +-1
            for (std::size_t i = 0; i < A.rows(); ++i) out.H(i, c) = -out.H(i, c);
            for (std::size_t i = 0; i < A.cols(); ++i) out.U(i, c) = -out.U(i, c);
        }
        out.pivot_rows.push_back(row);
        ++c;
    }
    out.rank = c;
    return out;
}

std::vector<std::vector<Int>> integer_kernel_basis(const MatrixZ& A) {
    ColumnReduction red = column_reduce(A);
    std::vector<std::vector<Int>> basis;
    for (std::size_t j = red.rank; j < A.cols(); ++j) basis.push_back(red.U.col(j));
    return basis;
}

std::vector<std::vector<Int>> lattice_image_basis(const MatrixZ& A) {
    ColumnReduction red = column_reduce(A);
    std::vector<std::vector<Int>> basis;
    for (std::size_t j = 0; j < red.rank; ++j) basis.push_back(red.H.col(j));
    return basis;
}

bool generates_full_lattice(const MatrixZ& B) {
    ColumnReduction red = column_reduce(B);
    if (red.rank != B.rows()) return false;
    Int prod = 1;
    for (std::size_t j = 0; j < red.rank; ++j) prod *= red.H(red.pivot_rows[j], j);
    return prod == 1 || prod == -1;
}

}  // namespace groupdim
