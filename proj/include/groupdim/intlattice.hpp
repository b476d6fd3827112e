#pragma once

#include <cstddef>
#include <vector>

#include "groupdim/matrix.hpp"

namespace groupdim {

/// Column echelon form by unimodular column operations: A * U = H, det(U) = ±1,
/// each nonzero column of H introducing its pivot in a strictly lower row than
/// the previous one; zero columns (if any) are moved to the right.
struct ColumnReduction {
    MatrixZ H;
    MatrixZ U;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_rows;  // per nonzero column of H
};

ColumnReduction column_reduce(const MatrixZ& A);

/// Basis of the integer kernel {x in Z^cols : A x = 0}; empty when A has full
/// column rank.
std::vector<std::vector<Int>> integer_kernel_basis(const MatrixZ& A);

/// Basis (as columns) of the image lattice A * Z^cols.
std::vector<std::vector<Int>> lattice_image_basis(const MatrixZ& A);

/// Whether the columns of B generate all of Z^rows (not merely a finite-index
/// sublattice): full row rank and pivot product ±1 in the echelon form.
bool generates_full_lattice(const MatrixZ& B);

}  // namespace groupdim
