#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "groupdim/matrix.hpp"

namespace groupdim {

/// Rank of a matrix with exact surd entries, as a real matrix. Gaussian
/// elimination with exact zero tests; pivot = first nonzero in scan order.
std::size_t rank_field(const MatrixF& M);

/// Rank of a rational matrix (same elimination, cheaper scalars).
std::size_t rank_rational(const MatrixQ& M);

/// Rank of an integer matrix over Q, by fraction-free (Bareiss) elimination.
std::size_t rank_int(const MatrixZ& M);

/// Exact solution of A x = b, or nullopt when b is outside the column space.
/// Free variables are set to zero; the result is verified by substitution.
std::optional<std::vector<RealElement>> solve_field(const MatrixF& A,
                                                    const std::vector<RealElement>& b);
std::optional<std::vector<Rational>> solve_rational(const MatrixQ& A,
                                                    const std::vector<Rational>& b);

/// Greedy left-to-right maximal independent column set (the lexicographically
/// first basis of the column space). Size equals the rank.
std::vector<std::size_t> select_basis_columns(const MatrixF& M);
std::vector<std::size_t> select_basis_columns_q(const MatrixQ& M);

/// Basis of the null space of A (vectors x with A x = 0), one vector per free
/// column of the reduced form; empty when A has full column rank.
std::vector<std::vector<RealElement>> nullspace_field(const MatrixF& A);

/// Result of rational-dependence analysis over a list of Q-coefficient
/// vectors: a maximal independent subset plus, for each dependent position,
/// the exact coefficients expressing it over the independent ones.
struct DependenceReport {
    std::vector<std::size_t> independent;  // ascending positions
    // dependent position -> coefficients, aligned with `independent`
    std::map<std::size_t, std::vector<Rational>> expressions;
};

/// Greedy left-to-right maximal Q-independent subset. Zero vectors are never
/// selected (their expression is all-zero coefficients).
DependenceReport rational_dependence(const std::vector<std::vector<Rational>>& vectors);

/// Same report for a caller-chosen independent set; throws InvalidForcedI
/// unless the chosen positions are independent and maximal.
DependenceReport rational_dependence_forced(const std::vector<std::vector<Rational>>& vectors,
                                            const std::vector<std::size_t>& positions);

}  // namespace groupdim
