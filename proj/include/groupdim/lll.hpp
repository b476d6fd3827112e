#pragma once

#include <optional>
#include <vector>

#include "groupdim/matrix.hpp"

namespace groupdim {

/// Independent lattice basis vectors with rational coordinates.
struct LatticeBasis {
    std::vector<std::vector<Rational>> vectors;
};

struct LLLResult {
    LatticeBasis basis;
    /// out.vectors[j] = sum_i transform(i, j) * in.vectors[i]; det = +-1.
    MatrixZ transform;
};

/// Exact-arithmetic LLL reduction (Gram-Schmidt data kept as rationals).
/// The output spans the same lattice, is size-reduced (|mu_{k,l}| <= 1/2) and
/// satisfies the Lovasz condition with parameter delta in (1/4, 1].
/// Throws RankDeficient when the input vectors are dependent.
LLLResult lll_reduce(const LatticeBasis& B, const Rational& delta = Rational(99, 100));

struct RelationResult {
    std::vector<Int> coefficients;  // primitive; first nonzero entry positive
    double residual = 0.0;          // |sum_i coefficients[i] * xs[i]|
};

/// Detail of a relation search: the relation (if certified) plus how close the
/// best in-cap candidate came to certification (min |R| / ||c||_1, where R is
/// the scaled residual). The ratio distinguishes a clean miss from a near miss.
struct RelationSearch {
    std::optional<RelationResult> relation;
    std::optional<double> best_ratio;
};

/// Integer-relation detection for xs (|xs| >= 2) at scale s >= 6 digits:
/// reduces the lattice spanned by e_i + round(10^s x_i) e_t and accepts the
/// best vector whose trailing entry R certifies a relation. Certification:
/// 4|R| <= 3 ||c||_1 (inside the floor set by rounding the X_i), with
/// ||c||_inf <= min(max_coeff, 10^((s-1)/t)) to stay clear of the
/// approximation noise floor. A certified relation guarantees
/// |sum c_i x_i| <= 1.25 * ||c||_1 * 10^-s.
RelationSearch find_integer_relation_detail(const std::vector<double>& xs, int scale_digits,
                                            const Int& max_coeff,
                                            const Rational& delta = Rational(99, 100));

std::optional<RelationResult> find_integer_relation(const std::vector<double>& xs,
                                                    int scale_digits, const Int& max_coeff,
                                                    const Rational& delta = Rational(99, 100));

}  // namespace groupdim
