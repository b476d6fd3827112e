#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "groupdim/group.hpp"
#include "groupdim/matrix.hpp"

namespace groupdim {

/// Generators re-expressed over a greedily chosen generator basis of vect(H).
struct SpanReduction {
    std::vector<std::size_t> basis_indices;        // ascending generator indices, size q
    std::size_t q = 0;                             // dim vect(H)
    std::vector<std::vector<RealElement>> coords;  // length-q vector per generator
};

std::size_t span_dim(const GroupSpec& G);
SpanReduction reduce_to_span(const GroupSpec& G);

/// Trace of the matrix construction for one non-basis generator k. Coordinates
/// split into the independent set I (the alpha_{k,j}, j in I, rationally
/// independent together with 1) and the dependent rest, each dependent
/// coordinate i carrying alpha_{k,i} = t[i] + sum_{j in I} gamma[i][j]*alpha_{k,j}.
struct MHPerGenerator {
    std::size_t k = 0;
    std::vector<RealElement> alpha;  // span coordinates (empty in float mode)
    std::vector<std::size_t> I;      // ascending subset of {0..q-1}
    Int d;                           // positive common denominator
    std::map<std::size_t, Rational> t;
    std::map<std::size_t, std::map<std::size_t, Rational>> gamma;
    std::map<std::size_t, std::map<std::size_t, Int>> m_coeffs;  // d * gamma
    std::map<std::size_t, Int> p_coeffs;                         // d * t
    std::vector<std::vector<Int>> u_prime;  // per j in I: d*e_j + sum_i m[i][j]*e_i
};

struct MHReport {
    SpanReduction span;
    std::vector<MHPerGenerator> per_gen;  // non-basis generators in input order
    MatrixZ MH;  // q rows; columns in generator order, I ascending within one k
    std::size_t rank = 0;
    bool heuristic = false;  // set by the float front end
};

struct MHOptions {
    /// Use one shared denominator d = lcm over all k instead of per-k values.
    /// Scales columns by positive integers, so the rank is unchanged.
    bool global_denominator = false;
};

/// The exact pipeline: span reduction, per-generator dependence analysis,
/// integer columns u', their assembly into M_H, and its rank. Satisfies, and
/// internally re-checks, the reconstruction identity
///   d*u_k = sum_{j in I} alpha_{k,j}*u'_{k,j} + sum_{i not in I} p_{k,i}*u_i.
MHReport build_mh(const GroupSpec& G, const MHOptions& opts = {});

/// Builds one generator's trace from dependence data (shared with the float
/// front end, which supplies heuristic t/gamma). No reconstruction check here.
MHPerGenerator assemble_mh_generator(std::size_t k, std::size_t q,
                                     const std::vector<std::size_t>& I,
                                     const std::map<std::size_t, Rational>& t,
                                     const std::map<std::size_t, std::map<std::size_t, Rational>>& gamma,
                                     const Int* force_denominator = nullptr);

/// rank(M_H) + i(q - rank(M_H)).
ComplexDim complex_dimension_closure(const GroupSpec& G);

bool is_dense_in_span(const GroupSpec& G);     // rank(M_H) = q
bool is_dense_in_ambient(const GroupSpec& G);  // rank(M_H) = q = n

struct DensifyResult {
    std::vector<RealElement> u;  // new generator, ambient coordinates
    GroupSpec extended;          // G with u appended
    ComplexDim dim;              // re-verified: q + 0i
};

/// Appends u = sum_t sqrt(s_t) * (basis generator t) with fresh squarefree
/// s_1 < s_2 < ... not appearing in any input entry; H + Zu is dense in
/// vect(H) and the postcondition is re-verified through the pipeline.
DensifyResult densify(const GroupSpec& G);

/// Candidate decomposition closure(H) = F + discrete part: F spanned by a
/// maximal independent subset of M_H columns, the complement spanned by basis
/// generators keeping the joint system independent. The split matches the
/// dimension count p + i(q-p) but is cross-checked only numerically, never
/// asserted as exact.
struct ClosureStructure {
    std::size_t q = 0;
    std::vector<std::vector<Int>> F_basis;          // span coordinates, p columns
    std::vector<std::size_t> discrete_indices;      // generator indices
    std::vector<std::vector<RealElement>> discrete_gens;  // those generators, ambient
};

ClosureStructure closure_structure(const GroupSpec& G);

}  // namespace groupdim
