#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "groupdim/lll.hpp"
#include "groupdim/mh.hpp"

namespace groupdim {

struct NumericOptions {
    int scale_digits = 12;
    Int max_coeff = Int(1000000);
    Rational lll_delta = Rational(99, 100);
    double rank_threshold = 1e-9;  // relative pivot cutoff for float elimination
};

/// Heuristic counterpart of the exact dependence data for one coordinate
/// vector alpha: the independent set I plus t/gamma with
/// alpha_i ~ t[i] + sum_{j in I} gamma[i][j] * alpha_j for i outside I.
struct NumericDependence {
    std::vector<std::size_t> I;
    std::map<std::size_t, Rational> t;
    std::map<std::size_t, std::map<std::size_t, Rational>> gamma;
};

/// Greedy numerical mirror of the exact analysis of {1, alpha_0, ...}:
/// integer-relation searches peel dependent coordinates one at a time.
/// Throws PrecisionExhausted when a verdict cannot be certified (a relation
/// misses its own pivot, or an uncertified candidate sits too close to the
/// acceptance floor to call the value independent).
NumericDependence numeric_rational_structure(const std::vector<double>& alpha,
                                             const NumericOptions& opts = {});

/// Float front end of the pipeline: double-precision span reduction, then
/// heuristic dependence data feeding the exact column assembly. The report
/// carries heuristic = true; alpha traces are dyadic images of the doubles
/// and the reconstruction identity is not checked.
MHReport build_mh_float(std::size_t n, const std::vector<std::vector<double>>& generators,
                        const NumericOptions& opts = {});

}  // namespace groupdim
