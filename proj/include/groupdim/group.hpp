#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "groupdim/rational.hpp"
#include "groupdim/real_element.hpp"

namespace groupdim {

/// Complex dimension p + ri of a closed additive group: p is the dimension of
/// the largest vector subspace contained in it, p + r the dimension of its
/// span. The modulus |p + ri| = sqrt(p^2 + r^2) drives the monotonicity laws.
struct ComplexDim {
    std::size_t p = 0;
    std::size_t r = 0;

    Int modulus_squared() const { return Int(p) * Int(p) + Int(r) * Int(r); }

    std::string str() const {
        return std::to_string(p) + " + " + std::to_string(r) + "i";
    }

    bool operator==(const ComplexDim& o) const { return p == o.p && r == o.r; }
    bool operator!=(const ComplexDim& o) const { return !(*this == o); }
};

/// A finitely generated additive subgroup H = sum_k Z*generators[k] of R^n.
struct GroupSpec {
    std::size_t n = 0;
    std::vector<std::vector<RealElement>> generators;
    /// Optional override of the independent set I_k: 0-based non-basis
    /// generator index -> 0-based span-coordinate indices.
    std::map<std::size_t, std::vector<std::size_t>> forced_I;

    /// Shape checks; throws InvalidInput. Range checks that need q happen in
    /// the pipeline (InvalidForcedI).
    void validate() const;
};

}  // namespace groupdim
