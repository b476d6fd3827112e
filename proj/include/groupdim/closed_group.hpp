#pragma once

#include <cstddef>
#include <vector>

#include "groupdim/group.hpp"
#include "groupdim/matrix.hpp"

namespace groupdim {

/// A closed additive subgroup of R^n in the standard decomposition E + D:
/// a vector subspace E (by basis) plus a discrete part D (by independent
/// generators), with span(E) and span(D) meeting only in 0. Its complex
/// dimension is |E_basis| + i|D_gens| by construction.
class ClosedGroup {
public:
    /// Validates the invariants; throws InvalidClosedGroup.
    ClosedGroup(std::size_t n, std::vector<std::vector<RealElement>> E_basis,
                std::vector<std::vector<RealElement>> D_gens);

    std::size_t n() const { return n_; }
    const std::vector<std::vector<RealElement>>& E_basis() const { return E_basis_; }
    const std::vector<std::vector<RealElement>>& D_gens() const { return D_gens_; }

private:
    std::size_t n_;
    std::vector<std::vector<RealElement>> E_basis_;
    std::vector<std::vector<RealElement>> D_gens_;
};

ComplexDim cdim(const ClosedGroup& G);

/// A homomorphism f = f1 (+) f2 between closed groups, specified by its
/// action on the domain's E-basis (A, over the codomain's E-basis) and on the
/// domain's D-generators (B, integer, over the codomain's D-generators).
class ClosedHom {
public:
    /// A must be |E'| x |E|, B must be |D'| x |D|; throws InvalidInput.
    ClosedHom(ClosedGroup domain, ClosedGroup codomain, MatrixF A, MatrixZ B);

    const ClosedGroup& domain() const { return domain_; }
    const ClosedGroup& codomain() const { return codomain_; }
    const MatrixF& A() const { return A_; }
    const MatrixZ& B() const { return B_; }

private:
    ClosedGroup domain_;
    ClosedGroup codomain_;
    MatrixF A_;
    MatrixZ B_;
};

/// f(H) as a closed group: E-part a basis of A*E, D-part a lattice basis of
/// B*D re-expressed in the codomain. Throws DegenerateImage when the two
/// image spans intersect nontrivially.
ClosedGroup image(const ClosedHom& f);

/// Ker(f): null space of A plus the integer kernel lattice of B.
ClosedGroup kernel(const ClosedHom& f);

bool is_injective(const ClosedHom& f);   // trivial kernel on both parts
bool is_surjective(const ClosedHom& f);  // A onto E', B onto the full D' lattice

}  // namespace groupdim
