#include "groupdim/closed_group.hpp"

#include <string>
#include <utility>

#include "groupdim/errors.hpp"
#include "groupdim/intlattice.hpp"
#include "groupdim/linalg.hpp"

namespace groupdim {

namespace {

MatrixF concat_columns(std::size_t n, const std::vector<std::vector<RealElement>>& a,
                       const std::vector<std::vector<RealElement>>& b) {
    std::vector<std::vector<RealElement>> all = a;
    all.insert(all.end(), b.begin(), b.end());
    return MatrixF::from_columns(n, all);
}

// Ambient vector sum_j coeffs[j] * vecs[j].
template <typename C>
std::vector<RealElement> combine(std::size_t n, const std::vector<std::vector<RealElement>>& vecs,
                                 const std::vector<C>& coeffs) {
    std::vector<RealElement> out(n);
    for (std::size_t j = 0; j < vecs.size(); ++j) {
        RealElement c(coeffs[j]);
        if (c.is_zero()) continue;
        for (std::size_t i = 0; i < n; ++i) out[i] += c * vecs[j][i];
    }
    return out;
}

}  // namespace

ClosedGroup::ClosedGroup(std::size_t n, std::vector<std::vector<RealElement>> E_basis,
                         std::vector<std::vector<RealElement>> D_gens)
    : n_(n), E_basis_(std::move(E_basis)), D_gens_(std::move(D_gens)) {
    if (n_ == 0) throw InvalidClosedGroup("ambient dimension must be positive");
    for (const auto& v : E_basis_)
        if (v.size() != n_) throw InvalidClosedGroup("E basis vector has wrong length");
    for (const auto& v : D_gens_)
        if (v.size() != n_) throw InvalidClosedGroup("D generator has wrong length");
    std::size_t total = E_basis_.size() + D_gens_.size();
    if (total > n_) throw InvalidClosedGroup("more vectors than the ambient dimension admits");
    if (rank_field(concat_columns(n_, E_basis_, D_gens_)) != total)
        throw InvalidClosedGroup(
            "E basis and D generators must be jointly independent with trivial span overlap");
}

ComplexDim cdim(const ClosedGroup& G) { return {G.E_basis().size(), G.D_gens().size()}; }

ClosedHom::ClosedHom(ClosedGroup domain, ClosedGroup codomain, MatrixF A, MatrixZ B)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      A_(std::move(A)),
      B_(std::move(B)) {
    if (A_.rows() != codomain_.E_basis().size() || A_.cols() != domain_.E_basis().size())
        throw InvalidInput("A must map domain E-coordinates to codomain E-coordinates");
    if (B_.rows() != codomain_.D_gens().size() || B_.cols() != domain_.D_gens().size())
        throw InvalidInput("B must map domain D-coordinates to codomain D-coordinates");
}

ClosedGroup image(const ClosedHom& f) {
    const ClosedGroup& cod = f.codomain();

    // f1(E): images of the domain E-basis, thinned to a basis.
    std::vector<std::vector<RealElement>> e_images;
    for (std::size_t j = 0; j < f.A().cols(); ++j)
        e_images.push_back(combine(cod.n(), cod.E_basis(), f.A().col(j)));
    MatrixF e_mat = MatrixF::from_columns(cod.n(), e_images);
    std::vector<std::vector<RealElement>> E;
    for (std::size_t j : select_basis_columns(e_mat)) E.push_back(e_images[j]);

    // f2(D): the image lattice of B, a finite-index-free generator set.
    std::vector<std::vector<RealElement>> D;
    for (const auto& col : lattice_image_basis(f.B()))
        D.push_back(combine(cod.n(), cod.D_gens(), col));

    try {
        return ClosedGroup(cod.n(), std::move(E), std::move(D));
    } catch (const InvalidClosedGroup&) {
        throw DegenerateImage("image spans of f1(E) and f2(D) intersect nontrivially");
    }
}

ClosedGroup kernel(const ClosedHom& f) {
    const ClosedGroup& dom = f.domain();

    std::vector<std::vector<RealElement>> E;
    for (const auto& x : nullspace_field(f.A())) E.push_back(combine(dom.n(), dom.E_basis(), x));

    std::vector<std::vector<RealElement>> D;
    for (const auto& x : integer_kernel_basis(f.B())) D.push_back(combine(dom.n(), dom.D_gens(), x));

    return ClosedGroup(dom.n(), std::move(E), std::move(D));
}

bool is_injective(const ClosedHom& f) {
    return nullspace_field(f.A()).empty() && integer_kernel_basis(f.B()).empty();
}

bool is_surjective(const ClosedHom& f) {
    bool onto_E = rank_field(f.A()) == f.codomain().E_basis().size();
    return onto_E && generates_full_lattice(f.B());
}

}  // namespace groupdim
