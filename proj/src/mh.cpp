#include "groupdim/mh.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "groupdim/errors.hpp"
#include "groupdim/linalg.hpp"

namespace groupdim {

void GroupSpec::validate() const {
    if (n == 0) throw InvalidInput("ambient dimension must be positive");
    if (generators.empty()) throw InvalidInput("generator list must be nonempty");
    for (std::size_t k = 0; k < generators.size(); ++k) {
        if (generators[k].size() != n)
            throw InvalidInput("generator " + std::to_string(k + 1) + " has length " +
                               std::to_string(generators[k].size()) + ", expected " +
                               std::to_string(n));
    }
    for (const auto& [k, coords] : forced_I) {
        if (k >= generators.size())
            throw InvalidInput("forced I refers to generator " + std::to_string(k + 1) +
                               " beyond the generator count");
        for (std::size_t c : coords)
            if (c >= n)
                throw InvalidInput("forced I coordinate " + std::to_string(c + 1) +
                                   " exceeds the ambient dimension");
    }
}

std::size_t span_dim(const GroupSpec& G) {
    G.validate();
    return rank_field(MatrixF::from_columns(G.n, G.generators));
}

SpanReduction reduce_to_span(const GroupSpec& G) {
    G.validate();
    MatrixF A = MatrixF::from_columns(G.n, G.generators);
    SpanReduction out;
    out.basis_indices = select_basis_columns(A);
    out.q = out.basis_indices.size();

    MatrixF B(G.n, out.q);
    for (std::size_t j = 0; j < out.q; ++j)
        for (std::size_t i = 0; i < G.n; ++i) B(i, j) = A(i, out.basis_indices[j]);

    out.coords.resize(G.generators.size());
    for (std::size_t k = 0; k < G.generators.size(); ++k) {
        auto pos = std::find(out.basis_indices.begin(), out.basis_indices.end(), k);
        if (pos != out.basis_indices.end()) {
            std::vector<RealElement> e(out.q);
            e[static_cast<std::size_t>(pos - out.basis_indices.begin())] = RealElement(1);
            out.coords[k] = std::move(e);
            continue;
        }
        auto x = solve_field(B, G.generators[k]);
        if (!x)
            throw InternalInvariantViolation("generator outside the span of the selected basis");
        out.coords[k] = std::move(*x);
    }
    return out;
}

namespace {

// Q-coefficient vectors for the values {1, alpha_0, ..., alpha_{q-1}} over
// their common surd support, position 0 carrying the constant 1.
std::vector<std::vector<Rational>> dependence_vectors(const std::vector<RealElement>& alpha) {
    std::set<Int> support{Int(1)};
    for (const auto& a : alpha)
        for (const auto& [rad, c] : a.terms()) support.insert(rad);

    std::vector<Int> axes(support.begin(), support.end());
    auto coeffs = [&](const RealElement& v) {
        std::vector<Rational> row(axes.size());
        for (std::size_t i = 0; i < axes.size(); ++i) {
            auto it = v.terms().find(axes[i]);
            if (it != v.terms().end()) row[i] = it->second;
        }
        return row;
    };

    std::vector<std::vector<Rational>> vectors;
    vectors.reserve(alpha.size() + 1);
    vectors.push_back(coeffs(RealElement(1)));
    for (const auto& a : alpha) vectors.push_back(coeffs(a));
    return vectors;
}

}  // namespace

MHPerGenerator assemble_mh_generator(
    std::size_t k, std::size_t q, const std::vector<std::size_t>& I,
    const std::map<std::size_t, Rational>& t,
    const std::map<std::size_t, std::map<std::size_t, Rational>>& gamma,
    const Int* force_denominator) {
    MHPerGenerator g;
    g.k = k;
    g.I = I;
    g.t = t;
    g.gamma = gamma;

    if (force_denominator) {
        g.d = *force_denominator;
    } else {
        g.d = 1;
        for (const auto& [i, ti] : t) g.d = lcm_int(g.d, ti.den());
        for (const auto& [i, row] : gamma)
            for (const auto& [j, gij] : row) g.d = lcm_int(g.d, gij.den());
    }

    for (const auto& [i, ti] : t) {
        Rational scaled = ti * Rational(g.d);
        if (!scaled.is_integer())
            throw InternalInvariantViolation("denominator does not clear t");
        g.p_coeffs[i] = scaled.num();
    }
    for (const auto& [i, row] : gamma) {
        for (const auto& [j, gij] : row) {
            Rational scaled = gij * Rational(g.d);
            if (!scaled.is_integer())
                throw InternalInvariantViolation("denominator does not clear gamma");
            g.m_coeffs[i][j] = scaled.num();
        }
    }

    for (std::size_t j : I) {
        std::vector<Int> col(q);
        col[j] = g.d;
        for (const auto& [i, row] : g.m_coeffs) {
            auto it = row.find(j);
            if (it != row.end()) col[i] = it->second;
        }
        g.u_prime.push_back(std::move(col));
    }
    return g;
}

namespace {

// Exact check of d*u_k = sum_{j in I} alpha_j u'_{k,j} + sum_{i notin I} p_i e_i
// in span coordinates.
void verify_reconstruction(const MHPerGenerator& g, std::size_t q) {
    std::vector<RealElement> rhs(q);
    for (std::size_t c = 0; c < g.I.size(); ++c) {
        const RealElement& w = g.alpha[g.I[c]];
        for (std::size_t i = 0; i < q; ++i) rhs[i] += w * RealElement(g.u_prime[c][i]);
    }
    for (const auto& [i, pi] : g.p_coeffs) rhs[i] += RealElement(pi);

    for (std::size_t i = 0; i < q; ++i) {
        RealElement lhs = Rational(g.d) * g.alpha[i];
        if (!(lhs - rhs[i]).is_zero())
            throw InternalInvariantViolation("reconstruction identity failed for generator " +
                                             std::to_string(g.k + 1));
    }
}

}  // namespace

MHReport build_mh(const GroupSpec& G, const MHOptions& opts) {
    MHReport rep;
    rep.span = reduce_to_span(G);
    const std::size_t q = rep.span.q;

    std::set<std::size_t> basis(rep.span.basis_indices.begin(), rep.span.basis_indices.end());
    for (const auto& [k, coords] : G.forced_I) {
        if (basis.count(k))
            throw InvalidForcedI("generator " + std::to_string(k + 1) +
                                 " is a basis generator and has no I set");
        for (std::size_t c : coords)
            if (c >= q)
                throw InvalidForcedI("forced I coordinate " + std::to_string(c + 1) +
                                     " exceeds q = " + std::to_string(q));
    }

    for (std::size_t k = 0; k < G.generators.size(); ++k) {
        if (basis.count(k)) continue;
        const std::vector<RealElement>& alpha = rep.span.coords[k];
        std::vector<std::vector<Rational>> vectors = dependence_vectors(alpha);

        DependenceReport dep;
        auto forced = G.forced_I.find(k);
        if (forced != G.forced_I.end()) {
            std::vector<std::size_t> positions{0};  // the constant 1
            for (std::size_t c : forced->second) positions.push_back(c + 1);
            dep = rational_dependence_forced(vectors, positions);
        } else {
            dep = rational_dependence(vectors);
        }

        // Positions shift by one against coordinates: position 0 is the constant.
        std::vector<std::size_t> I;
        for (std::size_t pos : dep.independent)
            if (pos > 0) I.push_back(pos - 1);

        std::map<std::size_t, Rational> t;
        std::map<std::size_t, std::map<std::size_t, Rational>> gamma;
        for (const auto& [pos, coeffs] : dep.expressions) {
            std::size_t i = pos - 1;  // position 0 is always independent
            for (std::size_t c = 0; c < dep.independent.size(); ++c) {
                std::size_t ip = dep.independent[c];
                if (ip == 0) {
                    if (!coeffs[c].is_zero()) t[i] = coeffs[c];
                } else if (!coeffs[c].is_zero()) {
                    gamma[i][ip - 1] = coeffs[c];
                }
            }
        }

        MHPerGenerator g = assemble_mh_generator(k, q, I, t, gamma);
        g.alpha = alpha;
        verify_reconstruction(g, q);
        rep.per_gen.push_back(std::move(g));
    }

    if (opts.global_denominator) {
        Int D = 1;
        for (const auto& g : rep.per_gen) D = lcm_int(D, g.d);
        for (auto& g : rep.per_gen) {
            MHPerGenerator scaled = assemble_mh_generator(g.k, q, g.I, g.t, g.gamma, &D);
            scaled.alpha = std::move(g.alpha);
            verify_reconstruction(scaled, q);
            g = std::move(scaled);
        }
    }

    std::vector<std::vector<Int>> columns;
    for (const auto& g : rep.per_gen)
        for (const auto& col : g.u_prime) columns.push_back(col);
    rep.MH = MatrixZ::from_columns(q, columns);
    rep.rank = rank_int(rep.MH);
    return rep;
}

ComplexDim complex_dimension_closure(const GroupSpec& G) {
    MHReport rep = build_mh(G);
    return {rep.rank, rep.span.q - rep.rank};
}

bool is_dense_in_span(const GroupSpec& G) {
    MHReport rep = build_mh(G);
    return rep.rank == rep.span.q;
}

bool is_dense_in_ambient(const GroupSpec& G) {
    MHReport rep = build_mh(G);
    return rep.rank == rep.span.q && rep.span.q == G.n;
}

DensifyResult densify(const GroupSpec& G) {
    SpanReduction span = reduce_to_span(G);
    if (span.q == 0) throw DomainError("densify requires a group with q >= 1");

    std::set<Int> used;
    for (const auto& gen : G.generators)
        for (const auto& entry : gen)
            for (const auto& [rad, c] : entry.terms())
                if (rad != 1) used.insert(rad);

    std::vector<Int> fresh;
    for (Int s = 2; fresh.size() < span.q; ++s) {
        if (normalize_radicand(s).first != 1) continue;  // not squarefree
        if (used.count(s)) continue;
        fresh.push_back(s);
    }

    DensifyResult out;
    out.u.assign(G.n, RealElement());
    for (std::size_t tpos = 0; tpos < span.q; ++tpos) {
        const auto& gen = G.generators[span.basis_indices[tpos]];
        RealElement s = RealElement::surd(fresh[tpos]);
        for (std::size_t i = 0; i < G.n; ++i) out.u[i] += s * gen[i];
    }

    out.extended = G;
    out.extended.generators.push_back(out.u);
    out.dim = complex_dimension_closure(out.extended);
    if (out.dim != ComplexDim{span.q, 0})
        throw InternalInvariantViolation("densified group is not dense in its span");
    return out;
}

ClosureStructure closure_structure(const GroupSpec& G) {
    MHReport rep = build_mh(G);
    const std::size_t q = rep.span.q;

    ClosureStructure out;
    out.q = q;

    MatrixQ colsQ(rep.MH);
    std::vector<std::size_t> keep = select_basis_columns_q(colsQ);
    for (std::size_t j : keep) {
        std::vector<Int> col(q);
        for (std::size_t i = 0; i < q; ++i) col[i] = rep.MH(i, j);
        out.F_basis.push_back(std::move(col));
    }

    // Greedily extend F by span-basis directions to a basis of vect(H); the
    // added directions are the candidate discrete part.
    MatrixQ ext(q, out.F_basis.size() + q);
    for (std::size_t j = 0; j < out.F_basis.size(); ++j)
        for (std::size_t i = 0; i < q; ++i) ext(i, j) = out.F_basis[j][i];
    for (std::size_t j = 0; j < q; ++j) ext(j, out.F_basis.size() + j) = Rational(1);

    for (std::size_t sel : select_basis_columns_q(ext)) {
        if (sel < out.F_basis.size()) continue;
        std::size_t coord = sel - out.F_basis.size();
        out.discrete_indices.push_back(rep.span.basis_indices[coord]);
        out.discrete_gens.push_back(G.generators[rep.span.basis_indices[coord]]);
    }
    return out;
}

}  // namespace groupdim
