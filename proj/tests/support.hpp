#pragma once

// Shared test fixtures: expression-based builders, the two worked examples
// used throughout, seeded random instance generators, an independent float
// rank oracle (Eigen SVD), and a subprocess runner for the CLI binary.

#include <Eigen/Dense>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "groupdim/closed_group.hpp"
#include "groupdim/group.hpp"
#include "groupdim/matrix.hpp"
#include "groupdim/mh.hpp"
#include "groupdim/parse.hpp"

namespace testsupport {

using groupdim::GroupSpec;
using groupdim::Int;
using groupdim::MatrixF;
using groupdim::MatrixZ;
using groupdim::Rational;
using groupdim::RealElement;

inline RealElement el(const std::string& expr) { return groupdim::parse_real(expr); }

inline std::vector<RealElement> gvec(std::initializer_list<const char*> xs) {
    std::vector<RealElement> v;
    for (const char* s : xs) v.push_back(el(s));
    return v;
}

// (1, sqrt2, 1), (0, 1, sqrt3), (sqrt2, sqrt3, 1), (1, sqrt2, sqrt2) over the
// standard basis of R^3; published M_H is 3x5 of rank 3.
inline GroupSpec example1() {
    GroupSpec G;
    G.n = 3;
    G.generators = {gvec({"1", "0", "0"}),
                    gvec({"0", "1", "0"}),
                    gvec({"0", "0", "1"}),
                    gvec({"1", "sqrt(2)", "1"}),
                    gvec({"0", "1", "sqrt(3)"}),
                    gvec({"sqrt(2)", "sqrt(3)", "1"}),
                    gvec({"1", "sqrt(2)", "sqrt(2)"})};
    return G;
}

inline MatrixZ example1_mh() {
    return MatrixZ::from_columns(3, {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}, {0, 1, 0}, {0, 1, 1}});
}

// 0-based generator index -> 0-based coordinate set, the published choice.
inline std::map<std::size_t, std::vector<std::size_t>> example1_forced() {
    return {{3, {1}}, {4, {2}}, {5, {0, 1}}, {6, {1}}};
}

inline GroupSpec example2() {
    GroupSpec G;
    G.n = 3;
    G.generators = {gvec({"1", "0", "0"}),
                    gvec({"0", "1", "0"}),
                    gvec({"0", "0", "1"}),
                    gvec({"1", "sqrt(2)", "1"}),
                    gvec({"sqrt(2)", "1", "sqrt(2)"}),
                    gvec({"2*sqrt(2)", "2", "3*sqrt(2)"}),
                    gvec({"1", "3*sqrt(2)", "sqrt(2)"})};
    return G;
}

inline MatrixZ example2_mh() {
    return MatrixZ::from_columns(3, {{0, 1, 0}, {1, 0, 1}, {2, 0, 3}, {0, 3, 1}});
}

inline std::map<std::size_t, std::vector<std::size_t>> example2_forced() {
    return {{3, {1}}, {4, {0}}, {5, {0}}, {6, {1}}};
}

inline GroupSpec z_n(std::size_t n) {
    GroupSpec G;
    G.n = n;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<RealElement> e(n, RealElement(0));
        e[i] = RealElement(1);
        G.generators.push_back(std::move(e));
    }
    return G;
}

inline GroupSpec z_sqrt2() {
    GroupSpec G;
    G.n = 1;
    G.generators = {gvec({"1"}), gvec({"sqrt(2)"})};
    return G;
}

// closure is R x Z
inline GroupSpec mixed_rz() {
    GroupSpec G;
    G.n = 2;
    G.generators = {gvec({"1", "0"}), gvec({"0", "1"}), gvec({"sqrt(2)", "0"})};
    return G;
}

// --- random instances -------------------------------------------------------

inline Rational random_rational(std::mt19937_64& rng, long num_bound = 20, long den_bound = 9) {
    std::uniform_int_distribution<long> num(-num_bound, num_bound);
    std::uniform_int_distribution<long> den(1, den_bound);
    return Rational(Int(num(rng)), Int(den(rng)));
}

inline RealElement random_real(std::mt19937_64& rng, bool allow_surds = true) {
    static const long radicands[] = {2, 3, 5, 6, 7, 10};
    RealElement x(random_rational(rng));
    if (allow_surds) {
        std::uniform_int_distribution<int> surds(0, 2);
        int count = surds(rng);
        std::uniform_int_distribution<std::size_t> pick(0, 5);
        for (int i = 0; i < count; ++i)
            x += RealElement::surd(Int(radicands[pick(rng)]), random_rational(rng, 5, 4));
    }
    return x;
}

inline GroupSpec random_spec(std::mt19937_64& rng, std::size_t n_max = 4, std::size_t m_max = 8,
                             bool allow_surds = true) {
    std::uniform_int_distribution<std::size_t> nd(1, n_max);
    GroupSpec G;
    G.n = nd(rng);
    std::uniform_int_distribution<std::size_t> md(1, m_max);
    std::size_t m = md(rng);
    for (std::size_t k = 0; k < m; ++k) {
        std::vector<RealElement> gen;
        for (std::size_t i = 0; i < G.n; ++i) gen.push_back(random_real(rng, allow_surds));
        G.generators.push_back(std::move(gen));
    }
    bool all_zero = true;
    for (const auto& g : G.generators)
        for (const auto& x : g)
            if (!x.is_zero()) all_zero = false;
    if (all_zero) G.generators[0][0] = RealElement(1);
    return G;
}

inline MatrixZ random_unimodular(std::mt19937_64& rng, std::size_t n) {
    MatrixZ U = MatrixZ::identity(n);
    if (n < 2) return U;
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    std::uniform_int_distribution<long> coeff(-3, 3);
    std::uniform_int_distribution<int> kind(0, 3);
    for (int step = 0; step < 12; ++step) {
        std::size_t i = idx(rng), j = idx(rng);
        if (i == j) continue;
        switch (kind(rng)) {
            case 0: {  // row_i += c * row_j
                Int c = Int(coeff(rng));
                for (std::size_t col = 0; col < n; ++col) U(i, col) += c * U(j, col);
                break;
            }
            case 1:
                for (std::size_t col = 0; col < n; ++col) std::swap(U(i, col), U(j, col));
                break;
            default:
                for (std::size_t col = 0; col < n; ++col) U(i, col) = -U(i, col);
        }
    }
    return U;
}

// E = first e axes, D = next d axes of R^(e+d).
inline groupdim::ClosedGroup axis_closed_group(std::size_t e, std::size_t d) {
    std::size_t n = e + d;
    std::vector<std::vector<RealElement>> E, D;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<RealElement> v(n, RealElement(0));
        v[i] = RealElement(1);
        (i < e ? E : D).push_back(std::move(v));
    }
    return groupdim::ClosedGroup(n, std::move(E), std::move(D));
}

// --- independent float oracle ------------------------------------------------

inline Eigen::MatrixXd to_eigen(const MatrixF& M) {
    Eigen::MatrixXd E(M.rows(), M.cols());
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j) E(i, j) = M(i, j).to_double();
    return E;
}

inline Eigen::MatrixXd to_eigen(const MatrixZ& M) {
    Eigen::MatrixXd E(M.rows(), M.cols());
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j) E(i, j) = M(i, j).convert_to<double>();
    return E;
}

inline std::size_t eigen_rank(const Eigen::MatrixXd& M, double rel_tol = 1e-8) {
    if (M.rows() == 0 || M.cols() == 0) return 0;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) == 0.0) return 0;
    std::size_t r = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > rel_tol * sv(0)) ++r;
    return r;
}

// --- exact helpers -----------------------------------------------------------

inline Int det_int(MatrixZ A) {
    if (A.rows() != A.cols()) return Int(0);
    const std::size_t n = A.rows();
    Int prev = 1, sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && A(piv, c) == 0) ++piv;
        if (piv == n) return Int(0);
        if (piv != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(A(piv, j), A(c, j));
            sign = -sign;
        }
        for (std::size_t i = c + 1; i < n; ++i)
            for (std::size_t j = c + 1; j < n; ++j)
                A(i, j) = (A(c, c) * A(i, j) - A(i, c) * A(c, j)) / prev;
        prev = A(c, c);
    }
    return sign * A(n - 1, n - 1);
}

// Ambient-space recheck of the reconstruction identity from report data only:
// d*u_k = sum_{j in I} alpha_{k,j} * (sum_t u'[t] b_t) + sum_{i not in I} p_i b_i
// with b_t the basis generators.
inline bool reconstruction_holds(const GroupSpec& G, const groupdim::MHReport& rep) {
    const auto& basis = rep.span.basis_indices;
    for (const auto& pg : rep.per_gen) {
        std::vector<RealElement> lhs(G.n, RealElement(0));
        for (std::size_t i = 0; i < G.n; ++i)
            lhs[i] = Rational(pg.d) * G.generators[pg.k][i];
        std::vector<RealElement> rhs(G.n, RealElement(0));
        for (std::size_t a = 0; a < pg.I.size(); ++a) {
            std::vector<RealElement> col(G.n, RealElement(0));
            for (std::size_t t = 0; t < rep.span.q; ++t)
                for (std::size_t i = 0; i < G.n; ++i)
                    col[i] += Rational(pg.u_prime[a][t]) * G.generators[basis[t]][i];
            for (std::size_t i = 0; i < G.n; ++i) rhs[i] += pg.alpha[pg.I[a]] * col[i];
        }
        for (const auto& [i, p] : pg.p_coeffs)
            for (std::size_t c = 0; c < G.n; ++c)
                rhs[c] += Rational(p) * G.generators[basis[i]][c];
        for (std::size_t i = 0; i < G.n; ++i)
            if (!(lhs[i] == rhs[i])) return false;
    }
    return true;
}

// --- CLI subprocess ----------------------------------------------------------

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline CliResult run_cli(const std::string& args, const std::string& stdin_text = "") {
    static int counter = 0;
    std::string base = "cli_io_" + std::to_string(++counter);
    std::string in_path = base + ".in", out_path = base + ".out", err_path = base + ".err";
    {
        std::ofstream in(in_path);
        in << stdin_text;
    }
    std::string cmd = std::string(GROUPDIM_CLI_PATH) + " " + args + " < " + in_path + " > " +
                      out_path + " 2> " + err_path;
    int status = std::system(cmd.c_str());
    CliResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = read_file(out_path);
    r.err = read_file(err_path);
    std::remove(in_path.c_str());
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return r;
}

}  // namespace testsupport
