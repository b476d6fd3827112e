#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "groupdim/errors.hpp"
#include "groupdim/linalg.hpp"
#include "support.hpp"

using namespace groupdim;
using testsupport::el;

namespace {

MatrixF random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                      bool surds = true) {
    MatrixF M(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) M(i, j) = testsupport::random_real(rng, surds);
    return M;
}

// Plant rank deficiency: last columns are rational combinations of earlier ones.
MatrixF random_deficient(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                         std::size_t target_rank) {
    MatrixF M = random_matrix(rng, rows, target_rank);
    MatrixF out(rows, cols);
    for (std::size_t j = 0; j < cols; ++j) {
        if (j < target_rank) {
            for (std::size_t i = 0; i < rows; ++i) out(i, j) = M(i, j);
            continue;
        }
        std::vector<Rational> mix;
        for (std::size_t t = 0; t < target_rank; ++t)
            mix.push_back(testsupport::random_rational(rng, 4, 3));
        for (std::size_t i = 0; i < rows; ++i) {
            RealElement acc(0);
            for (std::size_t t = 0; t < target_rank; ++t) acc += mix[t] * M(i, t);
            out(i, j) = acc;
        }
    }
    return out;
}

}  // namespace

TEST_CASE("rank_field on handmade matrices") {
    MatrixF A = MatrixF::from_columns(2, {testsupport::gvec({"1", "0"}),
                                          testsupport::gvec({"sqrt(2)", "0"}),
                                          testsupport::gvec({"0", "1"})});
    CHECK(rank_field(A) == 2);
    MatrixF B = MatrixF::from_columns(2, {testsupport::gvec({"1", "sqrt(2)"}),
                                          testsupport::gvec({"sqrt(2)", "2"})});
    CHECK(rank_field(B) == 1);  // second column = sqrt(2) * first
    CHECK(rank_field(MatrixF(3, 0)) == 0);
}

TEST_CASE("exact rank agrees with an SVD oracle on random matrices") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 40; ++trial) {
        std::uniform_int_distribution<std::size_t> dim(1, 5);
        std::size_t rows = dim(rng), cols = dim(rng);
        MatrixF M = random_matrix(rng, rows, cols);
        CHECK(rank_field(M) == testsupport::eigen_rank(testsupport::to_eigen(M)));
    }
}

TEST_CASE("planted rank deficiency is detected exactly") {
    std::mt19937_64 rng(102);
    for (int trial = 0; trial < 30; ++trial) {
        std::uniform_int_distribution<std::size_t> dim(2, 5);
        std::size_t rows = dim(rng);
        std::uniform_int_distribution<std::size_t> rd(1, rows);
        std::size_t target = rd(rng);
        MatrixF M = random_deficient(rng, rows, rows + 2, target);
        CHECK(rank_field(M) <= target);
        CHECK(rank_field(M) == testsupport::eigen_rank(testsupport::to_eigen(M)));
    }
}

TEST_CASE("rank_int (Bareiss) matches the field rank of the same matrix") {
    std::mt19937_64 rng(103);
    std::uniform_int_distribution<long> entry(-30, 30);
    for (int trial = 0; trial < 40; ++trial) {
        std::uniform_int_distribution<std::size_t> dim(1, 6);
        std::size_t rows = dim(rng), cols = dim(rng);
        MatrixZ M(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) M(i, j) = Int(entry(rng));
        CHECK(rank_int(M) == rank_field(MatrixF(M)));
    }
}

TEST_CASE("solve_field returns exact solutions and detects inconsistency") {
    MatrixF A = MatrixF::from_columns(2, {testsupport::gvec({"1", "0"}),
                                          testsupport::gvec({"sqrt(2)", "1"})});
    auto x = solve_field(A, testsupport::gvec({"1+2*sqrt(2)", "2"}));
    REQUIRE(x.has_value());
    CHECK((*x)[0] == el("1"));
    CHECK((*x)[1] == el("2"));

    // inconsistent: target outside the column span
    MatrixF B = MatrixF::from_columns(2, {testsupport::gvec({"1", "0"})});
    CHECK_FALSE(solve_field(B, testsupport::gvec({"0", "1"})).has_value());
}

TEST_CASE("solve_field verified on random consistent systems") {
    std::mt19937_64 rng(104);
    for (int trial = 0; trial < 30; ++trial) {
        std::uniform_int_distribution<std::size_t> dim(1, 4);
        std::size_t rows = dim(rng), cols = dim(rng);
        MatrixF A = random_matrix(rng, rows, cols);
        std::vector<RealElement> truth;
        for (std::size_t j = 0; j < cols; ++j)
            truth.push_back(RealElement(testsupport::random_rational(rng, 6, 4)));
        std::vector<RealElement> b(rows, RealElement(0));
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) b[i] += A(i, j) * truth[j];
        auto x = solve_field(A, b);
        REQUIRE(x.has_value());
        // solution need not equal `truth` when A is deficient, but must solve
        for (std::size_t i = 0; i < rows; ++i) {
            RealElement acc(0);
            for (std::size_t j = 0; j < cols; ++j) acc += A(i, j) * (*x)[j];
            CHECK(acc == b[i]);
        }
    }
}

TEST_CASE("nullspace vectors annihilate the matrix") {
    std::mt19937_64 rng(105);
    for (int trial = 0; trial < 20; ++trial) {
        std::uniform_int_distribution<std::size_t> dim(2, 5);
        std::size_t rows = dim(rng), cols = dim(rng);
        MatrixF M = random_deficient(rng, rows, cols, std::min(rows, cols > 1 ? cols - 1 : 1));
        auto basis = nullspace_field(M);
        CHECK(basis.size() == cols - rank_field(M));
        for (const auto& v : basis) {
            for (std::size_t i = 0; i < rows; ++i) {
                RealElement acc(0);
                for (std::size_t j = 0; j < cols; ++j) acc += M(i, j) * v[j];
                CHECK(acc.is_zero());
            }
        }
    }
}

TEST_CASE("select_basis_columns is greedy left-to-right") {
    // column 2 duplicates column 0, so the basis must be {0, 1}
    MatrixF M = MatrixF::from_columns(2, {testsupport::gvec({"1", "0"}),
                                          testsupport::gvec({"0", "1"}),
                                          testsupport::gvec({"1", "0"}),
                                          testsupport::gvec({"1", "1"})});
    CHECK(select_basis_columns(M) == std::vector<std::size_t>{0, 1});
    // zero leading column is skipped
    MatrixF Z = MatrixF::from_columns(2, {testsupport::gvec({"0", "0"}),
                                          testsupport::gvec({"1", "sqrt(2)"})});
    CHECK(select_basis_columns(Z) == std::vector<std::size_t>{1});
}

// Q-coefficient rows for a value list over its joint surd support, the same
// representation the pipeline feeds to the dependence analysis.
static std::vector<std::vector<Rational>> depvecs(const std::vector<RealElement>& vals) {
    std::set<Int> support{Int(1)};
    for (const auto& v : vals)
        for (const auto& [rad, c] : v.terms()) support.insert(rad);
    std::vector<Int> axes(support.begin(), support.end());
    std::vector<std::vector<Rational>> out;
    for (const auto& v : vals) {
        std::vector<Rational> row(axes.size());
        for (std::size_t i = 0; i < axes.size(); ++i) {
            auto it = v.terms().find(axes[i]);
            if (it != v.terms().end()) row[i] = it->second;
        }
        out.push_back(std::move(row));
    }
    return out;
}

TEST_CASE("rational_dependence on the worked coordinate lists") {
    // {1, 1, sqrt2, 1}: position 0 (the constant) plus sqrt2 at position 2
    auto rep = rational_dependence(depvecs({el("1"), el("1"), el("sqrt(2)"), el("1")}));
    CHECK(rep.independent == std::vector<std::size_t>{0, 2});
    REQUIRE(rep.expressions.count(1));
    CHECK(rep.expressions.at(1) == std::vector<Rational>{Rational(1), Rational(0)});
    REQUIRE(rep.expressions.count(3));
    CHECK(rep.expressions.at(3) == std::vector<Rational>{Rational(1), Rational(0)});

    // {1, 2sqrt2, 2, 3sqrt2}: alpha_3 = (3/2) alpha_1
    auto rep2 = rational_dependence(depvecs({el("1"), el("2*sqrt(2)"), el("2"), el("3*sqrt(2)")}));
    CHECK(rep2.independent == std::vector<std::size_t>{0, 1});
    CHECK(rep2.expressions.at(2) == std::vector<Rational>{Rational(2), Rational(0)});
    CHECK(rep2.expressions.at(3) == std::vector<Rational>{Rational(0), Rational(3, 2)});
}

TEST_CASE("rational_dependence expressions reconstruct each dependent value") {
    std::mt19937_64 rng(106);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<RealElement> vals{el("1")};
        std::uniform_int_distribution<std::size_t> cnt(1, 5);
        std::size_t m = cnt(rng);
        for (std::size_t i = 0; i < m; ++i) vals.push_back(testsupport::random_real(rng));
        auto rep = rational_dependence(depvecs(vals));
        REQUIRE(!rep.independent.empty());
        CHECK(rep.independent[0] == 0);  // constant 1 is nonzero, picked first
        for (const auto& [pos, coeffs] : rep.expressions) {
            REQUIRE(coeffs.size() == rep.independent.size());
            RealElement acc(0);
            for (std::size_t t = 0; t < coeffs.size(); ++t)
                acc += coeffs[t] * vals[rep.independent[t]];
            CHECK(acc == vals[pos]);
        }
    }
}

TEST_CASE("rational_dependence_forced accepts maximal independent sets only") {
    std::vector<RealElement> vals{el("1"), el("1"), el("sqrt(2)"), el("sqrt(2)+1")};
    // forcing position 3 (sqrt2+1) instead of 2 is a valid maximal choice
    auto rep = rational_dependence_forced(depvecs(vals), {0, 3});
    CHECK(rep.independent == std::vector<std::size_t>{0, 3});
    RealElement acc(0);
    auto c2 = rep.expressions.at(2);
    acc = c2[0] * vals[0] + c2[1] * vals[3];
    CHECK(acc == vals[2]);  // sqrt2 = -1 + (sqrt2+1)

    // dependent forced set rejected
    CHECK_THROWS_AS(rational_dependence_forced(depvecs(vals), {0, 1}), InvalidForcedI);
    // non-maximal forced set rejected (2 and 3 independent of {1}? no: {0}
    // alone is not maximal because sqrt2 extends it)
    CHECK_THROWS_AS(rational_dependence_forced(depvecs(vals), {0}), InvalidForcedI);
    // out of range / duplicates rejected
    CHECK_THROWS_AS(rational_dependence_forced(depvecs(vals), {0, 9}), InvalidForcedI);
    CHECK_THROWS_AS(rational_dependence_forced(depvecs(vals), {0, 3, 3}), InvalidForcedI);
}

TEST_CASE("forced and greedy dependence agree on independent-set size") {
    std::mt19937_64 rng(107);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<RealElement> vals{el("1")};
        for (int i = 0; i < 4; ++i) vals.push_back(testsupport::random_real(rng));
        auto greedy = rational_dependence(depvecs(vals));
        auto forced = rational_dependence_forced(depvecs(vals), greedy.independent);
        CHECK(forced.independent == greedy.independent);
    }
}
