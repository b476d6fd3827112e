#include "groupdim/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>

#include "groupdim/errors.hpp"

namespace groupdim {

namespace {

constexpr double kSlack = 1e-9;  // absorbs double rounding at window borders

struct Search {
    std::size_t n = 0;
    std::size_t m = 0;
    std::vector<std::vector<double>> gens;  // m x n
    std::vector<double> lo, hi;             // admissible window per coordinate
    std::vector<std::vector<double>> rem;   // rem[j][i] = K * sum_{k>=j} |gens[k][i]|
    std::int64_t K = 0;

    std::vector<std::size_t> axes;
    std::size_t grid = 0;  // centers per axis
    double h = 0.0;
    double eps = 0.0;
    std::vector<std::size_t> stride;
    std::vector<char> covered;
    std::size_t covered_count = 0;

    std::uint64_t nodes = 0;
    std::uint64_t budget = 0;

    bool done() const { return covered_count == covered.size(); }

    void tick() {
        if (++nodes > budget)
            throw BudgetExceeded("epsilon-net enumeration exceeded the node budget");
    }

    void record(const std::vector<double>& point) {
        // Index ranges of centers within eps of the point, per target axis.
        std::vector<std::size_t> ilo(axes.size()), ihi(axes.size());
        for (std::size_t a = 0; a < axes.size(); ++a) {
            double p = point[axes[a]];
            double flo = std::ceil((p - eps - kSlack) / h - 0.5);
            double fhi = std::floor((p + eps + kSlack) / h - 0.5);
            if (fhi < 0 || flo > double(grid - 1) || fhi < flo) return;
            ilo[a] = std::size_t(std::max(0.0, flo));
            ihi[a] = std::size_t(std::min(double(grid - 1), fhi));
        }
        std::vector<std::size_t> idx = ilo;
        while (true) {
            std::size_t cell = 0;
            for (std::size_t a = 0; a < axes.size(); ++a) cell += idx[a] * stride[a];
            if (!covered[cell]) {
                covered[cell] = 1;
                ++covered_count;
            }
            std::size_t a = 0;
            while (a < axes.size() && idx[a] == ihi[a]) {
                idx[a] = ilo[a];
                ++a;
            }
            if (a == axes.size()) break;
            ++idx[a];
        }
    }

    void dfs(std::size_t j, std::vector<double>& point) {
        tick();
        if (done()) return;
        if (j == m) {
            record(point);
            return;
        }

        // Intersect the admissible coefficient interval over all coordinates;
        // the still-unfixed generators contribute slack rem[j+1].
        double clo = double(-K), chi = double(K);
        for (std::size_t i = 0; i < n; ++i) {
            double u = gens[j][i];
            if (u == 0.0) continue;
            double s = rem[j + 1][i] + kSlack;
            double a = (lo[i] - point[i] - s) / u;
            double b = (hi[i] - point[i] + s) / u;
            if (u < 0) std::swap(a, b);
            clo = std::max(clo, a);
            chi = std::min(chi, b);
        }
        std::int64_t cmin = std::int64_t(std::ceil(clo - kSlack));
        std::int64_t cmax = std::int64_t(std::floor(chi + kSlack));

        for (std::int64_t c = cmin; c <= cmax && !done(); ++c) {
            for (std::size_t i = 0; i < n; ++i) point[i] += double(c) * gens[j][i];
            dfs(j + 1, point);
            for (std::size_t i = 0; i < n; ++i) point[i] -= double(c) * gens[j][i];
        }
    }
};

}  // namespace

bool epsilon_net_oracle(const GroupSpec& G, const std::vector<std::size_t>& axes,
                        const OracleOptions& opts) {
    G.validate();
    if (axes.empty()) throw InvalidInput("oracle target needs at least one axis");
    std::set<std::size_t> seen;
    for (std::size_t a : axes) {
        if (a >= G.n) throw InvalidInput("oracle axis exceeds the ambient dimension");
        if (!seen.insert(a).second) throw InvalidInput("duplicate oracle axis");
    }
    if (opts.coefficient_bound < 1) throw InvalidInput("coefficient bound must be >= 1");
    if (!(opts.epsilon > 0)) throw InvalidInput("epsilon must be positive");

    Search s;
    s.n = G.n;
    s.m = G.generators.size();
    s.K = opts.coefficient_bound;
    s.eps = opts.epsilon;
    s.budget = opts.node_budget;
    s.axes = axes;

    s.gens.assign(s.m, std::vector<double>(s.n));
    for (std::size_t k = 0; k < s.m; ++k)
        for (std::size_t i = 0; i < s.n; ++i) s.gens[k][i] = G.generators[k][i].to_double();

    s.lo.assign(s.n, -s.eps);
    s.hi.assign(s.n, s.eps);
    for (std::size_t a : axes) s.hi[a] = 1.0 + s.eps;

    s.rem.assign(s.m + 1, std::vector<double>(s.n, 0.0));
    for (std::size_t j = s.m; j-- > 0;)
        for (std::size_t i = 0; i < s.n; ++i)
            s.rem[j][i] = s.rem[j + 1][i] + double(s.K) * std::fabs(s.gens[j][i]);

    s.grid = std::size_t(std::ceil(1.0 / s.eps - kSlack));
    s.h = 1.0 / double(s.grid);

    double cells = 1.0;
    for (std::size_t a = 0; a < axes.size(); ++a) cells *= double(s.grid);
    if (cells > 4e6) throw BudgetExceeded("epsilon grid too fine for the target dimension");

    s.stride.assign(axes.size(), 1);
    for (std::size_t a = 1; a < axes.size(); ++a) s.stride[a] = s.stride[a - 1] * s.grid;
    s.covered.assign(std::size_t(cells), 0);

    std::vector<double> point(s.n, 0.0);
    s.dfs(0, point);
    return s.done();
}

}  // namespace groupdim
