#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "groupdim/group.hpp"

namespace groupdim {

struct OracleOptions {
    std::int64_t coefficient_bound = 1000;  // K: enumerate |c_k| <= K
    double epsilon = 0.01;
    std::uint64_t node_budget = 200000000;  // DFS nodes before BudgetExceeded
};

/// Desk-scale density cross-check, independent of the matrix pipeline.
///
/// Enumerates group elements sum_k c_k u_k with |c_k| <= K (double
/// arithmetic) whose coordinates lie within [-eps, 1+eps] on the target
/// axes and within [-eps, eps] on all other axes, then answers whether every
/// center of an eps-grid over the unit box of the target subspace has a
/// sample within eps in the sup norm. The enumeration prunes each generator's
/// coefficient range by interval arithmetic against those windows, so a true
/// verdict may return early but a false verdict is exhaustive.
///
/// `axes` are distinct 0-based ambient coordinates spanning the target
/// subspace; the unit box is [0,1]^axes x {0}^rest.
bool epsilon_net_oracle(const GroupSpec& G, const std::vector<std::size_t>& axes,
                        const OracleOptions& opts = {});

}  // namespace groupdim
