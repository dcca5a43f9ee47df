#pragma once

#include <vector>

namespace waudit {

// Min-cost perfect matching on an n x n cost matrix (row-major), O(n^3)
// shortest-augmenting-path form with potentials. Returns the column
// assigned to each row. Deterministic for tied costs.
std::vector<int> min_cost_assignment(const std::vector<double>& cost, int n);

}  // namespace waudit
