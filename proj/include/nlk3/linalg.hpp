#pragma once

// Exact linear algebra over Q used by the fitting routines.

#include <nlk3/rational.hpp>

#include <vector>

namespace nlk3 {

struct LinearSolution {
    std::vector<Rat> x;  // valid iff rank == unknowns and consistent
    int rank = 0;
    bool consistent = true;
};

// Gauss-Jordan on an (equations x unknowns) system; surplus rows are checked
// for consistency against the reduced system.
LinearSolution solve_exact(std::vector<std::vector<Rat>> m, std::vector<Rat> rhs, int unknowns);

// rank of an arbitrary rational matrix
int exact_rank(std::vector<std::vector<Rat>> m);

}  // namespace nlk3
