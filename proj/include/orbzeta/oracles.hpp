#pragma once

#include <array>
#include <vector>

#include "orbzeta/exact_arith.hpp"

namespace orbzeta {

using IntMat2 = std::array<long, 4>;  // row-major integral matrix

enum class TreeCase { Elliptic, Split };

struct TreeOracleResult {
    bool conclusive = false;
    TreeCase kind = TreeCase::Elliptic;
    bool ramified = false;
    std::vector<long> level_counts;  // stable vertices at each distance from the standard lattice
    int radius = 0;                  // last distance explored
    Rational value = 0;
};

/// Counts homothety classes of lattices L with gamma L inside L by a BFS in the
/// tree of PGL(2, Q_p). Elliptic gamma: total count divided by vol(T/Z).
/// Gamma with a square discriminant in Q_p: stable per-level count divided by 2.
TreeOracleResult tree_orbital_oracle(const IntMat2& gamma, long p, int r_max = 40);

/// Ideal counts of index n = 1..N (index 0 unused) in Z[gamma], gamma^2 =
/// r gamma + m, delta = r^2 + 4m, by Hermite normal forms.
std::vector<long> global_ideal_count_oracle(long delta, long N);

}  // namespace orbzeta
