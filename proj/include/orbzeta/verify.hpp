#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "orbzeta/number_field.hpp"
#include "orbzeta/oracles.hpp"

namespace orbzeta {

/// Pseudo-random valid delta (nonzero, nonsquare, square mod 4) from a seed.
/// Over Q, |delta| <= bound; over quadratic fields coordinates stay below
/// roughly sqrt(bound).
std::vector<AlgebraicInt> random_deltas(const BaseField& field, std::size_t count, std::uint64_t seed,
                                        long bound = 1000000);

/// delta = tau^2 -+ 4 p^k for p in {2,3,5}, k <= 4, |tau| <= 50, skipping squares.
std::vector<Integer> elliptic_sweep_deltas();

struct CheckOutcome {
    bool ok = true;
    nlohmann::json detail;
};

/// reflect(product) == product
CheckOutcome check_functional_equation(const BaseField& field, const AlgebraicInt& delta);
/// divisor_expansion == product, langlands_value == value at 1 == local value product
CheckOutcome check_arthur(const BaseField& field, const AlgebraicInt& delta);
/// satisfies_congruence(I) <=> I | S_delta over the given ideals
CheckOutcome check_congruence(const BaseField& field, const AlgebraicInt& delta, const std::vector<IdealData>& ideals);
/// no_solution_witness over every odd t and unit residue, at every prime over 2
CheckOutcome check_no_solution(const BaseField& field);
/// times_v(count_ideals_oracle) == family polynomial
CheckOutcome check_local_oracle(SplitType type, int n, long p, int j_max);
/// global ideal counts == zeta_K * prod P_p coefficients
CheckOutcome check_global_oracle(long delta, long N);

struct TreeSample {
    IntMat2 gamma;
    long p;
    SplitType type;
    int depth;
};

/// Companion matrices covering every (type, depth <= max_depth) at p in {2,3,5}.
std::vector<TreeSample> tree_corpus(int per_cell = 2, int max_depth = 2);
CheckOutcome check_tree(const TreeSample& c);

/// |Lambda(s) - Lambda(1-s)| < tol (1 + |Lambda(s)|) on a grid of `points` in the strip.
CheckOutcome check_zagier_fe(const Integer& delta, int points = 20, double tol = 1e-8);
std::vector<Complex> strip_grid(int points);

}  // namespace orbzeta
