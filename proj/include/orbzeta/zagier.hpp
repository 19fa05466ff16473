#pragma once

#include <vector>

#include "orbzeta/exact_arith.hpp"
#include "orbzeta/global_formula.hpp"
#include "orbzeta/number_field.hpp"

namespace orbzeta {

struct ZagierDecomposition {
    BaseField field;
    AlgebraicInt delta;
    IdealData s_delta;
    std::vector<IdealData> admissible;  // ideals passing the congruence conditions
    std::vector<IdealData> dropped;     // S_delta / I, aligned with `admissible`
    ExpPoly z;                          // sum' N(I)^{1-2s} prod_{q | S/I} (1 - chi(q) N(q)^{-s})
    ExpPoly orbital;                    // O(s, delta)
};

/// Throws Error if the congruence-admissible ideals differ from the divisors
/// of S_delta or if N(S)^s Z(s) != O(s, delta).
ZagierDecomposition zagier_decompose(const BaseField& field, const AlgebraicInt& delta);

struct DiscriminantSplit {
    Integer fundamental;  // D
    Integer index;        // g with delta = g^2 D
};

DiscriminantSplit split_discriminant(const Integer& delta);
bool is_fundamental_discriminant(const Integer& D);

/// zeta(s, x) for 0 < x <= 1, s != 1.
Complex hurwitz_zeta(Complex s, double x);
Complex complex_gamma(Complex z);

/// L(s, chi_D) for a fundamental discriminant D != 1.
Complex dirichlet_L(Complex s, const Integer& D);

/// N(S)^{-s} O(s, delta) L(s, chi_D).
Complex zagier_L(Complex s, const Integer& delta);
/// sum' f^{1-2s} L(s, chi_{delta/f^2}) with imprimitive characters obtained
/// by removing Euler factors from chi_D.
Complex zagier_L_direct(Complex s, const Integer& delta);

struct CompletedZagier {
    Integer delta;
    Integer fundamental;
    Integer conductor;
    int parity = 0;  // 0 for delta > 0
    Integer s_norm;
    ExpPoly orbital;

    static CompletedZagier make(const Integer& delta);
    Complex L(Complex s) const;
    Complex lambda(Complex s) const;
    /// Lambda(s, chi_D) O(s, delta)
    Complex lambda_factored(Complex s) const;
};

Complex completed_lambda(Complex s, const Integer& delta);

/// Dirichlet coefficients a_1..a_N (index 0 unused) of
/// zeta_{Q(sqrt delta)}(s) prod_{p | S} P_p(p^{-s}).
std::vector<Integer> global_order_coefficients(const Integer& delta, long N);

}  // namespace orbzeta
