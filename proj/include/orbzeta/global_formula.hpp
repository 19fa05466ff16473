#pragma once

#include <vector>

#include "orbzeta/exact_arith.hpp"
#include "orbzeta/number_field.hpp"
#include "orbzeta/order_zeta.hpp"

namespace orbzeta {

struct LocalFactor {
    LocalPrime prime;
    SplitType type;
    int depth;
    ExpPoly jtilde;
};

struct GlobalOrbitalSeries {
    BaseField field;
    AlgebraicInt delta;
    IdealData s_delta;
    std::vector<LocalFactor> factors;  // primes of S_delta only
    ExpPoly product;

    int chi(const LocalPrime& q) const;
};

GlobalOrbitalSeries global_series(const BaseField& field, const AlgebraicInt& delta);
GlobalOrbitalSeries global_series(const BaseField& field, const Mat2& gamma);

/// N(S)^s sum_{d | S} N(d)^{1-2s} prod_{q | S/d} (1 - chi(q) N(q)^{-s})
ExpPoly divisor_expansion(const GlobalOrbitalSeries& series);

/// sum_{d | S} N(d) prod_{q | d} (1 - chi(q)/N(q))
Rational langlands_value(const GlobalOrbitalSeries& series);

/// Product of the local orbital values.
Rational local_value_product(const GlobalOrbitalSeries& series);

enum class PolySign { Plus, Minus };

/// coeff * p^(-k/2)
struct SqrtWeight {
    Rational coeff;
    Integer p;
    int k;

    std::string to_string() const;
    double to_double() const;
};

/// Characteristic polynomial X^2 - tau X + p^k (Plus) or X^2 - tau X - p^k
/// (Minus); delta = tau^2 - 4p^k or tau^2 + 4p^k.
Integer elliptic_delta(const Integer& tau, const Integer& p, int k, PolySign sign);
SqrtWeight normalized_elliptic_weight(const Integer& tau, const Integer& p, int k, PolySign sign);

}  // namespace orbzeta
