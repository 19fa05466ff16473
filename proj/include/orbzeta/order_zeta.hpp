#pragma once

#include <vector>

#include "orbzeta/exact_arith.hpp"
#include "orbzeta/number_field.hpp"

namespace orbzeta {

/// R_n (ramified), U_n (inert) or S_n (split) over residue size q.
struct OrderZetaPolynomial {
    SplitType family = SplitType::Split;
    int n = 0;
    Integer q = 2;
    std::vector<Integer> coeffs;  // coefficient of X^j, length 2n + 1

    /// (q X^2)^n P(1/(qX)) == P(X), coefficient-wise.
    bool satisfies_functional_equation() const;
    Rational eval(const Rational& x) const;
    std::string to_string() const;
};

OrderZetaPolynomial order_polynomial(SplitType family, int n, const Integer& q);

/// q^{ns} P(q^{-s}); X^j becomes the term with base q^{j-n}.
ExpPoly jtilde(const OrderZetaPolynomial& poly);

/// q^{ns} sum_{j<=n} q^{j(1-2s)} (1 - chi q^{-s})^{[j<n]}
ExpPoly jtilde_divisor_form(SplitType type, int n, const Integer& q);

Rational orbital_value(SplitType type, int m, const Integer& q);

/// Number of ideals of index p^j, j = 0..j_max, in Z_p[p^n Delta] where
/// Z_p[Delta] is the maximal order of the etale algebra of the given type.
/// Only prime residue size is supported.
std::vector<long> count_ideals_oracle(SplitType type, int n, const Integer& p, int j_max);

/// Multiplies a truncated count series by V(X) = (1 - X)(1 - chi X), which
/// turns zeta_n into the family polynomial.
std::vector<Integer> times_v(SplitType type, const std::vector<long>& counts);

}  // namespace orbzeta
