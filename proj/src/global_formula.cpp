#include "orbzeta/global_formula.hpp"

#include <cmath>

namespace orbzeta {

int GlobalOrbitalSeries::chi(const LocalPrime& q) const {
    for (const auto& f : factors)
        if (f.prime == q) return chi_value(f.type);
    return chi_value(local_split_type_unchecked(delta, q).type);
}

GlobalOrbitalSeries global_series(const BaseField& field, const AlgebraicInt& delta) {
    DeltaData data = analyze_delta(field, delta);
    GlobalOrbitalSeries out{field, delta, data.s_delta, {}, ExpPoly::constant(1)};
    for (const auto& [q, c] : data.local) {
        if (c.depth == 0) continue;
        ExpPoly j = jtilde(order_polynomial(c.type, c.depth, q.residue_size()));
        out.product *= j;
        out.factors.push_back({q, c.type, c.depth, std::move(j)});
    }
    return out;
}

GlobalOrbitalSeries global_series(const BaseField& field, const Mat2& gamma) {
    return global_series(field, gamma.discriminant(field));
}

ExpPoly divisor_expansion(const GlobalOrbitalSeries& series) {
    const IdealData& S = series.s_delta;
    ExpPoly sum;
    for (const IdealData& d : S.divisors()) {
        Integer nd = d.norm();
        ExpPoly term = ExpPoly::monomial(nd, nd * nd);
        for (const auto& [q, e] : S.quotient(d).factors) term *= ExpPoly::euler_factor(series.chi(q), q.residue_size());
        sum += term;
    }
    return ExpPoly::monomial(1, make_rational(1, S.norm())) * sum;
}

Rational langlands_value(const GlobalOrbitalSeries& series) {
    Rational total = 0;
    for (const IdealData& d : series.s_delta.divisors()) {
        Rational term = d.norm();
        for (const auto& [q, e] : d.factors) term *= 1 - make_rational(series.chi(q), q.residue_size());
        total += term;
    }
    return total;
}

Rational local_value_product(const GlobalOrbitalSeries& series) {
    Rational v = 1;
    for (const auto& f : series.factors) v *= orbital_value(f.type, f.depth, f.prime.residue_size());
    return v;
}

std::string SqrtWeight::to_string() const {
    if (k == 0) return orbzeta::to_string(coeff);
    return orbzeta::to_string(coeff) + "*" + p.get_str() + "^(-" + std::to_string(k) + "/2)";
}

double SqrtWeight::to_double() const {
    return coeff.get_d() * std::pow(p.get_d(), -0.5 * k);
}

Integer elliptic_delta(const Integer& tau, const Integer& p, int k, PolySign sign) {
    Integer pk4 = 4 * ipow(p, k);
    Integer t2 = tau * tau;
    return sign == PolySign::Plus ? Integer(t2 - pk4) : Integer(t2 + pk4);
}

SqrtWeight normalized_elliptic_weight(const Integer& tau, const Integer& p, int k, PolySign sign) {
    if (!is_prime(p)) throw DomainError(p.get_str() + " is not prime");
    if (k < 0) throw DomainError("k must be nonnegative");
    Integer delta = elliptic_delta(tau, p, k, sign);
    auto series = global_series(BaseField::rational(), AlgebraicInt(delta));
    return {langlands_value(series), p, k};
}

}  // namespace orbzeta
