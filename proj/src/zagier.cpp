#include "orbzeta/zagier.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace orbzeta {

ZagierDecomposition zagier_decompose(const BaseField& field, const AlgebraicInt& delta) {
    auto series = global_series(field, delta);
    ZagierDecomposition out{field, delta, series.s_delta, {}, {}, {}, series.product};

    // candidates: every I with I^2 | (delta)
    IdealData square_part;
    for (const LocalPrime& q : prime_divisors(field, delta)) {
        int v = q.valuation(delta) / 2;
        if (v > 0) square_part.factors.emplace_back(q, v);
    }
    for (const IdealData& I : square_part.divisors()) {
        if (!satisfies_congruence(field, I, delta)) continue;
        if (!I.divides(series.s_delta))
            throw Error("admissible ideal " + I.to_string() + " does not divide S_delta = " + series.s_delta.to_string());
        out.admissible.push_back(I);
        IdealData rest = series.s_delta.quotient(I);
        Integer ni = I.norm();
        ExpPoly term = ExpPoly::monomial(ni, ni * ni);
        for (const auto& [q, e] : rest.factors) term *= ExpPoly::euler_factor(series.chi(q), q.residue_size());
        out.z += term;
        out.dropped.push_back(std::move(rest));
    }
    if (out.admissible.size() != series.s_delta.divisors().size())
        throw Error("some divisor of S_delta fails the congruence conditions");
    if (!(ExpPoly::monomial(1, make_rational(1, series.s_delta.norm())) * out.z == out.orbital))
        throw Error("N(S)^s Z(s) differs from O(s, delta)");
    return out;
}

DiscriminantSplit split_discriminant(const Integer& delta) {
    if (delta == 0) throw DomainError("zero discriminant");
    Integer core = delta < 0 ? -1 : 1;
    for (const auto& [p, e] : factor(delta).factors)
        if (e % 2) core *= p;
    Integer m4 = core % 4;
    if (m4 < 0) m4 += 4;
    Integer D = m4 == 1 ? core : 4 * core;
    Integer q = delta / D;
    if (delta % D != 0 || !is_perfect_square(q)) throw DomainError("delta " + delta.get_str() + " is not a discriminant");
    return {D, sqrt(q)};
}

bool is_fundamental_discriminant(const Integer& D) {
    if (D == 0 || D == 1) return false;
    Integer m4 = D % 4;
    if (m4 < 0) m4 += 4;
    if (m4 != 0 && m4 != 1) return false;
    return split_discriminant(D).index == 1;
}

namespace {

// B_2, B_4, ..., B_24
constexpr std::array<double, 12> kBernoulli = {
    1.0 / 6,        -1.0 / 30,      1.0 / 42,          -1.0 / 30,     5.0 / 66,          -691.0 / 2730,
    7.0 / 6,        -3617.0 / 510,  43867.0 / 798,     -174611.0 / 330, 854513.0 / 138,  -236364091.0 / 2730,
};
constexpr int kShift = 30;

// (e^z - 1) / z
Complex expm1_over(Complex z) {
    if (std::abs(z) < 1e-3) return 1.0 + z / 2.0 + z * z / 6.0 + z * z * z / 24.0 + z * z * z * z / 120.0;
    return (std::exp(z) - 1.0) / z;
}

// zeta(s, x) - 1/(s - 1)
Complex hurwitz_regular(Complex s, double x) {
    Complex sum = 0;
    for (int k = 0; k < kShift; ++k) sum += std::exp(-s * std::log(k + x));
    double a = kShift + x;
    double la = std::log(a);
    // ((N+x)^{1-s} - 1)/(s - 1)
    sum += -la * expm1_over((1.0 - s) * la);
    Complex a_s = std::exp(-s * la);
    sum += a_s / 2.0;
    Complex rising = s;  // s (s+1) ... (s+2j-2)
    Complex power = a_s / a;
    double fact = 2;  // (2j)!
    for (int j = 1; j <= static_cast<int>(kBernoulli.size()); ++j) {
        sum += kBernoulli[j - 1] / fact * rising * power;
        rising *= (s + double(2 * j - 1)) * (s + double(2 * j));
        power /= a * a;
        fact *= double(2 * j + 1) * double(2 * j + 2);
    }
    return sum;
}

}  // namespace

Complex hurwitz_zeta(Complex s, double x) {
    if (!(x > 0 && x <= 1)) throw DomainError("hurwitz_zeta needs 0 < x <= 1");
    if (s == Complex(1, 0)) throw DomainError("hurwitz_zeta has a pole at s = 1");
    return hurwitz_regular(s, x) + 1.0 / (s - 1.0);
}

Complex complex_gamma(Complex z) {
    static constexpr std::array<double, 9> c = {
        0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
        771.32342877765313,   -176.61502916214059,   12.507343278686905,
        -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7,
    };
    constexpr double pi = std::numbers::pi;
    if (z.real() < 0.5) return pi / (std::sin(pi * z) * complex_gamma(1.0 - z));
    z -= 1.0;
    Complex x = c[0];
    for (int i = 1; i < 9; ++i) x += c[i] / (z + double(i));
    Complex t = z + 7.5;
    return std::sqrt(2 * pi) * std::exp((z + 0.5) * std::log(t) - t) * x;
}

Complex dirichlet_L(Complex s, const Integer& D) {
    if (D == 1) throw DomainError("D = 1 gives the Riemann zeta function, excluded");
    if (!is_fundamental_discriminant(D)) throw DomainError(D.get_str() + " is not a fundamental discriminant");
    long n = Integer(abs(D)).get_si();
    Complex sum = 0;
    for (long a = 1; a <= n; ++a) {
        int chi = kronecker(D, a);
        if (chi) sum += double(chi) * hurwitz_regular(s, double(a) / double(n));
    }
    return std::exp(-s * std::log(double(n))) * sum;
}

Complex zagier_L(Complex s, const Integer& delta) {
    return CompletedZagier::make(delta).L(s);
}

Complex zagier_L_direct(Complex s, const Integer& delta) {
    auto [D, g] = split_discriminant(delta);
    if (D == 1) throw DomainError("delta is a square");
    Complex lD = dirichlet_L(s, D);
    Complex total = 0;
    for (Integer f = 1; f * f <= abs(delta); ++f) {
        if (delta % (f * f) != 0) continue;
        Integer d = delta / (f * f);
        Integer m4 = d % 4;
        if (m4 < 0) m4 += 4;
        if (m4 != 0 && m4 != 1) continue;
        Integer h = split_discriminant(d).index;
        Complex l = lD;
        for (const auto& [p, e] : factor(h).factors)
            l *= 1.0 - double(kronecker(D, p)) * std::exp(-s * std::log(p.get_d()));
        total += std::exp((1.0 - 2.0 * s) * std::log(f.get_d())) * l;
    }
    return total;
}

CompletedZagier CompletedZagier::make(const Integer& delta) {
    auto [D, g] = split_discriminant(delta);
    if (D == 1) throw SquareDeltaError("delta " + delta.get_str() + " is a square");
    auto series = global_series(BaseField::rational(), AlgebraicInt(delta));
    CompletedZagier z;
    z.delta = delta;
    z.fundamental = D;
    z.conductor = abs(D);
    z.parity = delta > 0 ? 0 : 1;
    z.s_norm = series.s_delta.norm();
    z.orbital = series.product;
    if (z.s_norm != g) throw Error("N(S_delta) differs from the discriminant index");
    return z;
}

Complex CompletedZagier::L(Complex s) const {
    return std::exp(-s * std::log(s_norm.get_d())) * orbital.eval(s) * dirichlet_L(s, fundamental);
}

Complex CompletedZagier::lambda(Complex s) const {
    double a = std::abs(delta.get_d()) / std::numbers::pi;
    return std::exp(s / 2.0 * std::log(a)) * complex_gamma((s + double(parity)) / 2.0) * L(s);
}

Complex CompletedZagier::lambda_factored(Complex s) const {
    double a = conductor.get_d() / std::numbers::pi;
    Complex lam = std::exp(s / 2.0 * std::log(a)) * complex_gamma((s + double(parity)) / 2.0) * dirichlet_L(s, fundamental);
    return lam * orbital.eval(s);
}

Complex completed_lambda(Complex s, const Integer& delta) { return CompletedZagier::make(delta).lambda(s); }

std::vector<Integer> global_order_coefficients(const Integer& delta, long N) {
    auto [D, g] = split_discriminant(delta);
    if (D == 1) throw SquareDeltaError("delta is a square");
    std::vector<Integer> c(N + 1, 0);
    for (long d = 1; d <= N; ++d) {
        int chi = kronecker(D, d);
        if (!chi) continue;
        for (long m = d; m <= N; m += d) c[m] += chi;
    }
    auto series = global_series(BaseField::rational(), AlgebraicInt(delta));
    for (const auto& f : series.factors) {
        auto P = order_polynomial(f.type, f.depth, f.prime.residue_size());
        long p = f.prime.p().get_si();
        std::vector<Integer> next(N + 1, 0);
        for (long n = 1; n <= N; ++n) {
            if (c[n] == 0) continue;
            long pj = 1;
            for (std::size_t j = 0; j < P.coeffs.size() && n * pj <= N; ++j, pj *= p) next[n * pj] += c[n] * P.coeffs[j];
        }
        c = std::move(next);
    }
    return c;
}

}  // namespace orbzeta
