#include "orbzeta/kloosterman.hpp"

#include <cmath>
#include <optional>

namespace orbzeta {

namespace {

Integer shift(const KloostermanCell& c) {
    Integer v = 4 * ipow(c.p, c.k);
    return c.sign == DeltaSign::Plus ? v : Integer(-v);
}

// y = (m^2 + shift)/d^2 when the conditions pass
std::optional<Integer> reduced(const KloostermanCell& c, const Integer& m, const Integer& sh) {
    Integer x = m * m + sh;
    Integer d2 = Integer(c.d) * c.d;
    if (x % d2 != 0) return std::nullopt;
    Integer y = x / d2;
    if (c.variant == CongruenceVariant::WithCC) {
        Integer r = y % 4;
        if (r < 0) r += 4;
        if (r != 0 && r != 1) return std::nullopt;
    }
    return y;
}

}  // namespace

bool kloosterman_passes(const KloostermanCell& cell, const Integer& m) {
    return reduced(cell, m, shift(cell)).has_value();
}

long kloosterman(const KloostermanCell& c) {
    if (c.a < 1 || c.d < 1) throw DomainError("a and d must be positive");
    if (Integer(c.a) * c.d * c.d > 1000000) throw GuardError("a d^2 exceeds 10^6");
    Integer sh = shift(c);
    long modulus = 4 * c.a * c.d * c.d;
    long total = 0;
    Integer a = c.a;
    for (long m = 0; m < modulus; ++m)
        if (auto y = reduced(c, m, sh)) total += kronecker(*y, a);
    return total;
}

bool kloosterman_well_defined(const KloostermanCell& c, const Integer& m, int samples) {
    Integer sh = shift(c);
    Integer modulus = Integer(4) * c.a * c.d * c.d;
    Integer a = c.a;
    auto summand = [&](const Integer& x) -> int {
        auto y = reduced(c, x, sh);
        return y ? 2 + kronecker(*y, a) : 0;
    };
    int base = summand(m);
    for (int t = 1; t <= samples; ++t)
        if (summand(m + modulus * t) != base || summand(m - modulus * t) != base) return false;
    return true;
}

EulerFactorResult euler_factor_at_2(int k, Complex s, CongruenceVariant variant, int N, DeltaSign sign) {
    if (k < 0 || N < 0) throw DomainError("k and N must be nonnegative");
    if (N > 9) throw GuardError("truncation above 2^9 exceeds the residue guard");
    const Complex x = std::exp(-s * std::log(2.0));
    const Complex geo = 1.0 / (1.0 - x * x);
    KloostermanCell cell{1, 1, 2, k, sign, variant};
    Integer sh = shift(cell);
    Complex total = 0;
    for (int j = 0; j <= N; ++j) {
        cell.d = 1L << j;
        long m8 = 8 * cell.d * cell.d;
        long k1 = 0, c_even = 0, c_odd = 0;
        for (long m = 0; m < m8; ++m) {
            auto y = reduced(cell, m, sh);
            if (!y) continue;
            ++k1;
            if (mpz_odd_p(y->get_mpz_t())) {
                ++c_even;
                c_odd += kronecker(*y, 2);
            }
        }
        k1 /= 2;  // K_{1,d} runs over m mod 4d^2
        // K_{2^i,d} = 2^{i-1} C_{parity(i)}; sum_i 2^{i-1} x^i / 2^i splits by parity
        Complex a_part = double(k1) + 0.5 * geo * (double(c_odd) * x + double(c_even) * x * x);
        total += a_part * std::exp(-(2.0 * s + 1.0) * std::log(double(cell.d)));
    }
    const double sigma = s.real();
    const int v = 2 + k;
    const double B = std::ldexp(1.0, v / 2 + 2);
    const double r = std::pow(2.0, -(2 * sigma + 1));
    double tail = B * 4 / (1 - std::abs(x)) * std::pow(r, N + 1) / (1 - r);
    return {total / 4.0, tail / 4, N};
}

Complex kloosterman_double_series(const Integer& p, int k, DeltaSign sign, CongruenceVariant variant, Complex s,
                                  long a_max, long d_max, const std::function<bool(long, long)>& keep) {
    Complex total = 0;
    for (long d = 1; d <= d_max; ++d)
        for (long a = 1; a <= a_max; ++a) {
            if (!keep(a, d)) continue;
            long K = kloosterman({a, d, p, k, sign, variant});
            if (!K) continue;
            total += double(K) * std::exp(-(2.0 * s + 1.0) * std::log(double(d)) - (s + 1.0) * std::log(double(a)));
        }
    return total;
}

}  // namespace orbzeta
