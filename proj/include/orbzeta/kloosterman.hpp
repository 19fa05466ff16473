#pragma once

#include <functional>

#include "orbzeta/exact_arith.hpp"

namespace orbzeta {

/// Sign in delta = m^2 + 4p^k (Plus) or m^2 - 4p^k (Minus). The
/// characteristic polynomial X^2 - tau X + p^k has delta sign Minus.
enum class DeltaSign { Plus, Minus };

enum class CongruenceVariant { WithCC, WithoutCC };

struct KloostermanCell {
    long a = 1;
    long d = 1;
    Integer p = 2;
    int k = 0;
    DeltaSign sign = DeltaSign::Minus;
    CongruenceVariant variant = CongruenceVariant::WithCC;
};

/// Whether residue m passes the conditions d^2 | m^2 +- 4p^k and, with
/// congruence conditions, (m^2 +- 4p^k)/d^2 = 0, 1 mod 4.
bool kloosterman_passes(const KloostermanCell& cell, const Integer& m);

/// sum over passing m mod 4 a d^2 of ((m^2 +- 4p^k)/d^2 / a). Guard a d^2 <= 10^6.
long kloosterman(const KloostermanCell& cell);

/// Checks that the summand at m and m + 4ad^2 t agree for t = 1..samples.
bool kloosterman_well_defined(const KloostermanCell& cell, const Integer& m, int samples);

struct EulerFactorResult {
    Complex value;
    double tail_bound;
    int truncation;
};

/// 2-part of (1/4) sum_{a,d} K_{a,d} / (d^{2s+1} a^{s+1}), d <= 2^N.
EulerFactorResult euler_factor_at_2(int k, Complex s, CongruenceVariant variant, int N,
                                    DeltaSign sign = DeltaSign::Minus);

/// sum over a <= a_max, d <= d_max with keep(a, d) of K_{a,d} / (d^{2s+1} a^{s+1}).
Complex kloosterman_double_series(const Integer& p, int k, DeltaSign sign, CongruenceVariant variant, Complex s,
                                  long a_max, long d_max, const std::function<bool(long, long)>& keep);

}  // namespace orbzeta
