#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "brute.hpp"
#include "orbzeta/kloosterman.hpp"

using namespace orbzeta;

namespace {

long brute_cell(long a, long d, long p, int k, int sign, bool cc) {
    long pk = 1;
    for (int i = 0; i < k; ++i) pk *= p;
    long total = 0;
    for (long m = 0; m < 4 * a * d * d; ++m) {
        long x = m * m + sign * 4 * pk;
        if (x % (d * d)) continue;
        long y = x / (d * d);
        if (cc && brute::mod(y, 4) > 1) continue;
        total += brute::kronecker(y, a);
    }
    return total;
}

bool power_of_two(long n) { return (n & (n - 1)) == 0; }

long odd_part(long n) {
    while (n % 2 == 0) n /= 2;
    return n;
}

}  // namespace

TEST_CASE("cell values against brute force") {
    for (long p : {2L, 3L, 5L})
        for (int k = 0; k <= 3; ++k)
            for (auto sign : {DeltaSign::Plus, DeltaSign::Minus})
                for (auto v : {CongruenceVariant::WithCC, CongruenceVariant::WithoutCC}) {
                    CHECK(kloosterman({1, 1, p, k, sign, v}) == 4);
                    for (long a = 1; a <= 12; ++a)
                        for (long d = 1; d <= 4; ++d)
                            CHECK(kloosterman({a, d, p, k, sign, v}) ==
                                  brute_cell(a, d, p, k, sign == DeltaSign::Plus ? 1 : -1,
                                             v == CongruenceVariant::WithCC));
                }
    CHECK_THROWS_AS(kloosterman({1000, 100, 2, 1}), GuardError);
    CHECK_THROWS_AS(kloosterman({0, 1, 2, 1}), DomainError);
}

TEST_CASE("empty cells") {
    // d = 9 with m^2 - 4*2 : 9 | m^2 - 8 needs m^2 = 8 mod 9, impossible
    CHECK(kloosterman({1, 9, 2, 1, DeltaSign::Minus}) == 0);
    CHECK(brute_cell(1, 9, 2, 1, -1, true) == 0);
}

TEST_CASE("multiplicativity") {
    for (auto v : {CongruenceVariant::WithCC, CongruenceVariant::WithoutCC})
        for (long a1 = 1; a1 <= 30; ++a1)
            for (long a2 = 1; a2 <= 30 / a1 + 1; ++a2)
                for (long d1 = 1; d1 <= 6; ++d1)
                    for (long d2 = 1; d1 * d2 <= 6; ++d2) {
                        if (std::gcd(a1 * d1, a2 * d2) != 1) continue;
                        KloostermanCell c1{a1, d1, 3, 2, DeltaSign::Minus, v};
                        KloostermanCell c2{a2, d2, 3, 2, DeltaSign::Minus, v};
                        KloostermanCell c{a1 * a2, d1 * d2, 3, 2, DeltaSign::Minus, v};
                        INFO(a1 << "," << d1 << " x " << a2 << "," << d2);
                        CHECK(4 * kloosterman(c) == kloosterman(c1) * kloosterman(c2));
                    }
}

TEST_CASE("well-definedness") {
    std::mt19937_64 rng(101);
    for (int i = 0; i < 100; ++i) {
        KloostermanCell c{long(rng() % 40) + 1,
                          long(rng() % 8) + 1,
                          std::vector<long>{2, 3, 5, 7}[rng() % 4],
                          int(rng() % 5),
                          rng() % 2 ? DeltaSign::Plus : DeltaSign::Minus,
                          rng() % 2 ? CongruenceVariant::WithCC : CongruenceVariant::WithoutCC};
        Integer m = long(rng() % 100000);
        CHECK(kloosterman_well_defined(c, m, 5));
    }
}

TEST_CASE("variants agree when every residue passes") {
    for (long p : {2L, 3L, 5L})
        for (int k = 0; k <= 3; ++k)
            for (long a = 1; a <= 15; ++a)
                for (long d : {1L, 3L, 5L}) {
                    KloostermanCell w{a, d, p, k, DeltaSign::Minus, CongruenceVariant::WithCC};
                    KloostermanCell wo = w;
                    wo.variant = CongruenceVariant::WithoutCC;
                    CHECK(kloosterman(w) == kloosterman(wo));
                }
}

TEST_CASE("closed-form a-sum matches direct summation") {
    for (auto v : {CongruenceVariant::WithCC, CongruenceVariant::WithoutCC})
        for (int k = 0; k <= 3; ++k) {
            Complex s = 2;
            auto e = euler_factor_at_2(k, s, v, 3);
            Complex direct = kloosterman_double_series(2, k, DeltaSign::Minus, v, s, 1024, 8,
                                                       [](long a, long d) { return power_of_two(a) && power_of_two(d); });
            CHECK(std::abs(e.value - direct / 4.0) < 1e-5);
        }
}

TEST_CASE("two-part times odd part reproduces the double series") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 10; ++i) {
        long p = std::vector<long>{3, 5, 7}[rng() % 3];
        int k = int(rng() % 4);
        auto sign = rng() % 2 ? DeltaSign::Plus : DeltaSign::Minus;
        auto v = rng() % 2 ? CongruenceVariant::WithCC : CongruenceVariant::WithoutCC;
        Complex s(1 + 0.25 * double(rng() % 5), 0.5 * double(rng() % 3));
        auto in_box = [](long a, long d) {
            return a / odd_part(a) <= 8 && odd_part(a) <= 9 && d / odd_part(d) <= 4 && odd_part(d) <= 5;
        };
        Complex full = kloosterman_double_series(p, k, sign, v, s, 72, 20, in_box);
        Complex two = kloosterman_double_series(p, k, sign, v, s, 8, 4,
                                                [](long a, long d) { return power_of_two(a) && power_of_two(d); });
        Complex odd = kloosterman_double_series(p, k, sign, v, s, 9, 5,
                                                [](long a, long d) { return a % 2 && d % 2; });
        INFO(p << " k=" << k << " s=" << s);
        CHECK(std::abs(full - two * odd / 4.0) < 1e-10 * std::abs(full));
    }
}

TEST_CASE("Euler factor at 2") {
    for (int k : {1, 3}) {
        auto e = euler_factor_at_2(k, 1, CongruenceVariant::WithoutCC, 9);
        double want = (1 - std::ldexp(1.0, -(k + 3))) / 0.5;
        CHECK(std::abs(e.value - want) <= e.tail_bound);
        CHECK(std::abs(e.value.imag()) < 1e-12);
    }
    for (int k = 0; k <= 4; ++k)
        for (auto sign : {DeltaSign::Plus, DeltaSign::Minus}) {
            auto e = euler_factor_at_2(k, 1, CongruenceVariant::WithCC, 9, sign);
            CHECK(std::abs(e.value - 2 * (1 - std::ldexp(1.0, -(k + 1)))) <= e.tail_bound);
        }
    // the tail bound shrinks with N and covers the gap to the N = 9 value
    auto hi = euler_factor_at_2(2, 1, CongruenceVariant::WithoutCC, 9);
    for (int N = 2; N < 9; ++N) {
        auto lo = euler_factor_at_2(2, 1, CongruenceVariant::WithoutCC, N);
        CHECK(std::abs(lo.value - hi.value) <= lo.tail_bound);
        CHECK(hi.tail_bound < lo.tail_bound);
    }
    CHECK_THROWS_AS(euler_factor_at_2(1, 1, CongruenceVariant::WithoutCC, 12), GuardError);
}
