#include <doctest.h>

#include <cmath>
#include <numbers>

#include "brute.hpp"
#include "orbzeta/verify.hpp"
#include "orbzeta/zagier.hpp"

using namespace orbzeta;

namespace {

const double kPi = std::numbers::pi;

bool fundamental(long D) { return D != 0 && D != 1 && brute::field_discriminant(D) == D; }

// L(1, chi_D) via the finite formulas: -(pi/|D|^{3/2}) sum a chi(a) for D < 0
// and -(1/sqrt D) sum chi(a) log sin(pi a / D) for D > 0.
double l1_oracle(long D) {
    long n = std::labs(D);
    double s = 0;
    for (long a = 1; a < n; ++a) {
        int c = brute::kronecker(D, a);
        if (D < 0) s += a * c;
        else if (c) s += c * std::log(std::sin(kPi * a / n));
    }
    return D < 0 ? -kPi * s / std::pow(n, 1.5) : -s / std::sqrt(double(n));
}

}  // namespace

TEST_CASE("special values") {
    CHECK(std::abs(hurwitz_zeta(2, 1.0) - kPi * kPi / 6) < 1e-12);
    CHECK(std::abs(hurwitz_zeta(Complex(0, 0), 0.5)) < 1e-12);  // zeta(0, x) = 1/2 - x
    CHECK(std::abs(hurwitz_zeta(-1, 1.0) + 1.0 / 12) < 1e-12);
    CHECK(std::abs(complex_gamma(0.5) - std::sqrt(kPi)) < 1e-12);
    CHECK(std::abs(complex_gamma(5) - 24.0) < 1e-10);
    CHECK(std::abs(dirichlet_L(1, -4) - kPi / 4) < 1e-10);
    CHECK(std::abs(dirichlet_L(1, 5) - 2 * std::log((1 + std::sqrt(5.0)) / 2) / std::sqrt(5.0)) < 1e-10);
    CHECK_THROWS_AS(dirichlet_L(2, 1), DomainError);
    CHECK_THROWS_AS(dirichlet_L(2, 12 * 4), DomainError);
}

TEST_CASE("L(1, chi_D) against finite formulas") {
    for (long D = -200; D <= 200; ++D) {
        if (!fundamental(D)) continue;
        INFO(D);
        CHECK(std::abs(dirichlet_L(1, D).real() - l1_oracle(D)) < 1e-9);
        CHECK(std::abs(dirichlet_L(1, D).imag()) < 1e-12);
    }
    // Leibniz partial sums for D = -4
    double leib = 0;
    for (int k = 0; k < 2000000; ++k) leib += (k % 2 ? -1.0 : 1.0) / (2 * k + 1);
    CHECK(std::abs(dirichlet_L(1, -4).real() - leib) < 1e-6);
}

TEST_CASE("Dirichlet series agrees at s = 2") {
    for (long D : {-3L, -4L, 5L, 8L, -7L, 13L}) {
        double s = 0;
        for (long n = 1; n < 20000; ++n) s += brute::kronecker(D, n) / double(n) / double(n);
        CHECK(std::abs(dirichlet_L(2, D).real() - s) < 1e-4);
    }
}

TEST_CASE("discriminant split") {
    auto d = split_discriminant(45);
    CHECK(d.fundamental == 5);
    CHECK(d.index == 3);
    CHECK(split_discriminant(48).fundamental == 12);
    CHECK(split_discriminant(-16).fundamental == -4);
    CHECK(is_fundamental_discriminant(-4));
    CHECK(!is_fundamental_discriminant(-16));
    CHECK(!is_fundamental_discriminant(1));
    for (long n = -400; n <= 400; ++n)
        CHECK(is_fundamental_discriminant(n) == fundamental(n));
}

TEST_CASE("decomposition") {
    const BaseField Q = BaseField::rational();
    auto z = zagier_decompose(Q, 45);
    CHECK(z.admissible.size() == 2);
    CHECK(z.orbital == global_series(Q, 45).product);
    for (const BaseField& K : {Q, BaseField::quadratic(-1), BaseField::quadratic(5)})
        for (const AlgebraicInt& d : random_deltas(K, 20, 5, 20000)) CHECK_NOTHROW(zagier_decompose(K, d));
}

TEST_CASE("two routes to the Zagier L-function agree") {
    for (long d : {5L, 8L, 12L, 13L, 45L, -3L, -4L, -7L, 173L, 180L, -12L, 48L, -75L})
        for (Complex s : {Complex(2, 0), Complex(0.5, 3), Complex(0.3, 2), Complex(1, 0), Complex(-1, 1)}) {
            Complex a = zagier_L(s, d), b = zagier_L_direct(s, d);
            INFO(d << " " << s);
            CHECK(std::abs(a - b) < 1e-9 * (1 + std::abs(a)));
        }
}

TEST_CASE("completed function") {
    CHECK(CompletedZagier::make(-4).parity == 1);
    CHECK(CompletedZagier::make(45).parity == 0);
    for (long d : {5L, 8L, 12L, 13L, 45L, -3L, -4L, -7L, 173L}) {
        auto z = CompletedZagier::make(d);
        Complex half = z.lambda(0.5);
        CHECK(std::abs(half.imag()) < 1e-10 * (1 + std::abs(half)));
        for (Complex s : strip_grid(8)) {
            CHECK(std::abs(z.lambda(s) - z.lambda_factored(s)) < 1e-9 * (1 + std::abs(z.lambda(s))));
            CHECK(std::abs(z.lambda(s) - completed_lambda(s, d)) < 1e-12 * (1 + std::abs(z.lambda(s))));
        }
        CHECK(check_zagier_fe(d).ok);
    }
    CHECK_THROWS_AS(CompletedZagier::make(49), SquareDeltaError);
    CHECK_THROWS_AS(completed_lambda(0.5, 1), DomainError);
}

TEST_CASE("global coefficient identity") {
    // sum a_n n^{-3} = zeta(3) * N(S)^{-3} O(3) L(3, chi_D)
    for (long d : {5L, 45L, 48L, -4L, -12L}) {
        auto a = global_order_coefficients(d, 4000);
        CHECK(a[1] == 1);
        double series = 0;
        for (long n = 1; n <= 4000; ++n) series += a[n].get_d() / std::pow(double(n), 3);
        Complex want = zagier_L(3, d) * hurwitz_zeta(3, 1.0);
        CHECK(std::abs(series - want.real()) < 1e-6);
    }
}
