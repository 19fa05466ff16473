#include <doctest.h>

#include <cmath>

#include "brute.hpp"
#include "orbzeta/global_formula.hpp"
#include "orbzeta/verify.hpp"

using namespace orbzeta;

namespace {

const BaseField Q = BaseField::rational();

// sum over f | conductor of f * prod_{p | f} (1 - kron(D, p)/p), all by brute force
Rational brute_langlands(long delta) {
    long f = brute::conductor_scan(delta);
    long D = brute::field_discriminant(delta);
    Rational total = 0;
    for (long d = 1; d <= f; ++d) {
        if (f % d) continue;
        Rational term = d;
        for (long p = 2; p <= d; ++p)
            if (d % p == 0 && brute::is_prime(p)) term *= 1 - Rational(brute::kronecker(D, p), p);
        total += term;
    }
    return total;
}

}  // namespace

TEST_CASE("global series examples") {
    auto s45 = global_series(Q, 45);
    REQUIRE(s45.factors.size() == 1);
    CHECK(s45.factors[0].type == SplitType::Inert);
    CHECK(s45.product == jtilde(order_polynomial(SplitType::Inert, 1, 3)));
    CHECK(global_series(Q, 5).product == ExpPoly::constant(1));
    auto s180 = global_series(Q, 180);
    REQUIRE(s180.factors.size() == 2);
    CHECK(s180.factors[0].prime.p() == 2);
    CHECK(s180.factors[1].prime.p() == 3);

    CHECK(langlands_value(s45) == 5);
    CHECK(langlands_value(global_series(Q, 5)) == 1);
    CHECK(langlands_value(global_series(Q, 48)) == 3);
    CHECK(local_value_product(s45) == 5);
}

TEST_CASE("langlands value against a brute-force divisor sum") {
    for (long d = -300; d <= 300; ++d) {
        long r = brute::mod(d, 4);
        if (d == 0 || (r != 0 && r != 1)) continue;
        long s = 0;
        while (s * s < d) ++s;
        if (s * s == d) continue;
        auto series = global_series(Q, d);
        INFO(d);
        CHECK(langlands_value(series) == brute_langlands(d));
        CHECK(series.product.eval_exact(1) == langlands_value(series));
    }
}

TEST_CASE("functional equation and expansion on random deltas") {
    std::vector<BaseField> fields = {Q, BaseField::quadratic(-1), BaseField::quadratic(2), BaseField::quadratic(5),
                                     BaseField::quadratic(-5)};
    for (const BaseField& K : fields)
        for (const AlgebraicInt& d : random_deltas(K, K.is_rational() ? 120 : 30, 11)) {
            auto series = global_series(K, d);
            INFO(K.spec() << " " << d.to_string());
            CHECK(reflect(series.product) == series.product);
            CHECK(divisor_expansion(series) == series.product);
            CHECK(series.product.eval_exact(1) == langlands_value(series));
            CHECK(local_value_product(series) == langlands_value(series));
            CHECK(check_functional_equation(K, d).ok);
            CHECK(check_arthur(K, d).ok);
        }
}

TEST_CASE("matrix and delta give the same series") {
    for (long d : {5L, 45L, 48L, -4L, -12L, 180L, 173L, -7L}) {
        Mat2 g = delta_to_matrix(Q, d);
        CHECK(global_series(Q, g).product == global_series(Q, d).product);
    }
    Mat2 alt{{AlgebraicInt(3), AlgebraicInt(1), AlgebraicInt(9), AlgebraicInt(0)}};
    CHECK(global_series(Q, alt).product == global_series(Q, 45).product);
}

TEST_CASE("elliptic weights") {
    CHECK(elliptic_delta(3, 3, 2, PolySign::Minus) == 45);
    CHECK(elliptic_delta(1, 2, 1, PolySign::Plus) == -7);
    auto w = normalized_elliptic_weight(3, 3, 2, PolySign::Minus);
    CHECK(w.coeff == 5);
    CHECK(w.k == 2);
    CHECK(w.to_double() == doctest::Approx(5.0 / 3));
    CHECK(w.to_string() == "5/1*3^(-2/2)");
    auto w2 = normalized_elliptic_weight(1, 2, 1, PolySign::Plus);
    CHECK(w2.coeff == 1);
    CHECK(w2.to_double() == doctest::Approx(1 / std::sqrt(2.0)));
    CHECK_THROWS_AS(normalized_elliptic_weight(2, 2, 0, PolySign::Plus), DomainError);  // delta = 0

    for (const Integer& d : elliptic_sweep_deltas()) {
        auto series = global_series(Q, AlgebraicInt(d));
        CHECK(divisor_expansion(series) == series.product);
    }
}
