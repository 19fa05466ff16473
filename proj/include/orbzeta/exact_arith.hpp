#pragma once

#include <gmpxx.h>

#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace orbzeta {

using Integer = mpz_class;
using Rational = mpq_class;
using Complex = std::complex<double>;

// Error taxonomy. Precondition violations and size guards are kept apart
// because the CLI maps them to different exit codes.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DomainError : Error {
    using Error::Error;
};
struct GuardError : Error {
    using Error::Error;
};

Rational make_rational(const Integer& num, const Integer& den = 1);

/// Canonical "num/den" rendering; integers keep the "/1".
std::string to_string(const Rational& r);
Rational parse_rational(const std::string& text);

Integer ipow(const Integer& base, unsigned long exponent);

/// p-adic valuation of a nonzero integer.
int valuation(const Integer& n, const Integer& p);

bool is_perfect_square(const Integer& n);

/// Kronecker symbol (a/n) on its full domain, including n <= 0.
int kronecker(const Integer& a, const Integer& n);

struct Factorization {
    int sign = 1;
    std::vector<std::pair<Integer, unsigned>> factors;  // primes strictly increasing

    Integer value() const;
};

/// Inputs of absolute value >= 2^96 raise GuardError; zero raises DomainError.
Factorization factor(const Integer& n);

bool is_prime(const Integer& n);

std::vector<long> primes_up_to(long bound);

/// Finite exponential polynomial sum_i c_i * b_i^{-s} with rational
/// coefficients and positive rational bases. Zero coefficients are never
/// stored and bases are unique.
class ExpPoly {
public:
    using Terms = std::map<Rational, Rational>;  // base -> coefficient

    ExpPoly() = default;

    static ExpPoly constant(const Rational& c);
    static ExpPoly monomial(const Rational& coeff, const Rational& base);

    /// (1 - chi * base^{-s})
    static ExpPoly euler_factor(int chi, const Rational& base);

    void add_term(const Rational& coeff, const Rational& base);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Rational coefficient(const Rational& base) const;

    ExpPoly& operator+=(const ExpPoly& other);
    ExpPoly& operator-=(const ExpPoly& other);
    ExpPoly& operator*=(const ExpPoly& other);
    friend ExpPoly operator+(ExpPoly a, const ExpPoly& b) { return a += b; }
    friend ExpPoly operator-(ExpPoly a, const ExpPoly& b) { return a -= b; }
    friend ExpPoly operator*(const ExpPoly& a, const ExpPoly& b);
    friend bool operator==(const ExpPoly& a, const ExpPoly& b) { return a.terms_ == b.terms_; }

    Complex eval(Complex s) const;

    /// Exact value at an integer point.
    Rational eval_exact(long s) const;

    std::string to_string() const;

private:
    Terms terms_;
};

/// The substitution s -> 1 - s, term-wise (c, b) -> (c/b, 1/b).
ExpPoly reflect(const ExpPoly& p);

nlohmann::json to_json(const ExpPoly& p);
ExpPoly expoly_from_json(const nlohmann::json& j);

}  // namespace orbzeta
