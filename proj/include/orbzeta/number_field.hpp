#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "orbzeta/exact_arith.hpp"

namespace orbzeta {

/// Element a + b*w of O_K over the integral basis {1, w}. For K = Q, b = 0.
struct AlgebraicInt {
    Integer a = 0;
    Integer b = 0;

    AlgebraicInt() = default;
    AlgebraicInt(Integer a_, Integer b_ = 0) : a(std::move(a_)), b(std::move(b_)) {}
    AlgebraicInt(long a_) : a(a_), b(0) {}

    bool is_zero() const { return a == 0 && b == 0; }
    friend bool operator==(const AlgebraicInt& x, const AlgebraicInt& y) { return x.a == y.a && x.b == y.b; }
    friend AlgebraicInt operator+(const AlgebraicInt& x, const AlgebraicInt& y) { return {x.a + y.a, x.b + y.b}; }
    friend AlgebraicInt operator-(const AlgebraicInt& x, const AlgebraicInt& y) { return {x.a - y.a, x.b - y.b}; }
    friend AlgebraicInt operator-(const AlgebraicInt& x) { return {-x.a, -x.b}; }

    std::string to_string() const;
};

enum class SplitType { Split, Inert, Ramified };

constexpr int chi_value(SplitType t) {
    return t == SplitType::Split ? 1 : (t == SplitType::Inert ? -1 : 0);
}
const char* to_string(SplitType t);

/// Raised when delta is a square in K; such delta give no quadratic extension.
struct SquareDeltaError : DomainError {
    using DomainError::DomainError;
};
/// Raised when delta is not congruent to a square modulo 4 O_K.
struct NotSquareMod4Error : DomainError {
    using DomainError::DomainError;
};

class LocalPrime;

/// K = Q or K = Q(sqrt m), with w = sqrt m or (1 + sqrt m)/2 and
/// w^2 = t*w - n.
class BaseField {
public:
    static BaseField rational();
    static BaseField quadratic(const Integer& m);
    /// "Q" or "Q(sqrt:m)".
    static BaseField parse(std::string_view spec);

    bool is_rational() const { return rational_; }
    int degree() const { return rational_ ? 1 : 2; }
    const Integer& m() const { return m_; }
    const Integer& discriminant() const { return disc_; }
    const Integer& omega_trace() const { return t_; }
    const Integer& omega_norm() const { return n_; }
    std::string spec() const;

    AlgebraicInt mul(const AlgebraicInt& x, const AlgebraicInt& y) const;
    AlgebraicInt square(const AlgebraicInt& x) const { return mul(x, x); }
    AlgebraicInt pow(AlgebraicInt x, unsigned k) const;
    AlgebraicInt conj(const AlgebraicInt& x) const;
    Integer norm(const AlgebraicInt& x) const;
    Integer trace(const AlgebraicInt& x) const;
    /// Exact division when y divides x in O_K; nullopt otherwise.
    std::optional<AlgebraicInt> divide(const AlgebraicInt& x, const AlgebraicInt& y) const;
    bool divisible_by(const AlgebraicInt& x, const Integer& k) const;

    /// "a", "a+b*w", "a-b*w", "b*w".
    AlgebraicInt parse_element(std::string_view spec) const;

    bool is_square(const AlgebraicInt& x) const;
    /// Some r with x = r^2 mod 4 O_K, scanning residues in a fixed order.
    std::optional<AlgebraicInt> square_root_mod4(const AlgebraicInt& x) const;

    /// Throws SquareDeltaError / NotSquareMod4Error / DomainError(zero).
    void require_valid_delta(const AlgebraicInt& delta) const;

    std::vector<LocalPrime> primes_above(const Integer& p) const;

    friend bool operator==(const BaseField& x, const BaseField& y) { return x.rational_ == y.rational_ && x.m_ == y.m_; }

private:
    bool rational_ = true;
    Integer m_ = 1;
    Integer disc_ = 1;
    Integer t_ = 0;
    Integer n_ = 0;
};

/// Element of the completion O_{K_q}, written over the local integral
/// basis: Z_p for K = Q and for split q (b = 0), Z_p[w] otherwise. In the
/// split case `a` is only known modulo p^prec.
struct LocalInt {
    Integer a = 0;
    Integer b = 0;
    int prec = kExact;

    static constexpr int kExact = 1 << 28;
};

/// A prime q of K over the rational prime p.
class LocalPrime {
public:
    enum class Kind { Rational, Split, Inert, Ramified };

    const Integer& p() const { return p_; }
    int e() const { return e_; }
    int f() const { return f_; }
    /// Residue-field size p^f.
    const Integer& residue_size() const { return q_; }
    Kind kind() const { return kind_; }
    /// 0 or 1 distinguishes the two primes over a split p.
    int index() const { return index_; }
    const AlgebraicInt& uniformizer() const { return uniformizer_; }
    /// Residue of w modulo q (split and ramified primes).
    const Integer& residue_root() const { return root_; }

    int valuation(const AlgebraicInt& x) const;
    bool divides(const AlgebraicInt& x) const { return !x.is_zero() && valuation(x) > 0; }

    LocalInt localize(const AlgebraicInt& x, int prec) const;
    LocalInt mul(const LocalInt& x, const LocalInt& y) const;
    LocalInt sub(const LocalInt& x, const LocalInt& y) const;
    /// Valuation, saturated at the precision of x.
    int valuation(const LocalInt& x) const;
    /// x / pi^(2r) up to a unit square; requires val(x) >= 2r.
    LocalInt strip_square_power(const LocalInt& x, int r) const;
    /// Exact division by the rational integer p^k, coordinate-wise.
    LocalInt divide_by_p(const LocalInt& x, int k) const;
    /// Representatives covering every class of O_{K_q} / q^k.
    std::vector<LocalInt> residues(int k) const;
    /// x = y^2 mod q^k for some y (enumeration of the finite quotient).
    bool is_square_mod(const LocalInt& x, int k) const;
    /// Square test of a unit in the residue field (odd p only).
    bool residue_is_square(const LocalInt& unit) const;

    /// Working precision sufficient for x and ~extra further digits.
    int working_precision(const AlgebraicInt& x, int extra = 8) const;

    friend bool operator==(const LocalPrime& x, const LocalPrime& y) { return x.p_ == y.p_ && x.index_ == y.index_; }
    friend bool operator<(const LocalPrime& x, const LocalPrime& y) {
        return x.p_ != y.p_ ? x.p_ < y.p_ : x.index_ < y.index_;
    }

    std::string to_string() const;

private:
    friend class BaseField;
    Integer split_root(int prec) const;

    Integer p_;
    int e_ = 1;
    int f_ = 1;
    Integer q_;
    Kind kind_ = Kind::Rational;
    int index_ = 0;
    AlgebraicInt uniformizer_;
    Integer root_ = 0;
    Integer t_ = 0;  // w^2 = t w - n
    Integer n_ = 0;
    Integer disc_ = 1;
};

/// Ideal of O_K in factored form.
struct IdealData {
    std::vector<std::pair<LocalPrime, int>> factors;  // sorted, exponents > 0

    static IdealData unit() { return {}; }
    Integer norm() const;
    int exponent(const LocalPrime& q) const;
    bool divides(const IdealData& other) const;
    std::vector<IdealData> divisors() const;
    /// this / other; requires other | this.
    IdealData quotient(const IdealData& other) const;
    void set_exponent(const LocalPrime& q, int exponent);
    std::string to_string() const;

    friend bool operator==(const IdealData& x, const IdealData& y);
};

nlohmann::json to_json(const IdealData& ideal);

struct LocalClassification {
    SplitType type;
    int depth;  // n_q = val_q(S_delta)
};

bool is_local_square(const AlgebraicInt& x, const LocalPrime& q);

/// x is a square modulo 4 O_{K_q}.
bool is_square_mod4_at(const AlgebraicInt& x, const LocalPrime& q);

/// Splitting of q in K(sqrt delta) and n_q. Validates delta.
LocalClassification local_split_type(const BaseField& field, const AlgebraicInt& delta, const LocalPrime& q);
/// Same, without validating delta.
LocalClassification local_split_type_unchecked(const AlgebraicInt& delta, const LocalPrime& q);

/// Primes dividing (x), sorted.
std::vector<LocalPrime> prime_divisors(const BaseField& field, const AlgebraicInt& x);

struct DeltaData {
    IdealData s_delta;
    std::vector<std::pair<LocalPrime, LocalClassification>> local;  // every q | (delta)
};

DeltaData analyze_delta(const BaseField& field, const AlgebraicInt& delta);
IdealData s_delta(const BaseField& field, const AlgebraicInt& delta);

/// chi_delta at an arbitrary prime.
int chi_delta(const BaseField& field, const AlgebraicInt& delta, const LocalPrime& q);

bool satisfies_congruence(const BaseField& field, const IdealData& ideal, const AlgebraicInt& delta);

struct Mat2 {
    std::array<AlgebraicInt, 4> m;  // row-major

    const AlgebraicInt& operator()(int i, int j) const { return m[2 * i + j]; }
    AlgebraicInt trace() const { return m[0] + m[3]; }
    AlgebraicInt det(const BaseField& field) const;
    /// trace^2 - 4 det
    AlgebraicInt discriminant(const BaseField& field) const;
};

/// The companion matrix [[r, 1], [m, 0]] with delta = r^2 + 4m.
Mat2 delta_to_matrix(const BaseField& field, const AlgebraicInt& delta);

/// Exhaustive search of X^2 - pi^t u = Y^2 mod 4 over O_{K_q}/4; true iff no
/// solution exists.
bool no_solution_witness(const LocalPrime& q, int t, const AlgebraicInt& unit);

/// All ideals of norm <= bound.
std::vector<IdealData> enumerate_ideals(const BaseField& field, long bound);

}  // namespace orbzeta
