#include "orbzeta/order_zeta.hpp"

#include <sstream>

namespace orbzeta {

namespace {

std::vector<Integer> ramified_coeffs(int n, const Integer& q) {
    if (n < 0) return {};
    std::vector<Integer> c(2 * n + 1, 0);
    for (int i = 0; i <= n; ++i) c[2 * i] = ipow(q, i);
    return c;
}

}  // namespace

OrderZetaPolynomial order_polynomial(SplitType family, int n, const Integer& q) {
    if (n < 0) throw DomainError("depth must be nonnegative");
    if (q < 2) throw DomainError("residue size must be >= 2");
    OrderZetaPolynomial P{family, n, q, {}};
    if (family == SplitType::Ramified) {
        P.coeffs = ramified_coeffs(n, q);
        return P;
    }
    P.coeffs.assign(2 * n + 1, 0);
    int sign = family == SplitType::Inert ? 1 : -1;
    std::vector<Integer> r = ramified_coeffs(n - 1, q);
    for (std::size_t j = 0; j < r.size(); ++j) {
        P.coeffs[j] += r[j];
        P.coeffs[j + 1] += sign * r[j];
    }
    P.coeffs[2 * n] += ipow(q, n);
    return P;
}

bool OrderZetaPolynomial::satisfies_functional_equation() const {
    // coefficient of X^{2n-j} on the left is c_j q^{n-j}
    for (int j = 0; j <= 2 * n; ++j) {
        Rational lhs = Rational(coeffs[j]) * (j <= n ? Rational(ipow(q, n - j)) : make_rational(1, ipow(q, j - n)));
        if (lhs != Rational(coeffs[2 * n - j])) return false;
    }
    return true;
}

Rational OrderZetaPolynomial::eval(const Rational& x) const {
    Rational r = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * x + Rational(*it);
    return r;
}

std::string OrderZetaPolynomial::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int j = 0; j <= 2 * n; ++j) {
        if (coeffs[j] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (j == 0 || coeffs[j] != 1) os << coeffs[j];
        if (j == 1) os << "X";
        if (j > 1) os << "X^" << j;
    }
    return first ? "0" : os.str();
}

ExpPoly jtilde(const OrderZetaPolynomial& poly) {
    ExpPoly r;
    for (int j = 0; j <= 2 * poly.n; ++j) {
        Rational base = j >= poly.n ? Rational(ipow(poly.q, j - poly.n)) : make_rational(1, ipow(poly.q, poly.n - j));
        r.add_term(poly.coeffs[j], base);
    }
    return r;
}

ExpPoly jtilde_divisor_form(SplitType type, int n, const Integer& q) {
    if (n < 0) throw DomainError("depth must be nonnegative");
    ExpPoly sum;
    for (int j = 0; j <= n; ++j) {
        Integer qj = ipow(q, j);
        ExpPoly term = ExpPoly::monomial(qj, qj * qj);
        if (j < n) term *= ExpPoly::euler_factor(chi_value(type), q);
        sum += term;
    }
    return ExpPoly::monomial(1, make_rational(1, ipow(q, n))) * sum;
}

Rational orbital_value(SplitType type, int m, const Integer& q) {
    if (m < 0) throw DomainError("depth must be nonnegative");
    Integer qm = ipow(q, m);
    switch (type) {
        case SplitType::Split: return qm;
        case SplitType::Inert: return make_rational(qm * (q + 1) - 2, q - 1);
        case SplitType::Ramified: return make_rational(qm * q - 1, q - 1);
    }
    return 0;
}

std::vector<long> count_ideals_oracle(SplitType type, int n, const Integer& p_, int j_max) {
    if (!is_prime(p_)) throw DomainError("the ideal-count oracle needs a prime residue size");
    if (n < 0 || j_max < 0) throw DomainError("depth and index exponent must be nonnegative");
    if (ipow(p_, 2 * j_max) > (1 << 20)) throw GuardError("q^(2 j_max) exceeds 2^20");
    const long p = p_.get_si();

    // Delta^2 = A Delta - B
    long A = 0, B = 0;
    switch (type) {
        case SplitType::Split: A = 1; B = 0; break;
        case SplitType::Ramified: A = 0; B = p; break;
        case SplitType::Inert:
            for (long a = 0; a < p && B == 0; ++a)
                for (long b = 1; b < p; ++b) {
                    bool root = false;
                    for (long x = 0; x < p; ++x)
                        if (((x * x - a * x + b) % p + p) % p == 0) root = true;
                    if (!root) {
                        A = a;
                        B = b;
                        break;
                    }
                }
            break;
    }
    // g = p^n Delta, g^2 = An g - Bn
    Integer pn = ipow(p_, n);
    Integer An = pn * A, Bn = pn * pn * B;

    std::vector<long> counts;
    for (int j = 0; j <= j_max; ++j) {
        long total = 0;
        for (int i = 0; i <= j; ++i) {
            Integer a = ipow(p_, i), d = ipow(p_, j - i);
            // lattice spanned by (a, b) and (0, d) in the basis {1, g}
            for (Integer b = 0; b < d; ++b) {
                auto member = [&](const Integer& u, const Integer& v) -> bool {
                    if (u % a != 0) return false;
                    Integer x = u / a;
                    Integer rem = (v - x * b) % d;
                    return rem == 0;
                };
                // g (c0, c1) = (-Bn c1, c0 + An c1)
                if (member(-Bn * b, a + An * b) && member(-Bn * d, An * d)) ++total;
            }
        }
        counts.push_back(total);
    }
    return counts;
}

std::vector<Integer> times_v(SplitType type, const std::vector<long>& counts) {
    const int chi = chi_value(type);
    // (1 - X)(1 - chi X) = 1 - (1 + chi) X + chi X^2
    std::vector<Integer> out(counts.size(), 0);
    for (std::size_t j = 0; j < counts.size(); ++j) {
        out[j] += counts[j];
        if (j + 1 < counts.size()) out[j + 1] -= Integer(1 + chi) * counts[j];
        if (j + 2 < counts.size()) out[j + 2] += Integer(chi) * counts[j];
    }
    return out;
}

}  // namespace orbzeta
