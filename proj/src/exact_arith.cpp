#include "orbzeta/exact_arith.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace orbzeta {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return make_rational(Integer(text));
        return make_rational(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw DomainError("not a rational: '" + text + "'");
    }
}

Integer ipow(const Integer& base, unsigned long exponent) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

int valuation(const Integer& n, const Integer& p) {
    if (n == 0) throw DomainError("valuation of zero");
    if (p < 2) throw DomainError("valuation base must be >= 2");
    Integer m = abs(n);
    int v = 0;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
        m /= p;
        ++v;
    }
    return v;
}

bool is_perfect_square(const Integer& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

int kronecker(const Integer& a, const Integer& n) {
    return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

Integer Factorization::value() const {
    Integer v = sign;
    for (const auto& [p, e] : factors) v *= ipow(p, e);
    return v;
}

namespace {

bool miller_rabin_round(const Integer& n, const Integer& base, const Integer& d, unsigned s) {
    Integer a = base % n;
    if (a == 0) return true;
    Integer x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    Integer n1 = n - 1;
    if (x == 1 || x == n1) return true;
    for (unsigned r = 1; r < s; ++r) {
        x = (x * x) % n;
        if (x == n1) return true;
    }
    return false;
}

// Deterministic for n < 3317044064679887385961981 with the first 13 primes.
const Integer kMillerRabinDeterministicBound("3317044064679887385961981");
const Integer kFactorGuard = Integer(1) << 96;

Integer pollard_brent(const Integer& n, unsigned long seed) {
    if (n % 2 == 0) return 2;
    Integer y = Integer(seed) % n, c = (Integer(seed) * 7 + 3) % n, m = 64;
    Integer g = 1, r = 1, q = 1, x, ys;
    auto f = [&](const Integer& v) -> Integer { return (v * v + c) % n; };
    while (g == 1) {
        x = y;
        for (Integer i = 0; i < r; ++i) y = f(y);
        Integer k = 0;
        while (k < r && g == 1) {
            ys = y;
            Integer rest = r - k;
            Integer lim = m < rest ? m : rest;
            for (Integer i = 0; i < lim; ++i) {
                y = f(y);
                q = (q * abs(x - y)) % n;
            }
            g = gcd(q, n);
            k += m;
        }
        r *= 2;
    }
    if (g == n) {
        do {
            ys = f(ys);
            g = gcd(abs(x - ys), n);
        } while (g == 1);
    }
    return g;
}

void factor_into(const Integer& n, std::map<Integer, unsigned>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    Integer d = n;
    for (unsigned long seed = 2; d == n || d == 1; ++seed) d = pollard_brent(n, seed);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

bool is_prime(const Integer& n) {
    if (n < 2) return false;
    static const int small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
    for (int p : small) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    if (n >= kMillerRabinDeterministicBound) return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
    Integer d = n - 1;
    unsigned s = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++s;
    }
    for (int p : small)
        if (!miller_rabin_round(n, p, d, s)) return false;
    return true;
}

Factorization factor(const Integer& n) {
    if (n == 0) throw DomainError("cannot factor zero");
    Integer m = abs(n);
    if (m >= kFactorGuard) throw GuardError("factorization input exceeds 2^96: " + n.get_str());
    Factorization result;
    result.sign = n < 0 ? -1 : 1;
    std::map<Integer, unsigned> found;
    for (unsigned long p = 2; p < 1000 && m > 1; ++p) {
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            m /= p;
            ++found[Integer(p)];
        }
    }
    factor_into(m, found);
    for (auto& [p, e] : found) result.factors.emplace_back(p, e);
    return result;
}

std::vector<long> primes_up_to(long bound) {
    std::vector<long> primes;
    if (bound < 2) return primes;
    std::vector<bool> composite(static_cast<std::size_t>(bound) + 1, false);
    for (long i = 2; i <= bound; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (long j = i * i; j <= bound; j += i) composite[j] = true;
    }
    return primes;
}

// ---------------------------------------------------------------------------

ExpPoly ExpPoly::constant(const Rational& c) { return monomial(c, 1); }

ExpPoly ExpPoly::monomial(const Rational& coeff, const Rational& base) {
    ExpPoly p;
    p.add_term(coeff, base);
    return p;
}

ExpPoly ExpPoly::euler_factor(int chi, const Rational& base) {
    ExpPoly p = constant(1);
    p.add_term(-chi, base);
    return p;
}

void ExpPoly::add_term(const Rational& coeff, const Rational& base) {
    if (base <= 0) throw DomainError("ExpPoly bases must be positive");
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(base, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational ExpPoly::coefficient(const Rational& base) const {
    auto it = terms_.find(base);
    return it == terms_.end() ? Rational(0) : it->second;
}

ExpPoly& ExpPoly::operator+=(const ExpPoly& other) {
    for (const auto& [b, c] : other.terms_) add_term(c, b);
    return *this;
}

ExpPoly& ExpPoly::operator-=(const ExpPoly& other) {
    for (const auto& [b, c] : other.terms_) add_term(-c, b);
    return *this;
}

ExpPoly operator*(const ExpPoly& a, const ExpPoly& b) {
    ExpPoly r;
    for (const auto& [ba, ca] : a.terms_)
        for (const auto& [bb, cb] : b.terms_) r.add_term(ca * cb, ba * bb);
    return r;
}

ExpPoly& ExpPoly::operator*=(const ExpPoly& other) { return *this = *this * other; }

namespace {

double log_of(const Integer& n) {
    long exp2 = 0;
    double mant = mpz_get_d_2exp(&exp2, n.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
}

}  // namespace

Complex ExpPoly::eval(Complex s) const {
    Complex total = 0;
    for (const auto& [b, c] : terms_) {
        double lnb = log_of(b.get_num()) - log_of(b.get_den());
        total += c.get_d() * std::exp(-s * lnb);
    }
    return total;
}

Rational ExpPoly::eval_exact(long s) const {
    Rational total = 0;
    for (const auto& [b, c] : terms_) {
        unsigned long k = static_cast<unsigned long>(s < 0 ? -s : s);
        Rational pw = make_rational(ipow(b.get_num(), k), ipow(b.get_den(), k));
        // b^{-s}
        if (s >= 0) total += c / pw;
        else total += c * pw;
    }
    return total;
}

std::string ExpPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [b, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << orbzeta::to_string(c) << ")";
        if (b != 1) os << "*(" << orbzeta::to_string(b) << ")^-s";
    }
    return os.str();
}

ExpPoly reflect(const ExpPoly& p) {
    ExpPoly r;
    for (const auto& [b, c] : p.terms()) r.add_term(c / b, 1 / b);
    return r;
}

nlohmann::json to_json(const ExpPoly& p) {
    auto arr = nlohmann::json::array();
    for (const auto& [b, c] : p.terms()) arr.push_back({{"base", to_string(b)}, {"coeff", to_string(c)}});
    return arr;
}

ExpPoly expoly_from_json(const nlohmann::json& j) {
    ExpPoly p;
    for (const auto& t : j) p.add_term(parse_rational(t.at("coeff")), parse_rational(t.at("base")));
    return p;
}

}  // namespace orbzeta
