#include "orbzeta/number_field.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

namespace orbzeta {

std::string AlgebraicInt::to_string() const {
    if (b == 0) return a.get_str();
    std::string coeff = (b == 1) ? "" : (b == -1 ? "-" : b.get_str() + "*");
    if (a == 0) return coeff + "w";
    if (b < 0) return a.get_str() + "-" + (b == -1 ? std::string() : Integer(-b).get_str() + "*") + "w";
    return a.get_str() + "+" + coeff + "w";
}

const char* to_string(SplitType t) {
    switch (t) {
        case SplitType::Split: return "split";
        case SplitType::Inert: return "inert";
        case SplitType::Ramified: return "ramified";
    }
    return "?";
}

namespace {

Integer mod(const Integer& x, const Integer& m) {
    Integer r = x % m;
    if (r < 0) r += m;
    return r;
}

bool rational_is_square(const Rational& x) {
    return x >= 0 && is_perfect_square(x.get_num()) && is_perfect_square(x.get_den());
}

Rational rational_sqrt(const Rational& x) {
    Integer n = sqrt(x.get_num()), d = sqrt(x.get_den());
    return make_rational(n, d);
}

bool squarefree(const Integer& m) {
    for (const auto& [p, e] : factor(m).factors)
        if (e > 1) return false;
    return true;
}

// Tonelli-Shanks for an odd prime p and a quadratic residue a.
Integer sqrt_mod(const Integer& a0, const Integer& p) {
    Integer a = mod(a0, p);
    if (a == 0) return 0;
    Integer q = p - 1;
    unsigned s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    Integer z = 2;
    while (kronecker(z, p) != -1) ++z;
    Integer m = s, c, t, r, e;
    mpz_powm(c.get_mpz_t(), z.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    mpz_powm(t.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    e = (q + 1) / 2;
    mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    while (t != 1) {
        unsigned i = 0;
        Integer tt = t;
        while (tt != 1) {
            tt = tt * tt % p;
            ++i;
        }
        Integer b = c;
        for (unsigned j = 0; j + 1 + i < m.get_ui(); ++j) b = b * b % p;
        m = i;
        c = b * b % p;
        t = t * c % p;
        r = r * b % p;
    }
    return r;
}

}  // namespace

// ---------------------------------------------------------------------------

BaseField BaseField::rational() { return BaseField{}; }

BaseField BaseField::quadratic(const Integer& m) {
    if (m == 0 || m == 1) throw DomainError("Q(sqrt m) needs m != 0, 1");
    if (!squarefree(m)) throw DomainError("m must be squarefree: " + m.get_str());
    BaseField k;
    k.rational_ = false;
    k.m_ = m;
    if (mod(m, 4) == 1) {
        k.disc_ = m;
        k.t_ = 1;
        k.n_ = -(m - 1) / 4;
    } else {
        k.disc_ = 4 * m;
        k.t_ = 0;
        k.n_ = -m;
    }
    return k;
}

BaseField BaseField::parse(std::string_view spec) {
    std::string s;
    for (char c : spec)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s == "Q") return rational();
    const std::string prefix = "Q(sqrt:";
    if (s.rfind(prefix, 0) == 0 && s.size() > prefix.size() + 1 && s.back() == ')') {
        std::string body = s.substr(prefix.size(), s.size() - prefix.size() - 1);
        Integer m;
        if (m.set_str(body, 10) != 0) throw DomainError("bad field spec: " + std::string(spec));
        return quadratic(m);
    }
    throw DomainError("bad field spec: " + std::string(spec));
}

std::string BaseField::spec() const {
    return rational_ ? "Q" : "Q(sqrt:" + m_.get_str() + ")";
}

AlgebraicInt BaseField::mul(const AlgebraicInt& x, const AlgebraicInt& y) const {
    if (rational_) return {x.a * y.a, 0};
    Integer bb = x.b * y.b;
    return {x.a * y.a - n_ * bb, x.a * y.b + x.b * y.a + t_ * bb};
}

AlgebraicInt BaseField::pow(AlgebraicInt x, unsigned k) const {
    AlgebraicInt r(1);
    while (k) {
        if (k & 1) r = mul(r, x);
        x = mul(x, x);
        k >>= 1;
    }
    return r;
}

AlgebraicInt BaseField::conj(const AlgebraicInt& x) const {
    if (rational_) return x;
    return {x.a + x.b * t_, -x.b};
}

Integer BaseField::norm(const AlgebraicInt& x) const {
    if (rational_) return x.a;
    return x.a * x.a + t_ * x.a * x.b + n_ * x.b * x.b;
}

Integer BaseField::trace(const AlgebraicInt& x) const {
    if (rational_) return x.a;
    return 2 * x.a + t_ * x.b;
}

std::optional<AlgebraicInt> BaseField::divide(const AlgebraicInt& x, const AlgebraicInt& y) const {
    if (y.is_zero()) throw DomainError("division by zero");
    if (rational_) {
        if (x.a % y.a != 0) return std::nullopt;
        return AlgebraicInt(Integer(x.a / y.a));
    }
    Integer ny = norm(y);
    AlgebraicInt num = mul(x, conj(y));
    if (num.a % ny != 0 || num.b % ny != 0) return std::nullopt;
    return AlgebraicInt{num.a / ny, num.b / ny};
}

bool BaseField::divisible_by(const AlgebraicInt& x, const Integer& k) const {
    return x.a % k == 0 && x.b % k == 0;
}

AlgebraicInt BaseField::parse_element(std::string_view spec) const {
    std::string s;
    for (char c : spec)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    auto bad = [&] { return DomainError("bad element spec: '" + std::string(spec) + "'"); };
    auto to_int = [&](const std::string& t) {
        Integer v;
        std::string u = (!t.empty() && t[0] == '+') ? t.substr(1) : t;
        if (u.empty() || v.set_str(u, 10) != 0) throw bad();
        return v;
    };
    if (s.empty()) throw bad();
    if (s.back() != 'w') return AlgebraicInt(to_int(s));
    if (rational_) throw DomainError("element '" + s + "' uses w over Q");
    std::string head = s.substr(0, s.size() - 1);
    if (!head.empty() && head.back() == '*') head.pop_back();
    std::size_t cut = std::string::npos;
    for (std::size_t i = head.size(); i-- > 1;)
        if (head[i] == '+' || head[i] == '-') {
            cut = i;
            break;
        }
    std::string a_part = cut == std::string::npos ? "0" : head.substr(0, cut);
    std::string b_part = cut == std::string::npos ? head : head.substr(cut);
    Integer b = (b_part.empty() || b_part == "+") ? Integer(1) : (b_part == "-" ? Integer(-1) : to_int(b_part));
    return {to_int(a_part), b};
}

bool BaseField::is_square(const AlgebraicInt& x) const {
    if (rational_) return is_perfect_square(x.a);
    // x = A + B sqrt(m)
    Rational A, B;
    if (t_ == 1) {
        A = make_rational(2 * x.a + x.b, 2);
        B = make_rational(x.b, 2);
    } else {
        A = x.a;
        B = x.b;
    }
    Rational N = A * A - Rational(m_) * B * B;
    if (!rational_is_square(N)) return false;
    Rational s = rational_sqrt(N);
    for (const Rational& x2 : {Rational((A + s) / 2), Rational((A - s) / 2)}) {
        if (!rational_is_square(x2)) continue;
        Rational X = rational_sqrt(x2);
        if (X == 0) {
            Rational y2 = A / m_;
            if (B == 0 && rational_is_square(y2)) return true;
            continue;
        }
        Rational Y = B / (2 * X);
        if (X * X + Rational(m_) * Y * Y == A) return true;
    }
    return false;
}

std::optional<AlgebraicInt> BaseField::square_root_mod4(const AlgebraicInt& x) const {
    int bmax = rational_ ? 1 : 4;
    for (int rb = 0; rb < bmax; ++rb)
        for (int ra = 0; ra < 4; ++ra) {
            AlgebraicInt r(ra, rb);
            if (divisible_by(x - square(r), 4)) return r;
        }
    return std::nullopt;
}

void BaseField::require_valid_delta(const AlgebraicInt& delta) const {
    if (delta.is_zero()) throw DomainError("delta must be nonzero");
    if (is_square(delta)) throw SquareDeltaError("delta " + delta.to_string() + " is a square in " + spec());
    if (!square_root_mod4(delta))
        throw NotSquareMod4Error("delta " + delta.to_string() + " is not a square modulo 4 in " + spec());
}

std::vector<LocalPrime> BaseField::primes_above(const Integer& p) const {
    if (!is_prime(p)) throw DomainError(p.get_str() + " is not prime");
    LocalPrime base;
    base.p_ = p;
    base.q_ = p;
    base.uniformizer_ = AlgebraicInt(p);
    base.t_ = t_;
    base.n_ = n_;
    base.disc_ = disc_;
    if (rational_) return {base};

    auto poly = [&](const Integer& r) -> Integer { return r * r - t_ * r + n_; };
    int k = kronecker(disc_, p);
    if (k == -1) {
        base.kind_ = LocalPrime::Kind::Inert;
        base.f_ = 2;
        base.q_ = p * p;
        return {base};
    }
    if (k == 0) {
        base.kind_ = LocalPrime::Kind::Ramified;
        base.e_ = 2;
        Integer r = 0;
        if (p == 2) {
            while (mod(poly(r), 2) != 0) ++r;
        } else {
            // double root t/2 mod p
            Integer inv2 = (p + 1) / 2;
            r = mod(t_ * inv2, p);
        }
        if (poly(r) % (p * p) == 0) r += p;
        base.root_ = mod(r, p);
        base.uniformizer_ = AlgebraicInt(-r, 1);
        return {base};
    }
    Integer r0, r1;
    if (p == 2) {
        r0 = 0;
        r1 = 1;
    } else {
        Integer s = sqrt_mod(disc_, p);
        Integer inv2 = (p + 1) / 2;
        // roots of x^2 - t x + n: (t +- sqrt(t^2 - 4n)) / 2, and t^2 - 4n = disc
        r0 = mod((t_ + s) * inv2, p);
        r1 = mod((t_ - s) * inv2, p);
        if (r1 < r0) std::swap(r0, r1);
    }
    std::vector<LocalPrime> out;
    for (int i = 0; i < 2; ++i) {
        LocalPrime q = base;
        q.kind_ = LocalPrime::Kind::Split;
        q.index_ = i;
        q.root_ = i == 0 ? r0 : r1;
        out.push_back(q);
    }
    return out;
}

// ---------------------------------------------------------------------------

Integer LocalPrime::split_root(int prec) const {
    Integer pk = ipow(p_, prec);
    Integer r = root_;
    // Newton on x^2 - t x + n; the derivative is a unit at a simple root.
    for (int have = 1; have < prec; have *= 2) {
        Integer f = r * r - t_ * r + n_;
        Integer df = 2 * r - t_;
        Integer inv;
        mpz_invert(inv.get_mpz_t(), df.get_mpz_t(), pk.get_mpz_t());
        r = mod(r - f * inv, pk);
    }
    return mod(r, pk);
}

int LocalPrime::valuation(const AlgebraicInt& x) const {
    if (x.is_zero()) throw DomainError("valuation of zero");
    switch (kind_) {
        case Kind::Rational: return orbzeta::valuation(x.a, p_);
        case Kind::Inert: {
            int va = x.a == 0 ? 1 << 30 : orbzeta::valuation(x.a, p_);
            int vb = x.b == 0 ? 1 << 30 : orbzeta::valuation(x.b, p_);
            return std::min(va, vb);
        }
        case Kind::Ramified: return orbzeta::valuation(x.a * x.a + t_ * x.a * x.b + n_ * x.b * x.b, p_);
        case Kind::Split: {
            Integer nm = x.a * x.a + t_ * x.a * x.b + n_ * x.b * x.b;
            int prec = orbzeta::valuation(nm, p_) + 1;
            return valuation(localize(x, prec));
        }
    }
    return 0;
}

LocalInt LocalPrime::localize(const AlgebraicInt& x, int prec) const {
    switch (kind_) {
        case Kind::Rational: return {x.a, 0, LocalInt::kExact};
        case Kind::Split: {
            Integer pk = ipow(p_, prec);
            return {mod(x.a + x.b * split_root(prec), pk), 0, prec};
        }
        default: return {x.a, x.b, LocalInt::kExact};
    }
}

LocalInt LocalPrime::mul(const LocalInt& x, const LocalInt& y) const {
    switch (kind_) {
        case Kind::Rational: return {x.a * y.a, 0, LocalInt::kExact};
        case Kind::Split: {
            int prec = std::min(x.prec, y.prec);
            return {mod(x.a * y.a, ipow(p_, prec)), 0, prec};
        }
        default: {
            Integer bb = x.b * y.b;
            return {x.a * y.a - n_ * bb, x.a * y.b + x.b * y.a + t_ * bb, LocalInt::kExact};
        }
    }
}

LocalInt LocalPrime::sub(const LocalInt& x, const LocalInt& y) const {
    if (kind_ == Kind::Split) {
        int prec = std::min(x.prec, y.prec);
        return {mod(x.a - y.a, ipow(p_, prec)), 0, prec};
    }
    return {x.a - y.a, x.b - y.b, std::min(x.prec, y.prec)};
}

int LocalPrime::valuation(const LocalInt& x) const {
    switch (kind_) {
        case Kind::Rational:
            return x.a == 0 ? LocalInt::kExact : orbzeta::valuation(x.a, p_);
        case Kind::Split: {
            if (mod(x.a, ipow(p_, x.prec)) == 0) return x.prec;
            return orbzeta::valuation(x.a, p_);
        }
        case Kind::Inert: {
            if (x.a == 0 && x.b == 0) return LocalInt::kExact;
            int va = x.a == 0 ? LocalInt::kExact : orbzeta::valuation(x.a, p_);
            int vb = x.b == 0 ? LocalInt::kExact : orbzeta::valuation(x.b, p_);
            return std::min(va, vb);
        }
        case Kind::Ramified: {
            if (x.a == 0 && x.b == 0) return LocalInt::kExact;
            return orbzeta::valuation(x.a * x.a + t_ * x.a * x.b + n_ * x.b * x.b, p_);
        }
    }
    return 0;
}

LocalInt LocalPrime::divide_by_p(const LocalInt& x, int k) const {
    Integer pk = ipow(p_, k);
    if (kind_ == Kind::Split) {
        if (x.prec < k || mod(x.a, pk) != 0) throw DomainError("local division by p^k is not exact");
        int prec = x.prec - k;
        return {mod(x.a / pk, ipow(p_, prec)), 0, prec};
    }
    if (x.a % pk != 0 || x.b % pk != 0) throw DomainError("local division by p^k is not exact");
    return {x.a / pk, x.b / pk, x.prec};
}

LocalInt LocalPrime::strip_square_power(const LocalInt& x, int r) const {
    if (r == 0) return x;
    if (kind_ != Kind::Ramified) return divide_by_p(x, 2 * r);
    LocalInt c{uniformizer_.a + uniformizer_.b * t_, -uniformizer_.b, LocalInt::kExact};
    LocalInt y = x;
    for (int i = 0; i < 2 * r; ++i) y = mul(y, c);
    return divide_by_p(y, 2 * r);
}

std::vector<LocalInt> LocalPrime::residues(int k) const {
    std::vector<LocalInt> out;
    switch (kind_) {
        case Kind::Rational:
        case Kind::Split: {
            long n = ipow(p_, k).get_si();
            for (long a = 0; a < n; ++a) out.push_back({Integer(a), 0, kind_ == Kind::Split ? k : LocalInt::kExact});
            break;
        }
        case Kind::Inert:
        case Kind::Ramified: {
            long n = ipow(p_, kind_ == Kind::Inert ? k : (k + 1) / 2).get_si();
            for (long b = 0; b < n; ++b)
                for (long a = 0; a < n; ++a) out.push_back({Integer(a), Integer(b), LocalInt::kExact});
            break;
        }
    }
    return out;
}

bool LocalPrime::is_square_mod(const LocalInt& x, int k) const {
    for (const LocalInt& y : residues(k))
        if (valuation(sub(x, mul(y, y))) >= k) return true;
    return false;
}

bool LocalPrime::residue_is_square(const LocalInt& u) const {
    if (p_ == 2) throw DomainError("residue square test needs odd p");
    switch (kind_) {
        case Kind::Rational:
        case Kind::Split: return kronecker(mod(u.a, p_), p_) == 1;
        case Kind::Inert: return kronecker(mod(u.a * u.a + t_ * u.a * u.b + n_ * u.b * u.b, p_), p_) == 1;
        case Kind::Ramified: return kronecker(mod(u.a + u.b * root_, p_), p_) == 1;
    }
    return false;
}

int LocalPrime::working_precision(const AlgebraicInt& x, int extra) const {
    if (kind_ != Kind::Split) return LocalInt::kExact;
    Integer nm = x.a * x.a + t_ * x.a * x.b + n_ * x.b * x.b;
    return orbzeta::valuation(nm, p_) + 4 * e_ + extra;
}

std::string LocalPrime::to_string() const {
    switch (kind_) {
        case Kind::Rational:
        case Kind::Inert: return "(" + p_.get_str() + ")";
        default: return "(" + p_.get_str() + ", w-" + root_.get_str() + ")";
    }
}

// ---------------------------------------------------------------------------

Integer IdealData::norm() const {
    Integer n = 1;
    for (const auto& [q, e] : factors) n *= ipow(q.residue_size(), e);
    return n;
}

int IdealData::exponent(const LocalPrime& q) const {
    for (const auto& [r, e] : factors)
        if (r == q) return e;
    return 0;
}

bool IdealData::divides(const IdealData& other) const {
    for (const auto& [q, e] : factors)
        if (other.exponent(q) < e) return false;
    return true;
}

void IdealData::set_exponent(const LocalPrime& q, int exponent) {
    auto it = std::find_if(factors.begin(), factors.end(), [&](const auto& f) { return f.first == q; });
    if (it != factors.end()) {
        if (exponent > 0) it->second = exponent;
        else factors.erase(it);
        return;
    }
    if (exponent <= 0) return;
    factors.emplace_back(q, exponent);
    std::sort(factors.begin(), factors.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
}

std::vector<IdealData> IdealData::divisors() const {
    std::vector<IdealData> out{IdealData{}};
    for (const auto& [q, e] : factors) {
        std::vector<IdealData> next;
        for (const IdealData& d : out)
            for (int k = 0; k <= e; ++k) {
                IdealData x = d;
                if (k > 0) x.factors.emplace_back(q, k);
                next.push_back(std::move(x));
            }
        out = std::move(next);
        if (out.size() > (1u << 20)) throw GuardError("more than 2^20 divisors");
    }
    return out;
}

IdealData IdealData::quotient(const IdealData& other) const {
    if (!other.divides(*this)) throw DomainError("ideal quotient is not integral");
    IdealData r;
    for (const auto& [q, e] : factors) {
        int k = e - other.exponent(q);
        if (k > 0) r.factors.emplace_back(q, k);
    }
    return r;
}

std::string IdealData::to_string() const {
    if (factors.empty()) return "(1)";
    std::string s;
    for (const auto& [q, e] : factors) {
        if (!s.empty()) s += "*";
        s += q.to_string();
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

bool operator==(const IdealData& x, const IdealData& y) {
    if (x.factors.size() != y.factors.size()) return false;
    for (std::size_t i = 0; i < x.factors.size(); ++i)
        if (!(x.factors[i].first == y.factors[i].first) || x.factors[i].second != y.factors[i].second) return false;
    return true;
}

nlohmann::json to_json(const IdealData& ideal) {
    auto arr = nlohmann::json::array();
    for (const auto& [q, e] : ideal.factors) {
        nlohmann::json j{{"p", q.p().get_str()}, {"e", q.e()}, {"f", q.f()}, {"exp", e}};
        if (q.kind() == LocalPrime::Kind::Split) j["index"] = q.index();
        arr.push_back(j);
    }
    return arr;
}

// ---------------------------------------------------------------------------

bool is_local_square(const AlgebraicInt& x, const LocalPrime& q) {
    if (x.is_zero()) throw DomainError("is_local_square of zero");
    int v = q.valuation(x);
    if (v % 2) return false;
    LocalInt u = q.strip_square_power(q.localize(x, q.working_precision(x)), v / 2);
    if (q.p() != 2) return q.residue_is_square(u);
    return q.is_square_mod(u, 2 * q.e() + 1);
}

bool is_square_mod4_at(const AlgebraicInt& x, const LocalPrime& q) {
    return q.is_square_mod(q.localize(x, q.working_precision(x)), 2 * q.e());
}

LocalClassification local_split_type(const BaseField& field, const AlgebraicInt& delta, const LocalPrime& q) {
    field.require_valid_delta(delta);
    return local_split_type_unchecked(delta, q);
}

LocalClassification local_split_type_unchecked(const AlgebraicInt& delta, const LocalPrime& q) {
    int a = q.valuation(delta);
    LocalInt d = q.localize(delta, q.working_precision(delta));
    if (q.p() != 2) {
        if (a % 2) return {SplitType::Ramified, a / 2};
        LocalInt u = q.strip_square_power(d, a / 2);
        return {q.residue_is_square(u) ? SplitType::Split : SplitType::Inert, a / 2};
    }
    const int two_e = 2 * q.e();
    int n = -1;
    LocalInt u;
    for (int r = a / 2; r >= 0; --r) {
        LocalInt c = q.strip_square_power(d, r);
        if (q.is_square_mod(c, two_e)) {
            n = r;
            u = c;
            break;
        }
    }
    if (n < 0) throw NotSquareMod4Error("delta is not a square modulo 4 at " + q.to_string());
    if (q.valuation(u) > 0) return {SplitType::Ramified, n};
    // u = w^2 (1 + 4t): unramified, decided by y^2 + y = t in the residue field
    for (const LocalInt& w : q.residues(two_e)) {
        LocalInt w2 = q.mul(w, w);
        LocalInt diff = q.sub(u, w2);
        if (q.valuation(w) > 0 || q.valuation(diff) < two_e) continue;
        LocalInt z = q.divide_by_p(diff, 2);
        for (const LocalInt& y : q.residues(q.e())) {
            LocalInt yy = q.mul(y, y);
            LocalInt s{yy.a + y.a, yy.b + y.b, std::min(yy.prec, y.prec)};
            if (q.valuation(q.sub(q.mul(w2, s), z)) >= 1) return {SplitType::Split, n};
        }
        return {SplitType::Inert, n};
    }
    return {SplitType::Ramified, n};
}

std::vector<LocalPrime> prime_divisors(const BaseField& field, const AlgebraicInt& x) {
    if (x.is_zero()) throw DomainError("prime divisors of zero");
    std::vector<LocalPrime> out;
    for (const auto& [p, e] : factor(field.norm(x)).factors)
        for (const LocalPrime& q : field.primes_above(p))
            if (q.divides(x)) out.push_back(q);
    std::sort(out.begin(), out.end());
    return out;
}

DeltaData analyze_delta(const BaseField& field, const AlgebraicInt& delta) {
    field.require_valid_delta(delta);
    DeltaData out;
    for (const LocalPrime& q : prime_divisors(field, delta)) {
        LocalClassification c = local_split_type_unchecked(delta, q);
        out.local.emplace_back(q, c);
        if (c.depth > 0) out.s_delta.factors.emplace_back(q, c.depth);
    }
    return out;
}

IdealData s_delta(const BaseField& field, const AlgebraicInt& delta) { return analyze_delta(field, delta).s_delta; }

int chi_delta(const BaseField& field, const AlgebraicInt& delta, const LocalPrime& q) {
    field.require_valid_delta(delta);
    return chi_value(local_split_type_unchecked(delta, q).type);
}

bool satisfies_congruence(const BaseField& field, const IdealData& ideal, const AlgebraicInt& delta) {
    Integer ni = ideal.norm();
    if (field.norm(delta) % (ni * ni) != 0) return false;
    for (const auto& [q, e] : ideal.factors)
        if (q.valuation(delta) < 2 * e) return false;
    for (const LocalPrime& q : field.primes_above(2)) {
        int e = ideal.exponent(q);
        LocalInt d = q.localize(delta, q.working_precision(delta));
        if (!q.is_square_mod(q.strip_square_power(d, e), 2 * q.e())) return false;
    }
    return true;
}

AlgebraicInt Mat2::det(const BaseField& field) const {
    return field.mul(m[0], m[3]) - field.mul(m[1], m[2]);
}

AlgebraicInt Mat2::discriminant(const BaseField& field) const {
    AlgebraicInt d = det(field);
    return field.square(trace()) - field.mul(AlgebraicInt(4), d);
}

Mat2 delta_to_matrix(const BaseField& field, const AlgebraicInt& delta) {
    auto r = field.square_root_mod4(delta);
    if (!r) throw NotSquareMod4Error("delta " + delta.to_string() + " is not a square modulo 4 in " + field.spec());
    AlgebraicInt diff = delta - field.square(*r);
    AlgebraicInt m{diff.a / 4, diff.b / 4};
    return Mat2{{*r, AlgebraicInt(1), m, AlgebraicInt(0)}};
}

bool no_solution_witness(const LocalPrime& q, int t, const AlgebraicInt& unit) {
    if (q.p() != 2) throw DomainError("no_solution_witness needs a prime over 2");
    if (t < 1 || t > 2 * q.e() - 1 || t % 2 == 0) throw DomainError("t must be odd in [1, 2e-1]");
    const int k = 2 * q.e();
    LocalInt pi = q.localize(q.uniformizer(), k + 8);
    LocalInt c = q.localize(unit, k + 8);
    if (q.valuation(c) != 0) throw DomainError("u must be a unit");
    for (int i = 0; i < t; ++i) c = q.mul(c, pi);
    auto reps = q.residues(k);
    for (const LocalInt& x : reps) {
        LocalInt lhs = q.sub(q.mul(x, x), c);
        for (const LocalInt& y : reps)
            if (q.valuation(q.sub(lhs, q.mul(y, y))) >= k) return false;
    }
    return true;
}

std::vector<IdealData> enumerate_ideals(const BaseField& field, long bound) {
    std::vector<std::pair<LocalPrime, long>> primes;
    for (long p : primes_up_to(bound))
        for (const LocalPrime& q : field.primes_above(p)) {
            long nq = q.residue_size().get_si();
            if (nq <= bound) primes.emplace_back(q, nq);
        }
    std::stable_sort(primes.begin(), primes.end(), [](const auto& x, const auto& y) { return x.second < y.second; });
    std::vector<IdealData> out;
    IdealData cur;
    std::function<void(std::size_t, long)> rec = [&](std::size_t i, long norm) {
        if (i == primes.size() || norm * primes[i].second > bound) {
            IdealData d = cur;
            std::sort(d.factors.begin(), d.factors.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
            out.push_back(std::move(d));
            return;
        }
        const auto& [q, nq] = primes[i];
        rec(i + 1, norm);
        long n = norm;
        int e = 0;
        while (n * nq <= bound) {
            n *= nq;
            ++e;
            cur.factors.emplace_back(q, e);
            rec(i + 1, n);
            cur.factors.pop_back();
        }
    };
    rec(0, 1);
    return out;
}

}  // namespace orbzeta
