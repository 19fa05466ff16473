#include "orbzeta/oracles.hpp"

#include <cstdint>

namespace orbzeta {

namespace {

using i128 = __int128;

i128 mod(i128 x, i128 m) {
    i128 r = x % m;
    return r < 0 ? r + m : r;
}

int vp(i128 x, long p) {
    if (x == 0) return 1 << 20;
    int v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

bool is_square_in_Qp(long delta, long p) {
    int v = vp(delta, p);
    if (v % 2) return false;
    i128 u = delta;
    for (int i = 0; i < v; ++i) u /= p;
    if (p == 2) return mod(u, 8) == 1;
    i128 r = mod(u, p);
    for (i128 y = 1; y < p; ++y)
        if (y * y % p == r) return true;
    return false;
}

// E = Q_p[gamma] is ramified iff some a + b gamma has odd norm valuation
bool ramified_by_search(long tr, long det, long delta, long p) {
    int M = vp(delta, p) + 2;
    i128 pm = 1;
    for (int i = 0; i < M; ++i) pm *= p;
    i128 b = 1;
    for (int j = 0; j <= M; ++j, b *= p)
        for (i128 a = 0; a < pm; ++a) {
            i128 n = a * a + a * b * tr + b * b * det;
            if (n != 0 && vp(n, p) % 2) return true;
        }
    return false;
}

}  // namespace

TreeOracleResult tree_orbital_oracle(const IntMat2& g, long p, int r_max) {
    if (p < 2 || !is_prime(p)) throw DomainError("p must be prime");
    const long tr = g[0] + g[3];
    const long det = g[0] * g[3] - g[1] * g[2];
    const long delta = tr * tr - 4 * det;
    if (det == 0) throw DomainError("gamma must be invertible");
    if (delta == 0) throw DomainError("gamma must be regular");
    // keep p^R below 2^62 so products stay inside 128 bits
    int cap = 0;
    for (i128 x = p; x <= (i128(1) << 62); x *= p) ++cap;
    r_max = std::min(r_max, cap);

    TreeOracleResult res;
    res.kind = is_square_in_Qp(delta, p) ? TreeCase::Split : TreeCase::Elliptic;
    if (res.kind == TreeCase::Elliptic) res.ramified = ramified_by_search(tr, det, delta, p);

    // level d: A(x) with w = (1, x), x mod p^d, and B(y) with w = (p y, 1), y mod p^{d-1}
    std::vector<i128> a_front{0}, b_front;
    res.level_counts.push_back(1);
    i128 pd = 1;
    int equal_run = 0;
    for (int d = 1; d <= r_max; ++d) {
        i128 prev = pd;
        pd *= p;
        std::vector<i128> a_next, b_next;
        for (i128 x : a_front)
            for (long t = 0; t < p; ++t) {
                i128 xx = x + prev * t;
                // gamma (1, x) = (g0 + g1 x, g2 + g3 x) = lambda (1, x)
                i128 lam = mod(g[0] + g[1] * xx, pd);
                if (mod(g[2] + g[3] * xx - mod(lam * xx, pd), pd) == 0) a_next.push_back(xx);
            }
        std::vector<i128> b_seeds = b_front;
        if (d == 1) b_seeds = {0};
        i128 ystep = d == 1 ? 1 : prev / p;
        for (i128 y : b_seeds)
            for (long t = 0; t < (d == 1 ? 1 : p); ++t) {
                i128 yy = y + ystep * t;
                i128 w0 = p * yy;
                // gamma (p y, 1) = (g0 w0 + g1, g2 w0 + g3) = lambda (w0, 1)
                i128 lam = mod(g[2] * w0 + g[3], pd);
                if (mod(g[0] * w0 + g[1] - mod(lam * w0, pd), pd) == 0) b_next.push_back(yy);
            }
        a_front = std::move(a_next);
        b_front = std::move(b_next);
        long count = long(a_front.size() + b_front.size());
        res.level_counts.push_back(count);
        res.radius = d;
        if (count == res.level_counts[d - 1]) ++equal_run;
        else equal_run = 0;
        if (res.kind == TreeCase::Elliptic && count == 0) {
            res.conclusive = true;
            break;
        }
        if (res.kind == TreeCase::Split && equal_run >= 2) {
            res.conclusive = true;
            break;
        }
    }
    if (!res.conclusive) return res;
    if (res.kind == TreeCase::Elliptic) {
        long total = 0;
        for (long c : res.level_counts) total += c;
        res.value = make_rational(total, res.ramified ? 2 : 1);
    } else {
        res.value = make_rational(res.level_counts.back(), 2);
    }
    return res;
}

std::vector<long> global_ideal_count_oracle(long delta, long N) {
    if (std::labs(delta) > 10000) throw GuardError("|delta| exceeds 10^4");
    if (N > 500) throw GuardError("N exceeds 500");
    long r = ((delta % 4) + 4) % 4;
    if (r != 0 && r != 1) throw DomainError("delta must be 0 or 1 mod 4");
    if (is_perfect_square(Integer(delta))) throw DomainError("delta must be a nonsquare");
    const long m = (delta - r) / 4;
    std::vector<long> counts(N + 1, 0);
    for (long n = 1; n <= N; ++n)
        for (long a = 1; a <= n; ++a) {
            if (n % a) continue;
            const long d = n / a;
            for (long b = 0; b < d; ++b) {
                // lattice spanned by (a, b), (0, d); gamma (c0, c1) = (m c1, c0 + r c1)
                auto member = [&](long u, long v) {
                    if (u % a) return false;
                    return (v - (u / a) * b) % d == 0;
                };
                if (member(m * b, a + r * b) && member(m * d, r * d)) ++counts[n];
            }
        }
    return counts;
}

}  // namespace orbzeta
