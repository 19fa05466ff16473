#include "orbzeta/verify.hpp"

#include <map>
#include <random>

#include "orbzeta/global_formula.hpp"
#include "orbzeta/order_zeta.hpp"
#include "orbzeta/zagier.hpp"

namespace orbzeta {

std::vector<AlgebraicInt> random_deltas(const BaseField& field, std::size_t count, std::uint64_t seed, long bound) {
    std::mt19937_64 rng(seed);
    auto uniform = [&](long lo, long hi) { return lo + long(rng() % std::uint64_t(hi - lo + 1)); };
    std::vector<AlgebraicInt> out;
    while (out.size() < count) {
        if (field.is_rational()) {
            // half plain, half with a forced square factor
            Integer d;
            if (rng() % 2) {
                d = uniform(-bound, bound);
            } else {
                long c = uniform(1, 40);
                long lim = std::max(1L, bound / (c * c));
                d = Integer(c * c) * uniform(-lim, lim);
            }
            Integer r = d % 4;
            if (r < 0) r += 4;
            if (r != 0 && r != 1) continue;
            if (d == 0 || is_perfect_square(d)) continue;
            out.emplace_back(d);
            continue;
        }
        long lim = 1;
        while ((lim + 1) * (lim + 1) <= bound) ++lim;
        lim = std::max(2L, lim / 4);
        AlgebraicInt r(uniform(-lim, lim), uniform(-lim, lim));
        AlgebraicInt m(uniform(-lim, lim), uniform(-lim, lim));
        AlgebraicInt d = field.square(r) + field.mul(AlgebraicInt(4), m);
        if (rng() % 2) {
            AlgebraicInt c(uniform(-6, 6), uniform(-3, 3));
            if (!c.is_zero()) d = field.mul(field.square(c), d);
        }
        if (d.is_zero() || field.is_square(d)) continue;
        out.push_back(d);
    }
    return out;
}

std::vector<Integer> elliptic_sweep_deltas() {
    std::vector<Integer> out;
    for (long p : {2L, 3L, 5L})
        for (int k = 0; k <= 4; ++k)
            for (long tau = -50; tau <= 50; ++tau)
                for (PolySign s : {PolySign::Plus, PolySign::Minus}) {
                    Integer d = elliptic_delta(tau, p, k, s);
                    if (d == 0 || is_perfect_square(d)) continue;
                    out.push_back(d);
                }
    return out;
}

CheckOutcome check_functional_equation(const BaseField& field, const AlgebraicInt& delta) {
    auto series = global_series(field, delta);
    CheckOutcome r;
    r.ok = reflect(series.product) == series.product;
    r.detail = {{"delta", delta.to_string()}, {"S", series.s_delta.to_string()}};
    if (!r.ok) r.detail["product"] = to_json(series.product);
    return r;
}

CheckOutcome check_arthur(const BaseField& field, const AlgebraicInt& delta) {
    auto series = global_series(field, delta);
    ExpPoly expansion = divisor_expansion(series);
    Rational lv = langlands_value(series);
    CheckOutcome r;
    bool same = expansion == series.product;
    bool at_one = lv == series.product.eval_exact(1);
    bool local = lv == local_value_product(series);
    r.ok = same && at_one && local;
    r.detail = {{"delta", delta.to_string()}, {"S", series.s_delta.to_string()}, {"value", to_string(lv)}};
    if (!r.ok) r.detail["failed"] = {{"expansion", !same}, {"value_at_1", !at_one}, {"local_product", !local}};
    return r;
}

CheckOutcome check_congruence(const BaseField& field, const AlgebraicInt& delta, const std::vector<IdealData>& ideals) {
    IdealData S = s_delta(field, delta);
    CheckOutcome r;
    long admissible = 0;
    for (const IdealData& I : ideals) {
        bool lhs = satisfies_congruence(field, I, delta);
        bool rhs = I.divides(S);
        admissible += lhs;
        if (lhs != rhs) {
            r.ok = false;
            r.detail["counterexample"] = I.to_string();
            break;
        }
    }
    r.detail["delta"] = delta.to_string();
    r.detail["S"] = S.to_string();
    r.detail["admissible"] = admissible;
    return r;
}

CheckOutcome check_no_solution(const BaseField& field) {
    CheckOutcome r;
    long cases = 0;
    for (const LocalPrime& q : field.primes_above(2)) {
        for (const LocalInt& u : q.residues(2 * q.e())) {
            if (q.valuation(u) != 0) continue;
            AlgebraicInt unit(u.a, u.b);
            if (q.kind() == LocalPrime::Kind::Split) {
                // residues of a split prime are rational integers already
                unit = AlgebraicInt(u.a);
            }
            for (int t = 1; t <= 2 * q.e() - 1; t += 2) {
                ++cases;
                if (!no_solution_witness(q, t, unit)) {
                    r.ok = false;
                    r.detail["counterexample"] = {{"t", t}, {"u", unit.to_string()}};
                }
            }
        }
    }
    r.detail["field"] = field.spec();
    r.detail["cases"] = cases;
    return r;
}

CheckOutcome check_local_oracle(SplitType type, int n, long p, int j_max) {
    auto P = order_polynomial(type, n, p);
    auto counts = count_ideals_oracle(type, n, p, j_max);
    auto lhs = times_v(type, counts);
    CheckOutcome r;
    for (int j = 0; j <= j_max; ++j) {
        Integer want = j < static_cast<int>(P.coeffs.size()) ? P.coeffs[j] : Integer(0);
        if (lhs[j] != want) r.ok = false;
    }
    r.detail = {{"type", to_string(type)}, {"n", n}, {"p", p}, {"counts", counts}};
    return r;
}

CheckOutcome check_global_oracle(long delta, long N) {
    auto a = global_ideal_count_oracle(delta, N);
    auto b = global_order_coefficients(delta, N);
    CheckOutcome r;
    for (long n = 1; n <= N; ++n)
        if (Integer(a[n]) != b[n]) {
            r.ok = false;
            r.detail["first_mismatch"] = n;
            break;
        }
    r.detail["delta"] = delta;
    r.detail["N"] = N;
    return r;
}

std::vector<TreeSample> tree_corpus(int per_cell, int max_depth) {
    std::vector<TreeSample> out;
    auto Q = BaseField::rational();
    for (long p : {2L, 3L, 5L}) {
        std::map<std::pair<int, int>, int> filled;
        for (long r = 0; r <= 60; ++r)
            for (long m = -200; m <= 200; ++m) {
                Integer d = Integer(r * r) + 4 * m;
                if (m == 0 || d == 0 || is_perfect_square(d)) continue;
                auto c = local_split_type_unchecked(AlgebraicInt(d), Q.primes_above(p)[0]);
                if (c.depth > max_depth) continue;
                auto key = std::make_pair(int(c.type), c.depth);
                if (filled[key] >= per_cell) continue;
                ++filled[key];
                out.push_back({{r, 1, m, 0}, p, c.type, c.depth});
            }
    }
    return out;
}

CheckOutcome check_tree(const TreeSample& c) {
    auto res = tree_orbital_oracle(c.gamma, c.p);
    Rational want = orbital_value(c.type, c.depth, c.p);
    CheckOutcome r;
    r.ok = res.conclusive && res.value == want;
    r.detail = {{"gamma", c.gamma},       {"p", c.p},
                {"type", to_string(c.type)}, {"n", c.depth},
                {"tree", to_string(res.value)}, {"closed_form", to_string(want)},
                {"levels", res.level_counts}};
    return r;
}

std::vector<Complex> strip_grid(int points) {
    std::vector<Complex> out;
    for (int i = 0; i < points; ++i) {
        double re = 0.05 + 0.9 * double(i % 5) / 4.0;
        double im = -15.0 + 30.0 * double(i / 5) / std::max(1, (points - 1) / 5);
        out.emplace_back(re, im + 0.37);
    }
    return out;
}

CheckOutcome check_zagier_fe(const Integer& delta, int points, double tol) {
    auto z = CompletedZagier::make(delta);
    CheckOutcome r;
    double worst = 0;
    for (Complex s : strip_grid(points)) {
        Complex a = z.lambda(s), b = z.lambda(1.0 - s);
        double rel = std::abs(a - b) / (1 + std::abs(a));
        worst = std::max(worst, rel);
    }
    r.ok = worst < tol;
    r.detail = {{"delta", delta.get_str()}, {"worst_residual", worst}};
    return r;
}

}  // namespace orbzeta
