// Acceptance gate: one PASS/FAIL line per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "orbzeta/global_formula.hpp"
#include "orbzeta/kloosterman.hpp"
#include "orbzeta/oracles.hpp"
#include "orbzeta/order_zeta.hpp"
#include "orbzeta/verify.hpp"
#include "orbzeta/zagier.hpp"

using namespace orbzeta;

namespace {

struct Outcome {
    bool pass = true;
    std::string note;
};

std::vector<BaseField> fields() {
    return {BaseField::rational(), BaseField::quadratic(-1), BaseField::quadratic(2), BaseField::quadratic(5),
            BaseField::quadratic(-5)};
}

Outcome fe_corpus() {
    long cases = 0, fails = 0;
    for (const BaseField& K : fields())
        for (const AlgebraicInt& d : random_deltas(K, K.is_rational() ? 500 : 100, 1)) {
            ++cases;
            fails += !check_functional_equation(K, d).ok;
        }
    return {fails == 0, std::to_string(cases) + " deltas, " + std::to_string(fails) + " failures"};
}

Outcome arthur() {
    const BaseField Q = BaseField::rational();
    long cases = 0, fails = 0, deep = 0;
    std::vector<AlgebraicInt> ds = random_deltas(Q, 500, 1);
    for (const Integer& d : elliptic_sweep_deltas()) ds.emplace_back(d);
    for (const AlgebraicInt& d : ds) {
        ++cases;
        fails += !check_arthur(Q, d).ok;
        deep += !s_delta(Q, d).factors.empty();
    }
    return {fails == 0, std::to_string(cases) + " deltas (" + std::to_string(deep) + " with nontrivial S), " +
                            std::to_string(fails) + " failures"};
}

Outcome poly_fe() {
    long cases = 0, fails = 0;
    for (auto t : {SplitType::Split, SplitType::Inert, SplitType::Ramified})
        for (long q : {2L, 3L, 4L, 5L, 7L, 9L})
            for (int n = 0; n <= 10; ++n) {
                ++cases;
                fails += !order_polynomial(t, n, q).satisfies_functional_equation();
            }
    return {fails == 0, std::to_string(cases) + " polynomials, " + std::to_string(fails) + " failures"};
}

Outcome ideal_oracles() {
    long cases = 0, fails = 0;
    for (auto t : {SplitType::Split, SplitType::Inert, SplitType::Ramified})
        for (long p : {2L, 3L})
            for (int n = 0; n <= 2; ++n) {
                ++cases;
                fails += !check_local_oracle(t, n, p, 4).ok;
            }
    for (long d : {5L, 45L, 48L, -4L, -12L}) {
        ++cases;
        fails += !check_global_oracle(d, 200).ok;
    }
    return {fails == 0, std::to_string(cases) + " cells, " + std::to_string(fails) + " failures"};
}

Outcome tree() {
    auto corpus = tree_corpus();
    long fails = 0;
    int types[3] = {0, 0, 0};
    for (const auto& c : corpus) {
        ++types[int(c.type)];
        fails += !check_tree(c).ok;
    }
    auto x = tree_orbital_oracle({3, 1, 9, 0}, 3);
    bool anchor = x.conclusive && x.value == 5;
    bool ok = fails == 0 && anchor && corpus.size() >= 30 && types[0] && types[1] && types[2];
    return {ok, std::to_string(corpus.size()) + " matrices, " + std::to_string(fails) +
                    " failures, X^2-3X-9 at 3 -> " + to_string(x.value)};
}

Outcome congruence() {
    long cases = 0, fails = 0;
    for (const BaseField& K : fields()) {
        auto ideals = enumerate_ideals(K, 10000);
        for (const AlgebraicInt& d : random_deltas(K, 50, 2)) {
            ++cases;
            fails += !check_congruence(K, d, ideals).ok;
        }
    }
    long witness_fails = 0;
    for (const BaseField& K : {BaseField::rational(), BaseField::quadratic(2), BaseField::quadratic(-1)})
        witness_fails += !check_no_solution(K).ok;
    return {fails == 0 && witness_fails == 0,
            std::to_string(cases) + " deltas, " + std::to_string(fails) + " failures; dyadic no-solution check " +
                (witness_fails ? "FAILED" : "holds") + " for e = 1, 2"};
}

Outcome zagier() {
    long fails = 0;
    for (long d : {5L, 8L, 12L, 13L, 45L, -3L, -4L, -7L, 173L}) fails += !check_zagier_fe(d).ok;
    double e1 = std::abs(dirichlet_L(1, -4) - std::numbers::pi / 4);
    double e2 = std::abs(dirichlet_L(1, 5) - 2 * std::log((1 + std::sqrt(5.0)) / 2) / std::sqrt(5.0));
    char buf[160];
    std::snprintf(buf, sizeof buf, "9 deltas x 20 points, %ld failures; |L(1,-4) err| = %.1e, |L(1,5) err| = %.1e",
                  fails, e1, e2);
    return {fails == 0 && e1 < 1e-9 && e2 < 1e-9, buf};
}

Outcome euler() {
    std::string note;
    bool ok = true;
    for (int k = 0; k <= 4; ++k) {
        auto e = euler_factor_at_2(k, 1, CongruenceVariant::WithoutCC, 9);
        double want = (1 - std::ldexp(1.0, -(k + 3))) / 0.5;
        double gap = std::abs(e.value - want);
        bool asserted = k == 1 || k == 3;
        if (asserted) ok = ok && gap <= e.tail_bound;
        char buf[128];
        std::snprintf(buf, sizeof buf, "k=%d %.10f vs %.10f%s; ", k, e.value.real(), want,
                      asserted ? (gap <= e.tail_bound ? " ok" : " MISMATCH") : " (not asserted)");
        note += buf;
    }
    long k11 = kloosterman({1, 1, 2, 1});
    ok = ok && k11 == 4;
    note += "K_{1,1} = " + std::to_string(k11);
    return {ok, note};
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "functional equation of the global orbital series", fe_corpus},
        {2, "divisor expansion equals the local product", arthur},
        {3, "polynomial functional equation", poly_fe},
        {4, "local and global ideal-count oracles", ideal_oracles},
        {5, "tree-lattice oracle", tree},
        {6, "congruence conditions and divisibility", congruence},
        {7, "Zagier functional equation and L-values", zagier},
        {8, "Euler factor at 2 and K_{1,1}", euler},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("[%s] %d %s (%.2fs): %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs, o.note.c_str());
        std::fflush(stdout);
        failed += !o.pass;
    }
    return failed ? 1 : 0;
}
