#include <doctest.h>

#include "orbzeta/oracles.hpp"
#include "orbzeta/order_zeta.hpp"
#include "orbzeta/verify.hpp"
#include "orbzeta/zagier.hpp"

using namespace orbzeta;

TEST_CASE("tree oracle examples") {
    auto r = tree_orbital_oracle({3, 1, 9, 0}, 3);
    CHECK(r.conclusive);
    CHECK(r.kind == TreeCase::Elliptic);
    CHECK(r.value == 5);
    CHECK(tree_orbital_oracle({0, -1, 1, 0}, 3).value == 1);
    CHECK(tree_orbital_oracle({1, 1, 1, 0}, 2).value == 1);
    // the other matrix with the same data
    CHECK(tree_orbital_oracle({5, 1, 5, 0}, 3).value == 5);
    auto s = tree_orbital_oracle({1, 0, 0, 4}, 3);
    CHECK(s.kind == TreeCase::Split);
    CHECK(s.value == 3);
}

TEST_CASE("tree oracle corpus") {
    auto corpus = tree_corpus();
    CHECK(corpus.size() >= 30);
    int kinds[3] = {0, 0, 0};
    for (const auto& c : corpus) {
        ++kinds[static_cast<int>(c.type)];
        auto out = check_tree(c);
        INFO(out.detail.dump());
        CHECK(out.ok);
    }
    for (int k : kinds) CHECK(k > 0);
}

TEST_CASE("global ideal counts") {
    for (long d : {5L, 45L, 48L, -4L, -12L}) {
        auto counts = global_ideal_count_oracle(d, 200);
        CHECK(counts[1] == 1);
        auto want = global_order_coefficients(d, 200);
        for (long n = 1; n <= 200; ++n) CHECK(Integer(counts[n]) == want[n]);
        CHECK(check_global_oracle(d, 200).ok);
    }
    // Z[i]: r_2(n)/4 ideals of norm n
    auto gi = global_ideal_count_oracle(-4, 25);
    CHECK(gi[5] == 2);
    CHECK(gi[3] == 0);
    CHECK(gi[25] == 3);
    CHECK_THROWS_AS(global_ideal_count_oracle(5, 100000), GuardError);
}

TEST_CASE("local oracle check") {
    for (auto t : {SplitType::Split, SplitType::Inert, SplitType::Ramified})
        for (long p : {2L, 3L})
            for (int n = 0; n <= 2; ++n) CHECK(check_local_oracle(t, n, p, 4).ok);
}
