#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include "pdg/poly.hpp"
#include "pdg/perm.hpp"
#include "test_util.hpp"

using namespace pdg;

TEST_CASE("Prime validation") {
    CHECK_NOTHROW(Prime(3));
    CHECK_NOTHROW(Prime(7));
    CHECK(Prime(2).flagged_two);
    CHECK_FALSE(Prime(5).flagged_two);
    CHECK_THROWS(Prime(1));
    CHECK_THROWS(Prime(9));
}

TEST_CASE("derive on monomials and constants") {
    int p = 5;
    auto x1 = GradedPoly::variable(p, 1, 1);
    auto x1c = GradedPoly::monomial(p, {3}, 1);
    CHECK(derive(x1c) == GradedPoly::monomial(p, {4}, 3));
    CHECK(derive(GradedPoly::constant(p, 2, 1)).is_zero());
    CHECK(derive(x1) == GradedPoly::monomial(p, {2}, 1));
}

TEST_CASE("derive on elementary symmetric functions") {
    for (int p : {3, 5, 7})
        for (int n = 1; n <= 5; ++n) {
            auto e1 = elementary_symmetric(1, n, p);
            for (int m = 1; m <= n; ++m) {
                auto em = elementary_symmetric(m, n, p);
                auto lhs = derive(em);
                GradedPoly rhs = e1 * em;
                if (m < n) rhs = rhs - elementary_symmetric(m + 1, n, p).scaled(m + 1);
                CHECK(lhs == rhs);
            }
        }
}

TEST_CASE("Leibniz rule on random pairs") {
    for (int p : {3, 5, 7})
        for (int i = 0; i < 110; ++i) {
            auto f = random_poly(p, 3), g = random_poly(p, 3);
            CHECK(derive(f * g) == derive(f) * g + f * derive(g));
        }
}

TEST_CASE("p-th iterate of derive vanishes") {
    for (int p : {3, 5, 7})
        for (int i = 0; i < 25; ++i) {
            auto f = random_poly(p, 2, 2, 3);
            for (int k = 0; k < p; ++k) f = derive(f);
            CHECK(f.is_zero());
        }
}

TEST_CASE("derive_twisted basics and nilpotency") {
    {
        auto f = GradedPoly::constant(5, 2, 1);
        CHECK(derive_twisted(f, {2, 0}) == GradedPoly::variable(5, 2, 1).scaled(2));
        CHECK(derive_twisted(f, {0, 0}).is_zero());
    }
    {
        auto f = GradedPoly::constant(3, 2, 1);
        for (int k = 0; k < 3; ++k) f = derive_twisted(f, {1, 0});
        CHECK(f.is_zero());
    }
    for (int p : {3, 5})
        for (int a1 = 0; a1 < p; ++a1)
            for (int a2 = 0; a2 < p; ++a2)
                for (int rep = 0; rep < 3; ++rep) {
                    auto f = random_poly(p, 2, 2, 3);
                    for (int k = 0; k < p; ++k) f = derive_twisted(f, {a1, a2});
                    CHECK(f.is_zero());
                }
}

TEST_CASE("divided difference basics") {
    int p = 7;
    auto x1 = GradedPoly::variable(p, 2, 1), x2 = GradedPoly::variable(p, 2, 2);
    CHECK(divided_difference(1, x1) == GradedPoly::constant(p, 2, 1));
    CHECK(divided_difference(1, x1 * x2).is_zero());
    CHECK(divided_difference(1, x1 * x1) == x1 + x2);
}

TEST_CASE("divided difference operator identities") {
    for (int p : {3, 5})
        for (int i = 0; i < 60; ++i) {
            auto f = random_poly(p, 3);
            CHECK(divided_difference(1, divided_difference(1, f)).is_zero());
            CHECK(divided_difference(2, divided_difference(2, f)).is_zero());
            auto b1 = divided_difference(1, divided_difference(2, divided_difference(1, f)));
            auto b2 = divided_difference(2, divided_difference(1, divided_difference(2, f)));
            CHECK(b1 == b2);
        }
}

TEST_CASE("longest divided difference values") {
    int p = 5;
    auto f = GradedPoly::monomial(p, {0, 1, 2}, 1); // x2 x3^2
    CHECK(longest_divided_difference(3, f) == GradedPoly::constant(p, 3, -1));
    CHECK(longest_divided_difference(2, GradedPoly::variable(p, 2, 1)) ==
          GradedPoly::constant(p, 2, 1));
    CHECK(longest_divided_difference(3, GradedPoly::constant(p, 3, 1)).is_zero());
    // staircase x2 x3^2 ... x_n^{n-1} maps to (-1)^{n(n-1)/2}
    for (int n = 2; n <= 4; ++n) {
        std::vector<int> e(n);
        for (int i = 0; i < n; ++i) e[i] = i;
        int sign = (n * (n - 1) / 2) % 2 ? -1 : 1;
        CHECK(longest_divided_difference(n, GradedPoly::monomial(p, e, 1)) ==
              GradedPoly::constant(p, n, sign));
    }
}

TEST_CASE("longest divided difference is word-independent") {
    for (int n = 2; n <= 4; ++n) {
        int p = 5;
        auto w0 = perm_longest(n);
        auto words = all_reduced_words(w0);
        for (int rep = 0; rep < 8; ++rep) {
            auto f = random_poly(p, n, 3, 4);
            auto ref = longest_divided_difference(n, f);
            for (auto& word : words) {
                GradedPoly g = f;
                for (auto it = word.rbegin(); it != word.rend(); ++it)
                    g = divided_difference(*it, g);
                CHECK(g == ref);
            }
        }
    }
}

TEST_CASE("elementary symmetric polynomials") {
    int p = 5;
    CHECK(elementary_symmetric(1, 2, p) ==
          GradedPoly::variable(p, 2, 1) + GradedPoly::variable(p, 2, 2));
    auto e23 = GradedPoly::monomial(p, {1, 1, 0}, 1);
    e23.add_term({1, 0, 1}, 1);
    e23.add_term({0, 1, 1}, 1);
    CHECK(elementary_symmetric(2, 3, p) == e23);
    CHECK(elementary_symmetric(0, 3, p) == GradedPoly::constant(p, 3, 1));
    CHECK_THROWS(elementary_symmetric(3, 2, p));
}

TEST_CASE("degree bookkeeping") {
    int p = 5;
    auto f = GradedPoly::monomial(p, {1, 2}, 3);
    CHECK(f.degree() == 6);
    CHECK(derive(f).degree() == 8);
    CHECK(divided_difference(1, f * f).degree() == 10);
}

TEST_CASE("JSON round trip") {
    for (int i = 0; i < 20; ++i) {
        auto f = random_poly(5, 3);
        CHECK(poly_from_json(poly_to_json(f)) == f);
    }
}

TEST_CASE("permutation utilities") {
    auto w0 = perm_longest(4);
    CHECK(perm_length(w0) == 6);
    auto word = reduced_word(w0);
    CHECK(static_cast<int>(word.size()) == 6);
    CHECK(perm_from_word(word, 4) == w0);
    // lexicographic minimality against all reduced words
    for (auto& w : all_perms(3)) {
        auto rw = reduced_word(w);
        CHECK(perm_from_word(rw, 3) == w);
        for (auto& other : all_reduced_words(w)) CHECK(rw <= other);
    }
    // coset factorization
    for (auto& u : all_perms(4)) {
        auto [w, s] = coset_factor(u, 2, 2);
        CHECK(perm_compose(w, s) == u);
        CHECK(perm_length(u) == perm_length(w) + perm_length(s));
        CHECK(s[0] < 2); CHECK(s[1] < 2);
    }
    CHECK(min_coset_reps(2, 2).size() == 6);
}
