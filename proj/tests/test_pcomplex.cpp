#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <random>
#include "pdg/pcomplex.hpp"
#include "test_util.hpp"

using namespace pdg;

namespace {

int map_get(const std::map<int, int>& m, int j) {
    auto it = m.find(j);
    return it == m.end() ? 0 : it->second;
}

// Truncated polynomial module in one variable with d(x^m) = m x^{m+1}
// (windowed view of an infinite module, open at the top).
PComplex truncated_pol1(int p, int top_degree) {
    PComplex u = PComplex::zero(p);
    for (int m = 0; 2 * m <= top_degree; ++m) u.dims[2 * m] = 1;
    for (int m = 0; 2 * (m + 1) <= top_degree; ++m) {
        FpMat mat(p, 1, 1);
        mat.at(0, 0) = static_cast<uint8_t>(m % p);
        u.set_d(2 * m, std::move(mat));
    }
    u.refresh_window();
    u.open_high = true;
    return u;
}

} // namespace

TEST_CASE("indecomposable blocks V and V_tilde") {
    for (int p : {3, 5}) {
        for (int i = 0; i <= p - 1; ++i) {
            auto v = PComplex::V(p, i, 4);
            CHECK(v.check_pnilpotent());
            auto dec = v.decompose();
            REQUIRE(dec.blocks.size() == 1);
            CHECK(dec.blocks[0] == Block{i + 1, 4, 1, false});
            CHECK(PComplex::V_tilde(p, i).lo == -i);
            CHECK(PComplex::V_tilde(p, i).hi == i);
        }
        // single vector in degree 5, d = 0
        PComplex u = PComplex::V(p, 0, 5);
        auto dec = u.decompose();
        REQUIRE(dec.blocks.size() == 1);
        CHECK(dec.blocks[0] == Block{1, 5, 1, false});
    }
}

TEST_CASE("V_tilde_1 tensor V_tilde_1 at p=5") {
    auto t = PComplex::V_tilde(5, 1).tensor(PComplex::V_tilde(5, 1));
    CHECK(t.check_pnilpotent());
    auto m = t.decompose().as_map();
    std::map<std::pair<int, int>, int> expect{{{1, 0}, 1}, {{3, -2}, 1}};
    CHECK(m == expect);
}

TEST_CASE("tensor product rule for balanced indecomposables") {
    for (int p : {3, 5}) {
        for (int i = 0; i <= p - 1; ++i)
            for (int j = 0; j <= p - 1; ++j) {
                auto t = PComplex::V_tilde(p, i).tensor(PComplex::V_tilde(p, j));
                std::map<std::pair<int, int>, int> expect;
                int hi_m = std::min(i + j, 2 * p - i - j - 4);
                for (int m = std::abs(i - j); m <= hi_m; m += 2)
                    expect[{m + 1, -m}] += 1;
                int free_mult = std::max(0, i + j + 2 - p);
                // free part: [free_mult] copies of V_tilde_{p-1}, i.e. blocks
                // of length p at starts -(p-1)+e for the balanced exponents e
                for (int t2 = 0; t2 < free_mult; ++t2)
                    expect[{p, -(p - 1) + (1 - free_mult) + 2 * t2}] += 1;
                CHECK(t.decompose().as_map() == expect);
            }
    }
}

TEST_CASE("V_i tensor V_{p-1} is free") {
    for (int p : {3, 5})
        for (int i = 0; i <= p - 1; ++i) {
            auto t = PComplex::V(p, i, 0).tensor(PComplex::V(p, p - 1, 0));
            std::map<std::pair<int, int>, int> expect;
            for (int k = 0; k <= i; ++k) expect[{p, 2 * k}] += 1;
            CHECK(t.decompose().as_map() == expect);
            CHECK(t.is_contractible());
        }
}

TEST_CASE("tensor with V_0 is identity") {
    std::map<std::pair<int, int>, int> truth;
    for (int p : {3, 5}) {
        auto u = PComplex::random_complex(p, test_rng(), &truth);
        auto t = u.tensor(PComplex::V(p, 0, 0));
        CHECK(t.decompose_oracle().as_map() == truth);
    }
}

TEST_CASE("slash cohomology of indecomposables") {
    for (int p : {3, 5}) {
        // free block: all slash groups vanish
        auto f = PComplex::V(p, p - 1, 2);
        for (int k = 0; k <= p - 2; ++k) CHECK(f.slash(k).empty());
        // non-free V_i: 1-dimensional for 0 <= k <= i, in degree start+2(i-k)
        for (int i = 0; i <= p - 2; ++i) {
            auto v = PComplex::V(p, i, 0);
            for (int k = 0; k <= p - 2; ++k) {
                auto h = v.slash(k);
                if (k <= i) {
                    REQUIRE(h.size() == 1);
                    CHECK(map_get(h, 2 * (i - k)) == 1);
                } else {
                    CHECK(h.empty());
                }
            }
        }
        CHECK(map_get(PComplex::V(p, 0, 0).slash(0), 0) == 1);
        CHECK_THROWS_AS(f.slash(p - 1), std::invalid_argument);
        CHECK_THROWS_AS(f.slash(-1), std::invalid_argument);
    }
}

TEST_CASE("backslash cohomology basics and duality") {
    for (int p : {3, 5}) {
        auto f = PComplex::V(p, p - 1, 0);
        for (int k = 0; k <= p - 1; ++k) CHECK(f.backslash(k).empty());
        CHECK(map_get(PComplex::V(p, 0, 0).backslash(0), 0) == 1);
        // H_{\k}(U)^* = H_{/k}(U^*): degree-negated dimension match
        for (int rep = 0; rep < 25; ++rep) {
            auto u = PComplex::random_complex(p, test_rng());
            auto ud = u.dual();
            CHECK(ud.check_pnilpotent());
            for (int k = 0; k <= p - 2; ++k) {
                auto bs = u.backslash(k);
                auto sl = ud.slash(k);
                std::map<int, int> mirrored;
                for (auto& [j, v] : sl) mirrored[-j] = v;
                CHECK(bs == mirrored);
            }
        }
    }
}

TEST_CASE("mayer cohomology and exact sequence") {
    for (int p : {3, 5}) {
        // _1H = H_{/0}
        for (int rep = 0; rep < 25; ++rep) {
            auto u = PComplex::random_complex(p, test_rng());
            CHECK(u.mayer(1) == u.slash(0));
            for (int k = 1; k <= p - 1; ++k)
                CHECK(PComplex::V(p, p - 1, rep % 5).mayer(k).empty());
        }
    }
    // exactness on random complexes, including 10-dim ones at p=5
    for (int p : {3, 5})
        for (int rep = 0; rep < 40; ++rep)
            CHECK(PComplex::random_complex(p, test_rng()).four_term_exact());
}

TEST_CASE("decompose matches greedy Jordan oracle and ground truth") {
    for (int p : {3, 5}) {
        std::map<std::pair<int, int>, int> truth;
        for (int rep = 0; rep < 60; ++rep) {
            auto u = PComplex::random_complex(p, test_rng(), &truth);
            REQUIRE(u.check_pnilpotent());
            auto a = u.decompose().as_map();
            auto b = u.decompose_oracle().as_map();
            CHECK(a == b);
            CHECK(a == truth);
        }
    }
}

TEST_CASE("dimension equals slash plus free part, per degree") {
    for (int p : {3, 5})
        for (int rep = 0; rep < 20; ++rep) {
            auto u = PComplex::random_complex(p, test_rng());
            std::map<int, int> freecover;
            for (auto& b : u.decompose().blocks)
                if (b.len == p)
                    for (int t = 0; t < p; ++t) freecover[b.start + 2 * t] += b.mult;
            for (auto& [j, n] : u.dims) {
                int s = map_get(freecover, j) * 1;
                for (int k = 0; k <= p - 2; ++k) s += map_get(u.slash(k), j);
                CHECK(n == s);
            }
        }
}

TEST_CASE("symbols") {
    for (int p : {3, 5}) {
        for (int i = 0; i <= p - 2; ++i) {
            auto s = PComplex::V_tilde(p, i).symbol();
            CHECK(s.verified);
            CHECK(s.value == quantum_int(i + 1, p));
        }
        CHECK(PComplex::V(p, p - 1, 0).symbol().value.is_zero());
        CHECK(PComplex::zero(p).symbol().value.is_zero());
        // multiplicativity under tensor for fully-windowed complexes
        for (int rep = 0; rep < 15; ++rep) {
            auto u = PComplex::random_complex(p, test_rng());
            auto w = PComplex::random_complex(p, test_rng());
            CHECK(u.tensor(w).symbol().value == u.symbol().value * w.symbol().value);
        }
    }
}

TEST_CASE("contractibility") {
    for (int p : {3, 5}) {
        auto f = PComplex::V(p, p - 1, 0).direct_sum(PComplex::V(p, p - 1, 2));
        CHECK(f.is_contractible());
        CHECK_FALSE(PComplex::V(p, 0, 0).is_contractible());
        for (int rep = 0; rep < 25; ++rep) {
            auto u = PComplex::random_complex(p, test_rng());
            bool no_slash = true;
            for (int k = 0; k <= p - 2; ++k) no_slash = no_slash && u.slash(k).empty();
            CHECK(u.is_contractible() == no_slash);
        }
    }
}

TEST_CASE("quasi-isomorphism") {
    for (int p : {3, 5}) {
        auto u = PComplex::random_complex(p, test_rng());
        CHECK(u.quasi_isomorphic(u.direct_sum(PComplex::V(p, p - 1, 3))));
        CHECK_FALSE(PComplex::V(p, 0, 0).quasi_isomorphic(PComplex::V(p, 1, 0)));
    }
    // windowed truncated polynomial module vs the trivial module, on interior
    for (int p : {3, 5}) {
        auto pol = truncated_pol1(p, 8 * p);
        auto v0 = PComplex::V(p, 0, 0);
        for (int k = 0; k <= p - 2; ++k) {
            auto a = pol.slash(k), b = v0.slash(k);
            for (int j = pol.lo; j <= pol.hi - 2 * p; ++j)
                CHECK(map_get(a, j) == map_get(b, j));
        }
        auto s = pol.symbol();
        CHECK(s.verified);
        CHECK(s.value == ORingElem::integer(p, 1));
    }
}

TEST_CASE("window truncation flags") {
    for (int p : {3, 5}) {
        // a free chain cut at the top looks like a shorter block; it must be
        // flagged, and the symbol must refuse certification when it sits in
        // the top band
        auto u = PComplex::V(p, p - 1, 0);
        PComplex cut = PComplex::zero(p);
        for (int t = 0; t <= p - 3; ++t) cut.dims[2 * t] = 1;
        for (int t = 0; t < p - 3; ++t) {
            FpMat m(p, 1, 1);
            m.at(0, 0) = 1;
            cut.set_d(2 * t, std::move(m));
        }
        cut.refresh_window();
        cut.open_high = true;
        auto dec = cut.decompose();
        REQUIRE(dec.blocks.size() == 1);
        CHECK(dec.blocks[0].truncated);
        CHECK(dec.as_map(false).empty());
        // a top-truncated block is tolerated boundary noise and excluded
        CHECK(cut.symbol().verified);
        CHECK(cut.symbol().value.is_zero());
        // ... but a classified non-free block inside the top band of width
        // 2p blocks certification
        auto band = PComplex::V(p, 1, -4);
        band.open_high = true;
        band.hi = 0; // window extends past the block, which still sits in band
        CHECK_FALSE(band.symbol().verified);
        CHECK_FALSE(band.symbol().value.is_zero());
        // and a bottom-truncated block does too
        auto bot = PComplex::V(p, 0, 0);
        bot.open_low = true;
        bot.hi = 6 * p;
        CHECK_FALSE(bot.symbol().verified);
        // same data in a closed window: a genuine short block, certified
        PComplex closed = cut;
        closed.open_high = false;
        CHECK(closed.symbol().verified);
        CHECK_FALSE(closed.symbol().value.is_zero());
    }
}

TEST_CASE("rejects non-nilpotent differentials") {
    PComplex u = PComplex::zero(3);
    for (int t = 0; t <= 3; ++t) u.dims[2 * t] = 1;
    for (int t = 0; t < 3; ++t) {
        FpMat m(3, 1, 1);
        m.at(0, 0) = 1;
        u.set_d(2 * t, std::move(m)); // chain of length 4 > p = 3
    }
    u.refresh_window();
    CHECK_FALSE(u.check_pnilpotent());
    CHECK_THROWS_AS(u.decompose(), std::invalid_argument);
}

TEST_CASE("JSON round trip") {
    for (int p : {3, 5})
        for (int rep = 0; rep < 10; ++rep) {
            auto u = PComplex::random_complex(p, test_rng());
            auto v = pcomplex_from_json(pcomplex_to_json(u));
            CHECK(v.p == u.p);
            CHECK(v.dims == u.dims);
            CHECK(v.d == u.d);
            CHECK(v.lo == u.lo);
            CHECK(v.hi == u.hi);
        }
    auto w = truncated_pol1(5, 20);
    auto w2 = pcomplex_from_json(pcomplex_to_json(w));
    CHECK(w2.open_high);
    CHECK(w2.decompose().as_map() == w.decompose().as_map());
}
