// Acceptance suite: eleven numbered criteria, each printing a single
// pass/fail line.  Usage: acceptance [--only N].  Exit code 0 iff every
// executed criterion passes (including its pinned runtime limit).
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <map>
#include <string>
#include <vector>
#include "pdg/fp.hpp"
#include "pdg/klr.hpp"
#include "pdg/nilhecke.hpp"
#include "pdg/oring.hpp"
#include "pdg/pcomplex.hpp"
#include "pdg/toymatrix.hpp"
#include "pdg/uqgroup.hpp"
#include "test_util.hpp"

using namespace pdg;

namespace {

ORingElem qpow(int p, int e) { return ORingElem::monomial(p, e); }
ORingElem ub(int n, int p) { return unbalanced_int(n, p); }

// 1. d_a^p = 0 on every NH_n generator (n <= 4, p in {3,5}, all a), and the
// closed form of the third iterate on delta_1 at p = 5.
bool crit1() {
    for (int p : {3, 5})
        for (int a = 0; a < p; ++a)
            for (int n = 1; n <= 4; ++n) {
                std::vector<NHElem> gens;
                for (int t = 1; t <= n; ++t) gens.push_back(nh_dot(n, p, t));
                for (int t = 1; t < n; ++t) gens.push_back(nh_delta(n, p, t));
                for (auto& g : gens) {
                    NHElem it = g;
                    for (int s = 0; s < p; ++s) it = nh_derive(it, a);
                    if (!it.is_zero()) return false;
                }
            }
    int p = 5;
    for (int a = 0; a < p; ++a) {
        NHElem x = nh_delta(2, p, 1);
        for (int t = 0; t < 3; ++t) x = nh_derive(x, a);
        GradedPoly diff = GradedPoly::variable(p, 2, 2) - GradedPoly::variable(p, 2, 1);
        NHElem expect = nh_scale(
            nh_add(nh_mul(nh_poly(diff * diff * diff, 2), nh_delta(2, p, 1)),
                   nh_poly(diff * diff, 2)),
            static_cast<long long>(a + 1) * a * (a - 1));
        if (!(x == expect)) return false;
    }
    return true;
}

// 2. Contraction search: witnesses exist exactly where expected.
bool crit2() {
    for (auto [n, a, p] : {std::array{3, 1, 3}, {3, 2, 3}, {5, 1, 5}}) {
        auto r = nh_find_contraction(n, a, p);
        if (!r.witness) return false;
        if (!(nh_derive(*r.witness, a) == nh_one(n, p))) return false;
    }
    for (auto [n, a, p] : {std::array{2, 1, 3}, {2, 0, 3}, {4, 1, 5}}) {
        auto r = nh_find_contraction(n, a, p);
        if (r.witness) return false;
    }
    return true;
}

// 3. NH_2 symbol at p = 5 for every a, window [-2, 40].
bool crit3() {
    const int p = 5, lo = -2, hi = 40;
    for (int a = 0; a < p; ++a) {
        auto s = nh_symbol(2, a, p, lo, hi);
        if (!s.verified) return false;
        ORingElem expect =
            ORingElem::integer(p, 1) + qpow(p, -2) * ub(a + 2, p) * ub(p + 2 - a, p);
        if (s.value != expect) return false;
        if (s.value.project_Fp() != fp_norm(5 - a * a, p)) return false;
        bool is_four = s.value.project_Fp() == 4;
        if (is_four != (a == 1 || a == p - 1)) return false;
    }
    return true;
}

// 4. Tensor product rule for balanced indecomposables at p = 5.
bool crit4() {
    const int p = 5;
    for (int i = 0; i <= p - 1; ++i)
        for (int j = 0; j <= p - 1; ++j) {
            auto t = PComplex::V_tilde(p, i).tensor(PComplex::V_tilde(p, j));
            std::map<std::pair<int, int>, int> expect;
            int hi_m = std::min(i + j, 2 * p - i - j - 4);
            for (int m = std::abs(i - j); m <= hi_m; m += 2) expect[{m + 1, -m}] += 1;
            int free_mult = std::max(0, i + j + 2 - p);
            for (int t2 = 0; t2 < free_mult; ++t2)
                expect[{p, -(p - 1) + (1 - free_mult) + 2 * t2}] += 1;
            if (t.decompose().as_map() != expect) return false;
        }
    return true;
}

// 5. Four-term exactness and decomposition oracle on random complexes.
bool crit5() {
    for (int p : {3, 5})
        for (int t = 0; t < 200; ++t) {
            std::map<std::pair<int, int>, int> truth;
            PComplex u = PComplex::random_complex(p, test_rng(), &truth);
            if (!u.check_pnilpotent()) return false;
            if (!u.four_term_exact()) return false;
            if (u.decompose().as_map() != truth) return false;
            if (u.decompose_oracle().as_map() != truth) return false;
        }
    return true;
}

// 6. The mod-p Serre parameter systems at p = 5 and p = 7.
bool crit6() {
    using Quad = std::array<int, 4>;
    std::vector<Quad> want5{{1, 1, 1, 1}, {4, 4, 0, 0}};
    std::vector<Quad> want7{{1, 1, 1, 1}, {6, 6, 0, 0}};
    auto got5 = qsr_parameter_solve(5), got7 = qsr_parameter_solve(7);
    std::sort(got5.begin(), got5.end());
    std::sort(got7.begin(), got7.end());
    return got5 == want5 && got7 == want7;
}

// 7. The 3x3 Cartan block on A2 at p = 5: closed forms and the row identity
// at parameters (1,1,1,1); the row identity fails at (1,1,0,1).
bool crit7() {
    const int p = 5, lo = -12, hi = 60;
    {
        DiffParams dp = DiffParams::a2(p, 1, 1, 1, 1);
        auto m = cartan_matrix_A2(dp, p, lo, hi);
        const int a = 1, r = 1, s = 1;
        ORingElem diag = ub(1, p) + qpow(p, -2) * ub(a + 2, p) * ub(2 - a, p);
        std::array<std::array<ORingElem, 3>, 3> expect;
        expect[0][0] = diag;
        expect[1][0] = qpow(p, 1) * ub(1 + p - s, p) * ub(r, p) +
                       qpow(p, -1) * ub(a + 2, p) * ub(1 + p - s, p) * ub(1 + r - a, p);
        expect[2][0] = qpow(p, 2) * ub(1 + p - 2 * s, p) * ub(r, p) * ub(r, p) +
                       ub(1 + p - 2 * s, p) * ub(1 + r + a, p) * ub(1 + r - a, p);
        expect[0][1] = qpow(p, 1) * ub(1 + p - r, p) * ub(s, p) +
                       qpow(p, -1) * ub(a + 2 - r, p) * ub(2 - a, p) * ub(s, p);
        expect[1][1] = ub(1, p);
        expect[2][1] = qpow(p, 1) * ub(1 + p - s, p) * ub(r, p) +
                       qpow(p, -1) * ub(1 + p - s, p) * ub(a + 2, p) * ub(1 + r - a, p);
        expect[0][2] = qpow(p, 2) * ub(1 + p - r, p) * ub(1 + p - r, p) * ub(2 * s - 1, p) +
                       ub(a + 2 - r, p) * ub(2 - a - r, p) * ub(2 * s - 1, p);
        expect[1][2] = qpow(p, 1) * ub(1 + p - r, p) * ub(s, p) +
                       qpow(p, -1) * ub(a + 2 - r, p) * ub(s, p) * ub(2 - a, p);
        expect[2][2] = diag;
        for (int row = 0; row < 3; ++row)
            for (int col = 0; col < 3; ++col) {
                if (!m[row][col].verified) return false;
                if (m[row][col].value != expect[row][col]) return false;
            }
        for (int col = 0; col < 3; ++col)
            if (quantum_int(2, p) * m[1][col].value != m[0][col].value + m[2][col].value)
                return false;
    }
    {
        DiffParams dp = DiffParams::a2(p, 1, 1, 0, 1);
        auto m = cartan_matrix_A2(dp, p, lo, hi);
        bool row_identity = true;
        for (int col = 0; col < 3; ++col) {
            if (!m[1][col].verified || !m[0][col].verified || !m[2][col].verified)
                return false;
            if (quantum_int(2, p) * m[1][col].value != m[0][col].value + m[2][col].value)
                row_identity = false;
        }
        if (row_identity) return false;
    }
    return true;
}

// 8. Serre idempotent conditions at the distinguished parameters and their
// mirror, plus the symbol identity for the left ideals at p = 5.
bool crit8() {
    const int p = 5;
    auto quad = serre_quadruple(p);
    const KLRElem &x = quad[0], &y = quad[1], &xp = quad[2], &yp = quad[3];
    DiffParams dp = DiffParams::a2(p, 1, 1, 1, 1);
    if (!serre_idempotent_check(x, y, xp, yp, dp).all_pass()) return false;
    DiffParams dpm = DiffParams::a2(p, p - 1, p - 1, 0, 0);
    auto sg = [](const KLRElem& e) { return klr_involution(e, KLRInvolution::sigma); };
    if (!serre_idempotent_check(sg(xp), sg(yp), sg(x), sg(y), dpm).all_pass())
        return false;
    // [R e_iji] = q^{deg y} [R yx] + q^{deg y'} [R y'x'] in O_5; the shifts
    // come from the right-multiplication chain isomorphisms.
    Quiver q = Quiver::A2();
    auto s = klr_symbol(q, p, dp, klr_one(q, p, {0, 1, 0}));
    auto s1 = klr_symbol(q, p, dp, klr_mul(y, x));
    auto s2 = klr_symbol(q, p, dp, klr_mul(yp, xp));
    if (!s.verified || !s1.verified || !s2.verified) return false;
    if (!y.degree() || !yp.degree()) return false;
    return s.value == qpow(p, *y.degree()) * s1.value + qpow(p, *yp.degree()) * s2.value;
}

// 9. A1 x A1 hom symbols over the full F_5 x F_5 parameter grid.
bool crit9() {
    const int p = 5;
    for (int u = 0; u < p; ++u)
        for (int v = 0; v < p; ++v) {
            auto s = a1xa1_rhom_symbol(p, u, v);
            if (!s.verified) return false;
            if (s.value != ub(u + 1, p) * ub(p - v + 1, p)) return false;
            bool is_one = s.value == ORingElem::integer(p, 1);
            if (is_one != (u == 0 && v == 0)) return false;
        }
    return true;
}

// 10. Twisted bialgebra axioms and the categorification crosschecks.
bool crit10() {
    for (int p : {3, 5, 7})
        if (!verify_bialgebra(p).all_pass()) return false;
    for (int p : {3, 5})
        for (int n = 0; n <= p - 1; ++n)
            for (int m = 0; n + m <= p - 1; ++m)
                if (!categorification_crosscheck(p, n, m).all_pass()) return false;
    return true;
}

// 11. Toy matrix model: contraction witness, corner ring, column modules.
bool crit11() {
    for (int p : {3, 5, 7}) {
        FpMat W = contraction_witness_matrix(p); // ctor throws if [J, W] != I
        if (!(ad(jordan_block(p, p), W) == FpMat::identity(p, p))) return false;
    }
    for (int p : {3, 5})
        for (int n = 1; n <= p; ++n)
            if (!corner_ring_check(n, p)) return false;
    for (int p : {3, 5})
        for (int n = 1; n <= p; ++n)
            for (int col = 1; col <= n; ++col) {
                auto dec = column_pcomplex(n, p, col).decompose();
                if (dec.blocks.size() != 1) return false;
                const Block& b = dec.blocks[0];
                if (b.len != n || b.start != 2 * (col - n) || b.mult != 1 || b.truncated)
                    return false;
            }
    return true;
}

struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    bool (*run)();
};

const Criterion criteria[] = {
    {1, "derivation p-nilpotency and iterate formula", 10.0, crit1},
    {2, "contraction witness search", 60.0, crit2},
    {3, "NH_2 symbol over F_5", 60.0, crit3},
    {4, "balanced tensor product rule", 5.0, crit4},
    {5, "cohomology exactness on random complexes", 60.0, crit5},
    {6, "quantum Serre parameter solver", 5.0, crit6},
    {7, "A2 Cartan matrix at p = 5", 600.0, crit7},
    {8, "categorified Serre relation", 300.0, crit8},
    {9, "A1 x A1 hom symbols", 60.0, crit9},
    {10, "twisted bialgebra and crosschecks", 300.0, crit10},
    {11, "toy matrix model", 10.0, crit11},
};

} // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) {
            only = std::atoi(argv[++i]);
            if (only < 1 || only > 11) {
                std::fprintf(stderr, "usage: acceptance [--only N] with 1 <= N <= 11\n");
                return 2;
            }
        } else {
            std::fprintf(stderr, "usage: acceptance [--only N]\n");
            return 2;
        }
    }
    bool all_ok = true;
    for (const auto& c : criteria) {
        if (only && c.id != only) continue;
        auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        std::string note;
        try {
            ok = c.run();
        } catch (const std::exception& e) {
            note = std::string(" [exception: ") + e.what() + "]";
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                          .count();
        bool in_time = secs <= c.limit_seconds;
        bool pass = ok && in_time;
        std::printf("criterion %2d (%s): %s in %.1fs (limit %.0fs)%s%s\n", c.id, c.name,
                    pass ? "PASS" : "FAIL", secs, c.limit_seconds,
                    (ok && !in_time) ? " [over time limit]" : "", note.c_str());
        std::fflush(stdout);
        all_ok = all_ok && pass;
    }
    return all_ok ? 0 : 1;
}
