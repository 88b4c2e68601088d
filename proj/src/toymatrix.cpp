#include "pdg/toymatrix.hpp"
#include <stdexcept>
#include <vector>
#include "pdg/fp.hpp"

namespace pdg {

FpMat jordan_block(int p, int n) {
    FpMat J(p, n, n);
    for (int i = 0; i + 1 < n; ++i) J.at(i, i + 1) = 1;
    return J;
}

FpMat ad(const FpMat& J, const FpMat& M) {
    if (J.rows != J.cols || M.rows != M.cols || J.rows != M.rows || J.p != M.p)
        throw std::invalid_argument("ad: shape mismatch");
    FpMat JM = J.mul(M), MJ = M.mul(J);
    FpMat out(J.p, J.rows, J.cols);
    for (int r = 0; r < out.rows; ++r)
        for (int c = 0; c < out.cols; ++c)
            out.at(r, c) = static_cast<uint8_t>(fp_sub(JM.at(r, c), MJ.at(r, c), J.p));
    return out;
}

bool ad_power_check(const FpMat& J, const FpMat& M) {
    int p = J.p;
    FpMat lhs = M;
    for (int t = 0; t < p; ++t) lhs = ad(J, lhs);
    FpMat Jp = FpMat::identity(p, J.rows);
    for (int t = 0; t < p; ++t) Jp = Jp.mul(J);
    return lhs == ad(Jp, M);
}

FpMat contraction_witness_matrix(int p) {
    FpMat W(p, p, p);
    for (int i = 1; i <= p - 1; ++i) W.at(i, i - 1) = static_cast<uint8_t>(i);
    if (!(ad(jordan_block(p, p), W) == FpMat::identity(p, p)))
        throw std::logic_error("contraction_witness_matrix: [J, W] != I");
    return W;
}

PComplex column_pcomplex(int n, int p, int col) {
    if (col < 1 || col > n) throw std::invalid_argument("column_pcomplex: bad column");
    PComplex c;
    c.p = p;
    // basis e_1, ..., e_n with deg(e_i) = 2(col - i); the degrees are distinct,
    // so each graded piece is one-dimensional.
    for (int i = 1; i <= n; ++i) c.dims[2 * (col - i)] = 1;
    for (int i = 2; i <= n; ++i) {
        FpMat m(p, 1, 1);
        m.at(0, 0) = 1; // d(e_i) = e_{i-1}
        c.set_d(2 * (col - i), std::move(m));
    }
    c.refresh_window();
    return c;
}

// ---------- smash product ----------

static void smash_add(SmashElem& acc, int i, int j, int r, long long coeff) {
    int c = fp_norm(coeff, acc.p);
    if (c == 0) return;
    std::array<int, 3> key{i, j, r};
    auto [it, fresh] = acc.terms.emplace(key, c);
    if (!fresh) {
        it->second = fp_add(it->second, c, acc.p);
        if (it->second == 0) acc.terms.erase(it);
    }
}

SmashElem smash_E(int n, int p, int i, int j) {
    if (i < 1 || i > n || j < 1 || j > n)
        throw std::invalid_argument("smash_E: index out of range");
    SmashElem x{n, p, {}};
    smash_add(x, i, j, 0, 1);
    return x;
}

SmashElem smash_d(int n, int p, int r) {
    SmashElem x{n, p, {}};
    if (r < p) {
        // represent d^r as sum_i E_{i,i} d^r
        for (int i = 1; i <= n; ++i) smash_add(x, i, i, r, 1);
    }
    return x;
}

SmashElem smash_mul(const SmashElem& a, const SmashElem& b) {
    if (a.n != b.n || a.p != b.p)
        throw std::invalid_argument("smash_mul: mismatched algebras");
    int n = a.n, p = a.p;
    // Pascal triangle of binomials mod p up to row p-1 (exponents of d are < p).
    std::vector<std::vector<int>> C(p, std::vector<int>(p, 0));
    for (int t = 0; t < p; ++t) {
        C[t][0] = 1;
        for (int m = 1; m <= t; ++m)
            C[t][m] = fp_add(C[t - 1][m - 1], m < t ? C[t - 1][m] : 0, p);
    }
    SmashElem out{n, p, {}};
    for (auto& [ka, ca] : a.terms)
        for (auto& [kb, cb] : b.terms) {
            auto [i, j, r] = ka;
            auto [k, l, s] = kb;
            // (E_{i,j} d^r)(E_{k,l} d^s)
            //   = sum_t C(r,t) E_{i,j} ad^t(E_{k,l}) d^{r-t+s}
            // with ad^t(E_{k,l}) = sum_m (-1)^m C(t,m) E_{k-(t-m), l+m}.
            for (int t = 0; t <= r; ++t) {
                if (r - t + s >= p) continue;
                for (int m = 0; m <= t; ++m) {
                    int ki = k - (t - m), lj = l + m;
                    if (ki < 1 || lj > n || j != ki) continue;
                    long long coeff = static_cast<long long>(ca) * cb % p;
                    coeff = coeff * C[t][m] % p * C[r][t] % p;
                    if (m % 2 == 1) coeff = -coeff;
                    smash_add(out, i, lj, r - t + s, coeff);
                }
            }
        }
    return out;
}

bool corner_ring_check(int n, int p) {
    if (n < 1 || n > p) throw std::invalid_argument("corner_ring_check: need 1 <= n <= p");
    SmashElem e = smash_E(n, p, n, n);
    for (int r = 0; r < p; ++r)
        for (int s = 0; s < p; ++s) {
            SmashElem lhs = smash_mul(smash_mul(smash_mul(e, smash_d(n, p, r)), e),
                                      smash_mul(smash_mul(e, smash_d(n, p, s)), e));
            SmashElem rhs = smash_mul(smash_mul(e, smash_d(n, p, r + s)), e);
            if (!(lhs == rhs)) return false;
        }
    return true;
}

} // namespace pdg
