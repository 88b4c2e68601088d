#pragma once
#include <array>
#include <map>
#include "pdg/matfp.hpp"
#include "pdg/pcomplex.hpp"

namespace pdg {

// The matrix algebra M(n) over F_p carries the differential ad_J for the
// standard upper-shift matrix J_n.  With deg(E_{i,j}) = 2(j - i), ad_{J_n}
// raises degree by 2 and is p-nilpotent.

FpMat jordan_block(int p, int n);           // J_n = sum_i E_{i,i+1}
FpMat ad(const FpMat& J, const FpMat& M);   // [J, M]; throws on shape mismatch

// Verifies (ad_J)^p(M) = ad_{J^p}(M) by computing both sides independently.
bool ad_power_check(const FpMat& J, const FpMat& M);

// W = sum_{i=1}^{p-1} i E_{i+1,i}; asserts [J_p, W] = I before returning.
FpMat contraction_witness_matrix(int p);

// Column `col` (1-based) of (M(n), ad_{J_n}) as a p-complex: basis e_i of
// degree 2(col - i), differential e_i -> e_{i-1}.
PComplex column_pcomplex(int n, int p, int col);

// Element of the smash product M(n) # k[d]/(d^p) in the normal form
// sum c_{i,j,r} E_{i,j} d^r, with the commutation rule
// d x = d(x) + x d applied left-to-right during multiplication.
struct SmashElem {
    int n = 1, p = 3;
    std::map<std::array<int, 3>, int> terms; // (i, j, r) -> nonzero coeff

    bool is_zero() const { return terms.empty(); }
    bool operator==(const SmashElem& o) const {
        return n == o.n && p == o.p && terms == o.terms;
    }
};

SmashElem smash_E(int n, int p, int i, int j); // E_{i,j}, 1-based
SmashElem smash_d(int n, int p, int r);        // d^r (zero if r >= p)
SmashElem smash_mul(const SmashElem& a, const SmashElem& b);

// Verifies (E_{n,n} d^r E_{n,n})(E_{n,n} d^s E_{n,n}) = E_{n,n} d^{r+s} E_{n,n}
// for all 0 <= r, s <= p - 1 in the smash product of M(n); requires n <= p.
bool corner_ring_check(int n, int p);

} // namespace pdg
