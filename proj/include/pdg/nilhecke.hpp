#pragma once
#include <map>
#include <optional>
#include <string>
#include <vector>
#include "pdg/pcomplex.hpp"
#include "pdg/perm.hpp"
#include "pdg/poly.hpp"

namespace pdg {

// Element of the nilHecke algebra NH_n over F_p in dots-left normal form:
// a sum of terms f_w * delta_w with f_w a polynomial and delta_w the
// crossing element of the permutation w (any reduced word gives the same
// element; the exchange relations are exact).  deg(x_t) = 2, deg(delta_t) = -2.
struct NHElem {
    int n = 1, p = 3;
    std::map<Perm, GradedPoly> terms;

    bool is_zero() const { return terms.empty(); }
    bool operator==(const NHElem& o) const {
        return n == o.n && p == o.p && terms == o.terms;
    }
    // Degree if homogeneous; nullopt for 0 or inhomogeneous elements.
    std::optional<int> degree() const;
};

NHElem nh_zero(int n, int p);
NHElem nh_one(int n, int p);
NHElem nh_poly(const GradedPoly& f, int n);
NHElem nh_dot(int n, int p, int t);   // x_t, 1-based
NHElem nh_delta(int n, int p, int t); // delta_t, 1-based, 1 <= t <= n-1
NHElem nh_delta_w(int n, int p, const Perm& w);
NHElem nh_delta_longest(int n, int p);    // delta(n), the full staircase
NHElem nh_eps(int n, int p);              // the idempotent eps_n

NHElem nh_add(const NHElem& a, const NHElem& b);
NHElem nh_sub(const NHElem& a, const NHElem& b);
NHElem nh_scale(const NHElem& a, long long c);
NHElem nh_mul(const NHElem& a, const NHElem& b);

// Action on the polynomial representation: dots multiply, crossings act by
// divided differences.
GradedPoly nh_act(const NHElem& x, const GradedPoly& f);

// The differential d_a: d(x_t) = x_t^2,
// d(delta_t) = a - (a+1) x_t delta_t + (a-1) x_{t+1} delta_t.
NHElem nh_derive(const NHElem& x, int a);

enum class NHInvolution { psi, sigma };
NHElem nh_involution(const NHElem& x, NHInvolution which);

// Parse a generator word like "d1 x1 d2 x3^2" (empty string = 1).
NHElem nh_parse(int n, int p, const std::string& word);
std::string nh_str(const NHElem& x);
std::string nh_to_json(const NHElem& x);
NHElem nh_from_json(const std::string& text);

struct ContractionResult {
    std::optional<NHElem> witness; // y with d_a(y) = 1, if found
    bool exhaustive = false;       // true if absence was certified by a full solve
};
ContractionResult nh_find_contraction(int n, int a, int p);

// Windowed view of (NH_n, d_a) as a p-complex on degrees [lo, hi].
PComplex nh_as_pcomplex(int n, int a, int p, int lo, int hi);
SymbolResult nh_symbol(int n, int a, int p, int lo, int hi);
SymbolResult nh_symbol(int n, int a, int p); // default window

// Rank-one twisted polynomial module: basis monomials of k[x_1..x_N] * v,
// deg(v) = gen_degree, d(f v) = (derive(f) + f * g) v for a fixed linear
// polynomial g; windowed view up to top_degree (open at the top).
PComplex twisted_pol_pcomplex(const GradedPoly& g, int gen_degree, int top_degree);

// Symbol of the column module P^+_k (twist alpha+ = (1-k, ..., 0), balanced
// generator degree k(1-k)/2), computed from the windowed module.
ORingElem nh_pplus_symbol(int k, int p);

// Symbol of the twisted-restriction bimodule applied to P^+_{n+m}, relative
// to [P^+_n][P^+_m]; requires n + m <= p - 1.  The differential is d_1.
SymbolResult nh_twisted_restriction_symbol(int n, int m, int p);

// Symbol of the induced module NH_{n+m} (eps_n x eps_m), relative to
// [P^+_{n+m}]; requires n + m <= p - 1.  The differential is d_1.
SymbolResult nh_induction_symbol(int n, int m, int p);

} // namespace pdg
