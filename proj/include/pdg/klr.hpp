#pragma once
#include <array>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>
#include "pdg/oring.hpp"
#include "pdg/pcomplex.hpp"
#include "pdg/perm.hpp"
#include "pdg/poly.hpp"

namespace pdg {

// Simply-laced quiver: named vertices, oriented edges, symmetric pairing
// i.i = 2, i.j = -1 for vertices joined by an edge, 0 otherwise.
struct Quiver {
    std::vector<std::string> names;
    std::set<std::pair<int, int>> edges; // oriented (source, target), by index

    int size() const { return static_cast<int>(names.size()); }
    bool has_edge(int i, int j) const { return edges.count({i, j}) > 0; }
    bool adjacent(int i, int j) const { return has_edge(i, j) || has_edge(j, i); }
    int pairing(int i, int j) const {
        if (i == j) return 2;
        return adjacent(i, j) ? -1 : 0;
    }

    static Quiver A2();    // i -> j
    static Quiver A1xA1(); // i, k distant
};

std::string quiver_to_json(const Quiver& q);
Quiver quiver_from_json(const std::string& text);

// Parameters of the differential family: a per vertex, (r_ij, r_ji) per
// oriented edge, (u_ik, u_ki) per distant pair; all in F_p.
struct DiffParams {
    int p = 3;
    std::map<int, int> a;
    std::map<std::pair<int, int>, int> r; // both orders stored
    std::map<std::pair<int, int>, int> u; // both orders stored

    int a_of(int i) const { return a.at(i); }
    int r_of(int i, int j) const { return r.at({i, j}); }
    int u_of(int i, int k) const { return u.at({i, k}); }

    static DiffParams d_plus(const Quiver& q, int p);  // a = 1, r = 1, u = 0
    static DiffParams d_minus(const Quiver& q, int p); // a = -1, r = 0, u = 0
    // A2 parameters (a_i, a_j, r_ij, r_ji).
    static DiffParams a2(int p, int ai, int aj, int rij, int rji);
    // A1 x A1 parameters (a_i, a_k, u_ik, u_ki).
    static DiffParams a1xa1(int p, int ai, int ak, int uik, int uki);
};

// Element of R(nu) for at most three strands, in the normal form
// sum f * D_w * 1_s with the polynomial (dots) at the top, D_w the crossing
// diagram of the fixed minimal reduced word of w, and s the source (bottom)
// sequence of vertex indices.  Multiplication x*y stacks x on top of y.
struct KLRElem {
    int p = 3;
    Quiver quiver;
    std::map<std::pair<std::vector<int>, Perm>, GradedPoly> terms;

    bool is_zero() const { return terms.empty(); }
    bool operator==(const KLRElem& o) const { return p == o.p && terms == o.terms; }
    std::optional<int> degree() const; // nullopt for 0 or inhomogeneous
};

KLRElem klr_zero(const Quiver& q, int p);
KLRElem klr_one(const Quiver& q, int p, const std::vector<int>& seq);
KLRElem klr_dot(const Quiver& q, int p, const std::vector<int>& seq, int t);
KLRElem klr_crossing(const Quiver& q, int p, const std::vector<int>& seq, int t);

KLRElem klr_add(const KLRElem& a, const KLRElem& b);
KLRElem klr_sub(const KLRElem& a, const KLRElem& b);
KLRElem klr_scale(const KLRElem& a, long long c);
KLRElem klr_mul(const KLRElem& a, const KLRElem& b);

// Action on the polynomial representation: the input lives on one source
// sequence; the output may spread over several sequences.
std::map<std::vector<int>, GradedPoly> klr_act(const KLRElem& x,
                                               const std::vector<int>& seq,
                                               const GradedPoly& f);

KLRElem klr_derive(const KLRElem& x, const DiffParams& dp);

enum class KLRInvolution { psi, sigma };
KLRElem klr_involution(const KLRElem& x, KLRInvolution which);

// d^p = 0 on every generator of every rank <= 2 sub-datum.
bool klr_check_pnilpotent(const Quiver& q, const DiffParams& dp, int p);

// All (a, b, r, s) in F_p^4 solving both mod-p quantum Serre systems.
std::vector<std::array<int, 4>> qsr_parameter_solve(int p);

// Windowed p-complex on e1 * R(nu) * e2 with the diamond differential
// z -> e1 * d(z * e2); throws if the differential leaves the subspace.
PComplex klr_hom_pcomplex(const Quiver& q, int p, const DiffParams& dp,
                          const KLRElem& e1, const KLRElem& e2, int lo, int hi);

// Symbol of the left ideal R(nu) * e as a windowed p-complex.
SymbolResult klr_symbol(const Quiver& q, int p, const DiffParams& dp,
                        const KLRElem& e, int lo, int hi);
SymbolResult klr_symbol(const Quiver& q, int p, const DiffParams& dp,
                        const KLRElem& e); // default window [-2|nu|^2, 8p]

// Nine entries [RHOM(P_u, P_v)], u, v in {iij, iji, jii}, rows indexed by u.
std::array<std::array<SymbolResult, 3>, 3>
cartan_matrix_A2(const DiffParams& dp, int p, int lo, int hi);

// [RHOM(P_ik, P_ki)] on A1 x A1.
SymbolResult a1xa1_rhom_symbol(int p, int uik, int uki);

struct SerreReport {
    // xyx=x, yxy=y, x'y'x'=x', y'x'y'=y', y'x=0, yx'=0,
    // x d(y) in R*x'y', y d(x)=0, y' d(x')=0, x' d(y') in R*xy;
    // one of the two membership conditions holds strictly (the product is 0),
    // which way round depends on the sign of the parameter family.
    std::array<bool, 10> conditions{};
    bool all_pass() const {
        for (bool c : conditions)
            if (!c) return false;
        return true;
    }
};
SerreReport serre_idempotent_check(const KLRElem& x, const KLRElem& y,
                                   const KLRElem& xp, const KLRElem& yp,
                                   const DiffParams& dp);

// The distinguished quadruple (x, y, x', y') in R(2i+j) on the A2 quiver.
std::array<KLRElem, 4> serre_quadruple(int p);

} // namespace pdg
