#pragma once
#include <string>
#include <vector>
#include "pdg/oring.hpp"
#include "pdg/pcomplex.hpp"

namespace pdg {

// Element of the divided-power integral form of the positive half of small
// quantum sl2 over O_p: coeffs[n] is the coefficient of E^(n), 0 <= n <= p-1.
struct UPlusElem {
    int p = 3;
    std::vector<ORingElem> coeffs; // length exactly p

    bool is_zero() const;
    bool operator==(const UPlusElem& o) const { return p == o.p && coeffs == o.coeffs; }
};

// Element of the twisted tensor square: coeffs[s][t] multiplies E^(s) x E^(t).
struct UPlusTensorElem {
    int p = 3;
    std::vector<std::vector<ORingElem>> coeffs; // p x p

    bool is_zero() const;
    bool operator==(const UPlusTensorElem& o) const {
        return p == o.p && coeffs == o.coeffs;
    }
};

UPlusElem u_zero(int p);
UPlusElem u_one(int p);
UPlusElem u_E(int p, int n); // the basis vector E^(n); requires 0 <= n < p
UPlusElem u_add(const UPlusElem& a, const UPlusElem& b);
UPlusElem u_scale(const UPlusElem& a, const ORingElem& c);
// E^(n) E^(m) = [n+m over n] E^(n+m), zero when n+m >= p.
UPlusElem u_mul(const UPlusElem& a, const UPlusElem& b);
// Counit: the coefficient of E^(0).
ORingElem u_counit(const UPlusElem& a);

UPlusTensorElem t_zero(int p);
UPlusTensorElem u_tensor(const UPlusElem& a, const UPlusElem& b);
UPlusTensorElem t_add(const UPlusTensorElem& a, const UPlusTensorElem& b);
// Delta(E^(n)) = sum_t q^{-t(n-t)} E^(t) x E^(n-t), extended linearly.
UPlusTensorElem u_comul(const UPlusElem& a);
// Twisted product on the tensor square.  E^(n) carries weight n and crossing
// the tensor symbol past weight m costs q^{-2nm}; this is the unique power
// compatible with the comultiplication above (see the q-commuting expansion
// of (E x 1 + 1 x E)^n).
UPlusTensorElem twisted_tensor_mul(const UPlusTensorElem& a, const UPlusTensorElem& b);

struct BialgebraReport {
    bool associative = false;       // u_mul on all basis triples
    bool comul_multiplicative = false; // Delta(xy) = Delta(x)Delta(y), twisted
    bool coassociative = false;     // (Delta x id)Delta = (id x Delta)Delta
    bool counit_left = false;       // (eps x id)Delta = id
    bool counit_right = false;      // (id x eps)Delta = id
    bool all_pass() const {
        return associative && comul_multiplicative && coassociative && counit_left &&
               counit_right;
    }
};
// Exhaustive verification over the divided-power basis.
BialgebraReport verify_bialgebra(int p);

struct CrosscheckReport {
    SymbolResult restriction;  // categorical side of the comultiplication
    ORingElem comul_coeff;     // coefficient of E^(n) x E^(m) in Delta(E^(n+m))
    SymbolResult induction;    // categorical side of the multiplication
    ORingElem binom;           // [n+m over n]
    bool restriction_ok = false;
    bool induction_ok = false;
    bool all_pass() const {
        return restriction_ok && induction_ok && restriction.verified &&
               induction.verified;
    }
};
// Compares the categorical symbols with the algebra structure constants;
// requires n, m >= 0 and n + m <= p - 1.
CrosscheckReport categorification_crosscheck(int p, int n, int m);

// JSON: {"p": int, "coeffs": [oring; p]}
std::string uplus_to_json(const UPlusElem& x);
UPlusElem uplus_from_json(const std::string& text);

} // namespace pdg
