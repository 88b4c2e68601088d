#pragma once
#include <map>
#include <optional>
#include <string>
#include <vector>
#include <boost/multiprecision/cpp_int.hpp>
#include "pdg/fp.hpp"

namespace pdg {

using BigInt = boost::multiprecision::cpp_int;

// Element of the ring Z[q]/(1 + q^2 + ... + q^{2(p-1)}), stored as the
// canonical remainder: integer coefficients of q^0 .. q^{2p-3}.
// Laurent input is pre-reduced with q^{2p} = 1.
class ORingElem {
public:
    ORingElem() : p_(3), c_(4) {}
    explicit ORingElem(int p) : p_(p), c_(2 * p - 2) {}

    static ORingElem from_laurent(int p, const std::map<int, BigInt>& laurent);
    static ORingElem monomial(int p, int exponent, const BigInt& coeff = 1);
    static ORingElem integer(int p, const BigInt& n);

    int p() const { return p_; }
    const std::vector<BigInt>& coeffs() const { return c_; }

    bool is_zero() const;
    bool operator==(const ORingElem& o) const { return p_ == o.p_ && c_ == o.c_; }
    bool operator!=(const ORingElem& o) const { return !(*this == o); }

    ORingElem operator+(const ORingElem& o) const;
    ORingElem operator-(const ORingElem& o) const;
    ORingElem operator*(const ORingElem& o) const;
    ORingElem operator-() const;
    ORingElem scaled(const BigInt& k) const;

    // Inverse in the ring, if it exists (exact integer linear algebra).
    std::optional<ORingElem> try_invert() const;

    // Quotient maps: coefficients of the canonical remainder mod Psi_p(q)
    // (degree < p-1) resp. mod Psi_p(-q); and evaluation q -> 1 in F_p.
    std::vector<BigInt> project_Op() const;
    std::vector<BigInt> project_O2p() const;
    int project_Fp() const;

    std::string str() const; // sorted Laurent form with balanced exponents

private:
    int p_;
    std::vector<BigInt> c_;
    void reduce_top(std::vector<BigInt>& v) const;
};

// Balanced quantum integer [n] = q^{n-1} + q^{n-3} + ... + q^{1-n}.
ORingElem quantum_int(int n, int p);
// Unbalanced quantum integer (n)_{q^2} = 1 + q^2 + ... + q^{2(n-1)}.
ORingElem unbalanced_int(int n, int p);
// Balanced quantum factorial [n]! .
ORingElem quantum_factorial(int n, int p);
// Quantum binomial [m brack n]; 0 for m >= p; computed via factorials and
// try_invert.  Throws if a required inverse does not exist.
ORingElem quantum_binom(int m, int n, int p);

// JSON: {"p": int, "coeffs": [int; 2p-2]}
std::string oring_to_json(const ORingElem& x);
ORingElem oring_from_json(const std::string& text);

} // namespace pdg
