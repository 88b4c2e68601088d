#pragma once
#include <map>
#include <vector>
#include <string>
#include <optional>
#include "pdg/fp.hpp"

namespace pdg {

// Multivariate polynomial over F_p with deg(x_t) = 2.
// Dense exponent vectors; coefficients are residues in [1, p) (zero terms
// are never stored), so equality is plain container comparison.
class GradedPoly {
public:
    GradedPoly() : p_(3), nvars_(0) {}
    GradedPoly(int p, int nvars) : p_(p), nvars_(nvars) {}

    static GradedPoly zero(int p, int nvars) { return GradedPoly(p, nvars); }
    static GradedPoly constant(int p, int nvars, long long c);
    static GradedPoly variable(int p, int nvars, int t, int exp = 1); // t is 1-based
    static GradedPoly monomial(int p, const std::vector<int>& exps, long long c);

    int p() const { return p_; }
    int nvars() const { return nvars_; }
    const std::map<std::vector<int>, int>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool operator==(const GradedPoly& o) const {
        return p_ == o.p_ && nvars_ == o.nvars_ && terms_ == o.terms_;
    }
    bool operator!=(const GradedPoly& o) const { return !(*this == o); }

    GradedPoly operator+(const GradedPoly& o) const;
    GradedPoly operator-(const GradedPoly& o) const;
    GradedPoly operator*(const GradedPoly& o) const;
    GradedPoly scaled(long long c) const;
    GradedPoly operator-() const { return scaled(-1); }

    void add_term(const std::vector<int>& exps, long long c);

    // Degree of a homogeneous polynomial (2 * total exponent); nullopt for 0
    // or inhomogeneous input.
    std::optional<int> degree() const;

    // Substitute x_t -> x_{w(t)} for a permutation w in one-line notation
    // (0-based images).
    GradedPoly apply_perm(const std::vector<int>& w) const;
    // Swap x_t and x_{t+1} (t is 1-based).
    GradedPoly swap_vars(int t) const;

    // Extend/embed into a polynomial ring with more variables.
    GradedPoly with_nvars(int nvars) const;

    std::string str() const;

private:
    int p_, nvars_;
    std::map<std::vector<int>, int> terms_;
};

// The base derivation: d(x_t) = x_t^2, extended by the Leibniz rule.
GradedPoly derive(const GradedPoly& f);

// Twisted derivation on the rank-one module with twist alpha:
// d(f . 1) = (d(f) + f * sum_t alpha_t x_t) . 1
GradedPoly derive_twisted(const GradedPoly& f, const std::vector<int>& alpha);

// Divided difference (f - swap_t f) / (x_t - x_{t+1}); t is 1-based.
GradedPoly divided_difference(int t, const GradedPoly& f);

// Apply the divided-difference operator for the longest element of S_n,
// via the fixed reduced word s1 (s2 s1) (s3 s2 s1) ...
GradedPoly longest_divided_difference(int n, const GradedPoly& f);

// Elementary symmetric polynomial e_m in n variables (e_0 = 1).
GradedPoly elementary_symmetric(int m, int n, int p);

// JSON: {"p": int, "nvars": int, "terms": [[[e1..en], c], ...]}
std::string poly_to_json(const GradedPoly& f);
GradedPoly poly_from_json(const std::string& text);

} // namespace pdg
