#pragma once
#include <map>
#include <random>
#include <string>
#include <vector>
#include "pdg/matfp.hpp"
#include "pdg/oring.hpp"

namespace pdg {

// One isotypic piece of a decomposition: `mult` copies of the length-`len`
// indecomposable whose support starts in degree `start` (occupying degrees
// start, start+2, ..., start+2(len-1)).  `truncated` marks blocks that touch
// an open window boundary and therefore cannot be classified.
struct Block {
    int len;
    int start;
    int mult;
    bool truncated;
    bool operator==(const Block& o) const {
        return len == o.len && start == o.start && mult == o.mult && truncated == o.truncated;
    }
};

struct Decomposition {
    std::vector<Block> blocks;
    // (len, start) -> mult, optionally restricted to classified blocks.
    std::map<std::pair<int, int>, int> as_map(bool include_truncated = true) const;
    int total_dim() const;
};

struct SymbolResult {
    ORingElem value;
    bool verified = false;
};

// Finite-window graded F_p vector space with a degree-+2 operator d
// satisfying d^p = 0.  Infinite graded modules are handled as windowed
// views with open_low / open_high flags.
struct PComplex {
    int p = 3;
    int lo = 0, hi = 0;
    bool open_low = false, open_high = false;
    std::map<int, int> dims;   // degree -> nonzero dimension
    std::map<int, FpMat> d;    // degree j -> matrix (dim(j+2) x dim(j))

    int dim(int j) const;
    FpMat dmat(int j) const;   // materialized map U^j -> U^{j+2} (zero if absent)
    void set_d(int j, FpMat m);
    void refresh_window();     // set [lo, hi] from the support of dims

    bool check_pnilpotent() const;
    FpMat power_map(int j, int k) const; // d^k restricted to U^j
    int rank_power(int j, int k) const;

  private:
    // Memoized power maps and their ranks; set_d clears both.
    mutable std::map<std::pair<int, int>, FpMat> power_cache_;
    mutable std::map<std::pair<int, int>, int> rank_cache_;

  public:

    Decomposition decompose() const;        // rank inclusion-exclusion formula
    Decomposition decompose_oracle() const; // greedy Jordan-basis construction

    std::map<int, int> slash(int k) const;     // 0 <= k <= p-2
    std::map<int, int> backslash(int k) const; // 0 <= k <= p-1
    std::map<int, int> mayer(int k) const;     // 1 <= k <= p-1
    bool four_term_exact() const;

    PComplex tensor(const PComplex& o) const;
    PComplex direct_sum(const PComplex& o) const;
    PComplex dual() const;
    PComplex shifted(int m) const;

    bool is_contractible() const;
    bool quasi_isomorphic(const PComplex& o) const;
    SymbolResult symbol() const;

    static PComplex V(int p, int i, int start_degree); // length i+1 block
    static PComplex V_tilde(int p, int i);             // balanced: starts at -i
    static PComplex zero(int p);
    // Random complex with d^p = 0 by construction (random blocks conjugated
    // by random basis changes); the underlying block multiset is reported.
    static PComplex random_complex(int p, std::mt19937& rng,
                                   std::map<std::pair<int, int>, int>* truth = nullptr);
};

std::string pcomplex_to_json(const PComplex& u);
PComplex pcomplex_from_json(const std::string& text);

// Incremental F_p span with membership testing (used by the Jordan oracle).
struct FpSpan {
    int p, n;
    std::vector<std::vector<uint8_t>> rows; // reduced, each with a leading pivot
    std::vector<int> pivots;
    FpSpan(int p_, int n_) : p(p_), n(n_) {}
    // Reduce v against the span; returns true (and absorbs v) if independent.
    bool try_add(std::vector<uint8_t> v);
    bool contains(std::vector<uint8_t> v) const;
    int dim() const { return static_cast<int>(rows.size()); }
};

} // namespace pdg
