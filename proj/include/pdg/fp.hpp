#pragma once
#include <stdexcept>

namespace pdg {

// Prime modulus for all mod-p arithmetic.  p = 2 is accepted but flagged,
// since several of the algebraic identities verified by this toolkit
// assume an odd prime.
struct Prime {
    int p;
    bool flagged_two = false;

    explicit Prime(int p_) : p(p_) {
        if (p < 2) throw std::invalid_argument("Prime: modulus must be >= 2");
        for (int d = 2; d * d <= p; ++d)
            if (p % d == 0) throw std::invalid_argument("Prime: not a prime");
        flagged_two = (p == 2);
    }
};

// Normalize an integer into [0, p).
inline int fp_norm(long long v, int p) {
    long long r = v % p;
    if (r < 0) r += p;
    return static_cast<int>(r);
}

inline int fp_add(int a, int b, int p) { return (a + b) % p; }
inline int fp_sub(int a, int b, int p) { return (a - b + p) % p; }
inline int fp_mul(int a, int b, int p) { return (a * b) % p; }
inline int fp_neg(int a, int p) { return a == 0 ? 0 : p - a; }

int fp_pow(int a, long long e, int p);
int fp_inv(int a, int p);

} // namespace pdg
