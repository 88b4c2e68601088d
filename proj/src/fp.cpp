#include "pdg/fp.hpp"

namespace pdg {

int fp_pow(int a, long long e, int p) {
    int base = fp_norm(a, p), res = 1 % p;
    while (e > 0) {
        if (e & 1) res = fp_mul(res, base, p);
        base = fp_mul(base, base, p);
        e >>= 1;
    }
    return res;
}

int fp_inv(int a, int p) {
    a = fp_norm(a, p);
    if (a == 0) throw std::domain_error("fp_inv: zero is not invertible");
    return fp_pow(a, p - 2, p);
}

} // namespace pdg
