#pragma once
#include <cstdint>
#include <optional>
#include <vector>

namespace pdg {

// Dense matrix over F_p (p < 256), row-major uint8 storage.
struct FpMat {
    int p = 3;
    int rows = 0, cols = 0;
    std::vector<uint8_t> a;

    FpMat() = default;
    FpMat(int p_, int r, int c) : p(p_), rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

    uint8_t& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    uint8_t at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    static FpMat identity(int p, int n);
    FpMat mul(const FpMat& o) const;
    FpMat transpose() const;
    bool is_zero() const;
    bool operator==(const FpMat& o) const {
        return p == o.p && rows == o.rows && cols == o.cols && a == o.a;
    }

    int rank() const;
    // Basis of the null space, as columns.
    FpMat nullspace() const;
    // Solve A x = b; returns one solution if consistent.
    std::optional<std::vector<uint8_t>> solve(const std::vector<uint8_t>& b) const;
    // Horizontal concatenation [A | B] (same row count).
    FpMat hcat(const FpMat& o) const;
};

// In-place row reduction to row echelon form; returns rank.
int fpmat_echelon(FpMat& m);

} // namespace pdg
