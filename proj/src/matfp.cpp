#include "pdg/matfp.hpp"
#include "pdg/fp.hpp"
#include <stdexcept>

namespace pdg {

FpMat FpMat::identity(int p, int n) {
    FpMat m(p, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

FpMat FpMat::mul(const FpMat& o) const {
    if (cols != o.rows || p != o.p) throw std::invalid_argument("FpMat::mul: shape mismatch");
    FpMat r(p, rows, o.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            uint8_t v = at(i, k);
            if (!v) continue;
            const uint8_t* src = &o.a[static_cast<size_t>(k) * o.cols];
            uint8_t* dst = &r.a[static_cast<size_t>(i) * o.cols];
            for (int j = 0; j < o.cols; ++j)
                dst[j] = static_cast<uint8_t>((dst[j] + v * src[j]) % p);
        }
    return r;
}

FpMat FpMat::transpose() const {
    FpMat r(p, cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool FpMat::is_zero() const {
    for (auto v : a)
        if (v) return false;
    return true;
}

int fpmat_echelon(FpMat& m) {
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int pr = -1;
        for (int r = rank; r < m.rows; ++r)
            if (m.at(r, col)) { pr = r; break; }
        if (pr < 0) continue;
        if (pr != rank)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(pr, j), m.at(rank, j));
        uint8_t inv = static_cast<uint8_t>(fp_inv(m.at(rank, col), m.p));
        if (inv != 1) {
            uint8_t* row = &m.a[static_cast<size_t>(rank) * m.cols];
            for (int j = col; j < m.cols; ++j)
                row[j] = static_cast<uint8_t>(row[j] * inv % m.p);
        }
        const uint8_t* prow = &m.a[static_cast<size_t>(rank) * m.cols];
        for (int r = 0; r < m.rows; ++r) {
            if (r == rank) continue;
            uint8_t f = m.at(r, col);
            if (!f) continue;
            uint8_t neg = static_cast<uint8_t>(m.p - f);
            uint8_t* row = &m.a[static_cast<size_t>(r) * m.cols];
            for (int j = col; j < m.cols; ++j)
                row[j] = static_cast<uint8_t>((row[j] + neg * prow[j]) % m.p);
        }
        ++rank;
    }
    return rank;
}

int FpMat::rank() const {
    FpMat m = *this;
    return fpmat_echelon(m);
}

FpMat FpMat::nullspace() const {
    FpMat m = *this;
    int rank = fpmat_echelon(m);
    // locate pivot columns
    std::vector<int> pivots;
    std::vector<bool> is_pivot(cols, false);
    int r = 0;
    for (int c = 0; c < cols && r < rank; ++c)
        if (m.at(r, c)) {
            pivots.push_back(c);
            is_pivot[c] = true;
            ++r;
        }
    FpMat ns(p, cols, cols - rank);
    int k = 0;
    for (int c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        ns.at(c, k) = 1;
        for (int i = 0; i < rank; ++i)
            ns.at(pivots[i], k) = static_cast<uint8_t>((p - m.at(i, c)) % p);
        ++k;
    }
    return ns;
}

std::optional<std::vector<uint8_t>> FpMat::solve(const std::vector<uint8_t>& b) const {
    if (static_cast<int>(b.size()) != rows) throw std::invalid_argument("solve: size mismatch");
    FpMat aug(p, rows, cols + 1);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols) = static_cast<uint8_t>(b[i] % p);
    }
    int rank = fpmat_echelon(aug);
    std::vector<uint8_t> x(cols, 0);
    for (int r = 0; r < rank; ++r) {
        int c = 0;
        while (c <= cols && !aug.at(r, c)) ++c;
        if (c == cols) return std::nullopt; // pivot in the RHS column: inconsistent
        x[c] = aug.at(r, cols);
    }
    return x;
}

FpMat FpMat::hcat(const FpMat& o) const {
    if (rows != o.rows || p != o.p) throw std::invalid_argument("hcat: shape mismatch");
    FpMat r(p, rows, cols + o.cols);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) r.at(i, j) = at(i, j);
        for (int j = 0; j < o.cols; ++j) r.at(i, cols + j) = o.at(i, j);
    }
    return r;
}

} // namespace pdg
