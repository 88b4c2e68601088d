#include "pdg/oring.hpp"
#include <sstream>
#include <stdexcept>
#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

namespace pdg {

using boost::multiprecision::cpp_rational;

ORingElem ORingElem::from_laurent(int p, const std::map<int, BigInt>& laurent) {
    ORingElem r(p);
    std::vector<BigInt> v(2 * p, 0);
    for (auto& [e, c] : laurent) {
        int k = e % (2 * p);
        if (k < 0) k += 2 * p; // q^{2p} = 1
        v[k] += c;
    }
    r.reduce_top(v);
    for (int i = 0; i < 2 * p - 2; ++i) r.c_[i] = v[i];
    return r;
}

ORingElem ORingElem::monomial(int p, int exponent, const BigInt& coeff) {
    return from_laurent(p, {{exponent, coeff}});
}

ORingElem ORingElem::integer(int p, const BigInt& n) { return monomial(p, 0, n); }

// Reduce coefficients of q^{2p-2} and q^{2p-1} by the defining relation
// q^{2p-2} = -(1 + q^2 + ... + q^{2p-4}), applied to both parities.
void ORingElem::reduce_top(std::vector<BigInt>& v) const {
    for (int top = 2 * p_ - 1; top >= 2 * p_ - 2; --top) {
        BigInt c = v[top];
        if (c == 0) continue;
        v[top] = 0;
        for (int k = top - (2 * p_ - 2); k <= top - 2; k += 2) v[k] -= c;
    }
}

bool ORingElem::is_zero() const {
    for (auto& x : c_)
        if (x != 0) return false;
    return true;
}

ORingElem ORingElem::operator+(const ORingElem& o) const {
    if (p_ != o.p_) throw std::invalid_argument("ORingElem +: prime mismatch");
    ORingElem r(p_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
}

ORingElem ORingElem::operator-(const ORingElem& o) const {
    if (p_ != o.p_) throw std::invalid_argument("ORingElem -: prime mismatch");
    ORingElem r(p_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] - o.c_[i];
    return r;
}

ORingElem ORingElem::operator-() const { return scaled(-1); }

ORingElem ORingElem::scaled(const BigInt& k) const {
    ORingElem r(p_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] * k;
    return r;
}

ORingElem ORingElem::operator*(const ORingElem& o) const {
    if (p_ != o.p_) throw std::invalid_argument("ORingElem *: prime mismatch");
    std::map<int, BigInt> lau;
    int n = 2 * p_ - 2;
    for (int i = 0; i < n; ++i) {
        if (c_[i] == 0) continue;
        for (int j = 0; j < n; ++j) {
            if (o.c_[j] == 0) continue;
            lau[i + j] += c_[i] * o.c_[j];
        }
    }
    return from_laurent(p_, lau);
}

std::optional<ORingElem> ORingElem::try_invert() const {
    int n = 2 * p_ - 2;
    // Columns of M are the coefficient vectors of x * q^j.
    std::vector<std::vector<cpp_rational>> M(n, std::vector<cpp_rational>(n + 1, 0));
    for (int j = 0; j < n; ++j) {
        ORingElem col = *this * monomial(p_, j);
        for (int i = 0; i < n; ++i) M[i][j] = cpp_rational(col.c_[i]);
    }
    M[0][n] = 1; // right-hand side e_0 (the unit)
    // Gaussian elimination over Q.
    std::vector<int> pivot_col(n, -1);
    int row = 0;
    for (int col = 0; col < n && row < n; ++col) {
        int pr = -1;
        for (int r = row; r < n; ++r)
            if (M[r][col] != 0) { pr = r; break; }
        if (pr < 0) continue;
        std::swap(M[row], M[pr]);
        cpp_rational pv = M[row][col];
        for (int k = col; k <= n; ++k) M[row][k] /= pv;
        for (int r = 0; r < n; ++r) {
            if (r == row || M[r][col] == 0) continue;
            cpp_rational f = M[r][col];
            for (int k = col; k <= n; ++k) M[r][k] -= f * M[row][k];
        }
        pivot_col[row] = col;
        ++row;
    }
    std::vector<cpp_rational> y(n, 0);
    for (int r = 0; r < n; ++r) {
        if (pivot_col[r] >= 0) y[pivot_col[r]] = M[r][n];
        else if (M[r][n] != 0) return std::nullopt; // inconsistent
    }
    ORingElem inv(p_);
    for (int j = 0; j < n; ++j) {
        if (denominator(y[j]) != 1) return std::nullopt; // not an integer solution
        inv.c_[j] = numerator(y[j]);
    }
    if (!((*this * inv) == integer(p_, 1))) return std::nullopt;
    return inv;
}

// Remainder of the canonical representative modulo a monic-up-to-sign
// integer polynomial given by its coefficient vector (low to high).
static std::vector<BigInt> poly_mod(std::vector<BigInt> v, const std::vector<BigInt>& m) {
    int dm = static_cast<int>(m.size()) - 1;
    BigInt lead = m[dm];
    if (lead != 1 && lead != -1) throw std::logic_error("poly_mod: non-unit leading coeff");
    for (int d = static_cast<int>(v.size()) - 1; d >= dm; --d) {
        if (v[d] == 0) continue;
        BigInt f = v[d] * lead; // lead^2 = 1
        for (int k = 0; k <= dm; ++k) v[d - dm + k] -= f * m[k];
    }
    v.resize(dm);
    return v;
}

std::vector<BigInt> ORingElem::project_Op() const {
    std::vector<BigInt> m(p_, 1); // Psi_p(q) = 1 + q + ... + q^{p-1}
    return poly_mod(c_, m);
}

std::vector<BigInt> ORingElem::project_O2p() const {
    std::vector<BigInt> m(p_); // Psi_{2p}(q) = Psi_p(-q)
    for (int i = 0; i < p_; ++i) m[i] = (i % 2 == 0) ? 1 : -1;
    return poly_mod(c_, m);
}

int ORingElem::project_Fp() const {
    BigInt s = 0;
    for (auto& x : c_) s += x;
    BigInt r = s % p_;
    if (r < 0) r += p_;
    return static_cast<int>(r);
}

std::string ORingElem::str() const {
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k < 2 * p_ - 2; ++k) {
        if (c_[k] == 0) continue;
        int e = (k > p_) ? k - 2 * p_ : k; // balanced exponent display
        BigInt c = c_[k];
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        BigInt a = abs(c);
        if (a != 1 || e == 0) os << a.str();
        if (e != 0) {
            if (a != 1) os << "*";
            os << "q";
            if (e != 1) os << "^" << e;
        }
    }
    if (first) return "0";
    return os.str();
}

ORingElem quantum_int(int n, int p) {
    if (n < 0) throw std::invalid_argument("quantum_int: n >= 0 required");
    std::map<int, BigInt> lau;
    for (int e = 1 - n; e <= n - 1; e += 2) lau[e] += 1;
    return ORingElem::from_laurent(p, lau);
}

ORingElem unbalanced_int(int n, int p) {
    if (n < 0) throw std::invalid_argument("unbalanced_int: n >= 0 required");
    std::map<int, BigInt> lau;
    for (int k = 0; k < n; ++k) lau[2 * k] += 1;
    return ORingElem::from_laurent(p, lau);
}

ORingElem quantum_factorial(int n, int p) {
    ORingElem r = ORingElem::integer(p, 1);
    for (int k = 2; k <= n; ++k) r = r * quantum_int(k, p);
    return r;
}

ORingElem quantum_binom(int m, int n, int p) {
    if (n < 0 || n > m) throw std::invalid_argument("quantum_binom: need 0 <= n <= m");
    if (m >= p) return ORingElem(p); // [m]! contains the vanishing factor [p]
    auto den = (quantum_factorial(n, p) * quantum_factorial(m - n, p)).try_invert();
    if (!den) throw std::domain_error("quantum_binom: denominator not invertible");
    return quantum_factorial(m, p) * *den;
}

std::string oring_to_json(const ORingElem& x) {
    nlohmann::json j;
    j["p"] = x.p();
    auto arr = nlohmann::json::array();
    for (auto& c : x.coeffs()) arr.push_back(c.str());
    j["coeffs"] = arr;
    return j.dump();
}

ORingElem oring_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    int p = j.at("p").get<int>();
    ORingElem x(p);
    std::map<int, BigInt> lau;
    auto& arr = j.at("coeffs");
    for (size_t i = 0; i < arr.size(); ++i)
        lau[static_cast<int>(i)] = BigInt(arr[i].get<std::string>());
    return ORingElem::from_laurent(p, lau);
}

} // namespace pdg
