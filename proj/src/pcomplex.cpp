#include "pdg/pcomplex.hpp"
#include <algorithm>
#include <set>
#include <stdexcept>
#include <json.hpp>
#include "pdg/fp.hpp"

namespace pdg {

// ---------- FpSpan ----------

bool FpSpan::try_add(std::vector<uint8_t> v) {
    for (size_t i = 0; i < rows.size(); ++i) {
        uint8_t c = v[pivots[i]];
        if (!c) continue;
        uint8_t neg = static_cast<uint8_t>(p - c);
        for (int j = 0; j < n; ++j)
            v[j] = static_cast<uint8_t>((v[j] + neg * rows[i][j]) % p);
    }
    int piv = -1;
    for (int j = 0; j < n; ++j)
        if (v[j]) { piv = j; break; }
    if (piv < 0) return false;
    uint8_t inv = static_cast<uint8_t>(fp_inv(v[piv], p));
    for (int j = 0; j < n; ++j) v[j] = static_cast<uint8_t>(v[j] * inv % p);
    // keep the basis fully reduced: clear the new pivot from existing rows
    for (size_t i = 0; i < rows.size(); ++i) {
        uint8_t c = rows[i][piv];
        if (!c) continue;
        uint8_t neg = static_cast<uint8_t>(p - c);
        for (int j = 0; j < n; ++j)
            rows[i][j] = static_cast<uint8_t>((rows[i][j] + neg * v[j]) % p);
    }
    rows.push_back(std::move(v));
    pivots.push_back(piv);
    return true;
}

bool FpSpan::contains(std::vector<uint8_t> v) const {
    for (size_t i = 0; i < rows.size(); ++i) {
        uint8_t c = v[pivots[i]];
        if (!c) continue;
        uint8_t neg = static_cast<uint8_t>(p - c);
        for (int j = 0; j < n; ++j)
            v[j] = static_cast<uint8_t>((v[j] + neg * rows[i][j]) % p);
    }
    for (int j = 0; j < n; ++j)
        if (v[j]) return false;
    return true;
}

// ---------- Decomposition ----------

std::map<std::pair<int, int>, int> Decomposition::as_map(bool include_truncated) const {
    std::map<std::pair<int, int>, int> m;
    for (auto& b : blocks) {
        if (b.truncated && !include_truncated) continue;
        m[{b.len, b.start}] += b.mult;
    }
    return m;
}

int Decomposition::total_dim() const {
    int s = 0;
    for (auto& b : blocks) s += b.len * b.mult;
    return s;
}

// ---------- PComplex basics ----------

int PComplex::dim(int j) const {
    auto it = dims.find(j);
    return it == dims.end() ? 0 : it->second;
}

FpMat PComplex::dmat(int j) const {
    auto it = d.find(j);
    if (it != d.end()) return it->second;
    return FpMat(p, dim(j + 2), dim(j));
}

void PComplex::set_d(int j, FpMat m) {
    if (m.rows != dim(j + 2) || m.cols != dim(j))
        throw std::invalid_argument("PComplex::set_d: shape mismatch");
    if (m.is_zero()) d.erase(j);
    else d[j] = std::move(m);
    power_cache_.clear();
    rank_cache_.clear();
}

void PComplex::refresh_window() {
    lo = 0;
    hi = 0;
    bool first = true;
    for (auto& [j, n] : dims) {
        if (n <= 0) continue;
        if (first) { lo = hi = j; first = false; }
        else { lo = std::min(lo, j); hi = std::max(hi, j); }
    }
}

bool PComplex::check_pnilpotent() const {
    for (auto& [j, n] : dims) {
        (void)n;
        if (!power_map(j, p).is_zero()) return false;
    }
    return true;
}

FpMat PComplex::power_map(int j, int k) const {
    if (k <= 0) return FpMat::identity(p, dim(j));
    auto it = power_cache_.find({j, k});
    if (it != power_cache_.end()) return it->second;
    FpMat m = dmat(j + 2 * (k - 1)).mul(power_map(j, k - 1));
    return power_cache_.emplace(std::make_pair(j, k), std::move(m)).first->second;
}

int PComplex::rank_power(int j, int k) const {
    if (dim(j) == 0) return 0;
    auto it = rank_cache_.find({j, k});
    if (it != rank_cache_.end()) return it->second;
    int r = power_map(j, k).rank();
    rank_cache_.emplace(std::make_pair(j, k), r);
    return r;
}

// ---------- decomposition ----------

static bool block_truncated(const PComplex& u, int k, int j) {
    if (k >= u.p) return false; // a full-length chain cannot extend further
    if (u.open_high && j + 2 * k > u.hi) return true;
    if (u.open_low && j - 2 < u.lo) return true;
    return false;
}

Decomposition PComplex::decompose() const {
    if (!check_pnilpotent())
        throw std::invalid_argument("decompose: differential is not p-nilpotent");
    Decomposition dec;
    for (auto& [j, n] : dims) {
        if (n <= 0) continue;
        int r_prev = n; // rank of d^0 restricted to U^j
        for (int k = 1; k <= p; ++k) {
            int r_k = rank_power(j, k);
            int m = r_prev - r_k - rank_power(j - 2, k) + rank_power(j - 2, k + 1);
            if (m < 0) throw std::logic_error("decompose: negative multiplicity");
            if (m > 0) dec.blocks.push_back({k, j, m, block_truncated(*this, k, j)});
            r_prev = r_k;
        }
    }
    if (!open_low && !open_high && dec.total_dim() !=
        [&] { int s = 0; for (auto& [j, n] : dims) s += n; return s; }())
        throw std::logic_error("decompose: dimension mismatch");
    return dec;
}

Decomposition PComplex::decompose_oracle() const {
    if (!check_pnilpotent())
        throw std::invalid_argument("decompose_oracle: differential is not p-nilpotent");
    // Greedy Jordan-basis construction, longest chains first.  For each
    // degree j, W[k][j] is a set of chain bottoms of height exactly k that
    // are independent from ker d^{k-1} and from pushforwards of longer chains.
    std::map<std::pair<int, int>, std::vector<std::vector<uint8_t>>> W;
    Decomposition dec;
    for (int k = p; k >= 1; --k) {
        for (auto& [j, n] : dims) {
            if (n <= 0) continue;
            FpSpan span(p, n);
            FpMat Kprev = power_map(j, k - 1).nullspace();
            for (int c = 0; c < Kprev.cols; ++c) {
                std::vector<uint8_t> v(n);
                for (int r = 0; r < n; ++r) v[r] = Kprev.at(r, c);
                span.try_add(std::move(v));
            }
            for (int l = k + 1; l <= p; ++l) {
                auto it = W.find({l, j - 2 * (l - k)});
                if (it == W.end()) continue;
                FpMat push = power_map(j - 2 * (l - k), l - k);
                for (auto& w : it->second) {
                    std::vector<uint8_t> v(n, 0);
                    for (int r = 0; r < n; ++r) {
                        int acc = 0;
                        for (int c = 0; c < push.cols; ++c) acc += push.at(r, c) * w[c];
                        v[r] = static_cast<uint8_t>(acc % p);
                    }
                    span.try_add(std::move(v));
                }
            }
            FpMat Kk = power_map(j, k).nullspace();
            auto& bucket = W[{k, j}];
            for (int c = 0; c < Kk.cols; ++c) {
                std::vector<uint8_t> v(n);
                for (int r = 0; r < n; ++r) v[r] = Kk.at(r, c);
                if (span.try_add(v)) bucket.push_back(std::move(v));
            }
            if (!bucket.empty())
                dec.blocks.push_back({k, j, static_cast<int>(bucket.size()),
                                      block_truncated(*this, k, j)});
        }
    }
    std::sort(dec.blocks.begin(), dec.blocks.end(), [](const Block& a, const Block& b) {
        return std::tie(a.start, a.len) < std::tie(b.start, b.len);
    });
    if (!open_low && !open_high) {
        int total = 0;
        for (auto& [j, n] : dims) total += n;
        if (dec.total_dim() != total)
            throw std::logic_error("decompose_oracle: dimension mismatch");
    }
    return dec;
}

// ---------- cohomology ----------

std::map<int, int> PComplex::slash(int k) const {
    if (k < 0 || k > p - 2) throw std::invalid_argument("slash: need 0 <= k <= p-2");
    std::map<int, int> out;
    for (auto& [j, n] : dims) {
        if (n <= 0) continue;
        int num = n - rank_power(j, k + 1); // dim ker d^{k+1}
        FpMat gens = power_map(j - 2 * (p - k - 1), p - k - 1); // image generators
        FpMat kerk = power_map(j, k).nullspace();
        int den = gens.hcat(kerk).rank();
        int v = num - den;
        if (v < 0) throw std::logic_error("slash: negative dimension");
        if (v) out[j] = v;
    }
    return out;
}

std::map<int, int> PComplex::backslash(int k) const {
    if (k < 0 || k > p - 1) throw std::invalid_argument("backslash: need 0 <= k <= p-1");
    std::map<int, int> out;
    for (auto& [j, n] : dims) {
        if (n <= 0) continue;
        FpMat A = power_map(j - 2 * k, k);          // generators of im d^k
        FpMat B = power_map(j, p - 1 - k).nullspace(); // basis of ker d^{p-1-k}
        int inter = A.rank() + B.cols - A.hcat(B).rank();
        int v = inter - rank_power(j - 2 * (k + 1), k + 1);
        if (v < 0) throw std::logic_error("backslash: negative dimension");
        if (v) out[j] = v;
    }
    return out;
}

std::map<int, int> PComplex::mayer(int k) const {
    if (k <= 0 || k >= p) return {};
    std::map<int, int> out;
    for (auto& [j, n] : dims) {
        if (n <= 0) continue;
        int v = (n - rank_power(j, k)) - rank_power(j - 2 * (p - k), p - k);
        if (v < 0) throw std::logic_error("mayer: negative dimension");
        if (v) out[j] = v;
    }
    return out;
}

bool PComplex::four_term_exact() const {
    auto get = [](const std::map<int, int>& m, int j) {
        auto it = m.find(j);
        return it == m.end() ? 0 : it->second;
    };
    for (int k = 1; k <= p - 1; ++k) {
        auto bs = backslash(p - k);
        auto mk = mayer(k);
        auto mk1 = mayer(k - 1); // empty for k = 1 (the zero group)
        auto sl = slash(k - 1);
        std::set<int> degs;
        for (auto* m : {&bs, &mk, &mk1, &sl})
            for (auto& [j, v] : *m) { (void)v; degs.insert(j); }
        for (int j : degs)
            if (get(bs, j) - get(mk1, j) + get(mk, j) - get(sl, j) != 0) return false;
    }
    return true;
}

// ---------- constructions ----------

PComplex PComplex::tensor(const PComplex& o) const {
    if (p != o.p) throw std::invalid_argument("tensor: prime mismatch");
    PComplex r;
    r.p = p;
    r.open_low = open_low || o.open_low;
    r.open_high = open_high || o.open_high;
    // Basis of total degree j: segments (j1, j2 = j - j1) ordered by j1,
    // entries within a segment ordered pair-major: (a, b) -> a*dim2(j2)+b.
    auto offset_table = [&](int j) {
        std::vector<std::tuple<int, int, int>> segs; // (j1, j2, offset)
        int off = 0;
        for (auto& [j1, n1] : dims) {
            int n2 = o.dim(j - j1);
            if (n1 <= 0 || n2 <= 0) continue;
            segs.emplace_back(j1, j - j1, off);
            off += n1 * n2;
        }
        return std::pair(segs, off);
    };
    std::set<int> degs;
    for (auto& [j1, n1] : dims)
        for (auto& [j2, n2] : o.dims)
            if (n1 > 0 && n2 > 0) degs.insert(j1 + j2);
    for (int j : degs) r.dims[j] = offset_table(j).second;
    for (int j : degs) {
        auto [segs, nj] = offset_table(j);
        auto [tsegs, nt] = offset_table(j + 2);
        if (nt == 0) continue;
        auto toffset = [&](int j1) -> int {
            for (auto& [a, b, off] : tsegs) { (void)b; if (a == j1) return off; }
            return -1;
        };
        FpMat m(p, nt, nj);
        for (auto& [j1, j2, off] : segs) {
            int n1 = dim(j1), n2 = o.dim(j2);
            FpMat d1 = dmat(j1), d2 = o.dmat(j2);
            int off1 = toffset(j1 + 2); // target segment for d1 (x) id
            if (off1 >= 0 && d1.rows > 0)
                for (int c = 0; c < d1.rows; ++c)
                    for (int a = 0; a < n1; ++a) {
                        uint8_t v = d1.at(c, a);
                        if (!v) continue;
                        for (int b = 0; b < n2; ++b)
                            m.at(off1 + c * n2 + b, off + a * n2 + b) = v;
                    }
            int off2 = toffset(j1); // target segment for id (x) d2
            if (off2 >= 0 && d2.rows > 0)
                for (int a = 0; a < n1; ++a)
                    for (int c = 0; c < d2.rows; ++c)
                        for (int b = 0; b < n2; ++b) {
                            uint8_t v = d2.at(c, b);
                            if (v) m.at(off2 + a * d2.rows + c, off + a * n2 + b) = v;
                        }
        }
        if (!m.is_zero()) r.d[j] = std::move(m);
    }
    r.refresh_window();
    return r;
}

PComplex PComplex::direct_sum(const PComplex& o) const {
    if (p != o.p) throw std::invalid_argument("direct_sum: prime mismatch");
    PComplex r;
    r.p = p;
    r.open_low = open_low || o.open_low;
    r.open_high = open_high || o.open_high;
    std::set<int> degs;
    for (auto& [j, n] : dims) if (n > 0) degs.insert(j);
    for (auto& [j, n] : o.dims) if (n > 0) degs.insert(j);
    for (int j : degs) r.dims[j] = dim(j) + o.dim(j);
    for (int j : degs) {
        int tgt = r.dim(j + 2);
        if (tgt == 0) continue;
        FpMat m(p, tgt, r.dims[j]);
        FpMat a = dmat(j), b = o.dmat(j);
        for (int i = 0; i < a.rows; ++i)
            for (int c = 0; c < a.cols; ++c) m.at(i, c) = a.at(i, c);
        for (int i = 0; i < b.rows; ++i)
            for (int c = 0; c < b.cols; ++c) m.at(dim(j + 2) + i, dim(j) + c) = b.at(i, c);
        if (!m.is_zero()) r.d[j] = std::move(m);
    }
    r.refresh_window();
    r.lo = std::min(lo, o.lo);
    r.hi = std::max(hi, o.hi);
    return r;
}

PComplex PComplex::dual() const {
    PComplex r;
    r.p = p;
    r.open_low = open_high;
    r.open_high = open_low;
    r.lo = -hi;
    r.hi = -lo;
    for (auto& [j, n] : dims)
        if (n > 0) r.dims[-j] = n;
    for (auto& [j, m] : d) r.d[-j - 2] = m.transpose();
    return r;
}

PComplex PComplex::shifted(int m) const {
    PComplex r;
    r.p = p;
    r.open_low = open_low;
    r.open_high = open_high;
    r.lo = lo + m;
    r.hi = hi + m;
    for (auto& [j, n] : dims) r.dims[j + m] = n;
    for (auto& [j, mat] : d) r.d[j + m] = mat;
    return r;
}

bool PComplex::is_contractible() const {
    // characterization 1: every indecomposable summand is free (length p)
    auto dec = decompose();
    bool by_blocks = true;
    for (auto& b : dec.blocks)
        if (b.truncated || b.len != p) { by_blocks = false; break; }
    // characterization 2: every d-closed element is d^{p-1} of something
    bool by_kernels = true;
    for (auto& [j, n] : dims) {
        if (n <= 0) continue;
        FpMat K = dmat(j).nullspace();
        FpMat A = power_map(j - 2 * (p - 1), p - 1);
        if (A.hcat(K).rank() != A.rank()) { by_kernels = false; break; }
    }
    if (!open_low && !open_high && by_blocks != by_kernels)
        throw std::logic_error("is_contractible: characterizations disagree");
    return by_blocks && by_kernels;
}

bool PComplex::quasi_isomorphic(const PComplex& o) const {
    if (p != o.p) return false;
    for (int k = 0; k <= p - 2; ++k)
        if (slash(k) != o.slash(k)) return false;
    return true;
}

SymbolResult PComplex::symbol() const {
    SymbolResult res{ORingElem(p), true};
    auto dec = decompose();
    for (auto& b : dec.blocks) {
        if (b.truncated) {
            // a block cut at the bottom of the window may hide its true class
            if (open_low && b.start - 2 < lo) res.verified = false;
            continue; // top-truncated blocks are the expected boundary noise
        }
        if (b.len == p) continue; // free summands vanish in the symbol
        res.value = res.value +
                    ORingElem::monomial(p, b.start) * unbalanced_int(b.len, p).scaled(b.mult);
        // a classified non-free block inside the top band of width 2p means
        // the non-free part has not visibly stabilized below the boundary
        if (open_high && b.start + 2 * (b.len - 1) > hi - 2 * p) res.verified = false;
    }
    return res;
}

PComplex PComplex::V(int p, int i, int start_degree) {
    if (i < 0 || i > p - 1) throw std::invalid_argument("V: need 0 <= i <= p-1");
    PComplex r;
    r.p = p;
    for (int t = 0; t <= i; ++t) {
        r.dims[start_degree + 2 * t] = 1;
        if (t < i) {
            FpMat m(p, 1, 1);
            m.at(0, 0) = 1;
            r.d[start_degree + 2 * t] = m;
        }
    }
    r.refresh_window();
    return r;
}

PComplex PComplex::V_tilde(int p, int i) { return V(p, i, -i); }

PComplex PComplex::zero(int p) {
    PComplex r;
    r.p = p;
    return r;
}

static FpMat random_invertible(int p, int n, std::mt19937& rng) {
    std::uniform_int_distribution<int> coeff(0, p - 1);
    while (true) {
        FpMat m(p, n, n);
        for (auto& v : m.a) v = static_cast<uint8_t>(coeff(rng));
        if (m.rank() == n) return m;
    }
}

static FpMat invert_fpmat(const FpMat& m) {
    FpMat aug = m.hcat(FpMat::identity(m.p, m.rows));
    if (fpmat_echelon(aug) != m.rows) throw std::logic_error("invert_fpmat: singular");
    FpMat inv(m.p, m.rows, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.rows; ++j) inv.at(i, j) = aug.at(i, m.rows + j);
    return inv;
}

PComplex PComplex::random_complex(int p, std::mt19937& rng,
                                  std::map<std::pair<int, int>, int>* truth) {
    std::uniform_int_distribution<int> nblocks(1, 6), len(1, p), start(-4, 4);
    PComplex u = zero(p);
    if (truth) truth->clear();
    int nb = nblocks(rng);
    for (int b = 0; b < nb; ++b) {
        int k = len(rng), j = start(rng);
        u = u.direct_sum(V(p, k - 1, j));
        if (truth) (*truth)[{k, j}] += 1;
    }
    // hide the block structure behind random basis changes
    std::map<int, FpMat> P, Pinv;
    for (auto& [j, n] : u.dims) {
        P[j] = random_invertible(p, n, rng);
        Pinv[j] = invert_fpmat(P[j]);
    }
    PComplex r = u;
    r.d.clear();
    for (auto& [j, m] : u.d) {
        auto it = P.find(j + 2);
        FpMat conj = (it != P.end() ? it->second.mul(m) : m).mul(Pinv.at(j));
        if (!conj.is_zero()) r.d[j] = std::move(conj);
    }
    return r;
}

// ---------- JSON ----------

std::string pcomplex_to_json(const PComplex& u) {
    nlohmann::json j;
    j["p"] = u.p;
    j["lo"] = u.lo;
    j["hi"] = u.hi;
    j["open_low"] = u.open_low;
    j["open_high"] = u.open_high;
    nlohmann::json dims = nlohmann::json::object();
    for (auto& [deg, n] : u.dims)
        if (n > 0) dims[std::to_string(deg)] = n;
    j["dims"] = dims;
    nlohmann::json maps = nlohmann::json::object();
    for (auto& [deg, m] : u.d) {
        nlohmann::json rows = nlohmann::json::array();
        for (int r = 0; r < m.rows; ++r) {
            nlohmann::json row = nlohmann::json::array();
            for (int c = 0; c < m.cols; ++c) row.push_back(static_cast<int>(m.at(r, c)));
            rows.push_back(row);
        }
        maps[std::to_string(deg)] = rows;
    }
    j["d"] = maps;
    return j.dump();
}

PComplex pcomplex_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    PComplex u;
    u.p = j.at("p").get<int>();
    u.open_low = j.value("open_low", false);
    u.open_high = j.value("open_high", false);
    for (auto& [key, val] : j.at("dims").items())
        u.dims[std::stoi(key)] = val.get<int>();
    for (auto& [key, val] : j.at("d").items()) {
        int deg = std::stoi(key);
        int rows = static_cast<int>(val.size());
        int cols = rows ? static_cast<int>(val[0].size()) : 0;
        FpMat m(u.p, rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c)
                m.at(r, c) = static_cast<uint8_t>(val[r][c].get<int>() % u.p);
        u.set_d(deg, std::move(m));
    }
    u.refresh_window();
    if (j.contains("lo")) u.lo = j["lo"].get<int>();
    if (j.contains("hi")) u.hi = j["hi"].get<int>();
    return u;
}

} // namespace pdg
