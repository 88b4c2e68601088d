#include "pdg/nilhecke.hpp"
#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <json.hpp>
#include "pdg/fp.hpp"

namespace pdg {

namespace {

void add_term(NHElem& x, const Perm& w, const GradedPoly& f) {
    if (f.is_zero()) return;
    auto it = x.terms.find(w);
    if (it == x.terms.end()) {
        x.terms.emplace(w, f);
    } else {
        it->second = it->second + f;
        if (it->second.is_zero()) x.terms.erase(it);
    }
}

// delta_t * (f delta_w) = ddiff_t(f) delta_w + (s_t f) delta_{s_t w}
NHElem leftmul_delta(int t, const NHElem& y) {
    NHElem r{y.n, y.p, {}};
    Perm st = perm_transposition(y.n, t);
    for (auto& [w, f] : y.terms) {
        add_term(r, w, divided_difference(t, f));
        Perm stw = perm_compose(st, w);
        if (perm_length(stw) > perm_length(w)) add_term(r, stw, f.swap_vars(t));
    }
    return r;
}

std::vector<std::vector<int>> monomials_of_weight(int nvars, int total) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(nvars, 0);
    std::function<void(int, int)> rec = [&](int pos, int rem) {
        if (pos == nvars - 1) {
            cur[pos] = rem;
            out.push_back(cur);
            return;
        }
        for (int e = 0; e <= rem; ++e) {
            cur[pos] = e;
            rec(pos + 1, rem - e);
        }
    };
    if (nvars == 0) {
        if (total == 0) out.push_back({});
        return out;
    }
    rec(0, total);
    return out;
}

} // namespace

std::optional<int> NHElem::degree() const {
    std::optional<int> deg;
    for (auto& [w, f] : terms) {
        auto fd = f.degree();
        if (!fd) return std::nullopt;
        int d = *fd - 2 * perm_length(w);
        if (deg && *deg != d) return std::nullopt;
        deg = d;
    }
    return deg;
}

NHElem nh_zero(int n, int p) { return NHElem{n, p, {}}; }

NHElem nh_one(int n, int p) {
    NHElem r{n, p, {}};
    add_term(r, perm_identity(n), GradedPoly::constant(p, n, 1));
    return r;
}

NHElem nh_poly(const GradedPoly& f, int n) {
    NHElem r{n, f.p(), {}};
    add_term(r, perm_identity(n), f.with_nvars(n));
    return r;
}

NHElem nh_dot(int n, int p, int t) {
    return nh_poly(GradedPoly::variable(p, n, t), n);
}

NHElem nh_delta(int n, int p, int t) {
    if (t < 1 || t >= n) throw std::invalid_argument("nh_delta: index out of range");
    NHElem r{n, p, {}};
    add_term(r, perm_transposition(n, t), GradedPoly::constant(p, n, 1));
    return r;
}

NHElem nh_delta_w(int n, int p, const Perm& w) {
    NHElem r{n, p, {}};
    add_term(r, w, GradedPoly::constant(p, n, 1));
    return r;
}

NHElem nh_delta_longest(int n, int p) { return nh_delta_w(n, p, perm_longest(n)); }

NHElem nh_eps(int n, int p) {
    // eps_n = (-1)^{n(n-1)/2} delta(n) x_2 x_3^2 ... x_n^{n-1}
    std::vector<int> exps(n, 0);
    for (int t = 2; t <= n; ++t) exps[t - 1] = t - 1;
    int sign = (n * (n - 1) / 2) % 2 ? -1 : 1;
    return nh_mul(nh_delta_longest(n, p),
                  nh_poly(GradedPoly::monomial(p, exps, sign), n));
}

NHElem nh_add(const NHElem& a, const NHElem& b) {
    if (a.n != b.n || a.p != b.p) throw std::invalid_argument("nh_add: mismatch");
    NHElem r = a;
    for (auto& [w, f] : b.terms) add_term(r, w, f);
    return r;
}

NHElem nh_sub(const NHElem& a, const NHElem& b) { return nh_add(a, nh_scale(b, -1)); }

NHElem nh_scale(const NHElem& a, long long c) {
    NHElem r{a.n, a.p, {}};
    for (auto& [w, f] : a.terms) add_term(r, w, f.scaled(c));
    return r;
}

NHElem nh_mul(const NHElem& a, const NHElem& b) {
    if (a.n != b.n || a.p != b.p) throw std::invalid_argument("nh_mul: mismatch");
    NHElem r{a.n, a.p, {}};
    for (auto& [w, f] : a.terms) {
        NHElem z = b;
        auto word = reduced_word(w);
        for (auto it = word.rbegin(); it != word.rend(); ++it)
            z = leftmul_delta(*it, z);
        for (auto& [v, g] : z.terms) add_term(r, v, f * g);
    }
    return r;
}

GradedPoly nh_act(const NHElem& x, const GradedPoly& f0) {
    GradedPoly f = f0.with_nvars(x.n);
    GradedPoly acc = GradedPoly::zero(x.p, x.n);
    for (auto& [w, g] : x.terms) {
        GradedPoly h = f;
        auto word = reduced_word(w);
        for (auto it = word.rbegin(); it != word.rend(); ++it)
            h = divided_difference(*it, h);
        acc = acc + g * h;
    }
    return acc;
}

// d_a(delta_t) = a - (a+1) x_t delta_t + (a-1) x_{t+1} delta_t
static NHElem derive_delta_gen(int n, int p, int a, int t) {
    NHElem r{n, p, {}};
    add_term(r, perm_identity(n), GradedPoly::constant(p, n, a));
    Perm st = perm_transposition(n, t);
    GradedPoly coef = GradedPoly::variable(p, n, t).scaled(-(a + 1)) +
                      GradedPoly::variable(p, n, t + 1).scaled(a - 1);
    add_term(r, st, coef);
    return r;
}

static const NHElem& derive_delta_w(int n, int p, int a, const Perm& w) {
    static std::map<std::tuple<int, int, int, Perm>, NHElem> cache;
    auto key = std::make_tuple(n, p, a, w);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto word = reduced_word(w);
    NHElem acc = nh_zero(n, p);
    for (size_t j = 0; j < word.size(); ++j) {
        std::vector<int> pre(word.begin(), word.begin() + j);
        std::vector<int> suf(word.begin() + j + 1, word.end());
        NHElem part = nh_mul(nh_delta_w(n, p, perm_from_word(pre, n)),
                             derive_delta_gen(n, p, a, word[j]));
        part = nh_mul(part, nh_delta_w(n, p, perm_from_word(suf, n)));
        acc = nh_add(acc, part);
    }
    return cache.emplace(std::move(key), std::move(acc)).first->second;
}

NHElem nh_derive(const NHElem& x, int a) {
    a = fp_norm(a, x.p);
    NHElem r{x.n, x.p, {}};
    for (auto& [w, f] : x.terms) {
        add_term(r, w, derive(f));
        const NHElem& dw = derive_delta_w(x.n, x.p, a, w);
        for (auto& [v, g] : dw.terms) add_term(r, v, f * g);
    }
    return r;
}

NHElem nh_involution(const NHElem& x, NHInvolution which) {
    NHElem r{x.n, x.p, {}};
    if (which == NHInvolution::psi) {
        for (auto& [w, f] : x.terms) {
            NHElem part = nh_mul(nh_delta_w(x.n, x.p, perm_inverse(w)), nh_poly(f, x.n));
            for (auto& [v, g] : part.terms) add_term(r, v, g);
        }
    } else {
        Perm w0 = perm_longest(x.n);
        std::vector<int> rev(x.n);
        for (int i = 0; i < x.n; ++i) rev[i] = x.n - 1 - i;
        for (auto& [w, f] : x.terms) {
            int sign = perm_length(w) % 2 ? -1 : 1;
            Perm w2 = perm_compose(w0, perm_compose(w, w0));
            add_term(r, w2, f.apply_perm(rev).scaled(sign));
        }
    }
    return r;
}

NHElem nh_parse(int n, int p, const std::string& word) {
    NHElem r = nh_one(n, p);
    std::istringstream is(word);
    std::string tok;
    while (is >> tok) {
        if (tok.size() < 2 || (tok[0] != 'd' && tok[0] != 'x'))
            throw std::invalid_argument("nh_parse: bad token '" + tok + "'");
        size_t caret = tok.find('^');
        int idx = std::stoi(tok.substr(1, caret == std::string::npos
                                              ? std::string::npos
                                              : caret - 1));
        int exp = caret == std::string::npos ? 1 : std::stoi(tok.substr(caret + 1));
        NHElem gen = tok[0] == 'd'
                         ? nh_delta(n, p, idx)
                         : nh_poly(GradedPoly::variable(p, n, idx, exp), n);
        if (tok[0] == 'd' && exp != 1) throw std::invalid_argument("nh_parse: d^k");
        r = nh_mul(r, gen);
    }
    return r;
}

std::string nh_str(const NHElem& x) {
    if (x.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [w, f] : x.terms) {
        if (!first) os << " + ";
        first = false;
        os << "(" << f.str() << ")";
        auto word = reduced_word(w);
        for (int t : word) os << " d" << t;
    }
    return os.str();
}

std::string nh_to_json(const NHElem& x) {
    nlohmann::json j;
    j["n"] = x.n;
    j["p"] = x.p;
    auto arr = nlohmann::json::array();
    for (auto& [w, f] : x.terms) {
        nlohmann::json t;
        t["perm"] = w;
        t["poly"] = nlohmann::json::parse(poly_to_json(f));
        arr.push_back(t);
    }
    j["terms"] = arr;
    return j.dump();
}

NHElem nh_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    NHElem x{j.at("n").get<int>(), j.at("p").get<int>(), {}};
    for (auto& t : j.at("terms")) {
        Perm w = t.at("perm").get<std::vector<int>>();
        add_term(x, w, poly_from_json(t.at("poly").dump()));
    }
    return x;
}

// ---------- contraction search ----------

namespace {

using Label = std::pair<Perm, std::vector<int>>;

// All (w, exponent) basis labels of the given degree component of NH_n.
std::vector<Label> degree_basis(int n, int degree) {
    std::vector<Label> out;
    for (auto& w : all_perms(n)) {
        int weight = degree / 2 + perm_length(w);
        if (degree % 2 != 0 || weight < 0) continue;
        for (auto& e : monomials_of_weight(n, weight)) out.emplace_back(w, e);
    }
    return out;
}

NHElem basis_elem(int n, int p, const Label& lab) {
    NHElem r{n, p, {}};
    add_term(r, lab.first, GradedPoly::monomial(p, lab.second, 1));
    return r;
}

} // namespace

ContractionResult nh_find_contraction(int n, int a, int p) {
    a = fp_norm(a, p);
    auto cols = degree_basis(n, -2);
    auto unit_label = Label{perm_identity(n), std::vector<int>(n, 0)};
    if (cols.size() <= 2500) {
        auto rows = degree_basis(n, 0);
        std::map<Label, int> row_idx;
        for (size_t i = 0; i < rows.size(); ++i) row_idx[rows[i]] = static_cast<int>(i);
        FpMat M(p, static_cast<int>(rows.size()), static_cast<int>(cols.size()));
        for (size_t c = 0; c < cols.size(); ++c) {
            NHElem dy = nh_derive(basis_elem(n, p, cols[c]), a);
            for (auto& [w, f] : dy.terms)
                for (auto& [e, cf] : f.terms())
                    M.at(row_idx.at({w, e}), static_cast<int>(c)) =
                        static_cast<uint8_t>(cf);
        }
        std::vector<uint8_t> rhs(rows.size(), 0);
        rhs[row_idx.at(unit_label)] = 1;
        auto sol = M.solve(rhs);
        if (!sol) return {std::nullopt, true};
        NHElem y = nh_zero(n, p);
        for (size_t c = 0; c < cols.size(); ++c)
            if ((*sol)[c]) y = nh_add(y, nh_scale(basis_elem(n, p, cols[c]), (*sol)[c]));
        if (!(nh_derive(y, a) == nh_one(n, p)))
            throw std::logic_error("nh_find_contraction: witness failed verification");
        return {y, true};
    }
    // Large component: the full degree -2 space is too big for a dense solve,
    // so search the subspaces of bounded diagram complexity: elements
    // x^gamma delta_w with l(w) <= L and |gamma| = l(w) - 1 (forced by the
    // degree).  L grows until a witness appears or the cap is reached; any
    // witness found is re-verified directly.
    auto perms = all_perms(n);
    int max_len = n * (n - 1) / 2;
    const int cap = std::min(max_len, 7);
    for (int L = 2; L <= cap; ++L) {
        std::vector<NHElem> cand, zs;
        for (auto& w : perms) {
            int l = perm_length(w);
            if (l < 1 || l > L) continue;
            for (auto& g : monomials_of_weight(n, l - 1))
                cand.push_back(nh_mul(nh_poly(GradedPoly::monomial(p, g, 1), n),
                                      nh_delta_w(n, p, w)));
        }
        std::map<Label, int> row_idx;
        zs.reserve(cand.size());
        for (auto& c : cand) {
            zs.push_back(nh_derive(c, a));
            for (auto& [w, f] : zs.back().terms)
                for (auto& [e, cf] : f.terms()) {
                    (void)cf;
                    row_idx.emplace(Label{w, e}, 0);
                }
        }
        row_idx.emplace(unit_label, 0);
        int nr = 0;
        for (auto& [lab, idx] : row_idx) { (void)lab; idx = nr++; }
        FpMat M(p, nr, static_cast<int>(zs.size()));
        for (size_t c = 0; c < zs.size(); ++c)
            for (auto& [w, f] : zs[c].terms)
                for (auto& [e, cf] : f.terms())
                    M.at(row_idx.at({w, e}), static_cast<int>(c)) =
                        static_cast<uint8_t>(cf);
        std::vector<uint8_t> rhs(nr, 0);
        rhs[row_idx.at(unit_label)] = 1;
        auto sol = M.solve(rhs);
        if (!sol) continue;
        NHElem y = nh_zero(n, p);
        for (size_t c = 0; c < cand.size(); ++c)
            if ((*sol)[c]) y = nh_add(y, nh_scale(cand[c], (*sol)[c]));
        if (!(nh_derive(y, a) == nh_one(n, p)))
            throw std::logic_error("nh_find_contraction: witness failed verification");
        return {y, false};
    }
    return {std::nullopt, false}; // not found; absence not certified
}

// ---------- windowed complexes ----------

PComplex nh_as_pcomplex(int n, int a, int p, int lo, int hi) {
    a = fp_norm(a, p);
    PComplex u = PComplex::zero(p);
    std::map<int, std::vector<Label>> basis;
    std::map<int, std::map<Label, int>> index;
    for (int j = lo; j <= hi; ++j) {
        auto b = degree_basis(n, j);
        if (b.empty()) continue;
        u.dims[j] = static_cast<int>(b.size());
        auto& idx = index[j];
        for (size_t i = 0; i < b.size(); ++i) idx[b[i]] = static_cast<int>(i);
        basis[j] = std::move(b);
    }
    for (auto& [j, b] : basis) {
        if (index.find(j + 2) == index.end()) continue;
        auto& tgt = index[j + 2];
        FpMat m(p, static_cast<int>(tgt.size()), static_cast<int>(b.size()));
        for (size_t c = 0; c < b.size(); ++c) {
            NHElem dy = nh_derive(basis_elem(n, p, b[c]), a);
            for (auto& [w, f] : dy.terms)
                for (auto& [e, cf] : f.terms())
                    m.at(tgt.at({w, e}), static_cast<int>(c)) = static_cast<uint8_t>(cf);
        }
        if (!m.is_zero()) u.d[j] = std::move(m);
    }
    u.refresh_window();
    u.lo = lo;
    u.hi = hi;
    u.open_high = true;
    u.open_low = lo > -n * (n - 1);
    return u;
}

SymbolResult nh_symbol(int n, int a, int p, int lo, int hi) {
    return nh_as_pcomplex(n, a, p, lo, hi).symbol();
}

SymbolResult nh_symbol(int n, int a, int p) {
    int lo = n * (1 - n);
    return nh_symbol(n, a, p, lo, lo + 6 * p);
}

PComplex twisted_pol_pcomplex(const GradedPoly& g, int gen_degree, int top_degree) {
    int p = g.p(), N = g.nvars();
    PComplex u = PComplex::zero(p);
    std::map<int, std::map<std::vector<int>, int>> index;
    for (int j = gen_degree; j <= top_degree; ++j) {
        if ((j - gen_degree) % 2) continue;
        auto mons = monomials_of_weight(N, (j - gen_degree) / 2);
        u.dims[j] = static_cast<int>(mons.size());
        auto& idx = index[j];
        for (size_t i = 0; i < mons.size(); ++i) idx[mons[i]] = static_cast<int>(i);
    }
    for (auto& [j, idx] : index) {
        auto tgt_it = index.find(j + 2);
        if (tgt_it == index.end()) continue;
        auto& tgt = tgt_it->second;
        FpMat m(p, static_cast<int>(tgt.size()), static_cast<int>(idx.size()));
        for (auto& [e, c] : idx) {
            GradedPoly mono = GradedPoly::monomial(p, e, 1);
            GradedPoly de = derive(mono) + mono * g;
            for (auto& [e2, cf] : de.terms()) m.at(tgt.at(e2), c) = static_cast<uint8_t>(cf);
        }
        if (!m.is_zero()) u.d[j] = std::move(m);
    }
    u.refresh_window();
    u.lo = gen_degree;
    u.hi = top_degree;
    u.open_high = true;
    return u;
}

ORingElem nh_pplus_symbol(int k, int p) {
    static std::map<std::pair<int, int>, ORingElem> cache;
    auto it = cache.find({k, p});
    if (it != cache.end()) return it->second;
    GradedPoly g = GradedPoly::zero(p, k);
    for (int t = 1; t <= k; ++t)
        g = g + GradedPoly::variable(p, k, t).scaled(t - k);
    int gen = k * (1 - k) / 2;
    auto s = twisted_pol_pcomplex(g, gen, gen + 6 * p).symbol();
    if (!s.verified) throw std::logic_error("nh_pplus_symbol: window too small");
    cache.emplace(std::make_pair(k, p), s.value);
    return s.value;
}

SymbolResult nh_twisted_restriction_symbol(int n, int m, int p) {
    int N = n + m;
    if (N > p - 1) throw std::invalid_argument("nh_twisted_restriction_symbol: n+m <= p-1");
    GradedPoly g = GradedPoly::zero(p, N);
    for (int t = 1; t < n; ++t)
        g = g + GradedPoly::variable(p, N, t).scaled(-(n - t));
    for (int t = 1; t < m; ++t)
        g = g + GradedPoly::variable(p, N, N - t).scaled(-(m - t));
    int gen = N * (1 - N) / 2; // twisted generator regraded to balanced degree
    auto s = twisted_pol_pcomplex(g, gen, gen + 6 * p).symbol();
    auto denom = (nh_pplus_symbol(n, p) * nh_pplus_symbol(m, p)).try_invert();
    if (!denom) throw std::logic_error("nh_twisted_restriction_symbol: non-unit reference");
    return {s.value * *denom, s.verified};
}

// ---------- induced module (dots-right normal form) ----------

namespace {

// Right-dotted form: sum of delta_w * f_w.
using NHElemR = std::map<Perm, GradedPoly>;

void add_term_r(NHElemR& x, const Perm& w, const GradedPoly& f) {
    if (f.is_zero()) return;
    auto it = x.find(w);
    if (it == x.end()) {
        x.emplace(w, f);
    } else {
        it->second = it->second + f;
        if (it->second.is_zero()) x.erase(it);
    }
}

// f * delta_{word} rewritten with all dots on the right, using
// f delta_i = delta_i (s_i f) - ddiff_i(s_i f).
NHElemR to_right(int n, const GradedPoly& f, const std::vector<int>& word, size_t pos) {
    NHElemR r;
    if (f.is_zero()) return r;
    if (pos == word.size()) {
        add_term_r(r, perm_identity(n), f);
        return r;
    }
    int i = word[pos];
    GradedPoly sf = f.swap_vars(i);
    NHElemR head = to_right(n, sf, word, pos + 1);
    Perm si = perm_transposition(n, i);
    for (auto& [w, g] : head) {
        Perm siw = perm_compose(si, w);
        if (perm_length(siw) > perm_length(w)) add_term_r(r, siw, g);
    }
    NHElemR tail = to_right(n, -divided_difference(i, sf), word, pos + 1);
    for (auto& [w, g] : tail) add_term_r(r, w, g);
    return r;
}

// d_a(delta_w) in right-dotted form, cached.
const NHElemR& derive_delta_w_right(int n, int p, int a, const Perm& w) {
    static std::map<std::tuple<int, int, int, Perm>, NHElemR> cache;
    auto key = std::make_tuple(n, p, a, w);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    const NHElem& left = derive_delta_w(n, p, a, w);
    NHElemR acc;
    for (auto& [v, g] : left.terms) {
        auto part = to_right(n, g, reduced_word(v), 0);
        for (auto& [u, h] : part) add_term_r(acc, u, h);
    }
    return cache.emplace(std::move(key), std::move(acc)).first->second;
}

} // namespace

SymbolResult nh_induction_symbol(int n, int m, int p) {
    int N = n + m;
    if (N > p - 1) throw std::invalid_argument("nh_induction_symbol: n+m <= p-1");
    const int a = 1;
    // twist of eps_n (x) eps_m: d(gen) = g * gen
    GradedPoly g = GradedPoly::zero(p, N);
    for (int t = 1; t < n; ++t)
        g = g + GradedPoly::variable(p, N, t).scaled(-(n - t));
    for (int t = 1; t < m; ++t)
        g = g + GradedPoly::variable(p, N, n + t).scaled(-(m - t));
    int base = n * (1 - n) / 2 + m * (1 - m) / 2;
    int lo = base - 2 * n * m, hi = lo + 6 * p + 2 * n * m;
    auto reps = min_coset_reps(n, m);
    // basis of each degree: (w, b) with deg = base - 2 l(w) + 2|b|
    using MLabel = std::pair<Perm, std::vector<int>>;
    std::map<int, std::map<MLabel, int>> index;
    PComplex u = PComplex::zero(p);
    for (int j = lo; j <= hi; ++j) {
        auto& idx = index[j];
        for (auto& w : reps) {
            int weight2 = j - base + 2 * perm_length(w);
            if (weight2 < 0 || weight2 % 2) continue;
            for (auto& b : monomials_of_weight(N, weight2 / 2))
                idx.emplace(MLabel{w, b}, 0);
        }
        int c = 0;
        for (auto& [lab, i] : idx) { (void)lab; i = c++; }
        if (c) u.dims[j] = c;
        else index.erase(j);
    }
    // straighten a right-dotted term against the generator:
    // delta_u h gen = delta_{u'} ddiff_tau(h) gen for u = u' tau
    auto apply_to_gen = [&](const Perm& uperm, const GradedPoly& h,
                            std::map<MLabel, int>& coeffs) {
        auto [wmin, tau] = coset_factor(uperm, n, m);
        GradedPoly h2 = h;
        auto word = reduced_word(tau);
        for (auto it2 = word.rbegin(); it2 != word.rend(); ++it2)
            h2 = divided_difference(*it2, h2);
        for (auto& [e, cf] : h2.terms()) {
            auto& slot = coeffs[{wmin, e}];
            slot = fp_norm(slot + cf, p);
        }
    };
    for (auto& [j, idx] : index) {
        auto tgt_it = index.find(j + 2);
        if (tgt_it == index.end()) continue;
        auto& tgt = tgt_it->second;
        FpMat mat(p, static_cast<int>(tgt.size()), static_cast<int>(idx.size()));
        for (auto& [lab, c] : idx) {
            const auto& [w, b] = lab;
            GradedPoly xb = GradedPoly::monomial(p, b, 1);
            std::map<MLabel, int> coeffs;
            // d(delta_w) * x^b, then straightened against the generator
            for (auto& [uperm, h] : derive_delta_w_right(N, p, a, w))
                apply_to_gen(uperm, h * xb, coeffs);
            // delta_w * (derive(x^b) + x^b g)
            apply_to_gen(w, derive(xb) + xb * g, coeffs);
            for (auto& [mlab, cf] : coeffs)
                if (cf) mat.at(tgt.at(mlab), c) = static_cast<uint8_t>(cf);
        }
        if (!mat.is_zero()) u.d[j] = std::move(mat);
    }
    u.refresh_window();
    u.lo = lo;
    u.hi = hi;
    u.open_high = true;
    auto s = u.symbol();
    auto denom = nh_pplus_symbol(N, p).try_invert();
    if (!denom) throw std::logic_error("nh_induction_symbol: non-unit reference");
    return {s.value * *denom, s.verified};
}

} // namespace pdg
