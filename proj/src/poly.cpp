#include "pdg/poly.hpp"
#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <json.hpp>

namespace pdg {

GradedPoly GradedPoly::constant(int p, int nvars, long long c) {
    GradedPoly f(p, nvars);
    f.add_term(std::vector<int>(nvars, 0), c);
    return f;
}

GradedPoly GradedPoly::variable(int p, int nvars, int t, int exp) {
    if (t < 1 || t > nvars) throw std::invalid_argument("variable: index out of range");
    GradedPoly f(p, nvars);
    std::vector<int> e(nvars, 0);
    e[t - 1] = exp;
    f.add_term(e, 1);
    return f;
}

GradedPoly GradedPoly::monomial(int p, const std::vector<int>& exps, long long c) {
    GradedPoly f(p, static_cast<int>(exps.size()));
    f.add_term(exps, c);
    return f;
}

void GradedPoly::add_term(const std::vector<int>& exps, long long c) {
    if (static_cast<int>(exps.size()) != nvars_)
        throw std::invalid_argument("add_term: wrong exponent vector length");
    int cc = fp_norm(c, p_);
    if (cc == 0) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, cc);
    } else {
        it->second = fp_add(it->second, cc, p_);
        if (it->second == 0) terms_.erase(it);
    }
}

GradedPoly GradedPoly::operator+(const GradedPoly& o) const {
    if (p_ != o.p_ || nvars_ != o.nvars_)
        throw std::invalid_argument("poly +: ring mismatch");
    GradedPoly r = *this;
    for (auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

GradedPoly GradedPoly::operator-(const GradedPoly& o) const {
    if (p_ != o.p_ || nvars_ != o.nvars_)
        throw std::invalid_argument("poly -: ring mismatch");
    GradedPoly r = *this;
    for (auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

GradedPoly GradedPoly::operator*(const GradedPoly& o) const {
    if (p_ != o.p_ || nvars_ != o.nvars_)
        throw std::invalid_argument("poly *: ring mismatch");
    GradedPoly r(p_, nvars_);
    std::vector<int> e(nvars_);
    for (auto& [e1, c1] : terms_)
        for (auto& [e2, c2] : o.terms_) {
            for (int i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
            r.add_term(e, static_cast<long long>(c1) * c2);
        }
    return r;
}

GradedPoly GradedPoly::scaled(long long c) const {
    GradedPoly r(p_, nvars_);
    for (auto& [e, c0] : terms_) r.add_term(e, c0 * c);
    return r;
}

std::optional<int> GradedPoly::degree() const {
    std::optional<int> d;
    for (auto& [e, c] : terms_) {
        int s = 2 * std::accumulate(e.begin(), e.end(), 0);
        if (!d) d = s;
        else if (*d != s) return std::nullopt;
    }
    return d;
}

GradedPoly GradedPoly::apply_perm(const std::vector<int>& w) const {
    if (static_cast<int>(w.size()) != nvars_)
        throw std::invalid_argument("apply_perm: size mismatch");
    GradedPoly r(p_, nvars_);
    std::vector<int> e(nvars_);
    for (auto& [e0, c] : terms_) {
        std::fill(e.begin(), e.end(), 0);
        for (int i = 0; i < nvars_; ++i) e[w[i]] = e0[i];
        r.add_term(e, c);
    }
    return r;
}

GradedPoly GradedPoly::swap_vars(int t) const {
    std::vector<int> w(nvars_);
    std::iota(w.begin(), w.end(), 0);
    std::swap(w[t - 1], w[t]);
    return apply_perm(w);
}

GradedPoly GradedPoly::with_nvars(int nvars) const {
    if (nvars < nvars_) throw std::invalid_argument("with_nvars: cannot shrink");
    GradedPoly r(p_, nvars);
    for (auto& [e, c] : terms_) {
        std::vector<int> e2 = e;
        e2.resize(nvars, 0);
        r.add_term(e2, c);
    }
    return r;
}

std::string GradedPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        bool any = false;
        if (c != 1) { os << c; any = true; }
        for (int i = 0; i < nvars_; ++i)
            if (e[i] > 0) {
                if (any) os << "*";
                os << "x" << (i + 1);
                if (e[i] > 1) os << "^" << e[i];
                any = true;
            }
        if (!any) os << c;
    }
    return os.str();
}

GradedPoly derive(const GradedPoly& f) {
    GradedPoly r(f.p(), f.nvars());
    for (auto& [e, c] : f.terms())
        for (int t = 0; t < f.nvars(); ++t)
            if (e[t] > 0) {
                std::vector<int> e2 = e;
                e2[t] += 1;
                r.add_term(e2, static_cast<long long>(c) * e[t]);
            }
    return r;
}

GradedPoly derive_twisted(const GradedPoly& f, const std::vector<int>& alpha) {
    if (static_cast<int>(alpha.size()) != f.nvars())
        throw std::invalid_argument("derive_twisted: twist length mismatch");
    GradedPoly g(f.p(), f.nvars());
    for (int t = 0; t < f.nvars(); ++t) {
        std::vector<int> e(f.nvars(), 0);
        e[t] = 1;
        g.add_term(e, alpha[t]);
    }
    return derive(f) + f * g;
}

GradedPoly divided_difference(int t, const GradedPoly& f) {
    if (t < 1 || t >= f.nvars())
        throw std::invalid_argument("divided_difference: index out of range");
    // Synthetic division of the antisymmetrized part by (x_t - x_{t+1}):
    // repeatedly cancel the term whose x_t exponent is largest.
    GradedPoly g = f - f.swap_vars(t);
    GradedPoly q(f.p(), f.nvars());
    const int it = t - 1;
    while (!g.is_zero()) {
        auto lead = g.terms().begin();
        for (auto cur = g.terms().begin(); cur != g.terms().end(); ++cur)
            if (cur->first[it] > lead->first[it] ||
                (cur->first[it] == lead->first[it] && cur->first > lead->first))
                lead = cur;
        if (lead->first[it] == 0)
            throw std::logic_error("divided_difference: nonzero remainder (internal error)");
        std::vector<int> qe = lead->first;
        qe[it] -= 1;
        int qc = lead->second;
        q.add_term(qe, qc);
        // g -= q_term * (x_t - x_{t+1})
        g.add_term(lead->first, -qc);
        std::vector<int> ge = qe;
        ge[it + 1] += 1;
        g.add_term(ge, qc);
    }
    return q;
}

GradedPoly longest_divided_difference(int n, const GradedPoly& f) {
    if (f.nvars() != n)
        throw std::invalid_argument("longest_divided_difference: nvars mismatch");
    GradedPoly g = f;
    // Fixed reduced word s1 (s2 s1) (s3 s2 s1) ... ; operators apply
    // right-to-left, so run the word in reverse.
    std::vector<int> word;
    for (int k = 1; k < n; ++k)
        for (int i = k; i >= 1; --i) word.push_back(i);
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        g = divided_difference(*it, g);
    return g;
}

GradedPoly elementary_symmetric(int m, int n, int p) {
    if (m < 0 || m > n) throw std::invalid_argument("elementary_symmetric: need 0 <= m <= n");
    GradedPoly r(p, n);
    std::vector<int> idx(m);
    // iterate over m-subsets of {0..n-1}
    std::function<void(int, int)> rec = [&](int start, int k) {
        if (k == m) {
            std::vector<int> e(n, 0);
            for (int i : idx) e[i] = 1;
            r.add_term(e, 1);
            return;
        }
        for (int i = start; i < n; ++i) {
            idx[k] = i;
            rec(i + 1, k + 1);
        }
    };
    rec(0, 0);
    return r;
}

std::string poly_to_json(const GradedPoly& f) {
    nlohmann::json j;
    j["p"] = f.p();
    j["nvars"] = f.nvars();
    auto arr = nlohmann::json::array();
    for (auto& [e, c] : f.terms()) arr.push_back({e, c});
    j["terms"] = arr;
    return j.dump();
}

GradedPoly poly_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    GradedPoly f(j.at("p").get<int>(), j.at("nvars").get<int>());
    for (auto& t : j.at("terms"))
        f.add_term(t.at(0).get<std::vector<int>>(), t.at(1).get<long long>());
    return f;
}

} // namespace pdg
