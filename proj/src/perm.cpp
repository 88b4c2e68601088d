#include "pdg/perm.hpp"
#include <algorithm>
#include <stdexcept>

namespace pdg {

Perm perm_identity(int n) {
    Perm w(n);
    for (int i = 0; i < n; ++i) w[i] = i;
    return w;
}

Perm perm_transposition(int n, int t) {
    if (t < 1 || t >= n) throw std::invalid_argument("perm_transposition: bad index");
    Perm w = perm_identity(n);
    std::swap(w[t - 1], w[t]);
    return w;
}

Perm perm_compose(const Perm& u, const Perm& v) {
    if (u.size() != v.size()) throw std::invalid_argument("perm_compose: size mismatch");
    Perm w(u.size());
    for (size_t i = 0; i < u.size(); ++i) w[i] = u[v[i]];
    return w;
}

Perm perm_inverse(const Perm& w) {
    Perm v(w.size());
    for (size_t i = 0; i < w.size(); ++i) v[w[i]] = static_cast<int>(i);
    return v;
}

int perm_length(const Perm& w) {
    int n = static_cast<int>(w.size()), l = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (w[i] > w[j]) ++l;
    return l;
}

Perm perm_longest(int n) {
    Perm w(n);
    for (int i = 0; i < n; ++i) w[i] = n - 1 - i;
    return w;
}

// Left descents: l(s_i w) < l(w) iff w^{-1}(i) > w^{-1}(i+1); taking the
// smallest descent at each step yields the lexicographically smallest
// reduced word.
std::vector<int> reduced_word(const Perm& w) {
    Perm cur = w;
    int n = static_cast<int>(w.size());
    std::vector<int> word;
    Perm inv = perm_inverse(cur);
    while (true) {
        int pick = -1;
        for (int i = 0; i + 1 < n; ++i)
            if (inv[i] > inv[i + 1]) { pick = i; break; }
        if (pick < 0) break;
        word.push_back(pick + 1);
        cur = perm_compose(perm_transposition(n, pick + 1), cur);
        inv = perm_inverse(cur);
    }
    return word;
}

Perm perm_from_word(const std::vector<int>& word, int n) {
    Perm w = perm_identity(n);
    for (int t : word) w = perm_compose(w, perm_transposition(n, t));
    return w;
}

std::vector<Perm> all_perms(int n) {
    Perm w = perm_identity(n);
    std::vector<Perm> out;
    do out.push_back(w);
    while (std::next_permutation(w.begin(), w.end()));
    return out;
}

std::vector<std::vector<int>> all_reduced_words(const Perm& w) {
    int n = static_cast<int>(w.size());
    if (perm_length(w) == 0) return {{}};
    std::vector<std::vector<int>> out;
    Perm inv = perm_inverse(w);
    for (int i = 0; i + 1 < n; ++i)
        if (inv[i] > inv[i + 1]) {
            Perm rest = perm_compose(perm_transposition(n, i + 1), w);
            for (auto tail : all_reduced_words(rest)) {
                tail.insert(tail.begin(), i + 1);
                out.push_back(std::move(tail));
            }
        }
    return out;
}

std::vector<Perm> min_coset_reps(int n, int m) {
    std::vector<Perm> out;
    for (const Perm& w : all_perms(n + m)) {
        bool ok = true;
        for (int i = 0; i + 1 < n; ++i)
            if (w[i] > w[i + 1]) { ok = false; break; }
        for (int i = n; ok && i + 1 < n + m; ++i)
            if (w[i] > w[i + 1]) ok = false;
        if (ok) out.push_back(w);
    }
    return out;
}

std::pair<Perm, Perm> coset_factor(const Perm& u, int n, int m) {
    if (static_cast<int>(u.size()) != n + m)
        throw std::invalid_argument("coset_factor: size mismatch");
    Perm w = u;
    std::sort(w.begin(), w.begin() + n);
    std::sort(w.begin() + n, w.end());
    Perm sigma = perm_compose(perm_inverse(w), u);
    return {w, sigma};
}

} // namespace pdg
