#pragma once
#include <vector>

namespace pdg {

// Permutations in one-line notation: w[i] = w(i), 0-based.
using Perm = std::vector<int>;

Perm perm_identity(int n);
Perm perm_transposition(int n, int t); // s_t, t is 1-based (swaps t, t+1)
Perm perm_compose(const Perm& u, const Perm& v); // (u*v)(i) = u(v(i))
Perm perm_inverse(const Perm& w);
int perm_length(const Perm& w); // number of inversions
Perm perm_longest(int n);

// Lexicographically smallest reduced word (i1..ik), 1-based letters, with
// w = s_{i1} * ... * s_{ik}.
std::vector<int> reduced_word(const Perm& w);

// Build the permutation of a word of s_t letters (1-based).
Perm perm_from_word(const std::vector<int>& word, int n);

std::vector<Perm> all_perms(int n);

// All reduced words of w (for exhaustive word-independence tests; n small).
std::vector<std::vector<int>> all_reduced_words(const Perm& w);

// Minimal-length representatives of cosets w*(S_n x S_m) inside S_{n+m}.
std::vector<Perm> min_coset_reps(int n, int m);

// Factor u = w * sigma with w a minimal coset representative and sigma in
// S_n x S_m; returns {w, sigma}.
std::pair<Perm, Perm> coset_factor(const Perm& u, int n, int m);

} // namespace pdg
