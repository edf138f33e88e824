#pragma once

// Deliberately naive reference computations used to cross-check the
// library. None of these call the routine they are checking.

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <vector>

#include "bruhat/bruhat.hpp"

namespace oracle {

using bruhat::CartanMatrix;
using bruhat::DoubleWord;
using bruhat::Matrix;
using bruhat::QMatrix;
using bruhat::Rational;

/// All roots by repeatedly reflecting the simple roots; returns the number
/// of positive ones.
inline std::size_t count_positive_roots(const CartanMatrix& a) {
  const int r = a.rank();
  std::set<std::vector<int>> roots;
  std::vector<std::vector<int>> frontier;
  for (int i = 0; i < r; ++i) {
    std::vector<int> e(r, 0);
    e[i] = 1;
    roots.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& b : frontier)
      for (int i = 1; i <= r; ++i) {
        int pairing = 0;
        for (int j = 1; j <= r; ++j) pairing += b[j - 1] * a(i, j);
        auto c = b;
        c[i - 1] -= pairing;
        if (roots.insert(c).second) next.push_back(c);
      }
    frontier = std::move(next);
  }
  return static_cast<std::size_t>(std::count_if(roots.begin(), roots.end(), [](const auto& b) {
    return std::all_of(b.begin(), b.end(), [](int x) { return x >= 0; });
  }));
}

/// Type A_{n-1}: the permutation of [0, n) for a word in s_1..s_{n-1}
/// (s_i swaps i-1 and i), composed left to right as functions.
inline std::vector<int> permutation(const std::vector<int>& word, int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  // p = s_{w1} o s_{w2} o ... ; apply to the identity from the right.
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    for (int& x : p) {
      if (x == *it - 1) x = *it;
      else if (x == *it) x = *it - 1;
    }
  return p;
}

inline int inversions(const std::vector<int>& p) {
  int n = 0;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = a + 1; b < p.size(); ++b)
      if (p[a] > p[b]) ++n;
  return n;
}

/// In SL_n, Delta_{u omega_i, v omega_i}(x) is the minor on rows u([1,i])
/// and columns v([1,i]).
inline Rational sl_minor(const QMatrix& x, const std::vector<int>& u_word, int i,
                         const std::vector<int>& v_word) {
  const int n = static_cast<int>(x.rows());
  const auto pu = permutation(u_word, n), pv = permutation(v_word, n);
  std::vector<int> rows(pu.begin(), pu.begin() + i), cols(pv.begin(), pv.begin() + i);
  std::sort(rows.begin(), rows.end());
  std::sort(cols.begin(), cols.end());
  QMatrix b(i, i);
  for (int r = 0; r < i; ++r)
    for (int c = 0; c < i; ++c) b(r, c) = x(rows[r], cols[c]);
  return bruhat::determinant(b);
}

/// Orbit count by union-find over F_2^m, using the integer transvections
/// reduced mod 2 after each application.
inline std::size_t orbit_count_bruteforce(const CartanMatrix& a, const DoubleWord& d) {
  const int m = d.size();
  const auto ts = bruhat::transvections(a, d);
  std::vector<std::uint32_t> parent(std::size_t{1} << m);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::uint32_t s = 0; s < parent.size(); ++s) {
    std::vector<long long> xi(m);
    for (int k = 0; k < m; ++k) xi[k] = (s >> k) & 1;
    for (const auto& t : ts) {
      const auto y = bruhat::apply_z(t, xi);
      std::uint32_t img = 0;
      for (int k = 0; k < m; ++k)
        if (((y[k] % 2) + 2) % 2) img |= 1u << k;
      const auto rx = find(s), ry = find(img);
      if (rx != ry) parent[rx] = ry;
    }
  }
  std::size_t roots = 0;
  for (std::uint32_t s = 0; s < parent.size(); ++s)
    if (find(s) == s) ++roots;
  return roots;
}

/// Brute-force induced-E6 test: every 6-subset, every bijection onto the
/// E6 Dynkin graph (nodes 1-3-4-5-6 chain, 2 attached to 4).
inline bool has_induced_e6(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (auto [x, y] : edges) adj[x][y] = adj[y][x] = true;
  const std::array<std::pair<int, int>, 5> e6{{{0, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 3}}};
  std::vector<std::vector<bool>> target(6, std::vector<bool>(6, false));
  for (auto [x, y] : e6) target[x][y] = target[y][x] = true;
  std::vector<int> pick(6);
  std::vector<bool> sel(n, false);
  std::fill(sel.begin(), sel.begin() + std::min(n, 6), true);
  if (n < 6) return false;
  std::sort(sel.begin(), sel.end(), std::greater<>());
  do {
    int c = 0;
    for (int v = 0; v < n; ++v)
      if (sel[v]) pick[c++] = v;
    std::array<int, 6> perm{0, 1, 2, 3, 4, 5};
    do {
      bool ok = true;
      for (int p = 0; p < 6 && ok; ++p)
        for (int q = p + 1; q < 6 && ok; ++q)
          ok = adj[pick[perm[p]]][pick[perm[q]]] == target[p][q];
      if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
  } while (std::prev_permutation(sel.begin(), sel.end()));
  return false;
}

}  // namespace oracle
