#pragma once

// Cartan matrices of finite type, Coxeter orders and positive roots.
//
// Node numbering (1-based) used throughout the library:
//
//   A_r  1 - 2 - ... - r
//   B_r  1 => 2 - 3 - ... - r     node 1 is the short simple root
//   C_r  1 <= 2 - 3 - ... - r     node 1 is the long simple root
//   D_r  1, 2 both attached to 3, then 3 - 4 - ... - r   (r >= 4)
//   E_r  Bourbaki: 1 - 3 - 4 - 5 - ... - r, 2 attached to 4   (r = 6,7,8)
//   F_4  Bourbaki: 1 - 2 => 3 - 4, nodes 1, 2 long
//   G_2  1 short, 2 long
//
// With this table B_2 has a12 = -2, a21 = -1 and G_2 has a12 = -3,
// a21 = -1, so the rank-2 letters i, j of the examples map to nodes 1, 2.

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "bruhat/error.hpp"
#include "bruhat/matrix.hpp"

namespace bruhat {

enum class Family { A, B, C, D, E, F, G };

inline char family_letter(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

/// Integer Cartan matrix a(i, j) = alpha_j(alpha_i^vee) with 1-based nodes.
class CartanMatrix {
 public:
  CartanMatrix() = default;

  explicit CartanMatrix(const std::vector<std::vector<int>>& entries, std::string name = {})
      : name_(std::move(name)) {
    const std::size_t r = entries.size();
    if (r == 0) throw InvalidInput("Cartan matrix must have positive rank");
    a_ = Matrix<int>(r, r);
    for (std::size_t i = 0; i < r; ++i) {
      if (entries[i].size() != r) throw InvalidInput("Cartan matrix must be square");
      for (std::size_t j = 0; j < r; ++j) a_(i, j) = entries[i][j];
    }
    for (std::size_t i = 0; i < r; ++i) {
      if (a_(i, i) != 2) throw InvalidInput("Cartan matrix diagonal entries must be 2");
      for (std::size_t j = 0; j < r; ++j) {
        if (i == j) continue;
        if (a_(i, j) > 0) throw InvalidInput("Cartan matrix off-diagonal entries must be <= 0");
        if ((a_(i, j) == 0) != (a_(j, i) == 0))
          throw InvalidInput("Cartan matrix zero pattern must be symmetric");
        int p = a_(i, j) * a_(j, i);
        if (p < 0 || p > 3) throw InvalidInput("Cartan matrix entry products must lie in {0,1,2,3}");
      }
    }
  }

  int rank() const { return static_cast<int>(a_.rows()); }
  const std::string& name() const { return name_; }

  /// a_{ij} for 1-based nodes.
  int operator()(int i, int j) const { return a_(i - 1, j - 1); }

  /// {i, j} is an edge of the Dynkin graph.
  bool adjacent(int i, int j) const { return i != j && (*this)(i, j) != 0; }

  bool valid_node(int i) const { return i >= 1 && i <= rank(); }

  bool simply_laced() const {
    for (int i = 1; i <= rank(); ++i)
      for (int j = 1; j <= rank(); ++j)
        if (i != j && (*this)(i, j) < -1) return false;
    return true;
  }

  const Matrix<int>& entries() const { return a_; }

  std::vector<std::vector<int>> rows() const {
    std::vector<std::vector<int>> out(a_.rows());
    for (std::size_t i = 0; i < a_.rows(); ++i) out[i].assign(a_.row(i).begin(), a_.row(i).end());
    return out;
  }

  bool operator==(const CartanMatrix& o) const { return a_ == o.a_; }

 private:
  Matrix<int> a_;
  std::string name_;
};

namespace detail {

inline void link(std::vector<std::vector<int>>& a, int i, int j, int aij, int aji) {
  a[i - 1][j - 1] = aij;
  a[j - 1][i - 1] = aji;
}

}  // namespace detail

/// Standard Cartan matrix for a finite type, numbered per the table above.
inline CartanMatrix cartan_matrix(Family family, int rank) {
  const char f = family_letter(family);
  auto bad = [&] {
    return InvalidInput(std::string("invalid finite type ") + f + std::to_string(rank));
  };
  switch (family) {
    case Family::A: if (rank < 1) throw bad(); break;
    case Family::B:
    case Family::C: if (rank < 2) throw bad(); break;
    case Family::D: if (rank < 4) throw bad(); break;
    case Family::E: if (rank < 6 || rank > 8) throw bad(); break;
    case Family::F: if (rank != 4) throw bad(); break;
    case Family::G: if (rank != 2) throw bad(); break;
  }
  std::vector<std::vector<int>> a(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i) a[i][i] = 2;
  using detail::link;
  switch (family) {
    case Family::A:
      for (int i = 1; i < rank; ++i) link(a, i, i + 1, -1, -1);
      break;
    case Family::B:
      link(a, 1, 2, -2, -1);
      for (int i = 2; i < rank; ++i) link(a, i, i + 1, -1, -1);
      break;
    case Family::C:
      link(a, 1, 2, -1, -2);
      for (int i = 2; i < rank; ++i) link(a, i, i + 1, -1, -1);
      break;
    case Family::D:
      link(a, 1, 3, -1, -1);
      link(a, 2, 3, -1, -1);
      for (int i = 3; i < rank; ++i) link(a, i, i + 1, -1, -1);
      break;
    case Family::E:
      link(a, 1, 3, -1, -1);
      link(a, 2, 4, -1, -1);
      for (int i = 3; i < rank; ++i) link(a, i, i + 1, -1, -1);
      break;
    case Family::F:
      link(a, 1, 2, -1, -1);
      link(a, 2, 3, -1, -2);
      link(a, 3, 4, -1, -1);
      break;
    case Family::G:
      link(a, 1, 2, -3, -1);
      break;
  }
  return CartanMatrix(a, std::string(1, f) + std::to_string(rank));
}

/// Parses "A2", "b2", "D4", ... (case-insensitive).
inline CartanMatrix cartan_matrix(std::string_view type) {
  if (type.size() < 2) throw InvalidInput("type string must look like A3, B2, G2");
  const char f = static_cast<char>(std::toupper(static_cast<unsigned char>(type[0])));
  const std::string digits(type.substr(1));
  if (f < 'A' || f > 'G' || digits.empty() ||
      !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw InvalidInput("type string must look like A3, B2, G2: got '" + std::string(type) + "'");
  return cartan_matrix(static_cast<Family>(f - 'A'), std::atoi(digits.c_str()));
}

/// B_2 with Pi = {i, j}, a_ij = -2, a_ji = -1 (i = node 1).
inline CartanMatrix b2_preset() { return cartan_matrix(Family::B, 2); }

/// G_2 with Pi = {i, j}, a_ij = -3, a_ji = -1 (i = node 1).
inline CartanMatrix g2_preset() { return cartan_matrix(Family::G, 2); }

/// Coxeter orders d_ij = 2, 3, 4, 6 for a_ij a_ji = 0, 1, 2, 3. The diagonal
/// holds 1 (order of s_i s_i = e).
inline Matrix<int> d_exponents(const CartanMatrix& a) {
  static constexpr int kOrder[] = {2, 3, 4, 6};
  const int r = a.rank();
  Matrix<int> d(r, r, 1);
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= r; ++j)
      if (i != j) d(i - 1, j - 1) = kOrder[a(i, j) * a(j, i)];
  return d;
}

using Root = std::vector<int>;

/// Positive roots in the simple-root basis.
struct RootSystem {
  std::vector<Root> positive_roots;

  std::size_t size() const { return positive_roots.size(); }
};

/// Pairing <beta, alpha_i^vee> for a root in simple-root coordinates.
inline int coroot_pairing(const CartanMatrix& a, const Root& beta, int i) {
  int s = 0;
  for (int j = 1; j <= a.rank(); ++j) s += beta[j - 1] * a(i, j);
  return s;
}

/// Reflection closure from the simple roots; rejects matrices whose closure
/// grows past any finite-type bound.
inline RootSystem positive_roots(const CartanMatrix& a, std::size_t bound = 256) {
  const int r = a.rank();
  std::set<Root> seen;
  std::vector<Root> order;
  for (int i = 0; i < r; ++i) {
    Root e(r, 0);
    e[i] = 1;
    seen.insert(e);
    order.push_back(e);
  }
  for (std::size_t q = 0; q < order.size(); ++q) {
    for (int i = 1; i <= r; ++i) {
      Root beta = order[q];
      const int c = coroot_pairing(a, beta, i);
      if (c == 0) continue;
      beta[i - 1] -= c;
      if (std::any_of(beta.begin(), beta.end(), [](int x) { return x < 0; })) continue;
      if (seen.insert(beta).second) {
        order.push_back(beta);
        if (order.size() > bound) throw InvalidInput("root closure exceeds bound: not of finite type");
      }
    }
  }
  std::sort(order.begin(), order.end(), [](const Root& x, const Root& y) {
    int hx = 0, hy = 0;
    for (int v : x) hx += v;
    for (int v : y) hy += v;
    return hx != hy ? hx < hy : x > y;
  });
  return RootSystem{std::move(order)};
}

}  // namespace bruhat
