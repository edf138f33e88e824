#pragma once

// Matrix realizations of simply connected groups used for exact checks:
// SL_n (type A_{n-1}) and Sp_4 (type B_2 with a12 = -2, a21 = -1).
//
// Sp_4 acts on the basis (e1, e2, e_{-2}, e_{-1}) and preserves the form
// <e_a, e_{-a}> = 1. Node 1 is the short root e1 - e2, node 2 the long root
// 2 e2. In both realizations N is upper unitriangular, H is diagonal, and
// the fundamental character omega_i of the torus is the i x i leading
// principal minor, so generalized minors are ordinary minors.

#include <algorithm>
#include <cctype>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bruhat/cartan.hpp"
#include "bruhat/error.hpp"
#include "bruhat/rational.hpp"
#include "bruhat/weyl.hpp"

namespace bruhat {

enum class GroupKind { special_linear, symplectic4 };

class GroupDescriptor {
 public:
  static GroupDescriptor special_linear(int n) {
    if (n < 2) throw InvalidInput("special-linear realization needs n >= 2");
    return GroupDescriptor(GroupKind::special_linear, n, cartan_matrix(Family::A, n - 1));
  }

  static GroupDescriptor symplectic4() {
    return GroupDescriptor(GroupKind::symplectic4, 4, b2_preset());
  }

  /// "SL2", "SL3", "sl4", "SP4" (alias "B2").
  static GroupDescriptor parse(std::string_view name) {
    std::string s(name);
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    if (s == "SP4" || s == "B2") return symplectic4();
    if (s.size() >= 3 && s.rfind("SL", 0) == 0 &&
        std::all_of(s.begin() + 2, s.end(), [](unsigned char c) { return std::isdigit(c); }))
      return special_linear(std::stoi(s.substr(2)));
    throw InvalidInput("unknown group '" + std::string(name) + "' (expected SL<n> or SP4)");
  }

  GroupKind kind() const { return kind_; }
  int dim() const { return dim_; }
  const CartanMatrix& cartan() const { return weyl_.cartan(); }
  const WeylGroup& weyl() const { return weyl_; }
  int rank() const { return weyl_.rank(); }

  std::string name() const {
    return kind_ == GroupKind::symplectic4 ? "SP4" : "SL" + std::to_string(dim_);
  }

  /// Size of the leading principal minor giving omega_i.
  std::size_t minor_size(int i) const { return static_cast<std::size_t>(i); }

  /// phi_i applied to [[a, b], [c, d]] (assumed unimodular).
  QMatrix phi(int i, const Rational& a, const Rational& b, const Rational& c,
              const Rational& d) const {
    if (!cartan().valid_node(i)) throw InvalidInput("node " + std::to_string(i) + " out of range");
    QMatrix x = QMatrix::identity(dim_);
    auto put = [&](std::size_t r, std::size_t s, const Rational& p, const Rational& q,
                   const Rational& u, const Rational& v) {
      x(r, r) = p;
      x(r, s) = q;
      x(s, r) = u;
      x(s, s) = v;
    };
    if (kind_ == GroupKind::special_linear) {
      put(i - 1, i, a, b, c, d);
    } else if (i == 1) {
      put(0, 1, a, b, c, d);
      put(2, 3, a, -b, -c, d);
    } else {
      put(1, 2, a, b, c, d);
    }
    return x;
  }

  /// Gram matrix of the invariant form for SP4; identity-free check helper.
  static QMatrix symplectic_form() {
    QMatrix j(4, 4);
    j(0, 3) = 1;
    j(1, 2) = 1;
    j(2, 1) = -1;
    j(3, 0) = -1;
    return j;
  }

  /// det = 1, and for SP4 the form is preserved.
  bool contains(const QMatrix& x) const {
    if (x.rows() != static_cast<std::size_t>(dim_) || !x.square()) return false;
    if (determinant(x) != 1) return false;
    if (kind_ == GroupKind::symplectic4) {
      const QMatrix j = symplectic_form();
      return x.transpose() * j * x == j;
    }
    return true;
  }

 private:
  GroupDescriptor(GroupKind kind, int dim, CartanMatrix a)
      : kind_(kind), dim_(dim), weyl_(std::move(a)) {}

  GroupKind kind_;
  int dim_;
  WeylGroup weyl_;
};

inline QMatrix x_gen(const GroupDescriptor& g, int i, const Rational& t) {
  return g.phi(i, 1, t, 0, 1);
}

inline QMatrix y_gen(const GroupDescriptor& g, int i, const Rational& t) {
  return g.phi(i, 1, 0, t, 1);
}

/// t^{alpha_i^vee}
inline QMatrix torus_gen(const GroupDescriptor& g, int i, const Rational& t) {
  if (t == 0) throw InvalidInput("torus parameter must be nonzero");
  return g.phi(i, t, 0, 0, Rational(1) / t);
}

/// x_{-i}(t) = y_i(t) t^{-alpha_i^vee} = phi_i [[1/t, 0], [1, t]]
inline QMatrix x_neg_gen(const GroupDescriptor& g, int i, const Rational& t) {
  if (t == 0) throw InvalidInput("x_{-i}(t) needs t != 0");
  return g.phi(i, Rational(1) / t, 0, 1, t);
}

/// x_i(t) for a positive letter, x_{-|i|}(t) for a negative one.
inline QMatrix letter_gen(const GroupDescriptor& g, int letter, const Rational& t) {
  return letter > 0 ? x_gen(g, letter, t) : x_neg_gen(g, -letter, t);
}

inline QMatrix sbar(const GroupDescriptor& g, int i) { return g.phi(i, 0, -1, 1, 0); }

/// Product of sbar over a reduced word.
inline QMatrix wbar_word(const GroupDescriptor& g, const Word& word) {
  if (!g.weyl().is_reduced(word))
    throw InvalidInput("wbar needs a reduced word, got (" + format_word(word) + ")");
  QMatrix x = QMatrix::identity(g.dim());
  for (int i : word) x = x * sbar(g, i);
  return x;
}

inline QMatrix wbar(const GroupDescriptor& g, const WeylElement& w) {
  return wbar_word(g, g.weyl().reduced_word(w));
}

/// Rebuilds the Cartan matrix from the embedding:
/// t^{alpha_i^vee} x_j(1) t^{-alpha_i^vee} = x_j(t^{a_ij}).
inline CartanMatrix computed_cartan(const GroupDescriptor& g) {
  const int r = g.rank();
  std::vector<std::vector<int>> a(r, std::vector<int>(r, 0));
  const Rational two(2);
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= r; ++j) {
      const QMatrix xj = x_gen(g, j, 1);
      const QMatrix conj = torus_gen(g, i, two) * xj * torus_gen(g, i, Rational(1, 2));
      Rational ratio = 0;
      for (std::size_t p = 0; p < xj.rows() && ratio == 0; ++p)
        for (std::size_t q = 0; q < xj.cols(); ++q)
          if (p != q && xj(p, q) != 0) {
            ratio = conj(p, q) / xj(p, q);
            break;
          }
      int e = -4;
      while (e <= 4 && pow(two, e) != ratio) ++e;
      if (e > 4) throw Error("embedding is not compatible with a Cartan matrix");
      a[i - 1][j - 1] = e;
    }
  return CartanMatrix(a);
}

/// x_{i_1}(t_1) ... x_{i_m}(t_m).
inline QMatrix product_map(const GroupDescriptor& g, const DoubleWord& d,
                           const std::vector<Rational>& t) {
  if (static_cast<int>(t.size()) != d.size())
    throw InvalidInput("product_map: " + std::to_string(t.size()) + " parameters for a word of length " +
                       std::to_string(d.size()));
  QMatrix x = QMatrix::identity(g.dim());
  for (int k = 1; k <= d.size(); ++k) x = x * letter_gen(g, d.letter(k), t[k - 1]);
  return x;
}

struct Gaussian {
  QMatrix lower;     // unit lower triangular
  QMatrix diagonal;  // torus part
  QMatrix upper;     // unit upper triangular
};

/// x = [x]_- [x]_0 [x]_+; throws Degenerate off G_0.
inline Gaussian gaussian_decompose(const QMatrix& x) {
  const std::size_t n = x.rows();
  QMatrix u = x;
  QMatrix l = QMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    if (u(c, c) == 0) throw Degenerate("point has no Gaussian decomposition");
    for (std::size_t r = c + 1; r < n; ++r) {
      if (u(r, c) == 0) continue;
      Rational f = u(r, c) / u(c, c);
      l(r, c) = f;
      for (std::size_t j = c; j < n; ++j) u(r, j) -= f * u(c, j);
    }
  }
  QMatrix d(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    d(i, i) = u(i, i);
    const Rational inv = Rational(1) / u(i, i);
    for (std::size_t j = i; j < n; ++j) u(i, j) *= inv;
  }
  return {std::move(l), std::move(d), std::move(u)};
}

inline QMatrix upper_part(const QMatrix& x) { return gaussian_decompose(x).upper; }

namespace detail {

inline QMatrix alternating_signs(std::size_t n) {
  QMatrix d = QMatrix::identity(n);
  for (std::size_t i = 1; i < n; i += 2) d(i, i) = -1;
  return d;
}

}  // namespace detail

/// phi_i[[a,b],[c,d]] -> phi_i[[d,b],[c,a]], extended as an antiautomorphism.
/// In both realizations this is x -> D x^{-1} D with D = diag(1,-1,1,-1,...).
inline QMatrix iota(const QMatrix& x) {
  const QMatrix d = detail::alternating_signs(x.rows());
  return d * inverse(x) * d;
}

/// phi_i[[a,b],[c,d]] -> phi_i[[a,c],[b,d]]: the matrix transpose.
inline QMatrix transpose_T(const QMatrix& x) { return x.transpose(); }

/// A signed permutation matrix stored by columns: column b is
/// sign[b] * e_{index[b]}.
struct SignedPerm {
  std::vector<std::size_t> index;
  std::vector<int> sign;

  static SignedPerm from_matrix(const QMatrix& w) {
    SignedPerm p;
    for (std::size_t b = 0; b < w.cols(); ++b) {
      std::size_t hits = 0;
      for (std::size_t a = 0; a < w.rows(); ++a) {
        if (w(a, b) == 0) continue;
        if (w(a, b) != 1 && w(a, b) != -1) throw Error("not a signed permutation matrix");
        p.index.push_back(a);
        p.sign.push_back(w(a, b) == 1 ? 1 : -1);
        ++hits;
      }
      if (hits != 1) throw Error("not a signed permutation matrix");
    }
    return p;
  }
};

/// Precompiled Delta_{u omega_i, v omega_i}: the leading i x i minor of
/// ubar^{-1} x vbar. Both Weyl representatives are signed permutations, so
/// the relevant entries are read off x directly.
class MinorSpec {
 public:
  MinorSpec(const GroupDescriptor& g, const WeylElement& u, int i, const WeylElement& v)
      : size_(g.minor_size(i)),
        left_(SignedPerm::from_matrix(wbar(g, u))),
        right_(SignedPerm::from_matrix(wbar(g, v))) {}

  std::size_t size() const { return size_; }

  Rational operator()(const QMatrix& x) const {
    QMatrix b(size_, size_);
    // (ubar^T x vbar)(a, c) = sign_u[a] sign_v[c] x(index_u[a], index_v[c])
    for (std::size_t a = 0; a < size_; ++a)
      for (std::size_t c = 0; c < size_; ++c) {
        const Rational& e = x(left_.index[a], right_.index[c]);
        b(a, c) = left_.sign[a] * right_.sign[c] > 0 ? e : Rational(-e);
      }
    return determinant(b);
  }

 private:
  std::size_t size_;
  SignedPerm left_;
  SignedPerm right_;
};

/// Polynomial route: determinant of the leading minor.
inline Rational generalized_minor(const GroupDescriptor& g, const QMatrix& x, const WeylElement& u,
                                  int i, const WeylElement& v) {
  return MinorSpec(g, u, i, v)(x);
}

/// Gaussian route: ([ubar^{-1} x vbar]_0)^{omega_i}; only defined on
/// ubar G_0 vbar^{-1}.
inline Rational generalized_minor_gaussian(const GroupDescriptor& g, const QMatrix& x,
                                           const WeylElement& u, int i, const WeylElement& v) {
  const Gaussian f = gaussian_decompose(inverse(wbar(g, u)) * x * wbar(g, v));
  Rational p(1);
  for (std::size_t a = 0; a < g.minor_size(i); ++a) p *= f.diagonal(a, a);
  return p;
}

/// x lies in L^{u,v} (given x in G^{u,v}) iff Delta_{u omega_i, omega_i}(x) = 1
/// for every i.
inline bool membership_L(const GroupDescriptor& g, const QMatrix& x, const WeylElement& u,
                         const WeylElement& v) {
  (void)v;
  const WeylElement e = g.weyl().identity();
  for (int i = 1; i <= g.rank(); ++i)
    if (generalized_minor(g, x, u, i, e) != 1) return false;
  return true;
}

/// Generic random point: lower unipotent * torus * upper unipotent * lower
/// unipotent, each unipotent factor a product over a reduced word of w0 with
/// random nonzero parameters.
template <class Rng>
QMatrix random_point(const GroupDescriptor& g, Rng& rng, const SampleRanges& r = {}) {
  const Word w0 = g.weyl().reduced_word(g.weyl().longest_element());
  QMatrix x = QMatrix::identity(g.dim());
  for (int i : w0) x = x * y_gen(g, i, random_nonzero(rng, r));
  for (int i = 1; i <= g.rank(); ++i) x = x * torus_gen(g, i, random_nonzero(rng, r));
  for (int i : w0) x = x * x_gen(g, i, random_nonzero(rng, r));
  for (auto it = w0.rbegin(); it != w0.rend(); ++it) x = x * y_gen(g, *it, random_nonzero(rng, r));
  return x;
}

}  // namespace bruhat
