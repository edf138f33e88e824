#pragma once

// Chamber functions M_k on reduced double Bruhat cells, evaluated exactly in
// a matrix realization, plus the determinantal identities checked against
// them.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bruhat/group.hpp"
#include "bruhat/orbits.hpp"
#include "bruhat/sigma.hpp"

namespace bruhat {

/// psi^{u,v}(x) = [(vbar x^iota)^{-1}]_+ vbar ([ubar^{-1} x]_+)^iota.
/// Throws Degenerate when either Gaussian factor does not exist.
inline QMatrix twist_psi(const GroupDescriptor& g, const QMatrix& x, const WeylElement& u,
                         const WeylElement& v) {
  const QMatrix ub = wbar(g, u);
  const QMatrix vb = wbar(g, v);
  const QMatrix left = upper_part(inverse(vb * iota(x)));
  const QMatrix right = iota(upper_part(inverse(ub) * x));
  return left * vb * right;
}

/// Exponents of the monomial map t -> M: M_k = prod_l t_l^{E(k,l)}.
/// E(k,l) = -eps(i_l) <v_{<l}^{-1} v_{<k} omega_{|i_k|}, alpha_{|i_l|}^vee> for l >= k.
inline Matrix<int> M_exponents(const WeylGroup& w, const DoubleWord& d) {
  const int m = d.size();
  const int r = w.rank();
  Matrix<int> e(m, m);
  for (int k = 1; k <= m; ++k) {
    std::vector<int> lambda(r, 0);
    lambda[d.node(k) - 1] = 1;
    for (int l = k; l <= m; ++l) {
      e(k - 1, l - 1) = -d.sign(l) * lambda[d.node(l) - 1];
      if (d.sign(l) > 0) w.reflect_weight(d.node(l), lambda);
    }
  }
  return e;
}

/// Exponents of the inverse map M -> t: t_k = prod_l M_l^{T(k,l)}, with the
/// convention M_{m+1} = 1.
inline Matrix<int> t_exponents(const CartanMatrix& a, const DoubleWord& d) {
  const int m = d.size();
  Matrix<int> t(m, m);
  for (int k = 1; k <= m; ++k) {
    const int kp = d.k_plus(k);
    if (d.sign(k) < 0) {
      t(k - 1, k - 1) += 1;
      if (kp <= m) t(k - 1, kp - 1) -= 1;
      continue;
    }
    t(k - 1, k - 1) -= 1;
    if (kp <= m) t(k - 1, kp - 1) -= 1;
    for (int l = k + 1; l <= m; ++l)
      if (d.l_minus(l) < k) t(k - 1, l - 1) -= a(d.node(l), d.node(k));
  }
  return t;
}

namespace detail {

inline std::vector<Rational> apply_monomial(const Matrix<int>& e, const std::vector<Rational>& x,
                                            const char* what) {
  for (const auto& q : x)
    if (q == 0) throw InvalidInput(std::string(what) + ": coordinates must be nonzero");
  if (x.size() != e.cols()) throw InvalidInput(std::string(what) + ": wrong number of coordinates");
  std::vector<Rational> out(e.rows(), Rational(1));
  for (std::size_t k = 0; k < e.rows(); ++k)
    for (std::size_t l = 0; l < e.cols(); ++l)
      if (e(k, l)) out[k] *= pow(x[l], e(k, l));
  return out;
}

}  // namespace detail

inline std::vector<Rational> t_from_M(const CartanMatrix& a, const DoubleWord& d,
                                      const std::vector<Rational>& M) {
  return detail::apply_monomial(t_exponents(a, d), M, "t_from_M");
}

inline std::vector<Rational> M_from_t(const WeylGroup& w, const DoubleWord& d,
                                      const std::vector<Rational>& t) {
  return detail::apply_monomial(M_exponents(w, d), t, "M_from_t");
}

/// The two monomials of the exchange relation M'_n M_n = P_in + P_out.
struct ExchangeTerms {
  Rational in = 1;   // prod over (k -> n) of M_k^{C_kn}
  Rational out = 1;  // prod over (n -> l) of M_l^{C_ln}
};

inline ExchangeTerms exchange_terms(const SigmaGraph& s, const CoeffMatrix& c,
                                    const std::vector<Rational>& M, int n) {
  ExchangeTerms t;
  for (const auto& e : s.in_edges(n)) t.in *= pow(M[e.from - 1], c(e.from, n));
  for (const auto& e : s.out_edges(n)) t.out *= pow(M[e.to - 1], c(e.to, n));
  return t;
}

/// M'_n from chamber values; throws Degenerate if M_n = 0.
inline Rational m_prime_from_M(const SigmaGraph& s, const CoeffMatrix& c,
                               const std::vector<Rational>& M, int n) {
  if (M[n - 1] == 0) throw Degenerate("M_" + std::to_string(n) + " vanishes");
  const ExchangeTerms t = exchange_terms(s, c, M, n);
  return (t.in + t.out) / M[n - 1];
}

/// Chamber functions for a fixed realization and double reduced word.
class ChamberMap {
 public:
  ChamberMap(GroupDescriptor g, DoubleWord d)
      : g_(std::move(g)),
        d_(std::move(d)),
        uv_(validate_double_reduced(g_.weyl(), d_)),
        sigma_(build_sigma(g_.cartan(), d_)),
        coeff_(g_.cartan(), d_),
        t_exp_(t_exponents(g_.cartan(), d_)),
        M_exp_(M_exponents(g_.weyl(), d_)) {
    for (int k = 1; k <= d_.size(); ++k) {
      const DoublePair p = prefix_suffix(g_.weyl(), d_, k);  // (u_{>=k}, v_{<k})
      specs_.emplace_back(g_, p.v, d_.node(k), p.u);
    }
  }

  const GroupDescriptor& group() const { return g_; }
  const DoubleWord& word() const { return d_; }
  const WeylElement& u() const { return uv_.u; }
  const WeylElement& v() const { return uv_.v; }
  int m() const { return d_.size(); }
  const SigmaGraph& sigma() const { return sigma_; }
  const CoeffMatrix& coefficients() const { return coeff_; }

  QMatrix twist(const QMatrix& x) const { return twist_psi(g_, x, uv_.u, uv_.v); }

  /// (M_1(x), ..., M_m(x)).
  std::vector<Rational> minors(const QMatrix& x) const {
    const QMatrix y = twist(x);
    std::vector<Rational> out;
    out.reserve(specs_.size());
    for (const auto& s : specs_) out.push_back(s(y));
    return out;
  }

  /// M_k(x) for k in [1, m+1].
  Rational minor(const QMatrix& x, int k) const {
    if (k == m() + 1) return 1;
    if (k < 1 || k > m()) throw InvalidInput("chamber index out of range");
    return specs_[k - 1](twist(x));
  }

  std::vector<Rational> t_from_M(const std::vector<Rational>& M) const {
    return detail::apply_monomial(t_exp_, M, "t_from_M");
  }
  std::vector<Rational> M_from_t(const std::vector<Rational>& t) const {
    return detail::apply_monomial(M_exp_, t, "M_from_t");
  }

  /// The unique point of L^{u,v} with the given chamber values.
  QMatrix point(const std::vector<Rational>& M) const {
    return product_map(g_, d_, t_from_M(M));
  }

  Rational m_prime(const std::vector<Rational>& M, int n) const {
    check_bounded(n);
    return m_prime_from_M(sigma_, coeff_, M, n);
  }

  Rational m_prime(const QMatrix& x, int n) const { return m_prime(minors(x), n); }

  ExchangeTerms exchange(const std::vector<Rational>& M, int n) const {
    check_bounded(n);
    return exchange_terms(sigma_, coeff_, M, n);
  }

  /// Chart coordinates with position n holding M'_n -> chamber values.
  /// Throws Degenerate when the point lies off U_i (M_n would vanish).
  std::vector<Rational> solve_chart(std::vector<Rational> chart, int n) const {
    check_bounded(n);
    const Rational mp = chart[n - 1];
    if (mp == 0) throw InvalidInput("chart coordinate M'_n must be nonzero");
    const ExchangeTerms t = exchange_terms(sigma_, coeff_, chart, n);
    if (t.in + t.out == 0) throw Degenerate("chart point lies off the torus chart U_i");
    chart[n - 1] = (t.in + t.out) / mp;
    return chart;
  }

 private:
  void check_bounded(int n) const {
    if (n < 1 || n > m() || !d_.bounded(n))
      throw InvalidInput("index " + std::to_string(n) + " is not i-bounded");
  }

  GroupDescriptor g_;
  DoubleWord d_;
  DoublePair uv_;
  SigmaGraph sigma_;
  CoeffMatrix coeff_;
  Matrix<int> t_exp_;
  Matrix<int> M_exp_;
  std::vector<MinorSpec> specs_;
};

/// Sign vector: bit k-1 set iff M_k < 0.
inline SignMask sign_mask(const std::vector<Rational>& M) {
  SignMask xi = 0;
  for (std::size_t k = 0; k < M.size(); ++k)
    if (sgn(M[k]) < 0) xi |= SignMask{1} << k;
  return xi;
}

// ---------------------------------------------------------------------------
// Dodgson-type identity

enum class DodgsonForm {
  consistent,  // right side Delta_{v' omega_j, u' omega_j}
  swapped,  // right side Delta_{u' omega_j, v' omega_j}
};

struct DodgsonTerms {
  Rational lhs;
  Rational rhs;
  bool holds() const { return lhs == rhs; }
};

/// Requires l(u' s_i) = l(u') + 1 and l(v' s_i) = l(v') + 1.
inline DodgsonTerms dodgson_terms(const GroupDescriptor& g, const QMatrix& x,
                                  const WeylElement& up, const WeylElement& vp, int i,
                                  DodgsonForm form = DodgsonForm::consistent) {
  const WeylGroup& w = g.weyl();
  if (w.right_descent(up, i) || w.right_descent(vp, i))
    throw InvalidInput("Dodgson identity needs l(u's_i) = l(u')+1 and l(v's_i) = l(v')+1");
  const WeylElement ups = up * w.reflection(i);
  const WeylElement vps = vp * w.reflection(i);
  auto D = [&](const WeylElement& a, int node, const WeylElement& b) {
    return generalized_minor(g, x, a, node, b);
  };
  DodgsonTerms t;
  t.lhs = D(vp, i, up) * D(vps, i, ups) - D(vps, i, up) * D(vp, i, ups);
  t.rhs = 1;
  for (int j = 1; j <= g.rank(); ++j) {
    if (j == i || g.cartan()(j, i) == 0) continue;
    const Rational f = form == DodgsonForm::consistent ? D(vp, j, up) : D(up, j, vp);
    t.rhs *= pow(f, -g.cartan()(j, i));
  }
  return t;
}

inline bool dodgson_check(const GroupDescriptor& g, const QMatrix& x, const WeylElement& up,
                          const WeylElement& vp, int i,
                          DodgsonForm form = DodgsonForm::consistent) {
  return dodgson_terms(g, x, up, vp, i, form).holds();
}

struct DodgsonConfig {
  WeylElement up;
  WeylElement vp;
  int i = 0;
};

/// Every (u', v', i) with s_i a right ascent of both u' and v'.
inline std::vector<DodgsonConfig> dodgson_configs(const WeylGroup& w) {
  std::vector<WeylElement> all{w.identity()};
  for (std::size_t p = 0; p < all.size(); ++p)
    for (int i = 1; i <= w.rank(); ++i) {
      WeylElement y = all[p] * w.reflection(i);
      if (std::find(all.begin(), all.end(), y) == all.end()) all.push_back(std::move(y));
    }
  std::vector<DodgsonConfig> out;
  for (int i = 1; i <= w.rank(); ++i)
    for (const auto& a : all) {
      if (w.right_descent(a, i)) continue;
      for (const auto& b : all)
        if (!w.right_descent(b, i)) out.push_back({a, b, i});
    }
  return out;
}

// ---------------------------------------------------------------------------
// Non-mixed closed forms for Delta'

struct NonmixedResult {
  Rational delta_prime;
  Rational lhs;  // Delta' times the divisor minor
  Rational rhs;
  bool holds() const { return lhs == rhs; }
};

/// Case 1 data: i_1 = i_m = i, v = s_i w s_i, S+ = support of w.
struct NonmixedCase1 {
  int i = 0;
  WeylElement v;
  std::vector<int> s_plus;
};

/// Case 2 (i_1 = i, i_m = -i): Delta' = Delta_{omega_i, omega_i}, checked
/// against Delta' Delta_{s_i w_i, s_i w_i} = Delta_{w_i, s_i w_i} Delta_{s_i w_i, w_i}
/// + prod_{j != i} Delta_{w_j, w_j}^{-a_ji}.
inline NonmixedResult nonmixed_case2(const GroupDescriptor& g, const QMatrix& x, int i) {
  const WeylGroup& w = g.weyl();
  const WeylElement e = w.identity();
  const WeylElement& si = w.reflection(i);
  auto D = [&](const WeylElement& a, int node, const WeylElement& b) {
    return generalized_minor(g, x, a, node, b);
  };
  const Rational divisor = D(si, i, si);
  if (divisor == 0) throw Degenerate("Delta_{s_i omega_i, s_i omega_i} vanishes");
  NonmixedResult r;
  r.delta_prime = D(e, i, e);
  r.lhs = r.delta_prime * divisor;
  Rational prod = 1;
  for (int j = 1; j <= g.rank(); ++j)
    if (j != i && g.cartan()(j, i) != 0) prod *= pow(D(e, j, e), -g.cartan()(j, i));
  r.rhs = D(e, i, si) * D(si, i, e) + prod;
  return r;
}

/// Case 1 closed form:
///   Delta' = (D_{w_i,w_i} D_{v w_i, s_i w_i} - D_{v w_i, w_i} D_{w_i, s_i w_i})
///            / prod_{j not in {i} + S+} D_{w_j, w_j}^{-a_ji}
/// checked against
///   Delta' D_{s_i w_i, w_i} = D_{w_i,w_i} prod_{j in S+} D_{v w_j, w_j}^{-a_ji}
///                           + D_{v w_i, w_i} prod_{j in S+} D_{w_j, w_j}^{-a_ji}.
inline NonmixedResult nonmixed_case1(const GroupDescriptor& g, const QMatrix& x,
                                     const NonmixedCase1& c) {
  const WeylGroup& w = g.weyl();
  const CartanMatrix& a = g.cartan();
  const WeylElement e = w.identity();
  const WeylElement& si = w.reflection(c.i);
  auto D = [&](const WeylElement& p, int node, const WeylElement& q) {
    return generalized_minor(g, x, p, node, q);
  };
  auto in_s_plus = [&](int j) {
    return std::find(c.s_plus.begin(), c.s_plus.end(), j) != c.s_plus.end();
  };
  Rational denom = 1;
  for (int j = 1; j <= g.rank(); ++j)
    if (j != c.i && !in_s_plus(j) && a(j, c.i) != 0) denom *= pow(D(e, j, e), -a(j, c.i));
  const Rational divisor = D(si, c.i, e);
  if (denom == 0 || divisor == 0) throw Degenerate("vanishing denominator minor");
  NonmixedResult r;
  r.delta_prime = (D(e, c.i, e) * D(c.v, c.i, si) - D(c.v, c.i, e) * D(e, c.i, si)) / denom;
  r.lhs = r.delta_prime * divisor;
  Rational p1 = 1, p2 = 1;
  for (int j : c.s_plus) {
    p1 *= pow(D(c.v, j, e), -a(j, c.i));
    p2 *= pow(D(e, j, e), -a(j, c.i));
  }
  r.rhs = D(e, c.i, e) * p1 + D(c.v, c.i, e) * p2;
  return r;
}

/// All Case 1 configurations: w a non-identity element of the parabolic
/// subgroup avoiding i such that s_i w s_i has length l(w) + 2.
inline std::vector<NonmixedCase1> nonmixed_case1_configs(const WeylGroup& w) {
  std::vector<NonmixedCase1> out;
  for (int i = 1; i <= w.rank(); ++i) {
    std::vector<WeylElement> para{w.identity()};
    for (std::size_t p = 0; p < para.size(); ++p)
      for (int j = 1; j <= w.rank(); ++j) {
        if (j == i) continue;
        WeylElement y = para[p] * w.reflection(j);
        if (std::find(para.begin(), para.end(), y) == para.end()) para.push_back(std::move(y));
      }
    for (const auto& x : para) {
      if (x.is_identity()) continue;
      const WeylElement v = w.reflection(i) * x * w.reflection(i);
      if (w.length(v) != w.length(x) + 2) continue;
      NonmixedCase1 c;
      c.i = i;
      c.v = v;
      for (int j : w.reduced_word(x))
        if (std::find(c.s_plus.begin(), c.s_plus.end(), j) == c.s_plus.end()) c.s_plus.push_back(j);
      std::sort(c.s_plus.begin(), c.s_plus.end());
      out.push_back(std::move(c));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Cone of regular t-monomials

/// Inequality form: -eps(i_n) a_n - a_{n^-} + sum_{n^- < k < n, eps(i_k) = 1}
/// C_nk a_k >= 0 for every bounded n.
inline bool cone_membership(const CartanMatrix& a, const DoubleWord& d, const std::vector<long long>& x) {
  if (static_cast<int>(x.size()) != d.size()) throw InvalidInput("cone: wrong exponent count");
  const CoeffMatrix c(a, d);
  for (int n : d.bounded_indices()) {
    const int nm = d.l_minus(n);
    long long s = -d.sign(n) * x[n - 1] - x[nm - 1];
    for (int k = nm + 1; k < n; ++k)
      if (d.sign(k) > 0) s += c(n, k) * x[k - 1];
    if (s < 0) return false;
  }
  return true;
}

/// Independent route: rewrite t^a as a monomial in the M_k via the
/// factorization formulas and require nonnegative exponents at bounded k.
inline bool cone_membership_via_M(const CartanMatrix& a, const DoubleWord& d,
                                  const std::vector<long long>& x) {
  const Matrix<int> t = t_exponents(a, d);
  for (int n : d.bounded_indices()) {
    long long e = 0;
    for (int k = 1; k <= d.size(); ++k) e += x[k - 1] * t(k - 1, n - 1);
    if (e < 0) return false;
  }
  return true;
}

/// v = e: a_n >= a_{n^-}.
inline bool cone_membership_v_trivial(const DoubleWord& d, const std::vector<long long>& x) {
  for (int n : d.bounded_indices())
    if (x[n - 1] < x[d.l_minus(n) - 1]) return false;
  return true;
}

/// u = e: -a_n - a_{n^-} + sum_{n^- < k < n} C_nk a_k >= 0.
inline bool cone_membership_u_trivial(const CartanMatrix& a, const DoubleWord& d,
                                      const std::vector<long long>& x) {
  const CoeffMatrix c(a, d);
  for (int n : d.bounded_indices()) {
    const int nm = d.l_minus(n);
    long long s = -x[n - 1] - x[nm - 1];
    for (int k = nm + 1; k < n; ++k) s += c(n, k) * x[k - 1];
    if (s < 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Type B2 hexagon identities (symplectic realization, i = node 1, j = node 2)

struct HexagonIdentity {
  std::string name;
  Rational lhs;
  Rational rhs;
  bool holds() const { return lhs == rhs; }
};

struct HexagonReport {
  std::map<std::string, Rational> plucker;  // the 8 coordinates
  Rational q_omega_j;
  Rational q_2omega_i;
  std::vector<HexagonIdentity> identities;  // all 9
  bool all_hold() const {
    return std::all_of(identities.begin(), identities.end(),
                       [](const HexagonIdentity& h) { return h.holds(); });
  }
};

inline HexagonReport hexagon_verify(const GroupDescriptor& g, const QMatrix& x) {
  if (g.kind() != GroupKind::symplectic4) throw InvalidInput("hexagon identities need the SP4 realization");
  const WeylGroup& w = g.weyl();
  const int i = 1, j = 2;
  auto el = [&](const Word& word) { return w.element(word); };
  const WeylElement e = w.identity();
  auto P = [&](const Word& word, int node) { return generalized_minor(g, x, el(word), node, e); };

  const Rational p_wi = P({}, i), p_wj = P({}, j);
  const Rational p_si = P({i}, i), p_sj = P({j}, j);
  const Rational p_sjsi = P({j, i}, i), p_sisj = P({i, j}, j);
  const Rational p_w0i = generalized_minor(g, x, w.longest_element(), i, e);
  const Rational p_w0j = generalized_minor(g, x, w.longest_element(), j, e);
  if (p_si == 0 || p_sj == 0) throw Degenerate("hexagon: vanishing denominator coordinate");

  HexagonReport r;
  r.plucker = {{"omega_i", p_wi},        {"omega_j", p_wj},        {"s_i omega_i", p_si},
               {"s_j omega_j", p_sj},    {"s_j s_i omega_i", p_sjsi}, {"s_i s_j omega_j", p_sisj},
               {"w0 omega_i", p_w0i},    {"w0 omega_j", p_w0j}};
  const Rational qj = (p_sisj * p_wi + p_wj * p_w0i) / p_si;
  const Rational qi = (p_sjsi * p_sjsi * p_wj + p_wi * p_wi * p_w0j) / p_sj;
  r.q_omega_j = qj;
  r.q_2omega_i = qi;
  auto add = [&](std::string name, Rational lhs, Rational rhs) {
    r.identities.push_back({std::move(name), std::move(lhs), std::move(rhs)});
  };
  add("Q_wj P_si_wi", qj * p_si, p_sisj * p_wi + p_wj * p_w0i);
  add("Q_2wi P_sj_wj", qi * p_sj, p_sjsi * p_sjsi * p_wj + p_wi * p_wi * p_w0j);
  add("Q_wj P_sjsi_wi", qj * p_sjsi, p_w0j * p_wi + p_sj * p_w0i);
  add("Q_2wi P_sisj_wj", qi * p_sisj, p_w0i * p_w0i * p_wj + p_si * p_si * p_w0j);
  add("P_si_wi P_sjsi_wi", p_si * p_sjsi, p_wi * p_w0i + qi);
  add("P_sj_wj P_sisj_wj", p_sj * p_sisj, p_wj * p_w0j + qj * qj);
  add("P_si_wi P_sj_wj", p_si * p_sj, p_sjsi * p_wj + p_wi * qj);
  add("P_sjsi_wi P_sisj_wj", p_sjsi * p_sisj, p_si * p_w0j + p_w0i * qj);
  add("Q_2wi Q_wj", qi * qj, p_sjsi * p_w0i * p_wj + p_si * p_wi * p_w0j);
  return r;
}

}  // namespace bruhat
