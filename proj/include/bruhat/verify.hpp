#pragma once

// Randomized exact-arithmetic trial runners. Trial j draws everything from a
// generator seeded with trial_seed(base, j), so a failure is replayed by its
// seed alone.

#include <cstdint>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bruhat/minors.hpp"

namespace bruhat {

struct Failure {
  std::uint64_t seed = 0;
  std::string detail;
};

struct VerifyReport {
  std::string check;
  std::string group;
  std::vector<std::pair<std::string, std::string>> params;
  int trials = 0;
  std::size_t evaluations = 0;  // identity instances checked
  std::size_t failure_count = 0;
  std::vector<Failure> failures;  // first max_recorded failures

  bool ok() const { return failure_count == 0; }
};

struct VerifyOptions {
  int trials = 25;
  std::uint64_t seed = 1;
  SampleRanges ranges{};
  int max_resamples = 64;
  std::size_t max_recorded = 20;
  DodgsonForm dodgson_form = DodgsonForm::consistent;
};

namespace detail {

inline void fail(VerifyReport& r, const VerifyOptions& opt, std::uint64_t seed, std::string detail) {
  ++r.failure_count;
  if (r.failures.size() < opt.max_recorded) r.failures.push_back({seed, std::move(detail)});
}

inline std::string join(const std::vector<Rational>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + v[k].get_str();
  return s;
}

inline std::string element_str(const WeylGroup& w, const WeylElement& x) {
  const Word word = w.reduced_word(x);
  if (word.empty()) return "e";
  std::string s;
  for (int i : word) s += "s" + std::to_string(i);
  return s;
}

/// Runs body(rng) until it does not throw Degenerate; false if every
/// attempt degenerated.
template <class Body>
bool with_resampling(std::mt19937_64& rng, int attempts, Body&& body) {
  for (int a = 0; a < attempts; ++a) {
    try {
      body(rng);
      return true;
    } catch (const Degenerate&) {
    }
  }
  return false;
}

inline VerifyReport start(std::string check, const GroupDescriptor& g, const VerifyOptions& opt) {
  VerifyReport r;
  r.check = std::move(check);
  r.group = g.name();
  r.trials = opt.trials;
  r.params.emplace_back("seed", std::to_string(opt.seed));
  return r;
}

}  // namespace detail

/// Factorization round trip: random chamber values M -> t -> x must land in
/// L^{u,v} and reproduce M through the twist.
inline VerifyReport verify_roundtrip(const GroupDescriptor& g, const DoubleWord& d,
                                     const VerifyOptions& opt = {}) {
  VerifyReport r = detail::start("roundtrip", g, opt);
  r.params.emplace_back("word", d.str());
  const ChamberMap cm(g, d);
  for (int j = 0; j < opt.trials; ++j) {
    const std::uint64_t seed = trial_seed(opt.seed, static_cast<std::uint64_t>(j));
    std::mt19937_64 rng(seed);
    const bool done = detail::with_resampling(rng, opt.max_resamples, [&](std::mt19937_64& gen) {
      const auto M = random_nonzero_vector(gen, static_cast<std::size_t>(cm.m()), opt.ranges);
      const auto t = cm.t_from_M(M);
      const QMatrix x = product_map(g, d, t);
      ++r.evaluations;
      if (cm.M_from_t(t) != M) return detail::fail(r, opt, seed, "M_from_t(t_from_M(M)) != M at M=" + detail::join(M));
      if (!g.contains(x)) return detail::fail(r, opt, seed, "product_map left the group");
      if (!membership_L(g, x, cm.u(), cm.v()))
        return detail::fail(r, opt, seed, "point not in L^{u,v} for M=" + detail::join(M));
      const auto back = cm.minors(x);
      if (back != M)
        detail::fail(r, opt, seed, "M=" + detail::join(M) + " recomputed as " + detail::join(back));
    });
    if (!done) detail::fail(r, opt, seed, "every resample was degenerate");
  }
  return r;
}

/// One step of the sign-flip family at bounded n: vary one neighbour of n in
/// the chart with M'_n fixed until the two exchange monomials cancel. Returns
/// an empty string on success, else a failure description. Throws Degenerate
/// if the sampled chart point admits no crossing.
template <class Rng>
std::string sign_flip_step(const ChamberMap& cm, int n, Rng& rng, const SampleRanges& ranges) {
  const auto& s = cm.sigma();
  const auto& c = cm.coefficients();
  struct Neighbour {
    int vertex;
    int exponent;
    bool incoming;
  };
  std::vector<Neighbour> nbrs;
  for (const auto& e : s.in_edges(n)) nbrs.push_back({e.from, c(e.from, n), true});
  for (const auto& e : s.out_edges(n)) nbrs.push_back({e.to, c(e.to, n), false});
  if (nbrs.empty()) return {};  // M'_n M_n = 2: M_n never changes sign

  auto chart = random_nonzero_vector(rng, static_cast<std::size_t>(cm.m()), ranges);
  std::uniform_int_distribution<std::size_t> pick(0, nbrs.size() - 1);
  const Neighbour nb = nbrs[pick(rng)];
  const int k = nb.vertex, exponent = nb.exponent;
  const bool k_in = nb.incoming;

  // Split the exchange sum as M_k^exponent * R + S.
  chart[k - 1] = 1;
  const ExchangeTerms base = cm.exchange(chart, n);
  const Rational R = k_in ? base.in : base.out;
  const Rational S = k_in ? base.out : base.in;
  int sk = 1;
  if (exponent % 2) sk = -sgn(R) * sgn(S);
  else if (sgn(R) == sgn(S)) throw Degenerate("no sign change along this family");

  auto value_at = [&](const Rational& mk) {
    chart[k - 1] = mk;
    const auto M = cm.solve_chart(chart, n);
    const QMatrix x = cm.point(M);
    return std::pair(cm.minors(x), cm.m_prime(x, n));
  };
  const Rational absS = abs(S), absR = abs(R);
  Rational small(sk), large(sk);
  while (absR * abs(pow(small, exponent)) * 2 >= absS) small /= 2;
  while (absR * abs(pow(large, exponent)) <= absS * 2) large *= 2;

  const Rational mp = chart[n - 1];
  const auto [M_lo, mp_lo] = value_at(small);
  const auto [M_hi, mp_hi] = value_at(large);
  std::ostringstream os;
  if (mp_lo != mp || mp_hi != mp) os << "M'_" << n << " not constant along the family; ";
  if (sgn(M_lo[n - 1]) == sgn(M_hi[n - 1])) os << "M_" << n << " kept its sign; ";
  for (int l = 1; l <= cm.m(); ++l)
    if (l != n && sgn(M_lo[l - 1]) != sgn(M_hi[l - 1])) os << "M_" << l << " changed sign; ";
  const SignMask lo = sign_mask(M_lo), hi = sign_mask(M_hi);
  bool adjacent = false;
  for (const auto& t : transvections_f2(cm.group().cartan(), cm.word()))
    if (t.target == n && apply_f2(t, lo) == hi) adjacent = true;
  if (!adjacent)
    os << "sign vectors " << to_bitstring(lo, cm.m()) << " and " << to_bitstring(hi, cm.m())
       << " are not related by tau_" << n << "; ";
  return os.str();
}

/// Chart round trip for every bounded n: (M_1..M'_n..M_m) -> x -> all values
/// recomputed, plus the sign-flip family across M_n = 0.
inline VerifyReport verify_mprime(const GroupDescriptor& g, const DoubleWord& d,
                                  const VerifyOptions& opt = {}) {
  VerifyReport r = detail::start("mprime", g, opt);
  r.params.emplace_back("word", d.str());
  const ChamberMap cm(g, d);
  const auto bounded = d.bounded_indices();
  for (int j = 0; j < opt.trials; ++j) {
    const std::uint64_t seed = trial_seed(opt.seed, static_cast<std::uint64_t>(j));
    std::mt19937_64 rng(seed);
    for (int n : bounded) {
      const bool chart_ok = detail::with_resampling(rng, opt.max_resamples, [&](std::mt19937_64& gen) {
        const auto chart = random_nonzero_vector(gen, static_cast<std::size_t>(cm.m()), opt.ranges);
        const auto M = cm.solve_chart(chart, n);
        const QMatrix x = cm.point(M);
        ++r.evaluations;
        if (!membership_L(g, x, cm.u(), cm.v()))
          return detail::fail(r, opt, seed, "n=" + std::to_string(n) + ": point not in L^{u,v}");
        auto back = cm.minors(x);
        const Rational mp = cm.m_prime(back, n);
        back[n - 1] = mp;
        if (back != chart)
          detail::fail(r, opt, seed,
                       "n=" + std::to_string(n) + ": chart " + detail::join(chart) + " recomputed as " +
                           detail::join(back));
      });
      if (!chart_ok) detail::fail(r, opt, seed, "n=" + std::to_string(n) + ": chart resampling exhausted");
      const bool flip_ok = detail::with_resampling(rng, opt.max_resamples, [&](std::mt19937_64& gen) {
        const std::string msg = sign_flip_step(cm, n, gen, opt.ranges);
        ++r.evaluations;
        if (!msg.empty()) detail::fail(r, opt, seed, "sign flip at n=" + std::to_string(n) + ": " + msg);
      });
      if (!flip_ok) detail::fail(r, opt, seed, "n=" + std::to_string(n) + ": sign-flip resampling exhausted");
    }
  }
  return r;
}

/// The Dodgson-type identity at every admissible (u', v', i), on the same
/// random point per trial.
inline VerifyReport verify_dodgson(const GroupDescriptor& g, const VerifyOptions& opt = {}) {
  VerifyReport r = detail::start("dodgson", g, opt);
  r.params.emplace_back("form", opt.dodgson_form == DodgsonForm::consistent ? "consistent" : "swapped");
  const auto configs = dodgson_configs(g.weyl());
  r.params.emplace_back("configurations", std::to_string(configs.size()));
  for (int j = 0; j < opt.trials; ++j) {
    const std::uint64_t seed = trial_seed(opt.seed, static_cast<std::uint64_t>(j));
    std::mt19937_64 rng(seed);
    const QMatrix x = random_point(g, rng, opt.ranges);
    for (const auto& c : configs) {
      ++r.evaluations;
      const DodgsonTerms t = dodgson_terms(g, x, c.up, c.vp, c.i, opt.dodgson_form);
      if (!t.holds())
        detail::fail(r, opt, seed,
                     "u'=" + detail::element_str(g.weyl(), c.up) + " v'=" +
                         detail::element_str(g.weyl(), c.vp) + " i=" + std::to_string(c.i) +
                         ": lhs " + t.lhs.get_str() + " != rhs " + t.rhs.get_str());
    }
  }
  return r;
}

/// Case 2 closed form for every node and Case 1 for every configuration.
inline VerifyReport verify_nonmixed(const GroupDescriptor& g, const VerifyOptions& opt = {}) {
  VerifyReport r = detail::start("nonmixed", g, opt);
  const auto case1 = nonmixed_case1_configs(g.weyl());
  r.params.emplace_back("case1_configurations", std::to_string(case1.size()));
  for (int j = 0; j < opt.trials; ++j) {
    const std::uint64_t seed = trial_seed(opt.seed, static_cast<std::uint64_t>(j));
    std::mt19937_64 rng(seed);
    const bool done = detail::with_resampling(rng, opt.max_resamples, [&](std::mt19937_64& gen) {
      const QMatrix x = random_point(g, gen, opt.ranges);
      std::vector<std::pair<std::string, NonmixedResult>> results;
      for (int i = 1; i <= g.rank(); ++i)
        results.emplace_back("case 2, i=" + std::to_string(i), nonmixed_case2(g, x, i));
      for (const auto& c : case1)
        results.emplace_back("case 1, i=" + std::to_string(c.i) + " v=" + detail::element_str(g.weyl(), c.v),
                             nonmixed_case1(g, x, c));
      for (const auto& [name, res] : results) {
        ++r.evaluations;
        if (!res.holds())
          detail::fail(r, opt, seed, name + ": lhs " + res.lhs.get_str() + " != rhs " + res.rhs.get_str());
      }
    });
    if (!done) detail::fail(r, opt, seed, "every resample was degenerate");
  }
  return r;
}

inline VerifyReport verify_hexagon(const GroupDescriptor& g, const VerifyOptions& opt = {}) {
  VerifyReport r = detail::start("hexagon", g, opt);
  for (int j = 0; j < opt.trials; ++j) {
    const std::uint64_t seed = trial_seed(opt.seed, static_cast<std::uint64_t>(j));
    std::mt19937_64 rng(seed);
    const bool done = detail::with_resampling(rng, opt.max_resamples, [&](std::mt19937_64& gen) {
      const HexagonReport h = hexagon_verify(g, random_point(g, gen, opt.ranges));
      for (const auto& id : h.identities) {
        ++r.evaluations;
        if (!id.holds())
          detail::fail(r, opt, seed, id.name + ": lhs " + id.lhs.get_str() + " != rhs " + id.rhs.get_str());
      }
    });
    if (!done) detail::fail(r, opt, seed, "every resample was degenerate");
  }
  return r;
}

/// Cone of regular t-monomials: inequality form against the M-exponent route,
/// and against the reduced forms when u = e or v = e. Needs only Cartan data.
inline VerifyReport verify_cone(const CartanMatrix& a, const DoubleWord& d, const VerifyOptions& opt = {}) {
  VerifyReport r;
  r.check = "cone";
  r.group = a.name();
  r.trials = opt.trials;
  r.params.emplace_back("seed", std::to_string(opt.seed));
  r.params.emplace_back("word", d.str());
  const bool v_trivial = d.subword(+1).empty();
  const bool u_trivial = d.subword(-1).empty();
  auto check = [&](std::uint64_t seed, const std::vector<long long>& x) {
    ++r.evaluations;
    const bool direct = cone_membership(a, d, x);
    std::string where;
    for (long long q : x) where += (where.empty() ? "" : ",") + std::to_string(q);
    if (direct != cone_membership_via_M(a, d, x))
      detail::fail(r, opt, seed, "inequalities and M-exponent route disagree at a=" + where);
    if (v_trivial && direct != cone_membership_v_trivial(d, x))
      detail::fail(r, opt, seed, "v=e reduced form disagrees at a=" + where);
    if (u_trivial && direct != cone_membership_u_trivial(a, d, x))
      detail::fail(r, opt, seed, "u=e reduced form disagrees at a=" + where);
  };
  check(opt.seed, std::vector<long long>(static_cast<std::size_t>(d.size()), 0));
  if (!cone_membership(a, d, std::vector<long long>(static_cast<std::size_t>(d.size()), 0)))
    detail::fail(r, opt, opt.seed, "a = 0 rejected");
  for (int j = 0; j < opt.trials; ++j) {
    const std::uint64_t seed = trial_seed(opt.seed, static_cast<std::uint64_t>(j));
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> entry(-4, 4);
    std::vector<long long> x(static_cast<std::size_t>(d.size()));
    for (auto& q : x) q = entry(rng);
    check(seed, x);
  }
  return r;
}

/// Sign-vector surjectivity: over max(trials, 16 * 2^m) random real
/// t-samples, every sign pattern of (M_1, ..., M_m) appears. M is computed
/// through the group and compared with the monomial formula.
inline VerifyReport verify_signs(const GroupDescriptor& g, const DoubleWord& d, const VerifyOptions& opt = {}) {
  VerifyReport r = detail::start("signs", g, opt);
  r.params.emplace_back("word", d.str());
  if (d.size() > 16) throw GuardExceeded("sign sampling is limited to m <= 16");
  const ChamberMap cm(g, d);
  const std::size_t states = std::size_t{1} << d.size();
  const int samples = std::max<int>(opt.trials, static_cast<int>(16 * states));
  r.trials = samples;
  std::vector<bool> seen(states, false);
  for (int j = 0; j < samples; ++j) {
    const std::uint64_t seed = trial_seed(opt.seed, static_cast<std::uint64_t>(j));
    std::mt19937_64 rng(seed);
    const bool done = detail::with_resampling(rng, opt.max_resamples, [&](std::mt19937_64& gen) {
      const auto t = random_nonzero_vector(gen, static_cast<std::size_t>(d.size()), opt.ranges);
      const auto M = cm.minors(product_map(g, d, t));
      ++r.evaluations;
      if (M != cm.M_from_t(t)) detail::fail(r, opt, seed, "group route disagrees with the monomial formula");
      seen[sign_mask(M)] = true;
    });
    if (!done) detail::fail(r, opt, seed, "every resample was degenerate");
  }
  std::size_t missing = 0;
  std::string first;
  for (std::size_t s = 0; s < states; ++s)
    if (!seen[s] && missing++ == 0) first = to_bitstring(s, d.size());
  r.params.emplace_back("sign_vectors_seen", std::to_string(states - missing) + "/" + std::to_string(states));
  if (missing) detail::fail(r, opt, opt.seed, std::to_string(missing) + " sign vectors never seen, e.g. " + first);
  return r;
}

}  // namespace bruhat
