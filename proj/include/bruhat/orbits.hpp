#pragma once

// Transvections tau_n of Z^m and their mod-2 reductions, and orbit
// enumeration for the group they generate on F_2^m.
//
// Sign vectors are packed into machine words: xi_k lives in bit k-1, so the
// string "0010" (leftmost character = xi_1) is the mask 0b0100.

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <string_view>
#include <thread>
#include <unordered_set>
#include <utility>
#include <vector>

#include "bruhat/cartan.hpp"
#include "bruhat/error.hpp"
#include "bruhat/sigma.hpp"
#include "bruhat/weyl.hpp"

namespace bruhat {

using SignMask = std::uint64_t;

/// xi'_n = xi_n - sum_{k -> n} C_kn xi_k + sum_{n -> l} C_ln xi_l.
struct TransvectionZ {
  int target = 0;
  std::vector<std::pair<int, int>> in;   // (k, C_kn) for k -> n
  std::vector<std::pair<int, int>> out;  // (l, C_ln) for n -> l
};

/// xi'_n = xi_n + <mask, xi> over F_2.
struct TransvectionF2 {
  int target = 0;
  SignMask mask = 0;

  bool operator==(const TransvectionF2&) const = default;
};

/// One transvection per i-bounded index n, built from Sigma(i) and C.
inline std::vector<TransvectionZ> transvections(const CartanMatrix& a, const DoubleWord& d) {
  const SigmaGraph g = build_sigma(a, d);
  const CoeffMatrix c(a, d);
  std::vector<TransvectionZ> out;
  for (int n : d.bounded_indices()) {
    TransvectionZ t;
    t.target = n;
    for (const auto& e : g.in_edges(n)) t.in.emplace_back(e.from, c(e.from, n));
    for (const auto& e : g.out_edges(n)) t.out.emplace_back(e.to, c(e.to, n));
    out.push_back(std::move(t));
  }
  return out;
}

inline TransvectionF2 reduce_mod2(const TransvectionZ& t) {
  TransvectionF2 f{t.target, 0};
  for (auto [k, c] : t.in)
    if (c & 1) f.mask ^= SignMask{1} << (k - 1);
  for (auto [l, c] : t.out)
    if (c & 1) f.mask ^= SignMask{1} << (l - 1);
  return f;
}

/// Mod-2 generators read straight off the simplified rule
/// xi'_n = xi_n + sum_{{k,n} in Sigma} C_kn xi_k.
inline std::vector<TransvectionF2> transvections_f2(const CartanMatrix& a, const DoubleWord& d) {
  if (d.size() > 64) throw GuardExceeded("words longer than 64 letters do not fit a sign mask");
  const SigmaGraph g = build_sigma(a, d);
  const CoeffMatrix c(a, d);
  std::vector<TransvectionF2> out;
  for (int n : d.bounded_indices()) {
    TransvectionF2 f{n, 0};
    for (int k = 1; k <= d.size(); ++k)
      if (k != n && g.linked(k, n) && (c(k, n) & 1)) f.mask |= SignMask{1} << (k - 1);
    out.push_back(f);
  }
  return out;
}

inline std::vector<long long> apply_z(const TransvectionZ& t, std::vector<long long> xi) {
  long long v = xi[t.target - 1];
  for (auto [k, c] : t.in) v -= static_cast<long long>(c) * xi[k - 1];
  for (auto [l, c] : t.out) v += static_cast<long long>(c) * xi[l - 1];
  xi[t.target - 1] = v;
  return xi;
}

inline SignMask apply_f2(const TransvectionF2& t, SignMask xi) {
  return xi ^ (static_cast<SignMask>(std::popcount(xi & t.mask) & 1) << (t.target - 1));
}

inline std::string to_bitstring(SignMask xi, int m) {
  std::string s(static_cast<std::size_t>(m), '0');
  for (int k = 0; k < m; ++k)
    if ((xi >> k) & 1) s[static_cast<std::size_t>(k)] = '1';
  return s;
}

inline SignMask parse_bitstring(std::string_view s) {
  if (s.size() > 64) throw InvalidInput("bitstring longer than 64");
  SignMask xi = 0;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k] == '1') xi |= SignMask{1} << k;
    else if (s[k] != '0') throw InvalidInput("bitstring may contain only 0 and 1");
  }
  return xi;
}

struct OrbitReport {
  int m = 0;
  std::size_t orbit_count = 0;
  std::map<std::size_t, std::size_t> histogram;  // orbit size -> number of orbits
  std::vector<SignMask> representatives;         // least mask per orbit, ascending
  std::vector<std::size_t> sizes;                // parallel to representatives

  bool operator==(const OrbitReport&) const = default;
};

struct OrbitOptions {
  int guard_bits = 28;
  unsigned threads = 1;
};

namespace detail {

inline void check_guard(int m, int guard_bits) {
  if (m > guard_bits || m > 40)
    throw GuardExceeded("m = " + std::to_string(m) + " exceeds the orbit guard of " +
                        std::to_string(guard_bits) +
                        " bits; use orbit_of to explore single orbits instead");
}

inline OrbitReport finish_report(int m, std::vector<std::pair<SignMask, std::size_t>> orbits) {
  std::sort(orbits.begin(), orbits.end());
  OrbitReport r;
  r.m = m;
  r.orbit_count = orbits.size();
  for (auto [rep, size] : orbits) {
    r.representatives.push_back(rep);
    r.sizes.push_back(size);
    ++r.histogram[size];
  }
  return r;
}

inline OrbitReport enumerate_sequential(const std::vector<TransvectionF2>& gens, int m) {
  const std::uint64_t n_states = std::uint64_t{1} << m;
  std::vector<std::uint64_t> visited((n_states + 63) / 64, 0);
  auto test_and_set = [&](SignMask x) {
    std::uint64_t& w = visited[x >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (x & 63);
    if (w & bit) return false;
    w |= bit;
    return true;
  };
  std::vector<std::pair<SignMask, std::size_t>> orbits;
  std::vector<SignMask> queue;
  for (SignMask seed = 0; seed < n_states; ++seed) {
    if (!test_and_set(seed)) continue;
    // Seeds are scanned in increasing order, so the seed is the orbit minimum.
    queue.clear();
    queue.push_back(seed);
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const SignMask x = queue[q];
      for (const auto& g : gens) {
        const SignMask y = apply_f2(g, x);
        if (y != x && test_and_set(y)) queue.push_back(y);
      }
    }
    orbits.emplace_back(seed, queue.size());
  }
  return finish_report(m, std::move(orbits));
}

/// Workers claim states with CAS on a per-state fragment label. Two
/// fragments that meet belong to one orbit and are merged afterwards, so the
/// report does not depend on scheduling.
inline OrbitReport enumerate_parallel(const std::vector<TransvectionF2>& gens, int m,
                                      unsigned threads) {
  const std::uint64_t n_states = std::uint64_t{1} << m;
  std::vector<std::atomic<std::uint32_t>> label(n_states);
  for (auto& l : label) l.store(0, std::memory_order_relaxed);
  std::atomic<std::uint64_t> cursor{0};
  std::atomic<std::uint32_t> next_id{1};
  constexpr std::uint64_t kChunk = 4096;

  struct Fragment {
    std::uint32_t id;
    SignMask min;
    std::size_t size;
  };
  std::vector<std::vector<Fragment>> fragments(threads);
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> meets(threads);

  auto work = [&](unsigned w) {
    std::vector<SignMask> queue;
    for (;;) {
      const std::uint64_t begin = cursor.fetch_add(kChunk);
      if (begin >= n_states) break;
      const std::uint64_t end = std::min(begin + kChunk, n_states);
      for (SignMask seed = begin; seed < end; ++seed) {
        if (label[seed].load(std::memory_order_acquire) != 0) continue;
        const std::uint32_t id = next_id.fetch_add(1);
        std::uint32_t expected = 0;
        if (!label[seed].compare_exchange_strong(expected, id)) continue;
        queue.clear();
        queue.push_back(seed);
        SignMask lo = seed;
        std::uint32_t last_met = 0;
        for (std::size_t q = 0; q < queue.size(); ++q) {
          const SignMask x = queue[q];
          for (const auto& g : gens) {
            const SignMask y = apply_f2(g, x);
            if (y == x) continue;
            std::uint32_t e = 0;
            if (label[y].compare_exchange_strong(e, id)) {
              queue.push_back(y);
              lo = std::min(lo, y);
            } else if (e != id && e != last_met) {
              meets[w].emplace_back(id, e);
              last_met = e;
            }
          }
        }
        fragments[w].push_back({id, lo, queue.size()});
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
  for (auto& t : pool) t.join();

  const std::uint32_t ids = next_id.load();
  std::vector<std::uint32_t> parent(ids);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& list : meets)
    for (auto [x, y] : list) {
      const auto rx = find(x), ry = find(y);
      if (rx != ry) parent[std::max(rx, ry)] = std::min(rx, ry);
    }
  std::map<std::uint32_t, std::pair<SignMask, std::size_t>> merged;
  for (const auto& list : fragments)
    for (const auto& f : list) {
      auto [it, fresh] = merged.try_emplace(find(f.id), f.min, f.size);
      if (!fresh) {
        it->second.first = std::min(it->second.first, f.min);
        it->second.second += f.size;
      }
    }
  std::vector<std::pair<SignMask, std::size_t>> orbits;
  for (const auto& [root, v] : merged) orbits.push_back(v);
  return finish_report(m, std::move(orbits));
}

}  // namespace detail

/// Exact partition of F_2^m into orbits of the group generated by `gens`.
/// The multi-threaded path keeps a 32-bit label per state and is used only
/// for m <= 24; larger m always runs the bit-array BFS.
inline OrbitReport enumerate_orbits(const std::vector<TransvectionF2>& gens, int m,
                                    const OrbitOptions& opt = {}) {
  detail::check_guard(m, opt.guard_bits);
  if (opt.threads > 1 && m <= 24) return detail::enumerate_parallel(gens, m, opt.threads);
  return detail::enumerate_sequential(gens, m);
}

inline OrbitReport enumerate_orbits(const CartanMatrix& a, const DoubleWord& d,
                                    const OrbitOptions& opt = {}) {
  detail::check_guard(d.size(), opt.guard_bits);
  return enumerate_orbits(transvections_f2(a, d), d.size(), opt);
}

/// The full orbit of xi, ascending, by hash-set closure.
inline std::vector<SignMask> orbit_of(const std::vector<TransvectionF2>& gens, SignMask xi,
                                      std::size_t cap = std::size_t{1} << 22) {
  std::unordered_set<SignMask> seen{xi};
  std::vector<SignMask> queue{xi};
  for (std::size_t q = 0; q < queue.size(); ++q)
    for (const auto& g : gens) {
      const SignMask y = apply_f2(g, queue[q]);
      if (seen.insert(y).second) {
        if (seen.size() > cap)
          throw GuardExceeded("orbit exceeds the cap of " + std::to_string(cap) + " elements");
        queue.push_back(y);
      }
    }
  std::sort(queue.begin(), queue.end());
  return queue;
}

inline std::vector<SignMask> orbit_of(const CartanMatrix& a, const DoubleWord& d, SignMask xi,
                                      std::size_t cap = std::size_t{1} << 22) {
  return orbit_of(transvections_f2(a, d), xi, cap);
}

/// tau_n(xi) for every i-bounded n, in increasing n.
inline std::vector<SignMask> adjacent_sign_vectors(const CartanMatrix& a, const DoubleWord& d,
                                                   SignMask xi) {
  std::vector<SignMask> out;
  for (const auto& g : transvections_f2(a, d)) out.push_back(apply_f2(g, xi));
  return out;
}

}  // namespace bruhat
