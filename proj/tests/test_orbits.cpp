#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"

using namespace bruhat;

namespace {

std::vector<std::string> orbit_strings(const CartanMatrix& a, const DoubleWord& d, const std::string& xi) {
  std::vector<std::string> out;
  for (SignMask x : orbit_of(a, d, parse_bitstring(xi))) out.push_back(to_bitstring(x, d.size()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST(Orbits, B2IntegerTransvections) {
  const auto ts = transvections(b2_preset(), parse_word("j,i,j,i", 2));
  ASSERT_EQ(ts.size(), 2u);
  // tau_3: xi_3 - xi_1 - 2 xi_4 + 2 xi_2
  EXPECT_EQ(apply_z(ts[0], {1, 0, 0, 0}), (std::vector<long long>{1, 0, -1, 0}));
  EXPECT_EQ(apply_z(ts[0], {0, 0, 0, 1}), (std::vector<long long>{0, 0, -2, 1}));
  EXPECT_EQ(apply_z(ts[0], {0, 1, 0, 0}), (std::vector<long long>{0, 1, 2, 0}));
  // tau_4: xi_4 - xi_2 + xi_3
  EXPECT_EQ(apply_z(ts[1], {0, 1, 0, 0}), (std::vector<long long>{0, 1, 0, -1}));
  EXPECT_EQ(apply_z(ts[1], {0, 0, 1, 0}), (std::vector<long long>{0, 0, 1, 1}));
  EXPECT_EQ(apply_z(ts[1], {0, 0, 0, 0}), (std::vector<long long>{0, 0, 0, 0}));
}

TEST(Orbits, B2ModTwoRules) {
  const auto fs = transvections_f2(b2_preset(), parse_word("j,i,j,i", 2));
  ASSERT_EQ(fs.size(), 2u);
  EXPECT_EQ(fs[0].mask, parse_bitstring("1000"));  // xi_3 += xi_1
  EXPECT_EQ(fs[1].mask, parse_bitstring("0110"));  // xi_4 += xi_2 + xi_3
}

TEST(Orbits, SimplyLacedCoefficientsAreOne) {
  for (const auto& t : transvections(cartan_matrix("D4"), parse_word("1,2,3,1,2,3,4,3,1,2,3,4", 4))) {
    for (auto [k, c] : t.in) EXPECT_EQ(c, 1);
    for (auto [k, c] : t.out) EXPECT_EQ(c, 1);
  }
  EXPECT_TRUE(transvections(cartan_matrix("A3"), parse_word("1,2,3", 3)).empty());
}

TEST(Orbits, Bitstrings) {
  EXPECT_EQ(parse_bitstring("0010"), SignMask{4});
  EXPECT_EQ(to_bitstring(4, 4), "0010");
  EXPECT_THROW(parse_bitstring("01x"), InvalidInput);
}

TEST(Orbits, B2Structure) {
  const CartanMatrix a = b2_preset();
  const DoubleWord d = parse_word("j,i,j,i", 2);
  const OrbitReport r = enumerate_orbits(a, d);
  EXPECT_EQ(r.orbit_count, 8u);
  EXPECT_EQ(r.histogram, (std::map<std::size_t, std::size_t>{{1, 4}, {2, 2}, {4, 2}}));
  for (const char* fixed : {"0000", "0001", "0110", "0111"})
    EXPECT_EQ(orbit_strings(a, d, fixed), std::vector<std::string>{fixed});
  EXPECT_EQ(orbit_strings(a, d, "0010"), sorted({"0010", "0011"}));
  EXPECT_EQ(orbit_strings(a, d, "0100"), sorted({"0100", "0101"}));
  EXPECT_EQ(orbit_strings(a, d, "1000"), sorted({"1000", "1010", "1011", "1001"}));
  EXPECT_EQ(orbit_strings(a, d, "1110"), sorted({"1110", "1100", "1101", "1111"}));
}

TEST(Orbits, G2Structure) {
  const CartanMatrix a = g2_preset();
  const DoubleWord d = parse_word("j,i,j,i,j,i", 2);
  const OrbitReport r = enumerate_orbits(a, d);
  EXPECT_EQ(r.orbit_count, 11u);
  EXPECT_EQ(r.histogram, (std::map<std::size_t, std::size_t>{{1, 4}, {8, 6}, {12, 1}}));
  for (const char* fixed : {"000000", "001001", "001110", "000111"})
    EXPECT_EQ(orbit_strings(a, d, fixed), std::vector<std::string>{fixed});
  const auto big = orbit_strings(a, d, "000001");
  EXPECT_EQ(big.size(), 12u);
  EXPECT_TRUE(std::binary_search(big.begin(), big.end(), "000011"));
}

TEST(Orbits, AdjacentSignVectors) {
  const auto b2 = adjacent_sign_vectors(b2_preset(), parse_word("j,i,j,i", 2), parse_bitstring("0010"));
  EXPECT_NE(std::find(b2.begin(), b2.end(), parse_bitstring("0011")), b2.end());
  const auto g2 = adjacent_sign_vectors(g2_preset(), parse_word("j,i,j,i,j,i", 2), parse_bitstring("000001"));
  EXPECT_NE(std::find(g2.begin(), g2.end(), parse_bitstring("000011")), g2.end());
  for (SignMask x : adjacent_sign_vectors(b2_preset(), parse_word("j,i,j,i", 2), parse_bitstring("0110")))
    EXPECT_EQ(x, parse_bitstring("0110"));
}

TEST(Orbits, ZeroVectorIsFixed) {
  const DoubleWord d = parse_word("1,2,1,3,2,1", 3);
  EXPECT_EQ(orbit_of(cartan_matrix("A3"), d, 0), std::vector<SignMask>{0});
}

TEST(Orbits, OrbitCapIsEnforced) {
  const DoubleWord d = parse_word("j,i,j,i,j,i", 2);
  EXPECT_THROW(orbit_of(g2_preset(), d, parse_bitstring("000001"), 5), GuardExceeded);
}

namespace {

std::vector<std::pair<CartanMatrix, DoubleWord>> property_words() {
  std::vector<std::pair<CartanMatrix, DoubleWord>> out;
  std::mt19937_64 rng(17);
  for (const char* t : {"A2", "A3", "B2", "B3", "G2", "C3", "D4"}) {
    const CartanMatrix a = cartan_matrix(t);
    const WeylGroup w(a);
    const WeylElement w0 = w.longest_element();
    for (int trial = 0; trial < 4; ++trial) {
      DoubleWord d = random_double_word(w, trial % 2 ? w0 : w.identity(), w0, rng);
      if (d.size() > 12) d = random_double_word(w, w.identity(), w0, rng);
      if (d.size() <= 12) out.emplace_back(a, d);
    }
  }
  return out;
}

}  // namespace

TEST(Orbits, TransvectionsAreInvolutionsExhaustively) {
  for (const auto& [a, d] : property_words()) {
    const auto fs = transvections_f2(a, d);
    for (const auto& f : fs)
      for (SignMask x = 0; x < (SignMask{1} << d.size()); ++x)
        ASSERT_EQ(apply_f2(f, apply_f2(f, x)), x) << a.name() << " " << d.str();
  }
}

TEST(Orbits, IntegerAndModTwoAgreeExhaustively) {
  for (const auto& [a, d] : property_words()) {
    const auto zs = transvections(a, d);
    const auto fs = transvections_f2(a, d);
    ASSERT_EQ(zs.size(), fs.size());
    for (std::size_t g = 0; g < zs.size(); ++g) {
      EXPECT_EQ(reduce_mod2(zs[g]), fs[g]) << a.name() << " " << d.str();
      for (SignMask x = 0; x < (SignMask{1} << d.size()); ++x) {
        std::vector<long long> xi(d.size());
        for (int k = 0; k < d.size(); ++k) xi[k] = (x >> k) & 1;
        const auto y = apply_z(zs[g], xi);
        SignMask img = 0;
        for (int k = 0; k < d.size(); ++k)
          if (y[k] % 2 != 0) img |= SignMask{1} << k;
        ASSERT_EQ(img, apply_f2(fs[g], x));
      }
    }
  }
}

TEST(Orbits, EnumerationMatchesUnionFindOracle) {
  for (const auto& [a, d] : property_words())
    EXPECT_EQ(enumerate_orbits(a, d).orbit_count, oracle::orbit_count_bruteforce(a, d)) << a.name() << " " << d.str();
}

TEST(Orbits, ReportInvariants) {
  for (const auto& [a, d] : property_words()) {
    const auto gens = transvections_f2(a, d);
    const OrbitReport r = enumerate_orbits(gens, d.size());
    std::size_t total = 0;
    for (auto [size, count] : r.histogram) total += size * count;
    EXPECT_EQ(total, std::size_t{1} << d.size());
    std::set<SignMask> seen;
    for (std::size_t k = 0; k < r.representatives.size(); ++k) {
      const auto orbit = orbit_of(gens, r.representatives[k]);
      EXPECT_EQ(orbit.front(), r.representatives[k]);  // least element
      EXPECT_EQ(orbit.size(), r.sizes[k]);
      for (SignMask x : orbit) EXPECT_TRUE(seen.insert(x).second);
    }
  }
}

TEST(Orbits, ParallelMatchesSequential) {
  for (const char* t : {"A4", "D4", "G2", "B3"}) {
    const CartanMatrix a = cartan_matrix(t);
    const WeylGroup w(a);
    const DoubleWord d = default_double_word(w, w.identity(), w.longest_element());
    const OrbitReport seq = enumerate_orbits(a, d);
    for (unsigned threads : {2u, 3u, 4u}) {
      OrbitOptions opt;
      opt.threads = threads;
      EXPECT_EQ(enumerate_orbits(a, d, opt), seq) << t << " threads=" << threads;
    }
  }
}

TEST(Orbits, CountIsIndependentOfReducedWord) {
  for (const char* t : {"A2", "A3", "B2", "G2"}) {
    const WeylGroup w(cartan_matrix(t));
    std::set<std::size_t> counts;
    for (const auto& d : double_reduced_words(w, w.identity(), w.longest_element(), 1000))
      counts.insert(enumerate_orbits(w.cartan(), d).orbit_count);
    EXPECT_EQ(counts.size(), 1u) << t;
  }
  // Mixed pair: every shuffle for (w0, s1) in A2.
  const WeylGroup a2(cartan_matrix("A2"));
  std::set<std::size_t> mixed;
  for (const auto& d : double_reduced_words(a2, a2.longest_element(), a2.reflection(1), 1000))
    mixed.insert(enumerate_orbits(a2.cartan(), d).orbit_count);
  EXPECT_EQ(mixed.size(), 1u);
}

TEST(Orbits, GuardRejectsLargeWords) {
  const WeylGroup e6(cartan_matrix("E6"));
  const DoubleWord d = default_double_word(e6, e6.identity(), e6.longest_element());
  EXPECT_EQ(d.size(), 36);
  EXPECT_THROW(enumerate_orbits(e6.cartan(), d), GuardExceeded);
  OrbitOptions small;
  small.guard_bits = 3;
  EXPECT_THROW(enumerate_orbits(b2_preset(), parse_word("j,i,j,i", 2), small), GuardExceeded);
}

TEST(Orbits, ComponentTable) {
  OrbitOptions opt;
  const auto rows = component_table(opt);
  ASSERT_EQ(rows.size(), 11u);
  for (const auto& r : rows) {
    if (r.type == "E6") {
      EXPECT_FALSE(r.computed.has_value());
      EXPECT_EQ(r.note, "skipped (m too large)");
    } else {
      EXPECT_TRUE(r.matches()) << r.type;
    }
  }
}
