#pragma once

// Component counts C(X_r) of L^{e,w0}(R) for the standard desk-scale types.

#include <optional>
#include <string>
#include <vector>

#include "bruhat/orbits.hpp"

namespace bruhat {

struct TableRow {
  std::string type;
  int m = 0;
  std::optional<std::size_t> expected;
  std::optional<std::size_t> computed;
  std::string word;
  std::string note;  // reason a row was skipped

  bool matches() const { return expected && computed && *expected == *computed; }
};

struct TableEntry {
  Family family;
  int rank;
  std::optional<std::size_t> expected;
};

/// Published values for (e, w0).
inline std::vector<TableEntry> standard_table_entries() {
  return {{Family::A, 1, 2},  {Family::A, 2, 6},  {Family::A, 3, 20}, {Family::A, 4, 52},
          {Family::A, 5, 96}, {Family::A, 6, 192}, {Family::B, 2, 8},  {Family::G, 2, 11},
          {Family::D, 4, 48}, {Family::D, 5, 96}, {Family::E, 6, std::nullopt}};
}

/// Orbit count for (e, w0) using the lexicographically least reduced word.
inline TableRow component_row(const TableEntry& entry, const OrbitOptions& opt = {}) {
  const CartanMatrix a = cartan_matrix(entry.family, entry.rank);
  const WeylGroup w(a);
  const DoubleWord d = default_double_word(w, w.identity(), w.longest_element());
  TableRow row;
  row.type = a.name();
  row.m = d.size();
  row.expected = entry.expected;
  row.word = d.str();
  if (row.m > opt.guard_bits) {
    row.note = "skipped (m too large)";
    return row;
  }
  row.computed = enumerate_orbits(a, d, opt).orbit_count;
  return row;
}

inline std::vector<TableRow> component_table(const OrbitOptions& opt = {}) {
  std::vector<TableRow> rows;
  for (const auto& e : standard_table_entries()) rows.push_back(component_row(e, opt));
  return rows;
}

}  // namespace bruhat
