// Counts the orbits for the B2 word (j,i,j,i) and prints each orbit.

#include <iostream>

#include "bruhat/bruhat.hpp"

int main() {
  using namespace bruhat;
  const CartanMatrix a = b2_preset();
  const DoubleWord d = parse_word("j,i,j,i", a.rank());
  validate_double_reduced(WeylGroup(a), d);

  const auto gens = transvections_f2(a, d);
  const OrbitReport r = enumerate_orbits(gens, d.size());
  std::cout << a.name() << " word (" << d.str() << "): " << r.orbit_count << " orbits\n";
  for (SignMask rep : r.representatives) {
    std::cout << " ";
    for (SignMask x : orbit_of(gens, rep)) std::cout << ' ' << to_bitstring(x, d.size());
    std::cout << '\n';
  }
}
