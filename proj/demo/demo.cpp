// Veech group invariants of the two 5-square orbits in the stratum (2).

#include <iostream>

#include "origami/origami_lib.hpp"

int main() {
  using namespace origami;
  for (auto [a, b] : {std::pair{3, 3}, std::pair{4, 2}}) {
    Origami o = L(a, b);
    OrbitTable t = orbit(o);
    VeechGroupData v = veech_generators(t);
    CuspData c = cusp_data(t);
    DeficiencyResult r = deficiency(v, c.level);
    std::cout << "L(" << a << "," << b << ") " << to_string(o) << "  orbit " << to_string(classify_h2_orbit(o))
              << "  d=" << v.d << " l=" << c.level << " e=" << r.e << " f=" << r.f << '\n';
    std::cout << "  first generators:";
    for (std::size_t k = 0; k < 3 && k < v.generators.size(); ++k) std::cout << ' ' << to_string(v.generators[k]);
    std::cout << '\n';
  }
}
