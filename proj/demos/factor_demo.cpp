// Walks through g_k for a few k: singular points, factor tree, verdict.

#include <cstdlib>
#include <iostream>

#include "hyperoval_lab/hyperoval_lab.hpp"

using namespace hyperoval_lab;

int main(int argc, char** argv) {
  const unsigned k = argc > 1 ? static_cast<unsigned>(std::atoi(argv[1])) : 12;
  try {
    std::cout << "g_" << k << " = " << build_gk(k).to_string() << "\n\n";
    const auto pts = singular_points(k);
    std::cout << pts.size() << " affine singular points\n";
    for (const auto& P : pts)
      std::cout << "  (" << P.alpha.to_string() << ", " << P.beta.to_string() << ") type " << type_name(P.ptype)
                << "  m_f=" << P.m_f << " m_g=" << P.m_g << "\n";
    const VerdictRecord v = abs_irr_verdict(k);
    std::cout << "\nfactors over GF(2):\n";
    for (const auto& b : v.tree.base)
      std::cout << "  deg " << b.f.total_degree() << " x" << b.multiplicity << ", splits into " << b.abs.r
                << " conjugates over GF(2^" << b.abs.field_degree << ")\n";
    std::cout << "verdict: " << verdict_letter(v.verdict) << "\n";
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}
