// A short tour: the spectrum of Z/12, its three topologies, the
// pointwise localization that collapses the nilpotents, and the same
// story on the two-point chain where the answers flip.

#include <iostream>

#include "finspec/finspec.hpp"

int main() {
  using namespace finspec;

  FiniteRing z12 = ring_zmod(12);
  std::cout << "== " << z12.label() << " ==\n";
  print_spectrum(std::cout, make_spectrum_listing(spec(z12)));

  Spectrum s = spec(z12);
  std::cout << "zariski ";
  print_topology(std::cout, zariski_topology(s));
  std::cout << "flat    ";
  print_topology(std::cout, flat_topology(s));

  PointwiseLocalization l = full_pointwise_ring(z12);
  std::cout << "\npointwise localization:\n";
  print_pointwise(std::cout, l);

  std::cout << "\nseparability report:\n";
  print_report(std::cout, separability_report(z12));

  SpectralPoset chain = chain_poset(2);
  std::cout << "\n== two-point chain (a DVR-shaped spectrum) ==\n";
  print_report(std::cout, separability_report(chain, "chain2"));
  std::cout << "flat ";
  print_topology(std::cout, flat_topology(chain));

  return 0;
}
