// Prints phi(n, delta) next to the constructions that attain it, checking each
// construction's size and its separator certificate along the way.

#include <cstdint>
#include <iomanip>
#include <iostream>

#include "hamcon/hamcon.hpp"

int main(int argc, char** argv) {
  using namespace hamcon;
  const std::int64_t max_n = argc > 1 ? std::stoll(argv[1]) : 20;

  std::cout << std::setw(4) << "n" << std::setw(7) << "delta" << std::setw(8) << "phi"
            << std::setw(10) << "regime" << std::setw(8) << "family" << "  certified\n";
  for (std::int64_t n = 6; n <= max_n; ++n) {
    for (std::int64_t d = 3; d <= n / 2; ++d) {
      const auto bound = phi(n, d);
      const auto fam = extremal_family(n, d);
      bool ok = true;
      for (Family f : {Family::kF, Family::kG}) {
        if ((f == Family::kF && !fam.f) || (f == Family::kG && !fam.g)) continue;
        ConstructionSpec spec{f, static_cast<std::size_t>(n), static_cast<std::size_t>(d)};
        const Graph g = build_classical(spec);
        const auto hub = hub_vertices(spec);
        ok = ok && BigInt(g.edge_count()) == bound.value &&
             separator_certificate(g, hub).outcome == Outcome::kNhcCertified;
      }
      std::cout << std::setw(4) << n << std::setw(7) << d << std::setw(8) << bound.value
                << std::setw(10) << to_string(bound.regime) << std::setw(8) << to_string(fam)
                << "  " << (ok ? "yes" : "NO") << "\n";
    }
  }
}
