#pragma once

#include <string>
#include <vector>

#include "wishdiff/diagonal_law.hpp"
#include "wishdiff/numeric.hpp"

namespace wishdiff::testing {

inline Rational q(const char* text) { return parse_rational(text); }

inline EnsembleParams params(int n, int n1, int n2, const char* a1, const char* a2) {
  return EnsembleParams{n, n1, n2, q(a1), q(a2)};
}

inline std::string describe(const EnsembleParams& p) {
  return "(" + std::to_string(p.n) + "," + std::to_string(p.n1) + "," + std::to_string(p.n2) + "," +
         format_rational(p.a1) + "," + format_rational(p.a2) + ")";
}

// Unequal weights and degrees of freedom; the basis loses smoothness at j = 5.
inline EnsembleParams small_skewed() { return params(2, 2, 3, "2/3", "1/5"); }
// Mid-sized ensemble used by several exact and sampled checks.
inline EnsembleParams mid_skewed() { return params(4, 5, 7, "2/3", "8/7"); }

// Small mixed parameter sets used by several property tests.
inline std::vector<EnsembleParams> small_grid() {
  std::vector<EnsembleParams> out;
  const char* weights[] = {"1/3", "1", "2", "8/7"};
  for (int n1 = 1; n1 <= 4; ++n1)
    for (int n2 = 1; n2 <= 4; ++n2)
      for (const char* a1 : weights)
        for (const char* a2 : weights) {
          const int n = std::min(n1, n2);
          if (n1 == 1 && n2 == 1) {
            out.push_back(params(1, 1, 1, a1, a2));
          } else {
            out.push_back(params(n, n1, n2, a1, a2));
          }
        }
  return out;
}

}  // namespace wishdiff::testing
