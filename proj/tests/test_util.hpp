#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "kernel/polynomial.hpp"
#include "kernel/ratfunc.hpp"

// Shared helpers for randomized checks.  All sampling is driven by an
// explicitly seeded mt19937_64 so every test run is reproducible.
namespace testutil {

inline long rnd_int(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

// Random polynomial with small integer coefficients, bounded degree.
inline vaw::Polynomial rnd_poly(std::mt19937_64& rng, int nvars, int maxdeg, int nterms,
                                long cmax = 4) {
  vaw::Polynomial p(nvars);
  for (int t = 0; t < nterms; ++t) {
    vaw::Monomial m(nvars, 0);
    int budget = maxdeg;
    for (int i = 0; i < nvars; ++i) {
      const int e = static_cast<int>(rnd_int(rng, 0, budget));
      m[i] = static_cast<uint32_t>(e);
      budget -= e;
    }
    p.add_term(m, vaw::Rational(rnd_int(rng, -cmax, cmax)));
  }
  return p;
}

inline vaw::Polynomial rnd_nonzero_poly(std::mt19937_64& rng, int nvars, int maxdeg, int nterms) {
  for (;;) {
    vaw::Polynomial p = rnd_poly(rng, nvars, maxdeg, nterms);
    if (!p.is_zero()) return p;
  }
}

inline vaw::RatFunc rnd_ratfunc(std::mt19937_64& rng, int nvars, int maxdeg = 2, int nterms = 3) {
  return vaw::RatFunc(rnd_poly(rng, nvars, maxdeg, nterms),
                      rnd_nonzero_poly(rng, nvars, maxdeg, 2));
}

}  // namespace testutil
