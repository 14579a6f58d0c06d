#pragma once

// Shared fixtures for the unit suites: short constructors and seeded random
// generators for polynomials, scalars and braids.

#include <random>
#include <vector>

#include "skeinlab/diagram.hpp"
#include "skeinlab/ring.hpp"

namespace skeinlab::testing {

inline LaurentPoly mono(int q, int a, long c = 1) { return LaurentPoly::monomial(q, a, BigInt(c)); }
inline LaurentPoly qz() { return LaurentPoly::z(); }
inline SkeinScalar sc(const LaurentPoly& p) { return SkeinScalar(p); }
inline SkeinScalar S() { return SkeinScalar::s(); }
inline SkeinScalar Z() { return SkeinScalar::z(); }
inline SkeinScalar A() { return SkeinScalar(LaurentPoly::a()); }

inline LaurentPoly random_poly(std::mt19937& rng, int terms = 4, int span = 3) {
  std::uniform_int_distribution<int> exp(-span, span);
  std::uniform_int_distribution<int> coef(-3, 3);
  LaurentPoly p;
  for (int i = 0; i < terms; ++i) p.add_term(exp(rng), exp(rng), BigInt(coef(rng)));
  return p;
}

inline SkeinScalar random_scalar(std::mt19937& rng) {
  std::uniform_int_distribution<int> nden(0, 2);
  std::uniform_int_distribution<int> k(1, 3);
  std::vector<int> dens;
  for (int i = nden(rng); i > 0; --i) dens.push_back(k(rng));
  return SkeinScalar(random_poly(rng), dens);
}

inline BraidWord random_braid(std::mt19937& rng, int max_strands = 4, int max_len = 10) {
  std::uniform_int_distribution<int> ns(2, max_strands);
  BraidWord b;
  b.strands = ns(rng);
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> gen(1, b.strands - 1);
  std::bernoulli_distribution neg(0.5);
  for (int i = len(rng); i > 0; --i) b.word.push_back(neg(rng) ? -gen(rng) : gen(rng));
  return b;
}

}  // namespace skeinlab::testing
