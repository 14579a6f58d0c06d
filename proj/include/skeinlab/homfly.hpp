#pragma once

// Framed HOMFLYPT evaluation of oriented diagrams.
//
// Conventions: H(L+) - H(L-) = z H(L0) with z = q - q^-1, a kink of writhe e
// contributes a^e, a crossing-free circle contributes s = (a - a^-1)/z and
// the empty diagram evaluates to 1.
//
// Evaluation resolves a diagram towards a descending one: for a chosen
// traversal (component order plus basepoints) let c_1, ..., c_m be the
// crossings first reached along their under strand.  Switching them all
// gives a layered diagram worth s^c a^{sum of self-writhes}, and
//   H(D) = H(D switched at c_1..c_m) + z sum_k sign(c_k) H(S_k),
// where S_k is D with c_1..c_{k-1} switched and c_k smoothed.  Every S_k has
// one crossing fewer than D, so the recursion terminates.  Results are
// memoised on canonical codes of connected, kink-free pieces.

#include <array>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <string>

#include "skeinlab/diagram.hpp"
#include "skeinlab/ring.hpp"

namespace skeinlab {

// Integer polynomial in z, a^{+-1} and s.  Every framed HOMFLYPT value of a
// diagram is such a polynomial; conversion to the coefficient ring happens
// once at the end.
class SkeinPoly {
 public:
  // (z exponent, a exponent, s exponent)
  using Key = std::array<int, 3>;

  SkeinPoly() = default;
  static SkeinPoly monomial(int z_exp, int a_exp, int s_exp, const BigInt& c = 1);

  const std::map<Key, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Key& k, const BigInt& c);
  SkeinPoly& operator+=(const SkeinPoly& o);
  friend SkeinPoly operator*(const SkeinPoly& x, const SkeinPoly& y);
  SkeinPoly shifted(int dz, int da, int ds, int sign = 1) const;
  friend bool operator==(const SkeinPoly&, const SkeinPoly&) = default;

  SkeinScalar to_scalar() const;
  std::string to_string() const;  // in z, a, s

 private:
  std::map<Key, BigInt> terms_;
};

enum class Strategy {
  // Basepoint and component order chosen to minimise the number of crossings
  // needing a switch.
  MinBad,
  // Least edge label of each component, components in label order.
  Canonical,
};

struct EvalOptions {
  int max_crossings = 40;
  std::int64_t max_nodes = 20'000'000;  // expanded skein nodes per evaluation
  std::size_t cache_size = std::size_t{1} << 20;
  Strategy strategy = Strategy::MinBad;
};

struct EvalStats {
  std::int64_t evaluations = 0;
  std::int64_t nodes = 0;
  std::int64_t cache_hits = 0;
  std::int64_t cache_misses = 0;
  std::size_t cache_entries = 0;

  nlohmann::json to_json() const;
};

class Evaluator {
 public:
  explicit Evaluator(EvalOptions options = {});
  ~Evaluator();
  Evaluator(const Evaluator&) = delete;
  Evaluator& operator=(const Evaluator&) = delete;

  // Safe to call concurrently; the cache is shared between callers.
  // Throws ResourceLimit when a budget is exceeded.
  SkeinPoly evaluate_poly(const Diagram& d);
  SkeinScalar evaluate(const Diagram& d) { return evaluate_poly(d).to_scalar(); }

  const EvalOptions& options() const { return options_; }
  EvalStats stats() const;
  void clear_cache();

 private:
  class Cache;
  struct Context;

  SkeinPoly eval_general(std::vector<Crossing> xs, int num_edges, Context& ctx);
  SkeinPoly eval_piece(const std::vector<Crossing>& xs, int num_edges, Context& ctx);
  SkeinPoly descend(const std::vector<Crossing>& xs, int num_edges, Context& ctx);

  EvalOptions options_;
  std::unique_ptr<Cache> cache_;
  std::atomic<std::int64_t> evaluations_{0};
  std::atomic<std::int64_t> nodes_{0};
  std::atomic<std::int64_t> hits_{0};
  std::atomic<std::int64_t> misses_{0};
};

// Convenience wrapper with a private evaluator.
SkeinScalar homfly(const Diagram& d, EvalOptions options = {});

// Jones polynomial normalised to J(U) = 1, in the variable q with t = q^-2,
// from the Kauffman bracket state sum.  Independent of the skein evaluator.
// Throws ResourceLimit above max_crossings crossings.
LaurentPoly jones_oracle(const Diagram& d, int max_crossings = 24);

}  // namespace skeinlab
