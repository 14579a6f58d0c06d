#pragma once

// Full colored HOMFLYPT invariants of braid closures and the reduced and
// normalized variants built from them.
//
// A component coloured by (lambda, mu) is decorated with Q_{lambda,mu}; the
// decoration is expanded into power sums and then into closed braid atoms,
// every resulting satellite is evaluated, and the values are recombined.
// Component indices are 0-based throughout this interface.

#include <atomic>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "skeinlab/combinatorics.hpp"
#include "skeinlab/diagram.hpp"
#include "skeinlab/homfly.hpp"
#include "skeinlab/ring.hpp"

namespace skeinlab {

struct Color {
  Partition lambda;
  Partition mu;

  int size() const { return lambda.size() + mu.size(); }
  Color conjugate() const { return {lambda.conjugate(), mu.conjugate()}; }
  // "[2,1]/[1]"
  std::string to_string() const { return lambda.to_string() + "/" + mu.to_string(); }
  nlohmann::json to_json() const { return {{"lambda", lambda.to_json()}, {"mu", mu.to_json()}}; }
  static Color from_json(const nlohmann::json& j);

  friend auto operator<=>(const Color&, const Color&) = default;
  friend bool operator==(const Color&, const Color&) = default;
};

// "[2,1]/[1];[1]/[]" or "[2]" (mu empty) per component, ';'-separated.
std::vector<Color> parse_colors(std::string_view text);

struct ColoredLink {
  BraidWord companion;
  std::vector<Color> colors;

  // Throws ComponentMismatch when colors do not match the closure components.
  void validate() const;
  int total_size() const;
  ColoredLink conjugated() const;
  std::string key() const;
  nlohmann::json to_json() const;
  static ColoredLink from_json(const nlohmann::json& j);
};

// Self-writhe of every closure component of the braid (closure order).
std::vector<int> companion_self_writhe(const BraidWord& braid);

struct InvariantReport {
  SkeinScalar value;
  bool laurent = false;
  bool even = false;
  bool zsq = false;
  std::int64_t expansion_terms = 0;
  EvalStats stats;

  static InvariantReport of(SkeinScalar value, std::int64_t terms = 0, EvalStats stats = {});
  nlohmann::json to_json() const;
};

// W(L) / prod_alpha W(U) for a link; generally outside the bracket ring.
struct NaiveReport {
  SkeinScalar numerator;
  SkeinScalar denominator;
  std::optional<SkeinScalar> quotient;  // present when the quotient lies in the ring
  bool laurent = false;

  nlohmann::json to_json() const;
};

struct Check {
  enum class Status { Pass, Fail, Finding, Skipped };
  std::string name;
  Status status = Status::Pass;
  std::string detail;

  static const char* status_name(Status s);
};

struct VerificationReport {
  std::vector<Check> checks;

  void add(std::string name, bool passed, std::string detail = {});
  void add(Check c) { checks.push_back(std::move(c)); }
  void append(const VerificationReport& other);
  bool ok() const;
  nlohmann::json to_json() const;
};

struct UnknotRoutes {
  SkeinScalar character_sum;
  SkeinScalar hook_content;
  std::optional<SkeinScalar> satellite;
  bool agree() const;
};

// H(U * Q_{lambda,mu}) from the power-sum character expansion of each Q_rho,
// Q*_nu factor, recombined through the signed LR expansion.
SkeinScalar unknot_character_sum(const Partition& lambda, const Partition& mu);
// The same value from the hook-content product
// prod (a q^cn - a^-1 q^-cn) / {hl} per factor.
SkeinScalar unknot_hook_content(const Partition& lambda, const Partition& mu);
// The hook-content product in the opposite mirror convention, a -> a^-1.
SkeinScalar unknot_hook_content_mirror(const Partition& lambda);

// prod over beta != alpha, over pairs (rho, nu) with rho in lambda^beta,
// nu in mu^beta and |lambda^beta| - |rho| = |mu^beta| - |nu|, over the boxes x
// of rho and nu, of a q^cn(x) {hl(x)}.
SkeinScalar prefactor(const std::vector<Color>& colors, int alpha);

// a^{r rho} q^{rho r (r - rho)/2} prod_{i<rho} {r+i}!/{i}!.
SkeinScalar rectangle_prefactor(int r, int rho);

struct InvariantOptions {
  EvalOptions eval;
  // Per-component |lambda| + |mu| limit for full_W.
  int max_color_size = 3;
  // Worker threads for satellite jobs; 0 picks the hardware concurrency.
  int threads = 0;
};

class InvariantEngine {
 public:
  explicit InvariantEngine(InvariantOptions options = {});

  Evaluator& evaluator() { return evaluator_; }
  const InvariantOptions& options() const { return options_; }

  // H(L * (x) Q_alpha) without framing correction.  Not subject to the
  // colour-size budget.
  SkeinScalar satellite_H(const BraidWord& companion, const std::vector<Color>& colors);
  // H(K * P_tau P*_delta) for a knot companion, without framing correction.
  SkeinScalar power_sum_H(const BraidWord& knot, const Partition& tau, const Partition& delta);

  SkeinScalar full_W(const ColoredLink& cl);

  UnknotRoutes unknot_routes(const Partition& lambda, const Partition& mu, bool with_satellite);
  // Character-sum and hook-content routes, checked against each other.
  SkeinScalar unknot_value(const Partition& lambda, const Partition& mu);

  // Throws DivisionNotExact when the quotient is not a Laurent polynomial.
  InvariantReport reduced_P_knot(const ColoredLink& cl);
  // Throws DivisionNotExact when the quotient leaves the bracket ring.
  InvariantReport reduced_Q_link(const ColoredLink& cl, int alpha);
  InvariantReport normalized_P_link(const ColoredLink& cl, int alpha);
  NaiveReport naive_P_link(const ColoredLink& cl);
  // Requires every component other than alpha to carry ((1), empty).
  InvariantReport eigenvalue_ratio(const ColoredLink& cl, int alpha);

  // {tau}{delta} H(K * P_tau P*_delta).
  SkeinScalar cleared_power_sum_H(const BraidWord& knot, const Partition& tau, const Partition& delta);

  VerificationReport verify_symmetries(const ColoredLink& cl);
  VerificationReport verify_integrality(const ColoredLink& cl);

  // a^{-writhe} H / s at a = q^2: the Jones polynomial of the closure.
  LaurentPoly jones_specialization(const BraidWord& braid);

  std::int64_t jobs_run() const { return jobs_run_.load(); }

 private:
  SkeinScalar run_jobs(const std::vector<Diagram>& diagrams, const std::vector<SkeinScalar>& coeffs);

  InvariantOptions options_;
  Evaluator evaluator_;
  std::mutex memo_mutex_;
  std::map<std::string, SkeinScalar> w_memo_;
  std::atomic<std::int64_t> jobs_run_{0};
};

}  // namespace skeinlab
