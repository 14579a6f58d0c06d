#pragma once

// The skein of the annulus as a formal commutative algebra.
//
// Elements are finite combinations of monomials in either the complete
// generators h_m, h*_k (Basis::HH) or the power sums P_tau P*_delta
// (Basis::PP).  A monomial is a pair of partitions: the forward factor and the
// orientation-reversed factor.

#include <compare>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "skeinlab/combinatorics.hpp"
#include "skeinlab/ring.hpp"

namespace skeinlab {

enum class Basis { HH, PP };

struct Monomial {
  Partition forward;
  Partition reversed;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;
  std::string to_string(Basis basis) const;
};

class AnnulusElement {
 public:
  explicit AnnulusElement(Basis basis) : basis_(basis) {}

  static AnnulusElement one(Basis basis);
  // h_m (or h*_m); zero for m < 0 and 1 for m == 0.
  static AnnulusElement h(int m, bool reversed);

  Basis basis() const { return basis_; }
  // Coefficients are terms()[m] / denominator().
  const std::map<Monomial, SkeinScalar>& terms() const { return terms_; }
  const BigInt& denominator() const { return denominator_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Monomial& m, const SkeinScalar& coeff);
  // Divides every coefficient by d.
  void set_denominator(BigInt d);

  AnnulusElement& operator+=(const AnnulusElement& o);
  AnnulusElement& operator-=(const AnnulusElement& o);
  friend AnnulusElement operator+(AnnulusElement x, const AnnulusElement& y) { return x += y; }
  friend AnnulusElement operator-(AnnulusElement x, const AnnulusElement& y) { return x -= y; }
  friend AnnulusElement operator*(const AnnulusElement& x, const AnnulusElement& y);
  AnnulusElement scaled(const SkeinScalar& c) const;
  friend bool operator==(const AnnulusElement& x, const AnnulusElement& y);

  // True when every monomial has forward degree d and reversed degree t.
  bool homogeneous(int d, int t) const;

  std::string to_string() const;
  nlohmann::json to_json() const;

 private:
  void reduce_denominator();

  Basis basis_;
  std::map<Monomial, SkeinScalar> terms_;
  BigInt denominator_ = 1;
};

// Entry of the determinant matrix: h_index or h*_index.  Negative index is 0,
// index 0 is 1.
struct HSymbol {
  bool reversed = false;
  int index = 0;

  bool is_zero() const { return index < 0; }
  bool is_one() const { return index == 0; }
  std::string to_string() const;
  friend bool operator==(const HSymbol&, const HSymbol&) = default;
};

using HMatrix = std::vector<std::vector<HSymbol>>;

// The (l+r) x (l+r) matrix whose determinant is Q_{lambda,mu}: first the r
// h*-rows for mu_r, ..., mu_1, then the l h-rows for lambda_1, ..., lambda_l.
HMatrix q_matrix(const Partition& lambda, const Partition& mu);

// det of q_matrix, expanded in the HH basis.
AnnulusElement q_element(const Partition& lambda, const Partition& mu);

struct QQTerm {
  int64_t coeff = 0;  // signed multiplicity of Q_rho Q*_nu
  Partition rho;
  Partition nu;
  friend bool operator==(const QQTerm&, const QQTerm&) = default;
};

// Q_{lambda,mu} = sum (-1)^|sigma| c^lambda_{sigma,rho} c^mu_{sigma^t,nu} Q_rho Q*_nu,
// with equal (rho, nu) collected and zero terms dropped.
std::vector<QQTerm> q_expand_qq(const Partition& lambda, const Partition& mu);

// Q_lambda (or Q*_lambda) in the HH basis via the one-sided determinant.
AnnulusElement schur_in_h(const Partition& lambda, bool reversed);

// Q_lambda = sum_mu chi_lambda(mu)/z_mu P_mu (PP basis).
AnnulusElement schur_to_powersum(const Partition& lambda, bool reversed);

// Q_{lambda,mu} in the PP basis.
AnnulusElement qlm_to_pp(const Partition& lambda, const Partition& mu);

// A_{i,j}: closure of sigma_{i+j} ... sigma_{j+1} sigma_j^-1 ... sigma_1^-1,
// a single curve of winding i+j+1; `reversed` flips every strand.
struct PatternAtom {
  bool reversed = false;
  int i = 0;
  int j = 0;

  int winding() const { return i + j + 1; }
  std::string to_string() const;
  friend auto operator<=>(const PatternAtom&, const PatternAtom&) = default;
  friend bool operator==(const PatternAtom&, const PatternAtom&) = default;
};

// Commuting product of atoms, kept sorted (forward atoms first).
using AtomProduct = std::vector<PatternAtom>;

int total_winding(const AtomProduct& p);

// Lambda-linear combination of atom products.
using AtomCombination = std::map<AtomProduct, SkeinScalar>;

// P_tau P*_delta = prod_parts (z/{m}) sum_j A(m-1-j, j).
AtomCombination pp_to_atoms(const Monomial& monomial);

// Expands a PP element into atoms.  The element's integer denominator is not
// applied; callers divide by it after recombination.
AtomCombination pp_element_to_atoms(const AnnulusElement& element);

// alpha_m = q^{m(m-1)/2} prod_{i=1}^m [i].
SkeinScalar alpha_m(int m);

}  // namespace skeinlab
