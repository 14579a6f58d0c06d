#pragma once

// Exact coefficient arithmetic for the HOMFLY skein.
//
// LaurentPoly is an element of Z[q^{+-1}, a^{+-1}].  SkeinScalar is an element
// of the coefficient ring in which the brackets {k} = q^k - q^-k are admitted
// as denominators; it is stored as numerator / prod {k}.

#include <gmpxx.h>

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace skeinlab {

using BigInt = mpz_class;

class LaurentPoly {
 public:
  // (q exponent, a exponent); iteration order is (q desc, a desc).
  using Exponent = std::pair<int, int>;
  using TermMap = std::map<Exponent, BigInt, std::greater<>>;

  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT(google-explicit-constructor)
  explicit LaurentPoly(const BigInt& c);

  static LaurentPoly monomial(int q_exp, int a_exp, const BigInt& coeff = 1);
  static LaurentPoly q() { return monomial(1, 0); }
  static LaurentPoly a() { return monomial(0, 1); }
  // z = q - q^-1
  static LaurentPoly z();
  // {k} = q^k - q^-k
  static LaurentPoly bracket(int k);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  BigInt coeff(int q_exp, int a_exp) const;

  // Adds coeff * q^qe a^ae in place.
  void add_term(int q_exp, int a_exp, const BigInt& coeff);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const BigInt& c);
  friend LaurentPoly operator+(LaurentPoly x, const LaurentPoly& y) { return x += y; }
  friend LaurentPoly operator-(LaurentPoly x, const LaurentPoly& y) { return x -= y; }
  friend LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y);
  friend LaurentPoly operator*(LaurentPoly x, const BigInt& c) { return x *= c; }
  LaurentPoly operator-() const;
  friend bool operator==(const LaurentPoly& x, const LaurentPoly& y) { return x.terms_ == y.terms_; }

  LaurentPoly pow(unsigned n) const;
  LaurentPoly shifted(int dq, int da) const;

  // Exact quotient in Z[q^{+-1}, a^{+-1}], or nullopt when d does not divide.
  std::optional<LaurentPoly> divide_exact(const LaurentPoly& d) const;
  // Coefficient-wise exact division by an integer.
  std::optional<LaurentPoly> divide_exact(const BigInt& d) const;

  // gcd of all coefficients (0 for the zero polynomial).
  BigInt content() const;

  int min_q() const;
  int max_q() const;
  int min_a() const;
  int max_a() const;

  // a -> q^k, giving a polynomial in q alone (a exponent 0).
  LaurentPoly specialize_a(int k) const;

  std::string to_string() const;
  nlohmann::json to_json() const;
  static LaurentPoly from_json(const nlohmann::json& j);

 private:
  TermMap terms_;
};

// Returns p / (q^k - q^-k) when the division is exact.
std::optional<LaurentPoly> try_div_bracket(const LaurentPoly& p, int k);
// Throws NotDivisible when the division is not exact.
LaurentPoly exact_div_bracket(const LaurentPoly& p, int k);

enum class QMap { Identity, Negate, Invert };
enum class AMap { Identity, Negate, Invert };

struct Substitution {
  QMap q = QMap::Identity;
  AMap a = AMap::Identity;
};

LaurentPoly substitute(const LaurentPoly& p, Substitution s);

class SkeinScalar {
 public:
  SkeinScalar() = default;
  SkeinScalar(long c) : SkeinScalar(LaurentPoly(c)) {}  // NOLINT(google-explicit-constructor)
  SkeinScalar(LaurentPoly numerator, std::vector<int> denominators = {});  // NOLINT

  // s = (a - a^-1) / (q - q^-1)
  static SkeinScalar s();
  static SkeinScalar z() { return SkeinScalar(LaurentPoly::z()); }
  static SkeinScalar bracket_inverse(int k) { return SkeinScalar(LaurentPoly(1L), {k}); }

  const LaurentPoly& numerator() const { return num_; }
  // Sorted ascending, with multiplicity.
  const std::vector<int>& denominators() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_laurent() const { return den_.empty(); }

  SkeinScalar& operator+=(const SkeinScalar& o);
  SkeinScalar& operator-=(const SkeinScalar& o);
  SkeinScalar& operator*=(const SkeinScalar& o);
  friend SkeinScalar operator+(SkeinScalar x, const SkeinScalar& y) { return x += y; }
  friend SkeinScalar operator-(SkeinScalar x, const SkeinScalar& y) { return x -= y; }
  friend SkeinScalar operator*(SkeinScalar x, const SkeinScalar& y) { return x *= y; }
  SkeinScalar operator-() const;
  // Value equality (cross-multiplied), not representation equality.
  friend bool operator==(const SkeinScalar& x, const SkeinScalar& y);

  SkeinScalar pow(unsigned n) const;

  // Exact quotient inside the bracket-denominator ring, or nullopt.
  std::optional<SkeinScalar> divide(const SkeinScalar& d) const;
  // Exact division of the numerator's integer content.
  std::optional<SkeinScalar> divide(const BigInt& d) const;

  SkeinScalar substitute(Substitution s) const;
  // a -> q^k.  The result is a scalar in q only.
  SkeinScalar specialize_a(int k) const;

  std::string to_string() const;
  nlohmann::json to_json() const;
  static SkeinScalar from_json(const nlohmann::json& j);

 private:
  void normalize();

  LaurentPoly num_;
  std::vector<int> den_;
};

// prod {k} over the given multiset.
LaurentPoly bracket_product(const std::vector<int>& ks);

enum class Ring { Laurent, Even, ZSq };

bool membership(const SkeinScalar& x, Ring ring);
const char* ring_name(Ring ring);

}  // namespace skeinlab
