#include "skeinlab/ring.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "skeinlab/errors.hpp"

namespace skeinlab {

namespace {

// Multiset as {value -> multiplicity}.
std::map<int, int> counts(const std::vector<int>& ks) {
  std::map<int, int> c;
  for (int k : ks) ++c[k];
  return c;
}

}  // namespace

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_.emplace(Exponent{0, 0}, BigInt(c));
}

LaurentPoly::LaurentPoly(const BigInt& c) {
  if (c != 0) terms_.emplace(Exponent{0, 0}, c);
}

LaurentPoly LaurentPoly::monomial(int q_exp, int a_exp, const BigInt& coeff) {
  LaurentPoly p;
  if (coeff != 0) p.terms_.emplace(Exponent{q_exp, a_exp}, coeff);
  return p;
}

LaurentPoly LaurentPoly::z() { return bracket(1); }

LaurentPoly LaurentPoly::bracket(int k) {
  LaurentPoly p = monomial(k, 0);
  p.add_term(-k, 0, -1);
  return p;
}

BigInt LaurentPoly::coeff(int q_exp, int a_exp) const {
  auto it = terms_.find({q_exp, a_exp});
  return it == terms_.end() ? BigInt(0) : it->second;
}

void LaurentPoly::add_term(int q_exp, int a_exp, const BigInt& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(Exponent{q_exp, a_exp}, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y) {
  LaurentPoly r;
  BigInt prod;
  for (const auto& [ex, cx] : x.terms_) {
    for (const auto& [ey, cy] : y.terms_) {
      prod = cx * cy;
      r.add_term(ex.first + ey.first, ex.second + ey.second, prod);
    }
  }
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const BigInt& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [e, v] : terms_) v *= c;
  }
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, v] : r.terms_) v = -v;
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly result(1L);
  LaurentPoly base = *this;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::shifted(int dq, int da) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), Exponent{e.first + dq, e.second + da}, c);
  return r;
}

int LaurentPoly::min_q() const {
  int m = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first || e.first < m) m = e.first;
    first = false;
  }
  return m;
}

int LaurentPoly::max_q() const { return terms_.empty() ? 0 : terms_.begin()->first.first; }

int LaurentPoly::min_a() const {
  int m = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first || e.second < m) m = e.second;
    first = false;
  }
  return m;
}

int LaurentPoly::max_a() const {
  int m = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first || e.second > m) m = e.second;
    first = false;
  }
  return m;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& d) const {
  if (d.is_zero()) return std::nullopt;
  if (is_zero()) return LaurentPoly{};
  // Degrees are additive in each variable separately, which bounds the
  // exponents any quotient term may carry.
  const int lo_q = min_q() - d.min_q();
  const int hi_q = max_q() - d.max_q();
  const int lo_a = min_a() - d.min_a();
  const int hi_a = max_a() - d.max_a();
  if (lo_q > hi_q || lo_a > hi_a) return std::nullopt;

  const auto& [lead_e, lead_c] = *d.terms_.begin();
  LaurentPoly rem = *this;
  LaurentPoly quot;
  BigInt t;
  while (!rem.is_zero()) {
    const auto& [re, rc] = *rem.terms_.begin();
    const int tq = re.first - lead_e.first;
    const int ta = re.second - lead_e.second;
    if (tq < lo_q || tq > hi_q || ta < lo_a || ta > hi_a) return std::nullopt;
    if (!mpz_divisible_p(rc.get_mpz_t(), lead_c.get_mpz_t())) return std::nullopt;
    mpz_divexact(t.get_mpz_t(), rc.get_mpz_t(), lead_c.get_mpz_t());
    quot.add_term(tq, ta, t);
    for (const auto& [de, dc] : d.terms_) rem.add_term(de.first + tq, de.second + ta, -(t * dc));
  }
  return quot;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const BigInt& d) const {
  if (d == 0) return std::nullopt;
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) {
    if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t())) return std::nullopt;
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
  }
  return r;
}

BigInt LaurentPoly::content() const {
  BigInt g = 0;
  for (const auto& [e, c] : terms_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

LaurentPoly LaurentPoly::specialize_a(int k) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.add_term(e.first + k * e.second, 0, c);
  return r;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  // Grouped by a-exponent (descending); within a group, larger |q| first.
  std::vector<std::pair<Exponent, const BigInt*>> order;
  for (const auto& [e, c] : terms_) order.emplace_back(e, &c);
  std::stable_sort(order.begin(), order.end(), [](const auto& x, const auto& y) {
    if (x.first.second != y.first.second) return x.first.second > y.first.second;
    return std::abs(x.first.first) > std::abs(y.first.first);
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, cp] : order) {
    const BigInt& c = *cp;
    std::string mono;
    auto append = [&mono](const char* var, int exp) {
      if (exp == 0) return;
      if (!mono.empty()) mono += '*';
      mono += var;
      if (exp != 1) mono += "^" + std::to_string(exp);
    };
    append("q", e.first);
    append("a", e.second);
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mono.empty()) {
      os << mag.get_str();
    } else if (mag == 1) {
      os << mono;
    } else {
      os << mag.get_str() << '*' << mono;
    }
    first = false;
  }
  return os.str();
}

nlohmann::json LaurentPoly::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [e, c] : terms_) j.push_back({e.first, e.second, c.get_str()});
  return j;
}

LaurentPoly LaurentPoly::from_json(const nlohmann::json& j) {
  LaurentPoly p;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3) throw ParseError("polynomial term must be [q_exp, a_exp, coeff]");
    BigInt c;
    if (t[2].is_string()) {
      if (c.set_str(t[2].get<std::string>(), 10) != 0) throw ParseError("bad coefficient");
    } else {
      c = t[2].get<long>();
    }
    p.add_term(t[0].get<int>(), t[1].get<int>(), c);
  }
  return p;
}

std::optional<LaurentPoly> try_div_bracket(const LaurentPoly& p, int k) {
  if (k <= 0) return std::nullopt;
  // Peel the top q-degree term of each a-slice: c q^e = c q^{e-k} {k} + c q^{e-2k}.
  LaurentPoly rem = p;
  LaurentPoly quot;
  while (!rem.is_zero()) {
    auto it = rem.terms().begin();
    const int e = it->first.first;
    const int ae = it->first.second;
    const BigInt c = it->second;
    // The bottom of this slice cannot be cancelled once the span is < 2k.
    int slice_min = e;
    for (const auto& [ex, cx] : rem.terms()) {
      if (ex.second == ae && ex.first < slice_min) slice_min = ex.first;
    }
    if (e - slice_min < 2 * k) return std::nullopt;
    quot.add_term(e - k, ae, c);
    rem.add_term(e, ae, -c);
    rem.add_term(e - 2 * k, ae, c);
  }
  return quot;
}

LaurentPoly exact_div_bracket(const LaurentPoly& p, int k) {
  auto r = try_div_bracket(p, k);
  if (!r) throw NotDivisible("{" + std::to_string(k) + "} does not divide " + p.to_string());
  return *std::move(r);
}

LaurentPoly substitute(const LaurentPoly& p, Substitution s) {
  LaurentPoly r;
  for (const auto& [e, c] : p.terms()) {
    int qe = e.first;
    int ae = e.second;
    BigInt v = c;
    if (s.q == QMap::Negate && (qe & 1)) v = -v;
    if (s.q == QMap::Invert) qe = -qe;
    if (s.a == AMap::Negate && (ae & 1)) v = -v;
    if (s.a == AMap::Invert) ae = -ae;
    r.add_term(qe, ae, v);
  }
  return r;
}

LaurentPoly bracket_product(const std::vector<int>& ks) {
  LaurentPoly r(1L);
  for (int k : ks) r *= LaurentPoly::bracket(k);
  return r;
}

SkeinScalar::SkeinScalar(LaurentPoly numerator, std::vector<int> denominators)
    : num_(std::move(numerator)), den_(std::move(denominators)) {
  normalize();
}

SkeinScalar SkeinScalar::s() {
  LaurentPoly num = LaurentPoly::a() - LaurentPoly::monomial(0, -1);
  return SkeinScalar(std::move(num), {1});
}

void SkeinScalar::normalize() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  std::sort(den_.begin(), den_.end(), std::greater<>());
  std::vector<int> kept;
  kept.reserve(den_.size());
  for (int k : den_) {
    if (auto quot = try_div_bracket(num_, k)) {
      num_ = *std::move(quot);
    } else {
      kept.push_back(k);
    }
  }
  std::sort(kept.begin(), kept.end());
  den_ = std::move(kept);
}

SkeinScalar& SkeinScalar::operator+=(const SkeinScalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    normalize();
    return *this;
  }
  auto mine = counts(den_);
  auto theirs = counts(o.den_);
  std::vector<int> mine_missing;
  std::vector<int> theirs_missing;
  std::vector<int> lcm;
  for (const auto& [k, m] : mine) {
    auto it = theirs.find(k);
    const int n = it == theirs.end() ? 0 : it->second;
    for (int i = 0; i < std::max(m, n); ++i) lcm.push_back(k);
    for (int i = m; i < n; ++i) mine_missing.push_back(k);
    for (int i = n; i < m; ++i) theirs_missing.push_back(k);
  }
  for (const auto& [k, n] : theirs) {
    if (mine.count(k) == 0) {
      for (int i = 0; i < n; ++i) {
        lcm.push_back(k);
        mine_missing.push_back(k);
      }
    }
  }
  num_ = num_ * bracket_product(mine_missing) + o.num_ * bracket_product(theirs_missing);
  den_ = std::move(lcm);
  normalize();
  return *this;
}

SkeinScalar& SkeinScalar::operator-=(const SkeinScalar& o) { return *this += -o; }

SkeinScalar& SkeinScalar::operator*=(const SkeinScalar& o) {
  num_ *= o.num_;
  den_.insert(den_.end(), o.den_.begin(), o.den_.end());
  normalize();
  return *this;
}

SkeinScalar SkeinScalar::operator-() const {
  SkeinScalar r = *this;
  r.num_ = -r.num_;
  return r;
}

bool operator==(const SkeinScalar& x, const SkeinScalar& y) {
  if (x.den_ == y.den_) return x.num_ == y.num_;
  return x.num_ * bracket_product(y.den_) == y.num_ * bracket_product(x.den_);
}

SkeinScalar SkeinScalar::pow(unsigned n) const {
  SkeinScalar r(1L);
  for (unsigned i = 0; i < n; ++i) r *= *this;
  return r;
}

std::optional<SkeinScalar> SkeinScalar::divide(const SkeinScalar& d) const {
  if (d.is_zero()) return std::nullopt;
  LaurentPoly num = num_ * bracket_product(d.den_);
  LaurentPoly div = d.num_;
  std::vector<int> den = den_;
  const int span = std::max(1, (div.max_q() - div.min_q()) / 2);
  for (int k = span; k >= 1; --k) {
    while (auto quot = try_div_bracket(div, k)) {
      div = *std::move(quot);
      den.push_back(k);
    }
  }
  // Factors of div that only divide some bracket (e.g. q + q^-1 | {2}) are
  // absorbed by multiplying through by brackets and dividing back out.
  for (int pass = 0; pass < 4; ++pass) {
    if (auto quot = num.divide_exact(div)) return SkeinScalar(*std::move(quot), std::move(den));
    for (int k = 1; k <= span; ++k) {
      num *= LaurentPoly::bracket(k);
      den.push_back(k);
    }
  }
  return std::nullopt;
}

std::optional<SkeinScalar> SkeinScalar::divide(const BigInt& d) const {
  auto quot = num_.divide_exact(d);
  if (!quot) return std::nullopt;
  SkeinScalar r;
  r.num_ = *std::move(quot);
  r.den_ = den_;
  return r;
}

SkeinScalar SkeinScalar::substitute(Substitution s) const {
  LaurentPoly num = skeinlab::substitute(num_, s);
  int flips = 0;
  for (int k : den_) {
    if (s.q == QMap::Negate && (k & 1)) ++flips;
    if (s.q == QMap::Invert) ++flips;
  }
  if (flips & 1) num = -num;
  return SkeinScalar(std::move(num), den_);
}

SkeinScalar SkeinScalar::specialize_a(int k) const { return SkeinScalar(num_.specialize_a(k), den_); }

std::string SkeinScalar::to_string() const {
  if (den_.empty()) return num_.to_string();
  std::string out = "(" + num_.to_string() + ")/(";
  auto c = counts(den_);
  bool first = true;
  for (const auto& [k, m] : c) {
    if (!first) out += '*';
    out += "{" + std::to_string(k) + "}";
    if (m > 1) out += "^" + std::to_string(m);
    first = false;
  }
  return out + ")";
}

nlohmann::json SkeinScalar::to_json() const {
  return {{"numerator", num_.to_json()}, {"denominators", den_}};
}

SkeinScalar SkeinScalar::from_json(const nlohmann::json& j) {
  return SkeinScalar(LaurentPoly::from_json(j.at("numerator")), j.value("denominators", std::vector<int>{}));
}

bool membership(const SkeinScalar& x, Ring ring) {
  if (!x.is_laurent()) return false;
  const LaurentPoly& p = x.numerator();
  switch (ring) {
    case Ring::Laurent:
      return true;
    case Ring::Even:
      return std::all_of(p.terms().begin(), p.terms().end(), [](const auto& t) {
        return (t.first.first % 2 == 0) && (t.first.second % 2 == 0);
      });
    case Ring::ZSq:
      return substitute(p, {QMap::Negate, AMap::Identity}) == p && substitute(p, {QMap::Invert, AMap::Identity}) == p;
  }
  return false;
}

const char* ring_name(Ring ring) {
  switch (ring) {
    case Ring::Laurent:
      return "LAURENT";
    case Ring::Even:
      return "EVEN";
    case Ring::ZSq:
      return "ZSQ";
  }
  return "?";
}

}  // namespace skeinlab
