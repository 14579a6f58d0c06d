#include "skeinlab/annulus.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace skeinlab {

std::string Monomial::to_string(Basis basis) const {
  std::string out;
  auto emit = [&out](const char* sym, const Partition& p) {
    for (int m : p.parts()) {
      if (!out.empty()) out += '*';
      out += sym + std::to_string(m);
    }
  };
  if (basis == Basis::HH) {
    emit("h_", forward);
    emit("h*_", reversed);
  } else {
    emit("P_", forward);
    emit("P*_", reversed);
  }
  return out.empty() ? "1" : out;
}

AnnulusElement AnnulusElement::one(Basis basis) {
  AnnulusElement e(basis);
  e.add_term(Monomial{}, SkeinScalar(1L));
  return e;
}

AnnulusElement AnnulusElement::h(int m, bool reversed) {
  AnnulusElement e(Basis::HH);
  if (m < 0) return e;
  if (m == 0) return one(Basis::HH);
  Monomial mono;
  (reversed ? mono.reversed : mono.forward) = Partition{m};
  e.add_term(mono, SkeinScalar(1L));
  return e;
}

void AnnulusElement::add_term(const Monomial& m, const SkeinScalar& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void AnnulusElement::set_denominator(BigInt d) {
  denominator_ *= d;
  reduce_denominator();
}

void AnnulusElement::reduce_denominator() {
  if (denominator_ < 0) {
    denominator_ = -denominator_;
    for (auto& [m, c] : terms_) c = -c;
  }
  if (terms_.empty()) {
    denominator_ = 1;
    return;
  }
  BigInt g = denominator_;
  for (const auto& [m, c] : terms_) {
    const BigInt content = c.numerator().content();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), content.get_mpz_t());
    if (g == 1) return;
  }
  for (auto& [m, c] : terms_) c = *c.divide(g);
  mpz_divexact(denominator_.get_mpz_t(), denominator_.get_mpz_t(), g.get_mpz_t());
}

AnnulusElement& AnnulusElement::operator+=(const AnnulusElement& o) {
  if (basis_ != o.basis_) throw std::invalid_argument("AnnulusElement: basis mismatch");
  BigInt l;
  mpz_lcm(l.get_mpz_t(), denominator_.get_mpz_t(), o.denominator_.get_mpz_t());
  const SkeinScalar mine(LaurentPoly(BigInt(l / denominator_)));
  const SkeinScalar theirs(LaurentPoly(BigInt(l / o.denominator_)));
  std::map<Monomial, SkeinScalar> merged;
  for (const auto& [m, c] : terms_) merged.emplace(m, c * mine);
  terms_ = std::move(merged);
  for (const auto& [m, c] : o.terms_) add_term(m, c * theirs);
  denominator_ = l;
  reduce_denominator();
  return *this;
}

AnnulusElement& AnnulusElement::operator-=(const AnnulusElement& o) { return *this += o.scaled(SkeinScalar(-1L)); }

AnnulusElement operator*(const AnnulusElement& x, const AnnulusElement& y) {
  if (x.basis_ != y.basis_) throw std::invalid_argument("AnnulusElement: basis mismatch");
  AnnulusElement r(x.basis_);
  for (const auto& [mx, cx] : x.terms_) {
    for (const auto& [my, cy] : y.terms_) {
      r.add_term(Monomial{merge(mx.forward, my.forward), merge(mx.reversed, my.reversed)}, cx * cy);
    }
  }
  r.denominator_ = x.denominator_ * y.denominator_;
  r.reduce_denominator();
  return r;
}

AnnulusElement AnnulusElement::scaled(const SkeinScalar& c) const {
  AnnulusElement r(basis_);
  for (const auto& [m, v] : terms_) r.add_term(m, v * c);
  r.denominator_ = denominator_;
  r.reduce_denominator();
  return r;
}

bool operator==(const AnnulusElement& x, const AnnulusElement& y) {
  if (x.basis_ != y.basis_) return false;
  const SkeinScalar dx(LaurentPoly(x.denominator_));
  const SkeinScalar dy(LaurentPoly(y.denominator_));
  for (const auto& [m, c] : x.terms_) {
    auto it = y.terms_.find(m);
    if (it == y.terms_.end() || !(c * dy == it->second * dx)) return false;
  }
  for (const auto& [m, c] : y.terms_) {
    if (x.terms_.count(m) == 0) return false;
  }
  return true;
}

bool AnnulusElement::homogeneous(int d, int t) const {
  return std::all_of(terms_.begin(), terms_.end(), [&](const auto& kv) {
    return kv.first.forward.size() == d && kv.first.reversed.size() == t;
  });
}

std::string AnnulusElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    os << "(" << c.to_string() << ")";
    if (!(m == Monomial{})) os << "*" << m.to_string(basis_);
    first = false;
  }
  if (denominator_ != 1) return "(" + os.str() + ")/" + denominator_.get_str();
  return os.str();
}

nlohmann::json AnnulusElement::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : terms_) {
    terms.push_back({{"monomial", {{"forward", m.forward.to_json()}, {"reversed", m.reversed.to_json()}}},
                     {"coefficient", c.to_json()}});
  }
  return {{"basis", basis_ == Basis::HH ? "HH" : "PP"}, {"denominator", denominator_.get_str()}, {"terms", terms}};
}

std::string HSymbol::to_string() const {
  if (is_zero()) return "0";
  if (is_one()) return "1";
  return (reversed ? "h*_" : "h_") + std::to_string(index);
}

HMatrix q_matrix(const Partition& lambda, const Partition& mu) {
  const int l = lambda.length();
  const int r = mu.length();
  const int n = l + r;
  HMatrix m(n, std::vector<HSymbol>(n));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = HSymbol{true, mu.part(r - 1 - i) + i - j};
  }
  for (int k = 0; k < l; ++k) {
    for (int j = 0; j < n; ++j) m[r + k][j] = HSymbol{false, lambda.part(k) - k - r + j};
  }
  for (auto& row : m) {
    for (auto& e : row) {
      if (e.index < 0) e.index = -1;
    }
  }
  return m;
}

AnnulusElement q_element(const Partition& lambda, const Partition& mu) {
  const HMatrix m = q_matrix(lambda, mu);
  const int n = static_cast<int>(m.size());
  std::map<Monomial, int64_t> acc;
  std::vector<int> h_idx;
  std::vector<int> hs_idx;
  std::vector<bool> used(n, false);
  // Leibniz expansion row by row; the sign is the parity of inversions.
  std::function<void(int, int)> rec = [&](int row, int sign) {
    if (row == n) {
      std::vector<int> f = h_idx;
      std::vector<int> rv = hs_idx;
      std::sort(f.begin(), f.end(), std::greater<>());
      std::sort(rv.begin(), rv.end(), std::greater<>());
      acc[Monomial{Partition(std::move(f)), Partition(std::move(rv))}] += sign;
      return;
    }
    for (int col = 0; col < n; ++col) {
      if (used[col] || m[row][col].is_zero()) continue;
      int inversions = 0;
      for (int c = col + 1; c < n; ++c) {
        if (used[c]) ++inversions;
      }
      const HSymbol e = m[row][col];
      auto& bucket = e.reversed ? hs_idx : h_idx;
      if (!e.is_one()) bucket.push_back(e.index);
      used[col] = true;
      rec(row + 1, (inversions % 2) ? -sign : sign);
      used[col] = false;
      if (!e.is_one()) bucket.pop_back();
    }
  };
  rec(0, 1);
  AnnulusElement out(Basis::HH);
  for (const auto& [mono, c] : acc) {
    if (c != 0) out.add_term(mono, SkeinScalar(static_cast<long>(c)));
  }
  return out;
}

std::vector<QQTerm> q_expand_qq(const Partition& lambda, const Partition& mu) {
  std::map<std::pair<Partition, Partition>, int64_t> acc;
  const int top = std::min(lambda.size(), mu.size());
  for (int k = 0; k <= top; ++k) {
    for (const Partition& sigma : partitions_of(k)) {
      if (!sigma.contained_in(lambda) || !sigma.conjugate().contained_in(mu)) continue;
      const Partition sigma_t = sigma.conjugate();
      for (const Partition& rho : partitions_of(lambda.size() - k)) {
        const int64_t c1 = lr_coefficient(sigma, rho, lambda);
        if (c1 == 0) continue;
        for (const Partition& nu : partitions_of(mu.size() - k)) {
          const int64_t c2 = lr_coefficient(sigma_t, nu, mu);
          if (c2 == 0) continue;
          acc[{rho, nu}] += ((k % 2) ? -1 : 1) * c1 * c2;
        }
      }
    }
  }
  std::vector<QQTerm> out;
  for (const auto& [key, c] : acc) {
    if (c != 0) out.push_back(QQTerm{c, key.first, key.second});
  }
  return out;
}

AnnulusElement schur_in_h(const Partition& lambda, bool reversed) {
  return reversed ? q_element(Partition{}, lambda) : q_element(lambda, Partition{});
}

AnnulusElement schur_to_powersum(const Partition& lambda, bool reversed) {
  const int n = lambda.size();
  if (n == 0) return AnnulusElement::one(Basis::PP);
  const int64_t nfact = factorial(n);
  AnnulusElement out(Basis::PP);
  for (const Partition& mu : partitions_of(n)) {
    const int64_t chi = character(lambda, mu);
    if (chi == 0) continue;
    Monomial mono;
    (reversed ? mono.reversed : mono.forward) = mu;
    out.add_term(mono, SkeinScalar(static_cast<long>(chi * (nfact / mu.z()))));
  }
  out.set_denominator(BigInt(static_cast<long>(nfact)));
  return out;
}

AnnulusElement qlm_to_pp(const Partition& lambda, const Partition& mu) {
  AnnulusElement out(Basis::PP);
  for (const QQTerm& t : q_expand_qq(lambda, mu)) {
    AnnulusElement term = schur_to_powersum(t.rho, false) * schur_to_powersum(t.nu, true);
    out += term.scaled(SkeinScalar(static_cast<long>(t.coeff)));
  }
  return out;
}

std::string PatternAtom::to_string() const {
  return std::string(reversed ? "A*(" : "A(") + std::to_string(i) + "," + std::to_string(j) + ")";
}

int total_winding(const AtomProduct& p) {
  int w = 0;
  for (const auto& a : p) w += a.winding();
  return w;
}

AtomCombination pp_to_atoms(const Monomial& monomial) {
  std::vector<std::pair<int, bool>> parts;
  for (int m : monomial.forward.parts()) parts.emplace_back(m, false);
  for (int m : monomial.reversed.parts()) parts.emplace_back(m, true);

  LaurentPoly num(1L);
  std::vector<int> den;
  for (const auto& [m, rev] : parts) {
    num *= LaurentPoly::z();
    den.push_back(m);
  }
  const SkeinScalar common(std::move(num), std::move(den));

  std::map<AtomProduct, long> counts;
  AtomProduct cur;
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == parts.size()) {
      AtomProduct sorted = cur;
      std::sort(sorted.begin(), sorted.end());
      ++counts[sorted];
      return;
    }
    const auto [m, rev] = parts[idx];
    for (int j = 0; j < m; ++j) {
      cur.push_back(PatternAtom{rev, m - 1 - j, j});
      rec(idx + 1);
      cur.pop_back();
    }
  };
  rec(0);

  AtomCombination out;
  for (const auto& [prod, c] : counts) out.emplace(prod, common * SkeinScalar(c));
  return out;
}

AtomCombination pp_element_to_atoms(const AnnulusElement& element) {
  AtomCombination out;
  for (const auto& [mono, coeff] : element.terms()) {
    for (const auto& [prod, c] : pp_to_atoms(mono)) {
      auto [it, inserted] = out.try_emplace(prod, c * coeff);
      if (!inserted) it->second += c * coeff;
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  }
  return out;
}

SkeinScalar alpha_m(int m) {
  LaurentPoly num = LaurentPoly::monomial(m * (m - 1) / 2, 0);
  for (int i = 1; i <= m; ++i) num *= LaurentPoly::bracket(i);
  return SkeinScalar(std::move(num), std::vector<int>(m, 1));
}

}  // namespace skeinlab
