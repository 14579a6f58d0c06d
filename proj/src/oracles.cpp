#include "skeinlab/oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace skeinlab::oracle {

std::vector<Partition> partitions_brute(int n) {
  std::set<std::vector<int>, std::greater<>> seen;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int remaining) {
    if (remaining == 0) {
      std::vector<int> sorted = cur;
      std::sort(sorted.begin(), sorted.end(), std::greater<>());
      seen.insert(sorted);
      return;
    }
    for (int p = 1; p <= remaining; ++p) {
      cur.push_back(p);
      rec(remaining - p);
      cur.pop_back();
    }
  };
  rec(n);
  std::vector<Partition> out;
  for (const auto& parts : seen) out.emplace_back(parts);
  return out;
}

int64_t character_brute(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) return 0;
  const int n = std::max(1, lambda.length());
  const int cap = lambda.part(0) + n - 1;
  using Poly = std::map<std::vector<int>, int64_t>;
  Poly poly;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    std::vector<int> e(n);
    for (int i = 0; i < n; ++i) e[i] = n - 1 - perm[i];
    poly[e] += inversions % 2 == 0 ? 1 : -1;
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (int m : mu.parts()) {
    Poly next;
    for (const auto& [e, c] : poly) {
      for (int i = 0; i < n; ++i) {
        std::vector<int> f = e;
        f[i] += m;
        if (f[i] > cap) continue;
        next[f] += c;
      }
    }
    poly = std::move(next);
  }
  std::vector<int> target(n);
  for (int i = 0; i < n; ++i) target[i] = lambda.part(i) + n - 1 - i;
  auto it = poly.find(target);
  return it == poly.end() ? 0 : it->second;
}

int64_t lr_by_characters(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (nu.size() != lambda.size() + mu.size()) return 0;
  const int64_t fl = factorial(lambda.size());
  const int64_t fm = factorial(mu.size());
  int64_t total = 0;
  for (const Partition& rho : partitions_of(lambda.size())) {
    for (const Partition& tau : partitions_of(mu.size())) {
      total += character(lambda, rho) * character(mu, tau) * character(nu, merge(rho, tau)) * (fl / rho.z()) *
               (fm / tau.z());
    }
  }
  return total / (fl * fm);
}

bool zsq_greedy(const LaurentPoly& p) {
  std::map<int, LaurentPoly> by_a;
  for (const auto& [e, c] : p.terms()) by_a[e.second].add_term(e.first, 0, c);
  const LaurentPoly z2 = LaurentPoly::z() * LaurentPoly::z();
  for (auto& [a, f] : by_a) {
    while (!f.is_zero()) {
      const int d = f.max_q();
      if (d < 0 || d % 2 != 0) return false;
      f -= z2.pow(static_cast<unsigned>(d / 2)) * f.coeff(d, 0);
    }
  }
  return true;
}

VerificationReport combinatorics_suite(int character_n, int orthogonality_n, int lr_size, int sign_size,
                                       int rectangle) {
  VerificationReport rep;
  const std::string le = "<=";

  {
    bool ok = true;
    int count = 0;
    for (int n = 0; n <= 10; ++n) {
      const auto a = partitions_of(n);
      auto b = partitions_brute(n);
      ok = ok && a == b;
    }
    for (int n = 0; n <= 10; ++n) count += static_cast<int>(partitions_of(n).size());
    rep.add("partition enumeration = brute force, n " + le + " 10", ok, std::to_string(count) + " partitions");
  }
  {
    bool ok = true;
    int count = 0;
    for (int n = 0; n <= character_n; ++n) {
      for (const auto& l : partitions_of(n)) {
        for (const auto& m : partitions_of(n)) {
          ok = ok && character(l, m) == character_brute(l, m);
          ++count;
        }
      }
    }
    rep.add("Murnaghan-Nakayama = brute-force characters, n " + le + " " + std::to_string(character_n), ok,
            std::to_string(count) + " pairs");
  }
  {
    bool ok = true;
    for (int n = 0; n <= orthogonality_n; ++n) {
      const auto parts = partitions_of(n);
      for (const auto& m : parts) {
        for (const auto& v : parts) {
          int64_t s = 0;
          for (const auto& l : parts) s += character(l, m) * character(l, v);
          ok = ok && s == (m == v ? m.z() : 0);
        }
      }
    }
    rep.add("character orthogonality, n " + le + " " + std::to_string(orthogonality_n), ok);
  }
  {
    bool ok = true;
    for (int n = 0; n <= orthogonality_n; ++n) {
      for (const auto& l : partitions_of(n)) {
        for (const auto& m : partitions_of(n)) {
          const int64_t sign = (n - m.length()) % 2 == 0 ? 1 : -1;
          ok = ok && character(l.conjugate(), m) == sign * character(l, m);
        }
      }
    }
    rep.add("character conjugation identity, n " + le + " " + std::to_string(orthogonality_n), ok);
  }
  {
    bool ok = true;
    int count = 0;
    for (int i = 0; i <= lr_size; ++i) {
      for (int j = 0; j <= lr_size; ++j) {
        for (const auto& l : partitions_of(i)) {
          for (const auto& m : partitions_of(j)) {
            for (const auto& v : partitions_of(i + j)) {
              ok = ok && lr_coefficient(l, m, v) == lr_by_characters(l, m, v);
              ++count;
            }
          }
        }
      }
    }
    rep.add("LR tableau rule = character sum, sizes " + le + " " + std::to_string(lr_size), ok,
            std::to_string(count) + " triples");
  }
  {
    bool ok = true;
    for (int n = 0; n <= lr_size; ++n) {
      for (const auto& l : partitions_of(n)) {
        for (int k = 0; k <= n; ++k) {
          for (const auto& s : partitions_of(k)) {
            for (const auto& r : partitions_of(n - k)) {
              ok = ok && lr_coefficient(s, r, l) == lr_coefficient(s.conjugate(), r.conjugate(), l.conjugate());
            }
          }
        }
      }
    }
    rep.add("LR conjugation identity, sizes " + le + " " + std::to_string(lr_size), ok);
  }
  {
    bool ok = true;
    for (int n = 0; n <= sign_size; ++n) {
      for (const auto& l : partitions_of(n)) {
        int total = 0;
        const auto h = l.hooks();
        const auto c = l.contents();
        for (std::size_t i = 0; i < h.size(); ++i) total += h[i] + c[i];
        ok = ok && (total % 2 == n % 2);
      }
    }
    rep.add("sign identity over hooks and contents, |lambda| " + le + " " + std::to_string(sign_size), ok);
  }
  {
    bool ok = true;
    for (int r = 1; r <= rectangle; ++r) {
      for (int rho = 1; rho <= rectangle; ++rho) {
        const Partition rect(std::vector<int>(rho, r));
        const std::vector<Color> colors{Color{}, Color{rect, Partition{}}};
        ok = ok && rectangle_prefactor(r, rho) == prefactor(colors, 0);
      }
    }
    rep.add("rectangle closed form = hook/content product, r,rho " + le + " " + std::to_string(rectangle), ok);
  }
  return rep;
}

}  // namespace skeinlab::oracle
