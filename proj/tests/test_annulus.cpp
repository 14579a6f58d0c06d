#include <doctest.h>

#include "skeinlab/annulus.hpp"
#include "skeinlab/combinatorics.hpp"
#include "test_support.hpp"

using namespace skeinlab;
using namespace skeinlab::testing;

namespace {

AnnulusElement single(Basis b, Partition f, Partition r, SkeinScalar c = 1L) {
  AnnulusElement e(b);
  e.add_term(Monomial{std::move(f), std::move(r)}, c);
  return e;
}

AnnulusElement hh(Partition f, Partition r = {}) { return single(Basis::HH, std::move(f), std::move(r)); }
AnnulusElement pp(Partition f, Partition r = {}) { return single(Basis::PP, std::move(f), std::move(r)); }

AnnulusElement half(AnnulusElement e) {
  e.set_denominator(2);
  return e;
}

}  // namespace

TEST_CASE("q_matrix shapes") {
  const HMatrix m = q_matrix(Partition{1}, Partition{1});
  REQUIRE(m.size() == 2);
  CHECK(m[0][0] == HSymbol{true, 1});
  CHECK(m[0][1].is_one());
  CHECK(m[1][0].is_one());
  CHECK(m[1][1] == HSymbol{false, 1});
  const HMatrix m2 = q_matrix(Partition{2}, Partition{});
  REQUIRE(m2.size() == 1);
  CHECK(m2[0][0] == HSymbol{false, 2});
  CHECK(q_matrix(Partition{}, Partition{}).empty());
}

TEST_CASE("q_element examples") {
  CHECK(q_element(Partition{1}, Partition{1}) == hh({1}, {1}) - AnnulusElement::one(Basis::HH));
  CHECK(q_element(Partition{1}, Partition{}) == hh({1}));
  CHECK(q_element(Partition{2, 1}, Partition{}) == hh({2, 1}) - hh({3}));
  CHECK(q_element(Partition{}, Partition{}) == AnnulusElement::one(Basis::HH));
  CHECK(q_element(Partition{}, Partition{2}) == hh({}, {2}));
}

TEST_CASE("q_expand_qq examples") {
  auto sorted = [](std::vector<QQTerm> v) {
    std::sort(v.begin(), v.end(), [](const QQTerm& x, const QQTerm& y) {
      return std::tie(x.rho, x.nu, x.coeff) < std::tie(y.rho, y.nu, y.coeff);
    });
    return v;
  };
  CHECK(sorted(q_expand_qq(Partition{1}, Partition{1})) ==
        sorted({QQTerm{1, Partition{1}, Partition{1}}, QQTerm{-1, Partition{}, Partition{}}}));
  CHECK(q_expand_qq(Partition{2, 1}, Partition{}) == std::vector<QQTerm>{QQTerm{1, Partition{2, 1}, Partition{}}});
  CHECK(sorted(q_expand_qq(Partition{2}, Partition{1})) ==
        sorted({QQTerm{1, Partition{2}, Partition{1}}, QQTerm{-1, Partition{1}, Partition{}}}));
}

TEST_CASE("signed LR expansion re-expands to the determinant") {
  for (int i = 0; i <= 3; ++i) {
    for (int j = 0; j <= 3; ++j) {
      for (const auto& l : partitions_of(i)) {
        for (const auto& m : partitions_of(j)) {
          AnnulusElement sum(Basis::HH);
          for (const auto& t : q_expand_qq(l, m)) {
            sum += (schur_in_h(t.rho, false) * schur_in_h(t.nu, true)).scaled(SkeinScalar(static_cast<long>(t.coeff)));
          }
          INFO(l.to_string(), " ", m.to_string());
          CHECK(sum == q_element(l, m));
        }
      }
    }
  }
}

TEST_CASE("schur_in_h is Jacobi-Trudi") {
  CHECK(schur_in_h(Partition{2, 1}, false) == hh({2, 1}) - hh({3}));
  CHECK(schur_in_h(Partition{1, 1}, true) == hh({}, {1, 1}) - hh({}, {2}));
  CHECK(schur_in_h(Partition{3}, false) == hh({3}));
}

TEST_CASE("schur_to_powersum examples") {
  CHECK(schur_to_powersum(Partition{1}, false) == pp({1}));
  CHECK(schur_to_powersum(Partition{2}, false) == half(pp({2}) + pp({1, 1})));
  CHECK(schur_to_powersum(Partition{1, 1}, false) == half(pp({1, 1}) - pp({2})));
  CHECK(schur_to_powersum(Partition{2}, true) == half(pp({}, {2}) + pp({}, {1, 1})));
}

TEST_CASE("schur change of basis inverts the Frobenius formula") {
  for (int n = 0; n <= 5; ++n) {
    for (const auto& m : partitions_of(n)) {
      for (bool rev : {false, true}) {
        AnnulusElement sum(Basis::PP);
        for (const auto& l : partitions_of(n)) {
          sum += schur_to_powersum(l, rev).scaled(SkeinScalar(static_cast<long>(character(l, m))));
        }
        CHECK(sum == (rev ? pp({}, m) : pp(m)));
      }
    }
  }
}

TEST_CASE("qlm_to_pp examples") {
  CHECK(qlm_to_pp(Partition{1}, Partition{1}) == pp({1}, {1}) - AnnulusElement::one(Basis::PP));
  CHECK(qlm_to_pp(Partition{1}, Partition{}) == pp({1}));
  CHECK(qlm_to_pp(Partition{2}, Partition{}) == half(pp({2}) + pp({1, 1})));
}

TEST_CASE("pp_to_atoms examples") {
  const PatternAtom a00{false, 0, 0};
  const PatternAtom a10{false, 1, 0};
  const PatternAtom a01{false, 0, 1};
  const PatternAtom r00{true, 0, 0};
  const SkeinScalar c2 = SkeinScalar(LaurentPoly::z(), {2});

  const AtomCombination p1 = pp_to_atoms(Monomial{Partition{1}, Partition{}});
  REQUIRE(p1.size() == 1);
  CHECK(p1.begin()->first == AtomProduct{a00});
  CHECK(p1.begin()->second == SkeinScalar(1L));

  const AtomCombination p2 = pp_to_atoms(Monomial{Partition{2}, Partition{}});
  REQUIRE(p2.size() == 2);
  CHECK(p2.at(AtomProduct{a10}) == c2);
  CHECK(p2.at(AtomProduct{a01}) == c2);

  const AtomCombination p21 = pp_to_atoms(Monomial{Partition{2}, Partition{1}});
  REQUIRE(p21.size() == 2);
  CHECK(p21.at(AtomProduct{a10, r00}) == c2);
  CHECK(p21.at(AtomProduct{a01, r00}) == c2);
}

TEST_CASE("atom expansions preserve winding and clear with brackets") {
  for (int i = 0; i <= 4; ++i) {
    for (int j = 0; j <= 4 - i; ++j) {
      for (const auto& t : partitions_of(i)) {
        for (const auto& d : partitions_of(j)) {
          LaurentPoly clear(1L);
          for (int p : t.parts()) clear *= LaurentPoly::bracket(p);
          for (int p : d.parts()) clear *= LaurentPoly::bracket(p);
          for (const auto& [prod, c] : pp_to_atoms(Monomial{t, d})) {
            int fwd = 0;
            int rev = 0;
            for (const auto& atom : prod) (atom.reversed ? rev : fwd) += atom.winding();
            CHECK(fwd == i);
            CHECK(rev == j);
            CHECK((c * SkeinScalar(clear)).is_laurent());
          }
        }
      }
    }
  }
}

TEST_CASE("alpha_m") {
  CHECK(alpha_m(1) == SkeinScalar(1L));
  CHECK(alpha_m(2) == sc(mono(2, 0) + 1L));
  CHECK(alpha_m(3) == sc(mono(3, 0) * (mono(1, 0) + mono(-1, 0)) * (mono(2, 0) + 1L + mono(-2, 0))));
}
