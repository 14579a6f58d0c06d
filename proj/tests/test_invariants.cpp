#include <doctest.h>

#include "skeinlab/errors.hpp"
#include "skeinlab/invariants.hpp"
#include "test_support.hpp"

using namespace skeinlab;
using namespace skeinlab::testing;

namespace {

const Partition E{};
const Color kFund{Partition{1}, E};

ColoredLink link(const std::string& braid, std::vector<Color> colors) {
  return ColoredLink{BraidWord::parse(braid), std::move(colors)};
}

InvariantOptions opts(int threads = 1) {
  InvariantOptions o;
  o.threads = threads;
  return o;
}

SkeinScalar am(int k) { return SkeinScalar(LaurentPoly::monomial(0, k)); }

std::vector<Color> colors_up_to(int n) {
  std::vector<Color> out;
  for (int t = 0; t <= n; ++t) {
    for (int i = 0; i <= t; ++i) {
      for (const auto& l : partitions_of(i)) {
        for (const auto& m : partitions_of(t - i)) out.push_back({l, m});
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("colour parsing and json") {
  const auto cs = parse_colors("[2,1]/[1];[1]");
  REQUIRE(cs.size() == 2);
  CHECK(cs[0] == Color{Partition{2, 1}, Partition{1}});
  CHECK(cs[1] == kFund);
  CHECK(parse_colors(R"([{"lambda":[2],"mu":[1]}])") == std::vector<Color>{Color{Partition{2}, Partition{1}}});
  CHECK(Color::from_json(cs[0].to_json()) == cs[0]);
  CHECK(cs[0].to_string() == "[2,1]/[1]");
  CHECK_THROWS(parse_colors("[1,2]"));

  const ColoredLink cl = link("2:[1,1]", {kFund, Color{Partition{2}, E}});
  const ColoredLink back = ColoredLink::from_json(cl.to_json());
  CHECK(back.companion == cl.companion);
  CHECK(back.colors == cl.colors);
  CHECK(cl.total_size() == 3);
  CHECK(cl.conjugated().colors[1] == Color{Partition{1, 1}, E});
  CHECK_THROWS_AS(link("2:[1,1]", {kFund}).validate(), ComponentMismatch);
}

TEST_CASE("companion self-writhe") {
  CHECK(companion_self_writhe(BraidWord::parse("2:[1,1,1]")) == std::vector<int>{3});
  CHECK(companion_self_writhe(BraidWord::parse("2:[1,1]")) == std::vector<int>{0, 0});
  CHECK(companion_self_writhe(BraidWord::parse("3:[1,1,-2]")) == std::vector<int>{0, -1});
}

TEST_CASE("full_W examples") {
  InvariantEngine eng(opts());
  CHECK(eng.full_W(link("1:[]", {kFund})) == S());
  CHECK(eng.full_W(link("1:[]", {Color{Partition{1}, Partition{1}}})) == S() * S() - SkeinScalar(1L));
  CHECK(eng.full_W(link("2:[1,1,1]", {kFund})) ==
        am(-3) * (A() * S() * (SkeinScalar(1L) + Z() * Z()) + Z() * S() * S()));
  CHECK_THROWS_AS(eng.full_W(link("2:[1,1]", {kFund})), ComponentMismatch);
  InvariantOptions small = opts();
  small.max_color_size = 1;
  InvariantEngine limited(small);
  CHECK_THROWS_AS(limited.full_W(link("1:[]", {Color{Partition{2}, E}})), ResourceLimit);
}

TEST_CASE("framing independence under Markov stabilization") {
  InvariantEngine eng(opts());
  const Color c2{Partition{2}, E};
  const Color c11{Partition{1}, Partition{1}};
  for (const Color& c : {kFund, c2, c11}) {
    INFO(c.to_string());
    const SkeinScalar w = eng.full_W(link("2:[1,1,1]", {c}));
    CHECK(eng.full_W(link("3:[1,1,1,2]", {c})) == w);
    CHECK(eng.full_W(link("3:[1,1,1,-2]", {c})) == w);
  }
  for (const Color& c : {kFund, c2}) {
    const SkeinScalar w = eng.full_W(link("2:[1,1]", {c, kFund}));
    CHECK(eng.full_W(link("3:[1,1,2]", {c, kFund})) == w);
    CHECK(eng.full_W(link("3:[1,1,-2]", {c, kFund})) == w);
  }
}

TEST_CASE("bundle order does not matter") {
  // Hopf with ((1),(1)) on both components: each bundle carries A*(0,0) and
  // A(0,0), so swapping bundle order only swaps the strand directions.
  const std::vector<AtomProduct> pats(2, AtomProduct{PatternAtom{false, 0, 0}, PatternAtom{true, 0, 0}});
  const CableBraid cb = cable_braid(BraidWord{2, {1, 1}}, pats);
  REQUIRE(cb.directions == std::vector<int>{1, -1, 1, -1});
  const std::vector<int> swapped{-1, 1, -1, 1};
  CHECK(homfly(closure_with_directions(cb.braid, cb.directions)) ==
        homfly(closure_with_directions(cb.braid, swapped)));
}

TEST_CASE("thread count does not change values") {
  InvariantEngine one(opts(1));
  InvariantEngine many(opts(4));
  for (const auto& cl : {link("2:[1,1,1]", {Color{Partition{1}, Partition{1}}}),
                         link("2:[1,1]", {Color{Partition{1}, Partition{1}}, Color{Partition{2}, E}})}) {
    CHECK(one.full_W(cl) == many.full_W(cl));
  }
}

TEST_CASE("unknot values") {
  InvariantEngine eng(opts());
  CHECK(eng.unknot_value(Partition{1}, E) == S());
  const SkeinScalar two = SkeinScalar((LaurentPoly::monomial(0, 1) - LaurentPoly::monomial(0, -1)) *
                                          (LaurentPoly::monomial(1, 1) - LaurentPoly::monomial(-1, -1)),
                                      {1, 2});
  CHECK(eng.unknot_value(Partition{2}, E) == two);
  CHECK(eng.unknot_value(Partition{1}, Partition{1}) == S() * S() - SkeinScalar(1L));
  CHECK(eng.unknot_value(E, E) == SkeinScalar(1L));
  CHECK(unknot_hook_content_mirror(Partition{1}) == -S());
  CHECK(unknot_hook_content_mirror(Partition{2, 1}) == unknot_hook_content(Partition{2, 1}, E).substitute({QMap::Identity, AMap::Invert}));
}

TEST_CASE("unknot routes agree") {
  InvariantEngine eng(opts());
  for (int n = 0; n <= 4; ++n) {
    for (const auto& l : partitions_of(n)) {
      INFO(l.to_string());
      const UnknotRoutes r = eng.unknot_routes(l, E, n <= 3);
      CHECK(r.agree());
      CHECK(r.character_sum == r.hook_content);
    }
  }
  for (const auto& [l, m] : {std::pair{Partition{1}, Partition{1}}, std::pair{Partition{2}, Partition{1}},
                             std::pair{Partition{1, 1}, Partition{1}}}) {
    const UnknotRoutes r = eng.unknot_routes(l, m, true);
    REQUIRE(r.satellite.has_value());
    CHECK(r.agree());
    CHECK(*r.satellite == r.character_sum);
  }
}

TEST_CASE("prefactor examples") {
  const SkeinScalar b1(LaurentPoly::bracket(1));
  const SkeinScalar b2(LaurentPoly::bracket(2));
  const SkeinScalar b3(LaurentPoly::bracket(3));
  const Color free{};
  CHECK(prefactor({free, kFund}, 0) == A() * b1);
  CHECK(prefactor({free, free}, 0) == SkeinScalar(1L));
  CHECK(prefactor({free, Color{Partition{2, 2}, E}}, 0) == am(4) * b1 * b2 * b2 * b3);
  CHECK(prefactor({kFund}, 0) == SkeinScalar(1L));
  // Containment reading: ((1),(1)) pairs are (empty, empty) and ((1),(1)).
  CHECK(prefactor({free, Color{Partition{1}, Partition{1}}}, 0) == A() * A() * b1 * b1);
}

TEST_CASE("rectangle prefactor") {
  const SkeinScalar b1(LaurentPoly::bracket(1));
  const SkeinScalar b2(LaurentPoly::bracket(2));
  const SkeinScalar b3(LaurentPoly::bracket(3));
  CHECK(rectangle_prefactor(1, 1) == A() * b1);
  CHECK(rectangle_prefactor(2, 1) == am(2) * SkeinScalar(LaurentPoly::q()) * b1 * b2);
  CHECK(rectangle_prefactor(2, 2) == am(4) * b1 * b2 * b2 * b3);
  for (int r = 1; r <= 4; ++r) {
    for (int rho = 1; rho <= 4; ++rho) {
      const Partition rect(std::vector<int>(rho, r));
      CHECK(rectangle_prefactor(r, rho) == prefactor({Color{}, Color{rect, E}}, 0));
    }
  }
  CHECK_THROWS(rectangle_prefactor(7, 1));
  CHECK_THROWS(rectangle_prefactor(0, 1));
}

TEST_CASE("reduced knot invariants") {
  InvariantEngine eng(opts());
  CHECK(eng.reduced_P_knot(link("1:[]", {Color{Partition{2}, Partition{1}}})).value == SkeinScalar(1L));
  const InvariantReport t = eng.reduced_P_knot(link("2:[1,1,1]", {kFund}));
  CHECK(t.value == sc(mono(2, -2) + mono(-2, -2) - mono(0, -4)));
  CHECK(t.even);
  CHECK(t.value.numerator().specialize_a(2) == mono(-2, 0) + mono(-6, 0) - mono(-8, 0));
  const InvariantReport f = eng.reduced_P_knot(link("3:[1,-2,1,-2]", {kFund}));
  CHECK(f.value == sc(mono(0, 2) + mono(0, -2) + 1L - mono(2, 0) - mono(-2, 0)));
  CHECK_THROWS_AS(eng.reduced_P_knot(link("2:[1,1]", {kFund, kFund})), ComponentMismatch);
  for (const Color& c : {Color{Partition{2}, E}, Color{Partition{1, 1}, E}, Color{Partition{1}, Partition{1}}}) {
    for (const char* k : {"2:[1,1,1]", "3:[1,-2,1,-2]"}) {
      const ColoredLink cl = link(k, {c});
      const InvariantReport r = eng.reduced_P_knot(cl);
      INFO(k, " ", c.to_string());
      CHECK(r.even);
      CHECK(eng.reduced_Q_link(cl, 0).value == r.value);
      CHECK(eng.normalized_P_link(cl, 0).value == r.value);
      CHECK(eng.eigenvalue_ratio(cl, 0).value == r.value);
    }
  }
}

TEST_CASE("link invariants") {
  InvariantEngine eng(opts());
  const ColoredLink hopf = link("2:[1,1]", {kFund, kFund});
  const ColoredLink unlink = link("2:[]", {kFund, kFund});
  CHECK(eng.reduced_Q_link(hopf, 0).value == S() + Z() * A());
  CHECK(eng.reduced_Q_link(unlink, 1).value == S());
  const InvariantReport pn = eng.normalized_P_link(hopf, 0);
  CHECK(pn.value == sc(mono(2, 2) + mono(-2, 2) - mono(0, 2) - 1L));
  CHECK(pn.even);
  CHECK(eng.normalized_P_link(unlink, 0).value == sc(mono(0, 2) - 1L));
  CHECK_THROWS(eng.reduced_Q_link(hopf, 2));
}

TEST_CASE("strong integrality on small link colours") {
  InvariantEngine eng(opts());
  const auto colors = colors_up_to(2);
  for (const char* b : {"2:[1,1]", "2:[]"}) {
    for (const Color& c0 : colors) {
      for (const Color& c1 : colors) {
        const ColoredLink cl = link(b, {c0, c1});
        for (int alpha : {0, 1}) {
          INFO(b, " ", c0.to_string(), " ", c1.to_string(), " alpha ", alpha);
          CHECK(eng.normalized_P_link(cl, alpha).even);
        }
      }
    }
  }
}

TEST_CASE("naive normalization and eigenvalue ratio on the Hopf link") {
  InvariantEngine eng(opts());
  const ColoredLink hopf = link("2:[1,1]", {kFund, kFund});
  const NaiveReport n = eng.naive_P_link(hopf);
  CHECK_FALSE(n.laurent);
  CHECK(n.numerator == eng.full_W(hopf));
  CHECK(n.denominator == S() * S());
  const InvariantReport e = eng.eigenvalue_ratio(hopf, 0);
  CHECK(e.value == S() + Z() * A());
  CHECK_FALSE(e.laurent);
  CHECK(eng.eigenvalue_ratio(link("1:[]", {Color{Partition{2}, E}}), 0).value == SkeinScalar(1L));
  CHECK(eng.full_W(hopf).divide(S()).has_value());
}

TEST_CASE("symmetry identities") {
  InvariantEngine eng(opts());
  const ColoredLink t2 = link("2:[1,1,1]", {Color{Partition{2}, E}});
  const ColoredLink t11 = link("2:[1,1,1]", {Color{Partition{1, 1}, E}});
  CHECK(eng.full_W(t2).substitute({QMap::Invert, AMap::Identity}) == eng.full_W(t11));
  const SkeinScalar w = eng.full_W(link("2:[1,1,1]", {kFund}));
  CHECK(w.substitute({QMap::Negate, AMap::Identity}) == -w);
  const SkeinScalar u = eng.full_W(link("1:[]", {Color{Partition{1}, Partition{1}}}));
  CHECK(u.substitute({QMap::Identity, AMap::Negate}) == u);
  for (const auto& cl : {t2, link("2:[1,1]", {Color{Partition{1}, Partition{1}}, kFund}),
                         link("3:[1,-2,1,-2]", {Color{Partition{1}, Partition{1}}})}) {
    const VerificationReport r = eng.verify_symmetries(cl);
    CHECK(r.ok());
    CHECK(r.checks.size() >= 3);
  }
}

TEST_CASE("integrality verification") {
  InvariantEngine eng(opts());
  for (const auto& cl : {link("2:[1,1,1]", {Color{Partition{1}, Partition{1}}}), link("2:[1,1]", {kFund, kFund})}) {
    const VerificationReport r = eng.verify_integrality(cl);
    for (const auto& c : r.checks) {
      INFO(c.name, " ", c.detail);
      CHECK(c.status != Check::Status::Fail);
    }
  }
}

TEST_CASE("cleared power-sum values lie in ZSQ") {
  InvariantEngine eng(opts());
  const BraidWord trefoil = BraidWord::parse("2:[1,1,1]");
  for (const auto& [t, d] : {std::pair{Partition{1}, E}, std::pair{Partition{2}, E}, std::pair{Partition{1}, Partition{1}},
                             std::pair{Partition{1, 1}, E}}) {
    INFO(t.to_string(), " ", d.to_string());
    CHECK(membership(eng.cleared_power_sum_H(trefoil, t, d), Ring::ZSq));
  }
  // The uncleared value generally is not Laurent.
  CHECK_FALSE(eng.power_sum_H(trefoil, Partition{2}, E).is_laurent());
}

TEST_CASE("Jones specialization of links") {
  InvariantEngine eng(opts());
  for (const char* b : {"2:[1,1]", "2:[1,1,1]", "3:[1,-2,1,-2]", "3:[1,1,2,2]", "2:[1,1,1,1]"}) {
    INFO(b);
    CHECK(eng.jones_specialization(BraidWord::parse(b)) == jones_oracle(braid_closure(BraidWord::parse(b))));
  }
  CHECK(eng.jones_specialization(BraidWord::parse("2:[1,1]")) == mono(-1, 0) + mono(-5, 0));
}
