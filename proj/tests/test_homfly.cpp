#include <doctest.h>

#include <random>
#include <thread>

#include "skeinlab/errors.hpp"
#include "skeinlab/homfly.hpp"
#include "test_support.hpp"

using namespace skeinlab;
using namespace skeinlab::testing;

namespace {

SkeinScalar H(const std::string& braid, EvalOptions opts = {}) {
  return homfly(braid_closure(BraidWord::parse(braid)), opts);
}

LaurentPoly J(const std::string& braid) { return jones_oracle(braid_closure(BraidWord::parse(braid))); }

std::vector<BraidWord> random_corpus(unsigned seed, int count) {
  std::mt19937 rng(seed);
  std::vector<BraidWord> out;
  while (static_cast<int>(out.size()) < count) out.push_back(random_braid(rng, 4, 10));
  return out;
}

const Substitution kMirror{QMap::Invert, AMap::Invert};

}  // namespace

TEST_CASE("evaluator examples") {
  CHECK(H("1:[]") == S());
  CHECK(H("2:[1]") == A() * S());
  CHECK(H("2:[-1]") == SkeinScalar(LaurentPoly::monomial(0, -1)) * S());
  CHECK(H("2:[1,1]") == S() * S() + Z() * A() * S());
  CHECK(H("2:[1,1,1]") == A() * S() * (SkeinScalar(1L) + Z() * Z()) + Z() * S() * S());
  CHECK(H("2:[]") == S() * S());
  CHECK(homfly(Diagram({}, 0, 0)) == SkeinScalar(1L));
}

TEST_CASE("skein relation holds at a crossing") {
  // H(L+) - H(L-) = z H(L0) on the trefoil's last crossing.
  CHECK(H("2:[1,1,1]") - H("2:[1,1,-1]") == Z() * H("2:[1,1]"));
  CHECK(H("3:[1,-2,1,-2]") - H("3:[1,-2,1,2]") == -(Z() * H("3:[1,-2,1]")));
}

TEST_CASE("skein form rendering") {
  const SkeinPoly p = Evaluator().evaluate_poly(braid_closure(BraidWord{2, {1, 1, 1}}));
  CHECK(p.to_string() == "z^2*a*s + z*s^2 + a*s");
  CHECK(SkeinPoly::monomial(0, 0, 1).to_scalar() == S());
}

TEST_CASE("Jones oracle examples") {
  CHECK(J("1:[]") == LaurentPoly(1L));
  CHECK(J("2:[1,1,1]") == mono(-2, 0) + mono(-6, 0) - mono(-8, 0));
  CHECK(J("3:[1,-2,1,-2]") == mono(4, 0) - mono(2, 0) + 1L - mono(-2, 0) + mono(-4, 0));
  CHECK(J("2:[1]") == LaurentPoly(1L));
}

TEST_CASE("Jones oracle agrees with the HOMFLYPT specialization on knots") {
  // a^{-w} H / s at a = q^2.
  for (const char* b : {"2:[1,1,1]", "3:[1,-2,1,-2]", "2:[1,1,1,1,1]", "3:[1,1,1,2,-1,2]", "3:[1,1,1,-2,1,-2]", "4:[1,-2,3,-2,3]", "4:[1,2,-3,2,1,3,-2]"}) {
    const BraidWord w = BraidWord::parse(b);
    const Diagram d = braid_closure(w);
    REQUIRE(d.num_components() == 1);
    const SkeinScalar reduced =
        (homfly(d) * SkeinScalar(LaurentPoly::monomial(0, -w.writhe()))).divide(S()).value();
    REQUIRE(reduced.is_laurent());
    INFO(b);
    CHECK(reduced.numerator().specialize_a(2) == jones_oracle(d));
  }
}

TEST_CASE("component parity: z^L H lies in ZSQ") {
  for (const BraidWord& b : random_corpus(41, 50)) {
    const Diagram d = braid_closure(b);
    const SkeinScalar h = homfly(d);
    INFO(b.to_string());
    CHECK(membership(Z().pow(d.num_components()) * h, Ring::ZSq));
  }
}

TEST_CASE("crossing-selection strategies agree") {
  EvalOptions canon;
  canon.strategy = Strategy::Canonical;
  for (const BraidWord& b : random_corpus(43, 50)) {
    const Diagram d = braid_closure(b);
    INFO(b.to_string());
    CHECK(homfly(d) == homfly(d, canon));
  }
}

TEST_CASE("mirror and orientation reversal") {
  for (const BraidWord& b : random_corpus(47, 50)) {
    const Diagram d = braid_closure(b);
    const SkeinScalar h = homfly(d);
    INFO(b.to_string());
    CHECK(homfly(d.mirrored()) == h.substitute(kMirror));
    CHECK(homfly(d.reversed()) == h);
  }
}

TEST_CASE("mixed orientations") {
  // Reversing one Hopf component flips its linking sign.
  const Diagram anti = closure_with_directions(BraidWord{2, {1, 1}}, {1, -1});
  CHECK(homfly(anti) == homfly(braid_closure(BraidWord{2, {-1, -1}})));
}

TEST_CASE("cache capacity never changes results") {
  EvalOptions tiny;
  tiny.cache_size = 0;
  EvalOptions small;
  small.cache_size = 3;
  for (const BraidWord& b : random_corpus(53, 20)) {
    const Diagram d = braid_closure(b);
    const SkeinScalar h = homfly(d);
    CHECK(homfly(d, tiny) == h);
    CHECK(homfly(d, small) == h);
  }
}

TEST_CASE("budgets raise ResourceLimit") {
  EvalOptions few;
  few.max_crossings = 2;
  CHECK_THROWS_AS(H("2:[1,1,1]", few), ResourceLimit);
  EvalOptions nodes;
  nodes.max_nodes = 1;
  CHECK_THROWS_AS(H("3:[1,-2,1,-2,1,-2]", nodes), ResourceLimit);
  CHECK_THROWS_AS(jones_oracle(braid_closure(BraidWord::parse("2:[1,1,1,1,1]")), 3), ResourceLimit);
}

TEST_CASE("shared evaluator is thread safe and deterministic") {
  const auto corpus = random_corpus(59, 24);
  std::vector<SkeinScalar> expected;
  for (const auto& b : corpus) expected.push_back(homfly(braid_closure(b)));
  Evaluator shared;
  std::vector<std::vector<SkeinScalar>> got(4);
  std::vector<std::thread> workers;
  for (int t = 0; t < 4; ++t) {
    workers.emplace_back([&, t] {
      for (const auto& b : corpus) got[t].push_back(shared.evaluate(braid_closure(b)));
    });
  }
  for (auto& w : workers) w.join();
  for (const auto& g : got) {
    REQUIRE(g.size() == expected.size());
    for (std::size_t i = 0; i < g.size(); ++i) CHECK(g[i] == expected[i]);
  }
  const EvalStats st = shared.stats();
  CHECK(st.evaluations == 4 * static_cast<std::int64_t>(corpus.size()));
  CHECK(st.cache_hits > 0);
  shared.clear_cache();
  CHECK(shared.stats().cache_entries == 0);
}
