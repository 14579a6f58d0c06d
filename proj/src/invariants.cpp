#include "skeinlab/invariants.hpp"

#include <algorithm>
#include <exception>
#include <numeric>
#include <sstream>
#include <thread>

#include "skeinlab/annulus.hpp"
#include "skeinlab/errors.hpp"

namespace skeinlab {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n')) s.remove_suffix(1);
  return s;
}

// prod over boxes of a q^cn {hl}.
LaurentPoly box_factor(const Partition& p) {
  const auto contents = p.contents();
  const int cn = std::accumulate(contents.begin(), contents.end(), 0);
  LaurentPoly r = LaurentPoly::monomial(cn, p.size());
  for (int h : p.hooks()) r *= LaurentPoly::bracket(h);
  return r;
}

// prod over boxes of (a^e q^cn - a^-e q^-cn) / {hl}.
SkeinScalar hook_content_factor(const Partition& p, int e) {
  LaurentPoly num(1L);
  for (int c : p.contents()) num *= LaurentPoly::monomial(c, e) - LaurentPoly::monomial(-c, -e);
  return SkeinScalar(std::move(num), p.hooks());
}

// sum_tau chi_rho(tau)/z_tau prod (a^m - a^-m)/{m}.
SkeinScalar character_factor(const Partition& rho) {
  const int n = rho.size();
  const BigInt nfact = factorial(n);
  SkeinScalar total;
  for (const Partition& tau : partitions_of(n)) {
    const int64_t chi = character(rho, tau);
    if (chi == 0) continue;
    LaurentPoly num(1L);
    for (int m : tau.parts()) num *= LaurentPoly::monomial(0, m) - LaurentPoly::monomial(0, -m);
    const BigInt weight = BigInt(chi) * (nfact / BigInt(tau.z()));
    total += SkeinScalar(num * weight, tau.parts());
  }
  auto q = total.divide(nfact);
  if (!q) throw std::logic_error("character sum did not clear its integer denominator");
  return *q;
}

template <typename F>
SkeinScalar combine_qq(const Partition& lambda, const Partition& mu, F factor) {
  SkeinScalar total;
  for (const QQTerm& t : q_expand_qq(lambda, mu)) {
    total += SkeinScalar(t.coeff) * factor(t.rho) * factor(t.nu);
  }
  return total;
}

std::string dump(const SkeinScalar& x) { return x.to_string(); }

std::string color_list(const std::vector<Color>& colors) {
  std::string s;
  for (std::size_t i = 0; i < colors.size(); ++i) {
    if (i) s += ';';
    s += colors[i].to_string();
  }
  return s;
}

}  // namespace

Color Color::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("colour must be an object with lambda and mu");
  Color c;
  c.lambda = Partition::from_json(j.value("lambda", nlohmann::json::array()));
  c.mu = Partition::from_json(j.value("mu", nlohmann::json::array()));
  return c;
}

std::vector<Color> parse_colors(std::string_view text) {
  text = trim(text);
  const auto j = nlohmann::json::parse(text, nullptr, false);
  if (!j.is_discarded() && j.is_array() && !j.empty() && j.front().is_object()) {
    std::vector<Color> out;
    for (const auto& c : j) out.push_back(Color::from_json(c));
    return out;
  }
  std::vector<Color> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(';', start), text.size());
    const std::string_view item = trim(text.substr(start, end - start));
    if (item.empty()) throw ParseError("empty colour in list: " + std::string(text));
    const std::size_t slash = item.find('/');
    Color c;
    c.lambda = Partition::parse(trim(item.substr(0, slash)));
    if (slash != std::string_view::npos) c.mu = Partition::parse(trim(item.substr(slash + 1)));
    out.push_back(std::move(c));
    start = end + 1;
  }
  return out;
}

void ColoredLink::validate() const {
  companion.validate();
  const int n = closure_components(companion);
  if (static_cast<int>(colors.size()) != n) {
    throw ComponentMismatch("braid " + companion.to_string() + " closes to " + std::to_string(n) +
                            " components but " + std::to_string(colors.size()) + " colours were given");
  }
}

int ColoredLink::total_size() const {
  int n = 0;
  for (const Color& c : colors) n += c.size();
  return n;
}

ColoredLink ColoredLink::conjugated() const {
  ColoredLink out{companion, {}};
  for (const Color& c : colors) out.colors.push_back(c.conjugate());
  return out;
}

std::string ColoredLink::key() const { return companion.to_string() + "|" + color_list(colors); }

nlohmann::json ColoredLink::to_json() const {
  nlohmann::json cs = nlohmann::json::array();
  for (const Color& c : colors) cs.push_back(c.to_json());
  return {{"braid", companion.to_json()}, {"colors", cs}};
}

ColoredLink ColoredLink::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("braid") || !j.contains("colors")) {
    throw ParseError("coloured link JSON needs \"braid\" and \"colors\"");
  }
  ColoredLink cl;
  const auto& b = j.at("braid");
  cl.companion = b.is_string() ? BraidWord::parse(b.get<std::string>()) : BraidWord::from_json(b);
  if (!j.at("colors").is_array()) throw ParseError("\"colors\" must be a list");
  for (const auto& c : j.at("colors")) cl.colors.push_back(Color::from_json(c));
  return cl;
}

std::vector<int> companion_self_writhe(const BraidWord& braid) {
  const std::vector<int> comp = closure_component_of_strand(braid);
  std::vector<int> w(closure_components(braid), 0);
  std::vector<int> at(braid.strands);
  std::iota(at.begin(), at.end(), 0);
  for (int g : braid.word) {
    const int i = std::abs(g) - 1;
    if (comp[at[i]] == comp[at[i + 1]]) w[comp[at[i]]] += g > 0 ? 1 : -1;
    std::swap(at[i], at[i + 1]);
  }
  return w;
}

InvariantReport InvariantReport::of(SkeinScalar value, std::int64_t terms, EvalStats stats) {
  InvariantReport r;
  r.laurent = membership(value, Ring::Laurent);
  r.even = membership(value, Ring::Even);
  r.zsq = membership(value, Ring::ZSq);
  r.value = std::move(value);
  r.expansion_terms = terms;
  r.stats = stats;
  return r;
}

nlohmann::json InvariantReport::to_json() const {
  return {{"value", value.to_json()},
          {"text", value.to_string()},
          {"flags", {{"LAURENT", laurent}, {"EVEN", even}, {"ZSQ", zsq}}},
          {"expansion_terms", expansion_terms},
          {"stats", stats.to_json()}};
}

nlohmann::json NaiveReport::to_json() const {
  nlohmann::json j = {{"numerator", numerator.to_string()},
                      {"denominator", denominator.to_string()},
                      {"flags", {{"LAURENT", laurent}}}};
  j["quotient"] = quotient ? nlohmann::json(quotient->to_string()) : nlohmann::json(nullptr);
  return j;
}

const char* Check::status_name(Status s) {
  switch (s) {
    case Status::Pass:
      return "PASS";
    case Status::Fail:
      return "FAIL";
    case Status::Finding:
      return "FINDING";
    case Status::Skipped:
      return "SKIPPED";
  }
  return "?";
}

void VerificationReport::add(std::string name, bool passed, std::string detail) {
  checks.push_back(Check{std::move(name), passed ? Check::Status::Pass : Check::Status::Fail, std::move(detail)});
}

void VerificationReport::append(const VerificationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

bool VerificationReport::ok() const {
  return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == Check::Status::Fail; });
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const Check& c : checks) {
    arr.push_back({{"name", c.name}, {"status", Check::status_name(c.status)}, {"detail", c.detail}});
  }
  return {{"ok", ok()}, {"checks", arr}};
}

bool UnknotRoutes::agree() const {
  return character_sum == hook_content && (!satellite || *satellite == hook_content);
}

SkeinScalar unknot_character_sum(const Partition& lambda, const Partition& mu) {
  return combine_qq(lambda, mu, [](const Partition& p) { return character_factor(p); });
}

SkeinScalar unknot_hook_content(const Partition& lambda, const Partition& mu) {
  return combine_qq(lambda, mu, [](const Partition& p) { return hook_content_factor(p, 1); });
}

SkeinScalar unknot_hook_content_mirror(const Partition& lambda) { return hook_content_factor(lambda, -1); }

SkeinScalar prefactor(const std::vector<Color>& colors, int alpha) {
  if (alpha < 0 || alpha >= static_cast<int>(colors.size())) throw std::out_of_range("component index out of range");
  LaurentPoly r(1L);
  for (int beta = 0; beta < static_cast<int>(colors.size()); ++beta) {
    if (beta == alpha) continue;
    const Partition& lambda = colors[beta].lambda;
    const Partition& mu = colors[beta].mu;
    for (int k = 0; k <= lambda.size(); ++k) {
      const int n = mu.size() - (lambda.size() - k);
      if (n < 0) continue;
      for (const Partition& rho : partitions_of(k)) {
        if (!rho.contained_in(lambda)) continue;
        for (const Partition& nu : partitions_of(n)) {
          if (!nu.contained_in(mu)) continue;
          r *= box_factor(rho) * box_factor(nu);
        }
      }
    }
  }
  return SkeinScalar(r);
}

SkeinScalar rectangle_prefactor(int r, int rho) {
  if (r < 1 || rho < 1 || r > 6 || rho > 6) throw std::invalid_argument("rectangle_prefactor needs 1 <= r, rho <= 6");
  LaurentPoly p = LaurentPoly::monomial(rho * r * (r - rho) / 2, r * rho);
  for (int i = 0; i < rho; ++i) {
    for (int j = i + 1; j <= r + i; ++j) p *= LaurentPoly::bracket(j);
  }
  return SkeinScalar(p);
}

InvariantEngine::InvariantEngine(InvariantOptions options) : options_(options), evaluator_(options.eval) {}

SkeinScalar InvariantEngine::run_jobs(const std::vector<Diagram>& diagrams, const std::vector<SkeinScalar>& coeffs) {
  const std::size_t n = diagrams.size();
  std::vector<SkeinScalar> values(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        values[i] = evaluator_.evaluate(diagrams[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  unsigned threads = options_.threads > 0 ? static_cast<unsigned>(options_.threads) : std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  jobs_run_ += static_cast<std::int64_t>(n);
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  SkeinScalar total;
  for (std::size_t i = 0; i < n; ++i) total += coeffs[i] * values[i];
  return total;
}

SkeinScalar InvariantEngine::satellite_H(const BraidWord& companion, const std::vector<Color>& colors) {
  ColoredLink{companion, colors}.validate();
  BigInt denominator = 1;
  std::vector<std::vector<std::pair<AtomProduct, SkeinScalar>>> choices;
  for (const Color& c : colors) {
    const AnnulusElement e = qlm_to_pp(c.lambda, c.mu);
    denominator *= e.denominator();
    const AtomCombination atoms = pp_element_to_atoms(e);
    choices.emplace_back(atoms.begin(), atoms.end());
    if (choices.back().empty()) return SkeinScalar();
  }

  std::vector<Diagram> diagrams;
  std::vector<SkeinScalar> coeffs;
  std::vector<std::size_t> idx(choices.size(), 0);
  while (true) {
    std::vector<AtomProduct> patterns;
    SkeinScalar coeff(1L);
    for (std::size_t c = 0; c < choices.size(); ++c) {
      patterns.push_back(choices[c][idx[c]].first);
      coeff *= choices[c][idx[c]].second;
    }
    diagrams.push_back(cable_satellite(companion, patterns));
    coeffs.push_back(std::move(coeff));
    std::size_t c = 0;
    while (c < choices.size() && ++idx[c] == choices[c].size()) idx[c++] = 0;
    if (c == choices.size()) break;
  }
  const SkeinScalar total = run_jobs(diagrams, coeffs);
  auto q = total.divide(denominator);
  if (!q) throw std::logic_error("satellite sum did not clear its integer denominator");
  return *q;
}

SkeinScalar InvariantEngine::power_sum_H(const BraidWord& knot, const Partition& tau, const Partition& delta) {
  if (closure_components(knot) != 1) throw ComponentMismatch("power-sum decoration needs a knot companion");
  std::vector<Diagram> diagrams;
  std::vector<SkeinScalar> coeffs;
  for (const auto& [prod, c] : pp_to_atoms(Monomial{tau, delta})) {
    diagrams.push_back(cable_satellite(knot, {prod}));
    coeffs.push_back(c);
  }
  return run_jobs(diagrams, coeffs);
}

SkeinScalar InvariantEngine::cleared_power_sum_H(const BraidWord& knot, const Partition& tau, const Partition& delta) {
  std::vector<int> parts = tau.parts();
  parts.insert(parts.end(), delta.parts().begin(), delta.parts().end());
  return SkeinScalar(bracket_product(parts)) * power_sum_H(knot, tau, delta);
}

SkeinScalar InvariantEngine::full_W(const ColoredLink& cl) {
  cl.validate();
  for (const Color& c : cl.colors) {
    if (c.size() > options_.max_color_size) {
      throw ResourceLimit("colour " + c.to_string() + " exceeds the per-component size budget of " +
                          std::to_string(options_.max_color_size));
    }
  }
  const std::string key = cl.key();
  {
    std::lock_guard lock(memo_mutex_);
    auto it = w_memo_.find(key);
    if (it != w_memo_.end()) return it->second;
  }
  const SkeinScalar h = satellite_H(cl.companion, cl.colors);
  const std::vector<int> w = companion_self_writhe(cl.companion);
  int64_t q_exp = 0;
  int64_t a_exp = 0;
  for (std::size_t i = 0; i < cl.colors.size(); ++i) {
    q_exp -= (cl.colors[i].lambda.kappa() + cl.colors[i].mu.kappa()) * w[i];
    a_exp -= static_cast<int64_t>(cl.colors[i].size()) * w[i];
  }
  SkeinScalar value = SkeinScalar(LaurentPoly::monomial(static_cast<int>(q_exp), static_cast<int>(a_exp))) * h;
  std::lock_guard lock(memo_mutex_);
  w_memo_.emplace(key, value);
  return value;
}

UnknotRoutes InvariantEngine::unknot_routes(const Partition& lambda, const Partition& mu, bool with_satellite) {
  UnknotRoutes r{unknot_character_sum(lambda, mu), unknot_hook_content(lambda, mu), std::nullopt};
  if (with_satellite) r.satellite = satellite_H(BraidWord{1, {}}, {Color{lambda, mu}});
  return r;
}

SkeinScalar InvariantEngine::unknot_value(const Partition& lambda, const Partition& mu) {
  const UnknotRoutes r = unknot_routes(lambda, mu, false);
  if (!r.agree()) {
    throw std::logic_error("unknot routes disagree for " + Color{lambda, mu}.to_string() + ": " +
                           dump(r.character_sum) + " vs " + dump(r.hook_content));
  }
  return r.hook_content;
}

InvariantReport InvariantEngine::reduced_P_knot(const ColoredLink& cl) {
  cl.validate();
  if (cl.colors.size() != 1) throw ComponentMismatch("reduced P is defined for knots; use Q or Pnorm for links");
  const SkeinScalar w = full_W(cl);
  const SkeinScalar u = unknot_value(cl.colors[0].lambda, cl.colors[0].mu);
  auto q = w.divide(u);
  if (!q || !q->is_laurent()) {
    throw DivisionNotExact("W = " + dump(w) + " is not a Laurent multiple of W(U) = " + dump(u) +
                           (q ? "; quotient " + dump(*q) : std::string()));
  }
  return InvariantReport::of(*q, jobs_run(), evaluator_.stats());
}

InvariantReport InvariantEngine::reduced_Q_link(const ColoredLink& cl, int alpha) {
  cl.validate();
  if (alpha < 0 || alpha >= static_cast<int>(cl.colors.size())) throw std::out_of_range("component index out of range");
  const SkeinScalar w = full_W(cl);
  const SkeinScalar u = unknot_value(cl.colors[alpha].lambda, cl.colors[alpha].mu);
  auto q = w.divide(u);
  if (!q) throw DivisionNotExact("W = " + dump(w) + " is not divisible by W(U) = " + dump(u) + " in the bracket ring");
  return InvariantReport::of(*q, jobs_run(), evaluator_.stats());
}

InvariantReport InvariantEngine::normalized_P_link(const ColoredLink& cl, int alpha) {
  const InvariantReport q = reduced_Q_link(cl, alpha);
  return InvariantReport::of(prefactor(cl.colors, alpha) * q.value, q.expansion_terms, q.stats);
}

NaiveReport InvariantEngine::naive_P_link(const ColoredLink& cl) {
  NaiveReport r;
  r.numerator = full_W(cl);
  r.denominator = SkeinScalar(1L);
  for (const Color& c : cl.colors) r.denominator *= unknot_value(c.lambda, c.mu);
  r.quotient = r.numerator.divide(r.denominator);
  r.laurent = r.quotient && r.quotient->is_laurent();
  return r;
}

InvariantReport InvariantEngine::eigenvalue_ratio(const ColoredLink& cl, int alpha) {
  cl.validate();
  if (alpha < 0 || alpha >= static_cast<int>(cl.colors.size())) throw std::out_of_range("component index out of range");
  const Color fundamental{Partition{1}, Partition{}};
  for (int b = 0; b < static_cast<int>(cl.colors.size()); ++b) {
    if (b != alpha && cl.colors[b] != fundamental) {
      throw std::invalid_argument("eigenvalue ratio needs the fundamental colour on every other component");
    }
  }
  return reduced_Q_link(cl, alpha);
}

VerificationReport InvariantEngine::verify_symmetries(const ColoredLink& cl) {
  VerificationReport rep;
  const std::string tag = cl.key();
  const SkeinScalar w = full_W(cl);
  const SkeinScalar wc = full_W(cl.conjugated());
  const SkeinScalar sign(cl.total_size() % 2 == 0 ? 1L : -1L);
  rep.add("q -> q^-1 with conjugate colours [" + tag + "]",
          w.substitute({QMap::Invert, AMap::Identity}) == sign * wc);
  rep.add("q -> -q [" + tag + "]", w.substitute({QMap::Negate, AMap::Identity}) == sign * w);
  rep.add("a -> -a [" + tag + "]", w.substitute({QMap::Identity, AMap::Negate}) == sign * w);
  return rep;
}

VerificationReport InvariantEngine::verify_integrality(const ColoredLink& cl) {
  cl.validate();
  VerificationReport rep;
  const std::string tag = cl.key();
  auto guarded = [&rep](const std::string& name, auto&& body) {
    try {
      body();
    } catch (const ResourceLimit& e) {
      rep.add(Check{name, Check::Status::Skipped, e.what()});
    } catch (const DivisionNotExact& e) {
      rep.add(Check{name, Check::Status::Fail, e.what()});
    }
  };

  if (cl.colors.size() == 1) {
    const std::string name = "reduced P in Z[q^+-2,a^+-2] [" + tag + "]";
    guarded(name, [&] {
      const InvariantReport p = reduced_P_knot(cl);
      rep.add(name, p.even, p.value.to_string());
    });
    const AnnulusElement e = qlm_to_pp(cl.colors[0].lambda, cl.colors[0].mu);
    for (const auto& [mono, coeff] : e.terms()) {
      const std::string pname = "{tau}{delta} H(K * P_tau P*_delta) in Z[z^2,a^+-1] [" + cl.companion.to_string() +
                                " tau=" + mono.forward.to_string() + " delta=" + mono.reversed.to_string() + "]";
      guarded(pname, [&] {
        const SkeinScalar v = cleared_power_sum_H(cl.companion, mono.forward, mono.reversed);
        rep.add(pname, membership(v, Ring::ZSq), v.to_string());
      });
    }
    return rep;
  }

  const Color fundamental{Partition{1}, Partition{}};
  for (int alpha = 0; alpha < static_cast<int>(cl.colors.size()); ++alpha) {
    const std::string suffix = " alpha=" + std::to_string(alpha + 1) + " [" + tag + "]";
    const std::string name = "normalized P in Z[q^+-2,a^+-2]" + suffix;
    guarded(name, [&] {
      const InvariantReport p = normalized_P_link(cl, alpha);
      rep.add(name, p.even, p.value.to_string());
    });
    const std::string dname = "W divisible by W(U) in the bracket ring" + suffix;
    guarded(dname, [&] {
      const SkeinScalar w = full_W(cl);
      const auto q = w.divide(unknot_value(cl.colors[alpha].lambda, cl.colors[alpha].mu));
      rep.add(dname, q.has_value(), q ? q->to_string() : "no quotient");
    });
    bool others_fundamental = true;
    for (int b = 0; b < static_cast<int>(cl.colors.size()); ++b) {
      if (b != alpha && cl.colors[b] != fundamental) others_fundamental = false;
    }
    if (others_fundamental) {
      const std::string ename = "eigenvalue ratio Laurent" + suffix;
      guarded(ename, [&] {
        const InvariantReport r = eigenvalue_ratio(cl, alpha);
        rep.add(Check{ename, Check::Status::Finding,
                      std::string("LAURENT=") + (r.laurent ? "true" : "false") + " value " + r.value.to_string()});
      });
    }
  }
  return rep;
}

LaurentPoly InvariantEngine::jones_specialization(const BraidWord& braid) {
  const Diagram d = braid_closure(braid);
  const SkeinScalar h = evaluator_.evaluate(d) * SkeinScalar(LaurentPoly::monomial(0, -d.writhe()));
  const auto q = h.specialize_a(2).divide(SkeinScalar::s().specialize_a(2));
  if (!q || !q->is_laurent()) throw std::logic_error("Jones specialisation is not a Laurent polynomial");
  return q->numerator();
}

}  // namespace skeinlab
