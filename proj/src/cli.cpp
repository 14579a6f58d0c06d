#include "skeinlab/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <ctime>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "skeinlab/errors.hpp"
#include "skeinlab/homfly.hpp"
#include "skeinlab/invariants.hpp"
#include "skeinlab/oracles.hpp"

namespace skeinlab::cli {

namespace {

struct Options {
  std::string braid;
  std::string colors;
  std::string input;
  std::string which;
  std::string invariant;
  std::string suite;
  std::string format = "text";
  int alpha = 1;
  int max_crossings = 40;
  std::int64_t max_nodes = 20'000'000;
  std::optional<std::size_t> cache_size;
  int budget = 2;
  int threads = 1;
  bool reproducible = false;
};

struct NamedLink {
  const char* name;
  const char* braid;
};

constexpr NamedLink kKnots[] = {{"trefoil", "2:[1,1,1]"}, {"figure-eight", "3:[1,-2,1,-2]"}};
constexpr NamedLink kLinks[] = {{"Hopf", "2:[1,1]"}, {"unlink", "2:[]"}};

std::string timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

const char* flag(bool b) { return b ? "true" : "false"; }

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open input file " + path);
  const auto j = nlohmann::json::parse(in, nullptr, false);
  if (j.is_discarded()) throw ParseError("input file " + path + " is not valid JSON");
  return j;
}

BraidWord parse_braid_text(const std::string& text) {
  if (!text.empty() && text.front() == '{') {
    const auto j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("braid JSON is malformed: " + text);
    return BraidWord::from_json(j);
  }
  return BraidWord::parse(text);
}

BraidWord load_braid(const Options& o, const nlohmann::json* input) {
  if (input) {
    if (input->contains("braid")) {
      const auto& b = input->at("braid");
      return b.is_string() ? BraidWord::parse(b.get<std::string>()) : BraidWord::from_json(b);
    }
    return BraidWord::from_json(*input);
  }
  if (o.braid.empty()) throw ParseError("a braid is required (--braid or --input)");
  return parse_braid_text(o.braid);
}

ColoredLink load_link(const Options& o) {
  std::optional<nlohmann::json> input;
  if (!o.input.empty()) input = read_json_file(o.input);
  ColoredLink cl;
  cl.companion = load_braid(o, input ? &*input : nullptr);
  if (!o.colors.empty()) {
    cl.colors = parse_colors(o.colors);
  } else if (input && input->contains("colors")) {
    cl.colors = ColoredLink::from_json(*input).colors;
  } else {
    cl.colors.assign(closure_components(cl.companion), Color{Partition{1}, Partition{}});
  }
  cl.validate();
  return cl;
}

InvariantOptions engine_options(const Options& o) {
  InvariantOptions io;
  io.eval.max_crossings = o.max_crossings;
  io.eval.max_nodes = o.max_nodes;
  if (o.cache_size) io.eval.cache_size = *o.cache_size;
  io.max_color_size = std::max(o.budget, 3);
  io.threads = o.threads;
  return io;
}

void emit(std::ostream& out, const Options& o, nlohmann::json j) {
  if (!o.reproducible) j["timestamp"] = timestamp();
  out << j.dump(2) << "\n";
}

int cmd_homfly(const Options& o, InvariantEngine& eng, std::ostream& out) {
  std::optional<nlohmann::json> input;
  if (!o.input.empty()) input = read_json_file(o.input);
  const BraidWord b = load_braid(o, input ? &*input : nullptr);
  const Diagram d = braid_closure(b);
  Evaluator& ev = eng.evaluator();
  const SkeinPoly p = ev.evaluate_poly(d);
  const SkeinScalar v = p.to_scalar();
  if (o.format == "json") {
    emit(out, o,
         {{"command", "homfly"},
          {"braid", b.to_string()},
          {"components", d.num_components()},
          {"crossings", d.num_crossings()},
          {"self_writhe", d.self_writhe()},
          {"value", v.to_json()},
          {"text", v.to_string()},
          {"skein_form", p.to_string()},
          {"stats", ev.stats().to_json()}});
  } else {
    out << v.to_string() << "\n";
    out << "skein form: " << p.to_string() << "\n";
    out << "components: " << d.num_components() << ", crossings: " << d.num_crossings() << "\n";
  }
  return 0;
}

void print_report(std::ostream& out, const Options& o, const char* name, const InvariantReport& r,
                  const ColoredLink& cl) {
  if (o.format == "json") {
    nlohmann::json j = r.to_json();
    j["command"] = "invariant";
    j["invariant"] = name;
    j["link"] = cl.to_json();
    if (std::string(name) == "Q" || std::string(name) == "Pnorm") j["alpha"] = o.alpha;
    emit(out, o, std::move(j));
  } else {
    out << r.value.to_string() << "\n";
    out << "LAURENT=" << flag(r.laurent) << " EVEN=" << flag(r.even) << " ZSQ=" << flag(r.zsq) << "\n";
  }
}

int cmd_invariant(const Options& o, InvariantEngine& eng, std::ostream& out, std::ostream& err) {
  const std::string which = o.invariant.empty() ? (o.which.empty() ? "W" : o.which) : o.invariant;
  if (which != "W" && which != "P" && which != "Q" && which != "Pnorm") {
    throw ParseError("invariant must be one of W, P, Q, Pnorm");
  }
  const ColoredLink cl = load_link(o);
  if ((which == "Q" || which == "Pnorm") && (o.alpha < 1 || o.alpha > static_cast<int>(cl.colors.size()))) {
    throw ParseError("--alpha must lie between 1 and the number of components");
  }
  if (which == "W") {
    print_report(out, o, "W", InvariantReport::of(eng.full_W(cl), eng.jobs_run(), eng.evaluator().stats()), cl);
  } else if (which == "Q") {
    print_report(out, o, "Q", eng.reduced_Q_link(cl, o.alpha - 1), cl);
  } else if (which == "Pnorm") {
    print_report(out, o, "Pnorm", eng.normalized_P_link(cl, o.alpha - 1), cl);
  } else if (cl.colors.size() == 1) {
    print_report(out, o, "P", eng.reduced_P_knot(cl), cl);
  } else {
    const NaiveReport r = eng.naive_P_link(cl);
    if (!r.laurent) {
      err << "warning: W divided by the product of all unknot values is not a Laurent polynomial for this link;"
             " use Q or Pnorm\n";
    }
    if (o.format == "json") {
      nlohmann::json j = r.to_json();
      j["command"] = "invariant";
      j["invariant"] = "P";
      j["naive"] = true;
      j["link"] = cl.to_json();
      emit(out, o, std::move(j));
    } else {
      if (r.quotient) {
        out << r.quotient->to_string() << "\n";
      } else {
        out << "(" << r.numerator.to_string() << ") / (" << r.denominator.to_string() << ")\n";
      }
      out << "LAURENT=" << flag(r.laurent) << "\n";
    }
  }
  return 0;
}

std::vector<Color> corpus_colors(int budget) {
  std::vector<Color> out;
  for (int n = 1; n <= budget; ++n) {
    for (int k = n; k >= 0; --k) {
      for (const Partition& l : partitions_of(k)) {
        for (const Partition& m : partitions_of(n - k)) out.push_back(Color{l, m});
      }
    }
  }
  return out;
}

std::vector<ColoredLink> corpus(int budget) {
  const auto colors = corpus_colors(budget);
  std::vector<ColoredLink> out;
  for (const auto& k : kKnots) {
    for (const Color& c : colors) out.push_back({BraidWord::parse(k.braid), {c}});
  }
  for (const auto& l : kLinks) {
    for (const Color& c1 : colors) {
      for (const Color& c2 : colors) out.push_back({BraidWord::parse(l.braid), {c1, c2}});
    }
  }
  return out;
}

template <typename F>
void guarded(VerificationReport& rep, const std::string& name, F&& body) {
  try {
    body();
  } catch (const ResourceLimit& e) {
    rep.add(Check{name, Check::Status::Skipped, e.what()});
  }
}

VerificationReport suite_unknot(InvariantEngine& eng) {
  VerificationReport rep;
  std::vector<Color> colors;
  for (int n = 1; n <= 4; ++n) {
    for (const Partition& l : partitions_of(n)) colors.push_back({l, Partition{}});
  }
  colors.push_back({Partition{1}, Partition{1}});
  colors.push_back({Partition{2}, Partition{1}});
  for (const Color& c : colors) {
    const std::string name = "unknot three-way agreement " + c.to_string();
    guarded(rep, name, [&] {
      const UnknotRoutes r = eng.unknot_routes(c.lambda, c.mu, true);
      rep.add(name, r.agree(),
              "character sum = " + r.character_sum.to_string() + "; hook-content = " + r.hook_content.to_string() +
                  "; satellite = " + r.satellite->to_string());
    });
  }
  return rep;
}

VerificationReport suite_symmetries(InvariantEngine& eng, int budget) {
  VerificationReport rep;
  for (const ColoredLink& cl : corpus(budget)) {
    guarded(rep, "symmetries [" + cl.key() + "]", [&] { rep.append(eng.verify_symmetries(cl)); });
  }
  return rep;
}

VerificationReport suite_integrality(InvariantEngine& eng, int budget) {
  VerificationReport rep;
  for (const ColoredLink& cl : corpus(budget)) {
    guarded(rep, "integrality [" + cl.key() + "]", [&] { rep.append(eng.verify_integrality(cl)); });
  }
  const ColoredLink hopf{BraidWord::parse("2:[1,1]"), parse_colors("[1];[1]")};
  guarded(rep, "naive link normalization", [&] {
    const NaiveReport r = eng.naive_P_link(hopf);
    rep.add("naive link normalization is not Laurent [" + hopf.key() + "]", !r.laurent,
            "W = " + r.numerator.to_string() + ", product of unknot values = " + r.denominator.to_string());
  });
  for (const char* braid : {"2:[1,1,1]", "3:[1,-2,1,-2]", "2:[1,1]"}) {
    const std::string name = std::string("Jones specialization = bracket oracle [") + braid + "]";
    guarded(rep, name, [&] {
      const BraidWord b = BraidWord::parse(braid);
      const LaurentPoly j = eng.jones_specialization(b);
      const LaurentPoly k = jones_oracle(braid_closure(b));
      rep.add(name, j == k, j.to_string());
    });
  }
  return rep;
}

int cmd_verify(const Options& o, InvariantEngine& eng, std::ostream& out) {
  VerificationReport rep;
  const bool all = o.suite == "all";
  if (all || o.suite == "combinatorics") rep.append(oracle::combinatorics_suite());
  if (all || o.suite == "unknot") rep.append(suite_unknot(eng));
  if (all || o.suite == "symmetries") rep.append(suite_symmetries(eng, o.budget));
  if (all || o.suite == "integrality") rep.append(suite_integrality(eng, o.budget));

  if (o.format == "json") {
    nlohmann::json j = rep.to_json();
    j["command"] = "verify";
    j["suite"] = o.suite;
    j["budget"] = o.budget;
    emit(out, o, std::move(j));
  } else {
    int counts[4] = {0, 0, 0, 0};
    for (const Check& c : rep.checks) {
      ++counts[static_cast<int>(c.status)];
      out << Check::status_name(c.status) << "  " << c.name;
      if (c.status != Check::Status::Pass || o.suite == "unknot") out << ": " << c.detail;
      out << "\n";
    }
    out << "summary: " << counts[0] << " pass, " << counts[1] << " fail, " << counts[2] << " finding, " << counts[3]
        << " skipped\n";
  }
  return rep.ok() ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact colored HOMFLYPT invariants of braid closures", "skeinlab"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--max-crossings", o.max_crossings, "Largest diagram the evaluator accepts")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--max-nodes", o.max_nodes, "Skein nodes allowed per evaluation")->check(CLI::PositiveNumber);
  auto* cache_opt =
      app.add_option("--cache-size", o.cache_size, "Memo cache entries (also SKEINLAB_CACHE_SIZE)")
          ->check(CLI::NonNegativeNumber);
  app.add_option("--budget", o.budget, "Per-component colour size for verification corpora")
      ->check(CLI::Range(1, 3));
  app.add_option("--threads", o.threads, "Worker threads for satellite jobs (0: all cores)")
      ->check(CLI::NonNegativeNumber);
  app.add_flag("--reproducible", o.reproducible, "Omit timestamps from JSON output");

  auto* homfly = app.add_subcommand("homfly", "Framed HOMFLYPT polynomial of a braid closure");
  homfly->add_option("--braid", o.braid, "Braid as n:[g1,...] or JSON");
  homfly->add_option("--input", o.input, "JSON file with the braid");

  auto* invariant = app.add_subcommand("invariant", "Colored invariant W, P, Q or Pnorm");
  invariant->add_option("which", o.which, "W, P, Q or Pnorm")->check(CLI::IsMember({"W", "P", "Q", "Pnorm"}));
  invariant->add_option("--invariant", o.invariant, "W, P, Q or Pnorm")
      ->check(CLI::IsMember({"W", "P", "Q", "Pnorm"}));
  invariant->add_option("--braid", o.braid, "Braid as n:[g1,...] or JSON");
  invariant->add_option("--colors", o.colors, "Colours as [l]/[m];... or a JSON list");
  invariant->add_option("--input", o.input, "JSON file with braid and colors");
  invariant->add_option("--alpha", o.alpha, "Component (1-based) for Q and Pnorm");

  auto* verify = app.add_subcommand("verify", "Run verification suites over the built-in corpus");
  verify->add_option("suite", o.suite, "symmetries, integrality, unknot, combinatorics or all")
      ->required()
      ->check(CLI::IsMember({"symmetries", "integrality", "unknot", "combinatorics", "all"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  std::optional<InvariantEngine> eng;
  try {
    if (cache_opt->count() == 0) {
      if (const char* env = std::getenv("SKEINLAB_CACHE_SIZE")) {
        try {
          std::size_t pos = 0;
          const unsigned long long v = std::stoull(env, &pos);
          if (pos != std::string(env).size()) throw std::invalid_argument("trailing characters");
          o.cache_size = static_cast<std::size_t>(v);
        } catch (const std::exception&) {
          throw ParseError(std::string("SKEINLAB_CACHE_SIZE is not a non-negative integer: ") + env);
        }
      }
    }
    eng.emplace(engine_options(o));
    if (homfly->parsed()) return cmd_homfly(o, *eng, out);
    if (invariant->parsed()) return cmd_invariant(o, *eng, out, err);
    return cmd_verify(o, *eng, out);
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << "\n";
    if (eng) err << "statistics: " << eng->evaluator().stats().to_json().dump() << "\n";
    return 3;
  } catch (const BoundExceeded& e) {
    err << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const DivisionNotExact& e) {
    err << "inexact division: " << e.what() << "\n";
    return 4;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ComponentMismatch& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace skeinlab::cli
