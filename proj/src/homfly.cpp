#include "skeinlab/homfly.hpp"

#include <algorithm>
#include <list>
#include <mutex>
#include <numeric>
#include <unordered_map>

#include "skeinlab/errors.hpp"

namespace skeinlab {

namespace {

using Code = std::vector<int32_t>;

struct CodeHash {
  std::size_t operator()(const Code& c) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (int32_t v : c) {
      h ^= static_cast<std::uint32_t>(v);
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent_[std::max(x, y)] = std::min(x, y);
    return true;
  }

 private:
  std::vector<int> parent_;
};

// Renumbers the edges used by xs to 0..n-1 in order of first appearance by
// edge id.  Returns the new edge count.
int compact_edges(std::vector<Crossing>& xs, int num_edges) {
  std::vector<int> map(num_edges, -1);
  for (const Crossing& c : xs) {
    for (int e : {c.over_in, c.over_out, c.under_in, c.under_out}) map[e] = 0;
  }
  int n = 0;
  for (int e = 0; e < num_edges; ++e) {
    if (map[e] == 0) map[e] = n++;
  }
  for (Crossing& c : xs) {
    c.over_in = map[c.over_in];
    c.over_out = map[c.over_out];
    c.under_in = map[c.under_in];
    c.under_out = map[c.under_out];
  }
  return n;
}

void relabel_in_slot(std::vector<Crossing>& xs, int from, int to) {
  for (Crossing& c : xs) {
    if (c.over_in == from) c.over_in = to;
    if (c.under_in == from) c.under_in = to;
  }
}

Crossing switched(Crossing c) {
  std::swap(c.over_in, c.under_in);
  std::swap(c.over_out, c.under_out);
  c.sign = -c.sign;
  return c;
}

struct Smoothed {
  std::vector<Crossing> xs;
  int num_edges = 0;
  int free_loops = 0;
};

// Oriented smoothing of crossing k: the strand entering on the over strand
// leaves along the under strand and vice versa.
Smoothed smooth(const std::vector<Crossing>& xs, int num_edges, std::size_t k) {
  const Crossing& c = xs[k];
  UnionFind uf(num_edges);
  int classes = num_edges;
  if (uf.unite(c.over_in, c.under_out)) --classes;
  if (uf.unite(c.under_in, c.over_out)) --classes;
  Smoothed out;
  out.xs.reserve(xs.size() - 1);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i == k) continue;
    Crossing x = xs[i];
    x.over_in = uf.find(x.over_in);
    x.over_out = uf.find(x.over_out);
    x.under_in = uf.find(x.under_in);
    x.under_out = uf.find(x.under_out);
    out.xs.push_back(x);
  }
  out.num_edges = compact_edges(out.xs, num_edges);
  out.free_loops = classes - out.num_edges;
  return out;
}

struct Traversal {
  std::vector<int> head;       // crossing at the head of each edge
  std::vector<char> head_over;  // whether the edge enters on the over strand
  std::vector<int> component;  // per edge
  std::vector<std::vector<int>> cycles;  // edges of each component, from its least edge

  int next(const std::vector<Crossing>& xs, int e) const {
    const Crossing& c = xs[head[e]];
    return head_over[e] ? c.over_out : c.under_out;
  }
};

Traversal make_traversal(const std::vector<Crossing>& xs, int num_edges) {
  Traversal t;
  t.head.assign(num_edges, -1);
  t.head_over.assign(num_edges, 0);
  for (int i = 0; i < static_cast<int>(xs.size()); ++i) {
    t.head[xs[i].over_in] = i;
    t.head_over[xs[i].over_in] = 1;
    t.head[xs[i].under_in] = i;
  }
  t.component.assign(num_edges, -1);
  for (int start = 0; start < num_edges; ++start) {
    if (t.component[start] >= 0) continue;
    const int id = static_cast<int>(t.cycles.size());
    t.cycles.emplace_back();
    int e = start;
    do {
      t.component[e] = id;
      t.cycles.back().push_back(e);
      e = t.next(xs, e);
    } while (e != start);
  }
  return t;
}

// Self crossings of component `comp` first met on the under strand when
// walking its cycle from position `start`.
int self_bad_count(const std::vector<Crossing>& xs, const Traversal& t, int comp, std::size_t start,
                   std::vector<char>& seen) {
  const auto& cyc = t.cycles[comp];
  int bad = 0;
  for (std::size_t n = 0; n < cyc.size(); ++n) {
    const int e = cyc[(start + n) % cyc.size()];
    const int x = t.head[e];
    const Crossing& c = xs[x];
    if (t.component[c.over_in] != t.component[c.under_in]) continue;
    if (!seen[x]) {
      seen[x] = 1;
      if (!t.head_over[e]) ++bad;
    }
  }
  for (std::size_t n = 0; n < cyc.size(); ++n) seen[t.head[cyc[n]]] = 0;
  return bad;
}

struct Plan {
  std::vector<int> order;       // component order
  std::vector<std::size_t> base;  // basepoint index into each cycle
};

Plan choose_plan(const std::vector<Crossing>& xs, const Traversal& t, Strategy strategy) {
  const int k = static_cast<int>(t.cycles.size());
  Plan plan;
  plan.order.resize(k);
  std::iota(plan.order.begin(), plan.order.end(), 0);
  plan.base.assign(k, 0);
  if (strategy == Strategy::Canonical) return plan;

  std::vector<char> seen(xs.size(), 0);
  for (int c = 0; c < k; ++c) {
    int best = -1;
    for (std::size_t s = 0; s < t.cycles[c].size(); ++s) {
      const int bad = self_bad_count(xs, t, c, s, seen);
      if (best < 0 || bad < best) {
        best = bad;
        plan.base[c] = s;
      }
      if (best == 0) break;
    }
  }
  if (k == 1) return plan;

  // cost[u][o]: crossings with u under and o over; bad when u precedes o.
  std::vector<std::vector<int>> cost(k, std::vector<int>(k, 0));
  for (const Crossing& c : xs) {
    const int o = t.component[c.over_in];
    const int u = t.component[c.under_in];
    if (o != u) ++cost[u][o];
  }
  auto order_cost = [&](const std::vector<int>& order) {
    int total = 0;
    for (int i = 0; i < k; ++i) {
      for (int j = i + 1; j < k; ++j) total += cost[order[i]][order[j]];
    }
    return total;
  };
  if (k <= 7) {
    std::vector<int> perm = plan.order;
    int best = order_cost(perm);
    while (std::next_permutation(perm.begin(), perm.end())) {
      const int c = order_cost(perm);
      if (c < best) {
        best = c;
        plan.order = perm;
      }
    }
    return plan;
  }
  // Greedy: repeatedly take the component that is over most often against
  // the remaining ones.
  std::vector<char> used(k, 0);
  for (int pos = 0; pos < k; ++pos) {
    int pick = -1;
    int pick_score = 0;
    for (int c = 0; c < k; ++c) {
      if (used[c]) continue;
      int score = 0;
      for (int d = 0; d < k; ++d) {
        if (!used[d] && d != c) score += cost[d][c] - cost[c][d];
      }
      if (pick < 0 || score > pick_score) {
        pick = c;
        pick_score = score;
      }
    }
    used[pick] = 1;
    plan.order[pos] = pick;
  }
  return plan;
}

}  // namespace

SkeinPoly SkeinPoly::monomial(int z_exp, int a_exp, int s_exp, const BigInt& c) {
  SkeinPoly p;
  p.add_term({z_exp, a_exp, s_exp}, c);
  return p;
}

void SkeinPoly::add_term(const Key& k, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SkeinPoly& SkeinPoly::operator+=(const SkeinPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

SkeinPoly operator*(const SkeinPoly& x, const SkeinPoly& y) {
  SkeinPoly r;
  for (const auto& [kx, cx] : x.terms_) {
    for (const auto& [ky, cy] : y.terms_) {
      r.add_term({kx[0] + ky[0], kx[1] + ky[1], kx[2] + ky[2]}, cx * cy);
    }
  }
  return r;
}

SkeinPoly SkeinPoly::shifted(int dz, int da, int ds, int sign) const {
  SkeinPoly r;
  for (const auto& [k, c] : terms_) {
    r.terms_.emplace(Key{k[0] + dz, k[1] + da, k[2] + ds}, sign > 0 ? BigInt(c) : BigInt(-c));
  }
  return r;
}

SkeinScalar SkeinPoly::to_scalar() const {
  int max_s = 0;
  for (const auto& [k, c] : terms_) max_s = std::max(max_s, k[2]);
  const LaurentPoly z = LaurentPoly::z();
  const LaurentPoly a_diff = LaurentPoly::a() - LaurentPoly::monomial(0, -1);
  LaurentPoly num;
  for (const auto& [k, c] : terms_) {
    LaurentPoly t = z.pow(static_cast<unsigned>(k[0] + max_s - k[2])) * a_diff.pow(static_cast<unsigned>(k[2]));
    num += t.shifted(0, k[1]) * c;
  }
  return SkeinScalar(num, std::vector<int>(max_s, 1));
}

std::string SkeinPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [k, c] = *it;
    std::string mono;
    auto add = [&mono](const char* v, int e) {
      if (e == 0) return;
      if (!mono.empty()) mono += '*';
      mono += v;
      if (e != 1) mono += "^" + std::to_string(e);
    };
    add("z", k[0]);
    add("a", k[1]);
    add("s", k[2]);
    const BigInt mag = abs(c);
    std::string term;
    if (mono.empty()) {
      term = mag.get_str();
    } else if (mag == 1) {
      term = mono;
    } else {
      term = mag.get_str() + "*" + mono;
    }
    if (out.empty()) {
      out = (c < 0 ? "-" : "") + term;
    } else {
      out += (c < 0 ? " - " : " + ") + term;
    }
  }
  return out;
}

nlohmann::json EvalStats::to_json() const {
  return {{"evaluations", evaluations},
          {"nodes", nodes},
          {"cache_hits", cache_hits},
          {"cache_misses", cache_misses},
          {"cache_entries", cache_entries}};
}

class Evaluator::Cache {
 public:
  explicit Cache(std::size_t capacity) : capacity_(capacity) {}

  bool get(const Code& key, SkeinPoly& out) {
    if (capacity_ == 0) return false;
    std::lock_guard lock(mutex_);
    auto it = index_.find(key);
    if (it == index_.end()) return false;
    entries_.splice(entries_.begin(), entries_, it->second);
    out = it->second->second;
    return true;
  }

  void put(const Code& key, const SkeinPoly& value) {
    if (capacity_ == 0) return;
    std::lock_guard lock(mutex_);
    if (index_.count(key)) return;  // concurrent insertion of the same value
    entries_.emplace_front(key, value);
    index_.emplace(key, entries_.begin());
    while (entries_.size() > capacity_) {
      index_.erase(entries_.back().first);
      entries_.pop_back();
    }
  }

  std::size_t size() {
    std::lock_guard lock(mutex_);
    return entries_.size();
  }

  void clear() {
    std::lock_guard lock(mutex_);
    entries_.clear();
    index_.clear();
  }

 private:
  std::size_t capacity_;
  std::mutex mutex_;
  std::list<std::pair<Code, SkeinPoly>> entries_;
  std::unordered_map<Code, std::list<std::pair<Code, SkeinPoly>>::iterator, CodeHash> index_;
};

struct Evaluator::Context {
  std::int64_t nodes = 0;
};

Evaluator::Evaluator(EvalOptions options) : options_(options), cache_(std::make_unique<Cache>(options.cache_size)) {}

Evaluator::~Evaluator() = default;

EvalStats Evaluator::stats() const {
  EvalStats s;
  s.evaluations = evaluations_.load();
  s.nodes = nodes_.load();
  s.cache_hits = hits_.load();
  s.cache_misses = misses_.load();
  s.cache_entries = cache_->size();
  return s;
}

void Evaluator::clear_cache() { cache_->clear(); }

SkeinPoly Evaluator::evaluate_poly(const Diagram& d) {
  if (d.num_crossings() > options_.max_crossings) {
    throw ResourceLimit("diagram has " + std::to_string(d.num_crossings()) + " crossings, budget is " +
                        std::to_string(options_.max_crossings));
  }
  ++evaluations_;
  Context ctx;
  SkeinPoly r = eval_general(d.crossings(), d.num_edges(), ctx);
  return r.shifted(0, 0, d.free_loops());
}

SkeinPoly Evaluator::eval_general(std::vector<Crossing> xs, int num_edges, Context& ctx) {
  int a_exp = 0;
  int loops = 0;
  // Reidemeister I: an edge running from one strand of a crossing straight
  // into the other strand of the same crossing bounds a kink.
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const Crossing c = xs[i];
      int in = -1;
      int out = -1;
      if (c.over_out == c.under_in) {
        in = c.over_in;
        out = c.under_out;
      } else if (c.under_out == c.over_in) {
        in = c.under_in;
        out = c.over_out;
      } else {
        continue;
      }
      a_exp += c.sign;
      xs.erase(xs.begin() + static_cast<std::ptrdiff_t>(i));
      if (in == out) {
        ++loops;
      } else {
        relabel_in_slot(xs, out, in);
      }
      changed = true;
      break;
    }
  }
  SkeinPoly result = SkeinPoly::monomial(0, a_exp, loops);
  if (xs.empty()) return result;
  num_edges = compact_edges(xs, num_edges);

  // Split into connected pieces.
  const int nx = static_cast<int>(xs.size());
  UnionFind uf(nx);
  std::vector<int> tail(num_edges, -1);
  for (int i = 0; i < nx; ++i) {
    tail[xs[i].over_out] = i;
    tail[xs[i].under_out] = i;
  }
  for (int i = 0; i < nx; ++i) {
    uf.unite(i, tail[xs[i].over_in]);
    uf.unite(i, tail[xs[i].under_in]);
  }
  std::map<int, std::vector<Crossing>> pieces;
  for (int i = 0; i < nx; ++i) pieces[uf.find(i)].push_back(xs[i]);
  for (auto& [root, piece] : pieces) {
    const int ne = compact_edges(piece, num_edges);
    result = result * eval_piece(piece, ne, ctx);
  }
  return result;
}

SkeinPoly Evaluator::eval_piece(const std::vector<Crossing>& xs, int num_edges, Context& ctx) {
  const Code code = canonical_code(xs, num_edges);
  SkeinPoly value;
  if (cache_->get(code, value)) {
    ++hits_;
    return value;
  }
  ++misses_;
  if (++ctx.nodes > options_.max_nodes) {
    throw ResourceLimit("skein node budget of " + std::to_string(options_.max_nodes) + " exhausted");
  }
  ++nodes_;
  std::vector<Crossing> canon;
  canon.reserve(xs.size());
  for (std::size_t i = 1; i + 4 < code.size(); i += 5) {
    canon.push_back(Crossing{code[i], code[i + 1], code[i + 2], code[i + 3], code[i + 4]});
  }
  value = descend(canon, num_edges, ctx);
  cache_->put(code, value);
  return value;
}

SkeinPoly Evaluator::descend(const std::vector<Crossing>& xs, int num_edges, Context& ctx) {
  const Traversal t = make_traversal(xs, num_edges);
  const Plan plan = choose_plan(xs, t, options_.strategy);

  std::vector<char> seen(xs.size(), 0);
  std::vector<int> bad;
  for (int comp : plan.order) {
    const auto& cyc = t.cycles[comp];
    for (std::size_t n = 0; n < cyc.size(); ++n) {
      const int e = cyc[(plan.base[comp] + n) % cyc.size()];
      const int x = t.head[e];
      if (seen[x]) continue;
      seen[x] = 1;
      if (!t.head_over[e]) bad.push_back(x);
    }
  }

  std::vector<char> is_bad(xs.size(), 0);
  for (int x : bad) is_bad[x] = 1;
  int writhe = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (t.component[xs[i].over_in] == t.component[xs[i].under_in]) writhe += is_bad[i] ? -xs[i].sign : xs[i].sign;
  }
  SkeinPoly result = SkeinPoly::monomial(0, writhe, static_cast<int>(t.cycles.size()));

  std::vector<Crossing> work = xs;
  for (int x : bad) {
    const Smoothed s = smooth(work, num_edges, static_cast<std::size_t>(x));
    const SkeinPoly child = eval_general(s.xs, s.num_edges, ctx);
    result += child.shifted(1, 0, s.free_loops, xs[x].sign);
    work[x] = switched(work[x]);
  }
  return result;
}

SkeinScalar homfly(const Diagram& d, EvalOptions options) {
  Evaluator ev(options);
  return ev.evaluate(d);
}

LaurentPoly jones_oracle(const Diagram& d, int max_crossings) {
  const int n = d.num_crossings();
  if (n > max_crossings) {
    throw ResourceLimit("bracket state sum limited to " + std::to_string(max_crossings) + " crossings");
  }
  if (d.num_components() == 0) throw std::invalid_argument("jones_oracle needs a nonempty diagram");
  const auto& xs = d.crossings();
  // Ends of crossing i in counterclockwise order occupy slots 4i..4i+3; the
  // over strand sits at the odd positions.
  std::vector<int> end_in(d.num_edges());
  std::vector<int> end_out(d.num_edges());
  for (int i = 0; i < n; ++i) {
    const Crossing& c = xs[i];
    const int base = 4 * i;
    end_in[c.under_in] = base;
    end_out[c.under_out] = base + 2;
    if (c.sign > 0) {
      end_out[c.over_out] = base + 1;
      end_in[c.over_in] = base + 3;
    } else {
      end_in[c.over_in] = base + 1;
      end_out[c.over_out] = base + 3;
    }
  }
  // Bracket as a polynomial in A (stored in the q slot).
  const LaurentPoly d_loop = -(LaurentPoly::monomial(2, 0) + LaurentPoly::monomial(-2, 0));
  std::vector<LaurentPoly> d_pow{LaurentPoly(1L)};
  std::map<std::pair<int, int>, BigInt> counts;  // (A exponent, loops) -> states
  for (std::uint64_t state = 0; state < (std::uint64_t{1} << n); ++state) {
    UnionFind uf(4 * n);
    for (int e = 0; e < d.num_edges(); ++e) uf.unite(end_in[e], end_out[e]);
    int a_exp = 0;
    for (int i = 0; i < n; ++i) {
      const int base = 4 * i;
      if ((state >> i) & 1) {  // B smoothing
        uf.unite(base + 1, base + 2);
        uf.unite(base + 3, base);
        --a_exp;
      } else {
        uf.unite(base, base + 1);
        uf.unite(base + 2, base + 3);
        ++a_exp;
      }
    }
    int loops = d.free_loops();
    for (int v = 0; v < 4 * n; ++v) {
      if (uf.find(v) == v) ++loops;
    }
    counts[{a_exp, loops}] += 1;
  }
  LaurentPoly bracket;
  for (const auto& [key, count] : counts) {
    const int powers = key.second - 1;
    while (static_cast<int>(d_pow.size()) <= powers) d_pow.push_back(d_pow.back() * d_loop);
    bracket += d_pow[powers].shifted(key.first, 0) * count;
  }
  const int w = d.writhe();
  LaurentPoly v = bracket.shifted(-3 * w, 0);
  if (w % 2 != 0) v = -v;
  LaurentPoly out;
  for (const auto& [e, c] : v.terms()) {
    if (e.first % 2 != 0) throw std::logic_error("bracket produced an odd power of A");
    const int k = e.first / 2;
    out.add_term(k, 0, k % 2 == 0 ? BigInt(c) : BigInt(-c));
  }
  return out;
}

}  // namespace skeinlab
