#include "skeinlab/diagram.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <stdexcept>

#include "skeinlab/errors.hpp"

namespace skeinlab {

namespace {

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
  void unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x != y) parent_[std::max(x, y)] = std::min(x, y);
  }

 private:
  std::vector<int> parent_;
};

int parse_int(std::string_view text, std::size_t& pos) {
  while (pos < text.size() && text[pos] == ' ') ++pos;
  if (pos < text.size() && text[pos] == '+') ++pos;
  int v = 0;
  auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), v);
  if (ec != std::errc()) throw ParseError("expected integer in braid: " + std::string(text));
  pos = static_cast<std::size_t>(ptr - text.data());
  while (pos < text.size() && text[pos] == ' ') ++pos;
  return v;
}

}  // namespace

void BraidWord::validate() const {
  if (strands < 1) throw std::invalid_argument("braid needs at least one strand");
  for (int g : word) {
    if (g == 0 || std::abs(g) >= strands) {
      throw std::invalid_argument("braid letter " + std::to_string(g) + " out of range for " + std::to_string(strands) +
                                  " strands");
    }
  }
}

int BraidWord::writhe() const {
  int w = 0;
  for (int g : word) w += g > 0 ? 1 : -1;
  return w;
}

std::vector<int> BraidWord::permutation() const {
  std::vector<int> at_pos(strands);
  std::iota(at_pos.begin(), at_pos.end(), 0);
  for (int g : word) std::swap(at_pos[std::abs(g) - 1], at_pos[std::abs(g)]);
  std::vector<int> perm(strands);
  for (int p = 0; p < strands; ++p) perm[at_pos[p]] = p;
  return perm;
}

std::string BraidWord::to_string() const {
  std::string s = std::to_string(strands) + ":[";
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(word[i]);
  }
  return s + "]";
}

BraidWord BraidWord::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("braid must look like n:[g1,...]: " + std::string(text));
  BraidWord b;
  std::size_t pos = 0;
  b.strands = parse_int(text.substr(0, colon), pos);
  if (pos != colon) throw ParseError("bad strand count in braid: " + std::string(text));
  std::string_view rest = text.substr(colon + 1);
  pos = 0;
  while (pos < rest.size() && rest[pos] == ' ') ++pos;
  if (pos >= rest.size() || rest[pos] != '[') throw ParseError("braid word must be bracketed: " + std::string(text));
  ++pos;
  while (pos < rest.size() && rest[pos] == ' ') ++pos;
  while (pos < rest.size() && rest[pos] != ']') {
    b.word.push_back(parse_int(rest, pos));
    if (pos < rest.size() && rest[pos] == ',') ++pos;
  }
  if (pos >= rest.size()) throw ParseError("unterminated braid word: " + std::string(text));
  ++pos;
  while (pos < rest.size() && rest[pos] == ' ') ++pos;
  if (pos != rest.size()) throw ParseError("trailing characters in braid: " + std::string(text));
  try {
    b.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return b;
}

BraidWord BraidWord::from_json(const nlohmann::json& j) {
  BraidWord b;
  try {
    b.strands = j.at("strands").get<int>();
    b.word = j.at("word").get<std::vector<int>>();
    b.validate();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("braid JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return b;
}

Diagram::Diagram(std::vector<Crossing> crossings, int num_edges, int free_loops)
    : crossings_(std::move(crossings)), num_edges_(num_edges), free_loops_(free_loops) {
  std::vector<int> ins(num_edges, 0);
  std::vector<int> outs(num_edges, 0);
  auto check = [num_edges](int e) {
    if (e < 0 || e >= num_edges) throw std::invalid_argument("diagram edge id out of range");
    return e;
  };
  for (const Crossing& c : crossings_) {
    ++ins[check(c.over_in)];
    ++ins[check(c.under_in)];
    ++outs[check(c.over_out)];
    ++outs[check(c.under_out)];
    if (c.sign != 1 && c.sign != -1) throw std::invalid_argument("crossing sign must be +-1");
  }
  for (int e = 0; e < num_edges; ++e) {
    if (ins[e] != 1 || outs[e] != 1) throw std::invalid_argument("every edge needs exactly one head and one tail");
  }
  if (free_loops < 0) throw std::invalid_argument("negative free loop count");
  compute_components();
}

void Diagram::compute_components() {
  std::vector<int> head(num_edges_, -1);
  std::vector<char> head_over(num_edges_, 0);
  for (int i = 0; i < num_crossings(); ++i) {
    head[crossings_[i].over_in] = i;
    head_over[crossings_[i].over_in] = 1;
    head[crossings_[i].under_in] = i;
  }
  edge_component_.assign(num_edges_, -1);
  int comp = 0;
  for (int start = 0; start < num_edges_; ++start) {
    if (edge_component_[start] >= 0) continue;
    int e = start;
    do {
      edge_component_[e] = comp;
      const Crossing& c = crossings_[head[e]];
      e = head_over[e] ? c.over_out : c.under_out;
    } while (e != start);
    ++comp;
  }
  self_writhe_.assign(comp + free_loops_, 0);
  for (const Crossing& c : crossings_) {
    if (edge_component_[c.over_in] == edge_component_[c.under_in]) self_writhe_[edge_component_[c.over_in]] += c.sign;
  }
}

int Diagram::writhe() const {
  int w = 0;
  for (const Crossing& c : crossings_) w += c.sign;
  return w;
}

Diagram Diagram::reversed() const {
  std::vector<Crossing> xs = crossings_;
  for (Crossing& c : xs) {
    std::swap(c.over_in, c.over_out);
    std::swap(c.under_in, c.under_out);
  }
  return Diagram(std::move(xs), num_edges_, free_loops_);
}

Diagram Diagram::mirrored() const {
  std::vector<Crossing> xs = crossings_;
  for (Crossing& c : xs) {
    std::swap(c.over_in, c.under_in);
    std::swap(c.over_out, c.under_out);
    c.sign = -c.sign;
  }
  return Diagram(std::move(xs), num_edges_, free_loops_);
}

nlohmann::json Diagram::to_json() const {
  nlohmann::json xs = nlohmann::json::array();
  for (const Crossing& c : crossings_) xs.push_back({c.over_in, c.over_out, c.under_in, c.under_out, c.sign});
  return {{"crossings", xs},
          {"num_edges", num_edges_},
          {"free_loops", free_loops_},
          {"components", num_components()},
          {"self_writhe", self_writhe_},
          {"code", canonical_code(crossings_, num_edges_)}};
}

Diagram closure_with_directions(const BraidWord& braid, const std::vector<int>& directions) {
  braid.validate();
  const int n = braid.strands;
  if (static_cast<int>(directions.size()) != n) throw std::invalid_argument("one direction per strand required");
  const std::vector<int> perm = braid.permutation();
  for (int p = 0; p < n; ++p) {
    if ((directions[p] > 0) != (directions[perm[p]] > 0)) {
      throw std::invalid_argument("strand directions must be constant along closure components");
    }
  }

  std::vector<int> cur(n);
  std::iota(cur.begin(), cur.end(), 0);
  std::vector<int> dir = directions;
  int next_seg = n;
  std::vector<Crossing> raw;
  raw.reserve(braid.word.size());
  for (int letter : braid.word) {
    const int i = std::abs(letter) - 1;
    const int eps = letter > 0 ? 1 : -1;
    const int below_a = cur[i];
    const int below_b = cur[i + 1];
    const int above_a = next_seg++;  // strand leaving position i, ending at i+1
    const int above_b = next_seg++;
    const int da = dir[i] > 0 ? 1 : -1;
    const int db = dir[i + 1] > 0 ? 1 : -1;
    const int a_in = da > 0 ? below_a : above_a;
    const int a_out = da > 0 ? above_a : below_a;
    const int b_in = db > 0 ? below_b : above_b;
    const int b_out = db > 0 ? above_b : below_b;
    Crossing c;
    // A positive letter carries the left strand over.
    if (eps > 0) {
      c = Crossing{a_in, a_out, b_in, b_out, eps * da * db};
    } else {
      c = Crossing{b_in, b_out, a_in, a_out, eps * da * db};
    }
    raw.push_back(c);
    cur[i] = above_b;
    cur[i + 1] = above_a;
    std::swap(dir[i], dir[i + 1]);
  }

  UnionFind uf(next_seg);
  for (int p = 0; p < n; ++p) uf.unite(cur[p], p);

  // Bottom segments first so that edge order follows strand order.
  std::vector<int> compact(next_seg, -1);
  std::vector<char> used(next_seg, 0);
  for (const Crossing& c : raw) {
    for (int s : {c.over_in, c.over_out, c.under_in, c.under_out}) used[uf.find(s)] = 1;
  }
  int num_edges = 0;
  int free_loops = 0;
  std::vector<char> seen(next_seg, 0);
  for (int s = 0; s < next_seg; ++s) {
    const int r = uf.find(s);
    if (seen[r]) continue;
    seen[r] = 1;
    if (used[r]) {
      compact[r] = num_edges++;
    } else {
      ++free_loops;
    }
  }
  for (Crossing& c : raw) {
    c.over_in = compact[uf.find(c.over_in)];
    c.over_out = compact[uf.find(c.over_out)];
    c.under_in = compact[uf.find(c.under_in)];
    c.under_out = compact[uf.find(c.under_out)];
  }
  return Diagram(std::move(raw), num_edges, free_loops);
}

Diagram braid_closure(const BraidWord& braid) { return closure_with_directions(braid, std::vector<int>(braid.strands, 1)); }

std::vector<int> closure_component_of_strand(const BraidWord& braid) {
  braid.validate();
  const std::vector<int> perm = braid.permutation();
  std::vector<int> comp(braid.strands, -1);
  int next = 0;
  for (int p = 0; p < braid.strands; ++p) {
    if (comp[p] >= 0) continue;
    for (int x = p; comp[x] < 0; x = perm[x]) comp[x] = next;
    ++next;
  }
  return comp;
}

int closure_components(const BraidWord& braid) {
  const auto comp = closure_component_of_strand(braid);
  return comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
}

PatternBraid pattern_braid(const PatternAtom& atom) {
  PatternBraid pb;
  pb.reversed = atom.reversed;
  pb.braid.strands = atom.winding();
  for (int g = atom.i + atom.j; g >= atom.j + 1; --g) pb.braid.word.push_back(g);
  for (int g = atom.j; g >= 1; --g) pb.braid.word.push_back(-g);
  return pb;
}

CableBraid cable_braid(const BraidWord& companion, const std::vector<AtomProduct>& patterns) {
  companion.validate();
  const std::vector<int> comp_of = closure_component_of_strand(companion);
  const int ncomp = closure_components(companion);
  if (static_cast<int>(patterns.size()) != ncomp) {
    throw ComponentMismatch("companion has " + std::to_string(ncomp) + " components but " +
                            std::to_string(patterns.size()) + " patterns were given");
  }
  std::vector<AtomProduct> sorted = patterns;
  std::vector<int> width(ncomp);
  std::vector<std::vector<int>> bundle_dirs(ncomp);
  for (int c = 0; c < ncomp; ++c) {
    std::sort(sorted[c].begin(), sorted[c].end());
    for (const PatternAtom& a : sorted[c]) {
      for (int k = 0; k < a.winding(); ++k) bundle_dirs[c].push_back(a.reversed ? -1 : 1);
    }
    width[c] = static_cast<int>(bundle_dirs[c].size());
  }

  CableBraid out;
  for (int p = 0; p < companion.strands; ++p) {
    const auto& d = bundle_dirs[comp_of[p]];
    out.directions.insert(out.directions.end(), d.begin(), d.end());
  }
  out.braid.strands = std::max<int>(1, static_cast<int>(out.directions.size()));

  std::vector<int> comp_at = comp_of;
  auto offset_of = [&](int pos) {
    int o = 0;
    for (int p = 0; p < pos; ++p) o += width[comp_at[p]];
    return o;
  };
  for (int letter : companion.word) {
    const int g = std::abs(letter);
    const int eps = letter > 0 ? 1 : -1;
    const int left = width[comp_at[g - 1]];
    const int right = width[comp_at[g]];
    const int o = offset_of(g - 1);
    for (int j = 0; j < right; ++j) {
      for (int k = left - 1 + j; k >= j; --k) out.braid.word.push_back(eps * (o + k + 1));
    }
    std::swap(comp_at[g - 1], comp_at[g]);
  }

  for (int c = 0; c < ncomp; ++c) {
    const int first = static_cast<int>(std::find(comp_of.begin(), comp_of.end(), c) - comp_of.begin());
    int o = offset_of(first);
    for (const PatternAtom& a : sorted[c]) {
      for (int letter : pattern_braid(a).braid.word) {
        out.braid.word.push_back((letter > 0 ? 1 : -1) * (o + std::abs(letter)));
      }
      o += a.winding();
    }
  }
  return out;
}

Diagram cable_satellite(const BraidWord& companion, const std::vector<AtomProduct>& patterns) {
  CableBraid cb = cable_braid(companion, patterns);
  if (cb.directions.empty()) return Diagram({}, 0, 0);
  return closure_with_directions(cb.braid, cb.directions);
}

namespace {

// Code of a connected diagram, minimised over starting edges.
std::vector<int32_t> connected_code(const std::vector<Crossing>& crossings, int num_edges) {
  const int nx = static_cast<int>(crossings.size());
  std::vector<int> head(num_edges, -1);
  std::vector<char> head_over(num_edges, 0);
  for (int i = 0; i < nx; ++i) {
    head[crossings[i].over_in] = i;
    head_over[crossings[i].over_in] = 1;
    head[crossings[i].under_in] = i;
  }

  std::vector<int32_t> best;
  std::vector<int32_t> code;
  std::vector<int> label(num_edges);
  std::vector<int> xlabel(nx);
  std::vector<int> order;
  order.reserve(nx);
  for (int start = 0; start < num_edges; ++start) {
    std::fill(label.begin(), label.end(), -1);
    std::fill(xlabel.begin(), xlabel.end(), -1);
    order.clear();
    int next_label = 0;
    auto walk = [&](int s) {
      int e = s;
      do {
        label[e] = next_label++;
        const int c = head[e];
        if (xlabel[c] < 0) {
          xlabel[c] = static_cast<int>(order.size());
          order.push_back(c);
        }
        e = head_over[e] ? crossings[c].over_out : crossings[c].under_out;
      } while (e != s);
    };
    walk(start);
    std::size_t idx = 0;
    int scan = 0;
    while (next_label < num_edges) {
      if (idx < order.size()) {
        const Crossing& c = crossings[order[idx]];
        if (label[c.over_in] < 0) {
          walk(c.over_in);
        } else if (label[c.under_in] < 0) {
          walk(c.under_in);
        } else {
          ++idx;
        }
        continue;
      }
      while (label[scan] >= 0) ++scan;
      walk(scan);
    }
    code.clear();
    code.push_back(num_edges);
    for (int c : order) {
      const Crossing& x = crossings[c];
      code.insert(code.end(), {label[x.over_in], label[x.over_out], label[x.under_in], label[x.under_out], x.sign});
    }
    if (best.empty() || code < best) best = code;
  }
  if (best.empty()) best.push_back(0);
  return best;
}

}  // namespace

std::vector<int32_t> canonical_code(const std::vector<Crossing>& crossings, int num_edges) {
  std::vector<int> parent(num_edges);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Crossing& c : crossings) {
    for (int e : {c.over_out, c.under_in, c.under_out}) parent[find(e)] = find(c.over_in);
  }
  std::map<int, int> piece_of_root;
  for (int e = 0; e < num_edges; ++e) piece_of_root.emplace(find(e), static_cast<int>(piece_of_root.size()));
  if (piece_of_root.size() <= 1) return connected_code(crossings, num_edges);

  // Split pieces apart, code each one, and join the sorted codes with edge
  // offsets so the result has the same layout as a connected code.
  const std::size_t np = piece_of_root.size();
  std::vector<int> local(num_edges);
  std::vector<int> piece_edges(np, 0);
  for (int e = 0; e < num_edges; ++e) local[e] = piece_edges[piece_of_root[find(e)]]++;
  std::vector<std::vector<Crossing>> piece_crossings(np);
  for (const Crossing& c : crossings) {
    piece_crossings[piece_of_root[find(c.over_in)]].push_back(
        {local[c.over_in], local[c.over_out], local[c.under_in], local[c.under_out], c.sign});
  }
  std::vector<std::vector<int32_t>> codes;
  for (std::size_t p = 0; p < np; ++p) codes.push_back(connected_code(piece_crossings[p], piece_edges[p]));
  std::sort(codes.begin(), codes.end());
  std::vector<int32_t> out{num_edges};
  int offset = 0;
  for (const auto& code : codes) {
    for (std::size_t k = 1; k < code.size(); k += 5) {
      out.insert(out.end(), {code[k] + offset, code[k + 1] + offset, code[k + 2] + offset, code[k + 3] + offset,
                             code[k + 4]});
    }
    offset += code[0];
  }
  return out;
}

}  // namespace skeinlab
