#pragma once

// Oriented framed link diagrams built from braid closures and cables.
//
// A Diagram is a signed crossing list over oriented edges.  Each crossing
// records the incoming/outgoing edge of its over strand and its under strand;
// every edge is the outgoing end of exactly one crossing slot and the incoming
// end of exactly one.  Crossing-free circles are not edges; they are counted
// in free_loops.  Together with the sign, the four slots determine the cyclic
// order of the ends around the crossing, so no further planar data is needed.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "skeinlab/annulus.hpp"

namespace skeinlab {

struct BraidWord {
  int strands = 1;
  // +g is sigma_g, -g is sigma_g^-1, with 1 <= g <= strands - 1.
  std::vector<int> word;

  // Throws std::invalid_argument on an out-of-range letter.
  void validate() const;
  int writhe() const;
  // Position at the top of the braid reached by the strand starting at p.
  std::vector<int> permutation() const;

  // "n:[g1,g2,...]"
  std::string to_string() const;
  static BraidWord parse(std::string_view text);
  nlohmann::json to_json() const { return {{"strands", strands}, {"word", word}}; }
  static BraidWord from_json(const nlohmann::json& j);

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

struct Crossing {
  int over_in = 0;
  int over_out = 0;
  int under_in = 0;
  int under_out = 0;
  int sign = 1;

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

class Diagram {
 public:
  Diagram() = default;
  // Builds from raw crossings; edges must be 0..num_edges-1 with each used once
  // as an incoming and once as an outgoing slot.  Throws std::invalid_argument.
  Diagram(std::vector<Crossing> crossings, int num_edges, int free_loops);

  const std::vector<Crossing>& crossings() const { return crossings_; }
  int num_edges() const { return num_edges_; }
  int free_loops() const { return free_loops_; }
  int num_crossings() const { return static_cast<int>(crossings_.size()); }

  // Components: edge cycles first (ordered by least edge id), then free loops.
  int num_components() const { return static_cast<int>(self_writhe_.size()); }
  const std::vector<int>& edge_component() const { return edge_component_; }
  const std::vector<int>& self_writhe() const { return self_writhe_; }
  int writhe() const;

  // Reverses every strand; crossing signs are unchanged.
  Diagram reversed() const;
  // Switches every crossing.
  Diagram mirrored() const;

  nlohmann::json to_json() const;

 private:
  friend class DiagramBuilder;
  void compute_components();

  std::vector<Crossing> crossings_;
  int num_edges_ = 0;
  int free_loops_ = 0;
  std::vector<int> edge_component_;
  std::vector<int> self_writhe_;
};

// Closure of a braid in which strand k runs upward when directions[k] > 0 and
// downward otherwise.  Components are numbered by least starting position.
Diagram closure_with_directions(const BraidWord& braid, const std::vector<int>& directions);

// Standard closure with all strands oriented upward.
Diagram braid_closure(const BraidWord& braid);

// Number of closure components (cycles of the strand permutation).
int closure_components(const BraidWord& braid);
// Component id (in closure order) of every starting position.
std::vector<int> closure_component_of_strand(const BraidWord& braid);

struct PatternBraid {
  BraidWord braid;
  bool reversed = false;
};

// sigma_{i+j} ... sigma_{j+1} sigma_j^-1 ... sigma_1^-1 on i+j+1 strands.
PatternBraid pattern_braid(const PatternAtom& atom);

struct CableBraid {
  BraidWord braid;
  std::vector<int> directions;  // per starting strand, +1 or -1
};

// Replaces each companion component by a bundle of parallel strands carrying
// the given atoms (forward atoms first, then reversed), turns every companion
// crossing into a block crossing of bundles and inserts the atoms' braids on
// the bundle of each component's least strand just before closure.
// Throws ComponentMismatch when the pattern count differs from the companion's
// component count.
CableBraid cable_braid(const BraidWord& companion, const std::vector<AtomProduct>& patterns);

Diagram cable_satellite(const BraidWord& companion, const std::vector<AtomProduct>& patterns);

// Canonical relabelling of a diagram: edges renumbered by traversal, minimised
// over all starting edges.  Equal codes mean isomorphic signed diagrams.
std::vector<int32_t> canonical_code(const std::vector<Crossing>& crossings, int num_edges);

}  // namespace skeinlab
