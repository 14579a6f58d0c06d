#pragma once

// Partitions and the symmetric-group data used by the annulus expansions:
// hook lengths, contents, kappa, z, characters and Littlewood-Richardson
// coefficients.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace skeinlab {

class Partition {
 public:
  Partition() = default;
  // Throws std::invalid_argument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int size() const;  // |lambda|
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  // i-th part (0-based), 0 past the end.
  int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  Partition conjugate() const;
  // Young-diagram inclusion: this_i <= other_i for all i.
  bool contained_in(const Partition& other) const;
  // Multiplicity m_i of the part i.
  int multiplicity(int i) const;

  // Over all boxes (row-major).
  std::vector<int> hooks() const;
  std::vector<int> contents() const;
  int64_t kappa() const;
  int64_t z() const;
  int64_t aut_order() const;

  std::string to_string() const;  // "[3,1]"
  static Partition parse(std::string_view text);
  nlohmann::json to_json() const { return parts_; }
  static Partition from_json(const nlohmann::json& j);

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

struct HookContentData {
  std::vector<int> hooks;
  std::vector<int> contents;
  int64_t kappa = 0;
  int64_t z = 0;
};

HookContentData hook_content_data(const Partition& lambda);

inline constexpr int kDefaultPartitionBound = 20;

// All partitions of n in reverse-lexicographic order; throws BoundExceeded
// when n exceeds the bound.
std::vector<Partition> partitions_of(int n, int bound = kDefaultPartitionBound);

// chi_lambda(C_mu) by Murnaghan-Nakayama, memoised.  Throws SizeMismatch.
int64_t character(const Partition& lambda, const Partition& mu);

// c^nu_{lambda,mu} by counting Littlewood-Richardson tableaux of shape
// nu/lambda and content mu.
int64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

// Union of parts, re-sorted (rho u tau).
Partition merge(const Partition& x, const Partition& y);

int64_t factorial(int n);

}  // namespace skeinlab
