#include "skeinlab/combinatorics.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>

#include "skeinlab/errors.hpp"

namespace skeinlab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

int Partition::size() const {
  int n = 0;
  for (int p : parts_) n += p;
  return n;
}

Partition Partition::conjugate() const {
  std::vector<int> t;
  if (!parts_.empty()) {
    t.resize(parts_.front());
    for (int p : parts_) {
      for (int j = 0; j < p; ++j) ++t[j];
    }
  }
  return Partition(std::move(t));
}

bool Partition::contained_in(const Partition& other) const {
  if (length() > other.length()) return false;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] > other.parts_[i]) return false;
  }
  return true;
}

int Partition::multiplicity(int i) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

std::vector<int> Partition::hooks() const {
  const Partition t = conjugate();
  std::vector<int> h;
  h.reserve(size());
  for (int i = 0; i < length(); ++i) {
    for (int j = 0; j < parts_[i]; ++j) h.push_back(parts_[i] + t.parts_[j] - i - j - 1);
  }
  return h;
}

std::vector<int> Partition::contents() const {
  std::vector<int> c;
  c.reserve(size());
  for (int i = 0; i < length(); ++i) {
    for (int j = 0; j < parts_[i]; ++j) c.push_back(j - i);
  }
  return c;
}

int64_t Partition::kappa() const {
  int64_t k = 0;
  for (int j = 1; j <= length(); ++j) {
    const int64_t p = parts_[j - 1];
    k += p * (p - 2 * j + 1);
  }
  return k;
}

int64_t Partition::z() const {
  int64_t z = 1;
  for (int p : parts_) z *= p;
  return z * aut_order();
}

int64_t Partition::aut_order() const {
  int64_t r = 1;
  std::size_t i = 0;
  while (i < parts_.size()) {
    std::size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
    r *= factorial(static_cast<int>(j - i));
    i = j;
  }
  return r;
}

std::string Partition::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + "]";
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  skip_ws();
  const bool bracketed = pos < text.size() && text[pos] == '[';
  if (bracketed) ++pos;
  skip_ws();
  while (pos < text.size() && text[pos] != ']') {
    int v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), v);
    if (ec != std::errc()) throw ParseError("bad partition: " + std::string(text));
    pos = static_cast<std::size_t>(ptr - text.data());
    parts.push_back(v);
    skip_ws();
    if (pos < text.size() && text[pos] == ',') ++pos;
    skip_ws();
  }
  if (bracketed) {
    if (pos >= text.size()) throw ParseError("unterminated partition: " + std::string(text));
    ++pos;
  }
  skip_ws();
  if (pos != text.size()) throw ParseError("trailing characters in partition: " + std::string(text));
  try {
    return Partition(std::move(parts));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string(e.what()) + ": " + std::string(text));
  }
}

Partition Partition::from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("partition must be a JSON integer list");
  try {
    return Partition(j.get<std::vector<int>>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

HookContentData hook_content_data(const Partition& lambda) {
  return {lambda.hooks(), lambda.contents(), lambda.kappa(), lambda.z()};
}

int64_t factorial(int n) {
  int64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

Partition merge(const Partition& x, const Partition& y) {
  std::vector<int> parts = x.parts();
  parts.insert(parts.end(), y.parts().begin(), y.parts().end());
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

std::vector<Partition> partitions_of(int n, int bound) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative size");
  if (n > bound) throw BoundExceeded("partitions_of(" + std::to_string(n) + ") exceeds bound " + std::to_string(bound));
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

namespace {

// Beta-set (first-column hook lengths) of lambda padded to `len` rows.
std::vector<int> beta_set(const Partition& lambda, int len) {
  std::vector<int> beta(len);
  for (int i = 0; i < len; ++i) beta[i] = lambda.part(i) + (len - 1 - i);
  return beta;
}

Partition from_beta(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>());
  const int len = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 0; i < len; ++i) {
    const int p = beta[i] - (len - 1 - i);
    if (p > 0) parts.push_back(p);
  }
  return Partition(std::move(parts));
}

class CharTable {
 public:
  int64_t get(const Partition& lambda, const Partition& mu) {
    if (mu.empty()) return 1;  // lambda is empty too
    {
      std::lock_guard lock(mutex_);
      auto it = memo_.find({lambda, mu});
      if (it != memo_.end()) return it->second;
    }
    // Remove a rim hook of length mu_1: slide one bead of the beta-set down
    // by r positions; the sign counts the beads jumped over.
    const int r = mu.parts().front();
    const Partition rest(std::vector<int>(mu.parts().begin() + 1, mu.parts().end()));
    const int len = lambda.length();
    std::vector<int> beta = beta_set(lambda, len);
    int64_t total = 0;
    for (int i = 0; i < len; ++i) {
      const int target = beta[i] - r;
      if (target < 0) continue;
      if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
      int between = 0;
      for (int b : beta) {
        if (b > target && b < beta[i]) ++between;
      }
      std::vector<int> moved = beta;
      moved[i] = target;
      const int64_t sub = get(from_beta(std::move(moved)), rest);
      total += (between % 2 == 0) ? sub : -sub;
    }
    std::lock_guard lock(mutex_);
    memo_.emplace(std::make_pair(lambda, mu), total);
    return total;
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<Partition, Partition>, int64_t> memo_;
};

CharTable& char_table() {
  static CharTable table;
  return table;
}

// Counts LR fillings of nu/lambda with content mu whose reverse reading word
// is a lattice word.
class LrCounter {
 public:
  LrCounter(const Partition& lambda, const Partition& mu, const Partition& nu)
      : lambda_(lambda), mu_(mu), nu_(nu), fill_(nu.length()), used_(mu.length() + 1, 0) {
    for (int r = 0; r < nu.length(); ++r) fill_[r].assign(nu.part(r), 0);
  }

  int64_t count() { return place(0, nu_.part(0) - 1); }

 private:
  // Fills rows top to bottom, each row right to left (the reading order).
  int64_t place(int row, int col) {
    if (row >= nu_.length()) return 1;
    if (col < lambda_.part(row)) return place(row + 1, nu_.part(row + 1) - 1);
    int hi = mu_.length();
    if (col + 1 < nu_.part(row)) hi = std::min(hi, fill_[row][col + 1]);
    int lo = 1;
    if (row > 0 && col >= lambda_.part(row - 1)) lo = fill_[row - 1][col] + 1;
    hi = std::min(hi, row + 1);
    int64_t total = 0;
    for (int v = lo; v <= hi; ++v) {
      if (used_[v] >= mu_.part(v - 1)) continue;
      if (v > 1 && used_[v] + 1 > used_[v - 1]) continue;
      ++used_[v];
      fill_[row][col] = v;
      total += place(row, col - 1);
      fill_[row][col] = 0;
      --used_[v];
    }
    return total;
  }

  const Partition& lambda_;
  const Partition& mu_;
  const Partition& nu_;
  std::vector<std::vector<int>> fill_;
  std::vector<int> used_;
};

}  // namespace

int64_t character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) {
    throw SizeMismatch("character: |" + lambda.to_string() + "| != |" + mu.to_string() + "|");
  }
  return char_table().get(lambda, mu);
}

int64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (nu.size() != lambda.size() + mu.size()) return 0;
  if (!lambda.contained_in(nu) || !mu.contained_in(nu)) return 0;
  if (mu.empty()) return lambda == nu ? 1 : 0;
  return LrCounter(lambda, mu, nu).count();
}

}  // namespace skeinlab
