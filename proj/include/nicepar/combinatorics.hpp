#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include "nicepar/exact.hpp"

namespace nicepar {

/// Weakly decreasing positive parts; the empty partition is the partition of 0.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p) : parts(std::move(p)) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (parts[i] < 1) throw error("partition parts must be positive");
      if (i > 0 && parts[i] > parts[i - 1]) throw error("partition parts must be weakly decreasing");
    }
  }

  int total() const { return std::accumulate(parts.begin(), parts.end(), 0); }
  bool operator==(const Partition&) const = default;
};

/// Order-significant positive parts.
struct Composition {
  std::vector<int> parts;

  Composition() = default;
  explicit Composition(std::vector<int> p) : parts(std::move(p)) {
    for (int x : parts)
      if (x < 1) throw error("composition parts must be positive");
  }

  int total() const { return std::accumulate(parts.begin(), parts.end(), 0); }
  bool operator==(const Composition&) const = default;
};

/// True iff the sequence rises to some peak and then falls (weakly).
/// Empty and singleton sequences are vacuously unimodal.
inline bool is_unimodal(const std::vector<int>& seq) {
  std::size_t i = 0;
  while (i + 1 < seq.size() && seq[i] <= seq[i + 1]) ++i;
  while (i + 1 < seq.size() && seq[i] >= seq[i + 1]) ++i;
  return i + 1 >= seq.size();
}

inline bool is_palindromic(const std::vector<int>& seq) {
  std::size_t n = seq.size();
  for (std::size_t i = 0; 2 * i < n; ++i)
    if (seq[i] != seq[n - 1 - i]) return false;
  return true;
}

/// Conjugate partition: column lengths of the Young diagram.
inline Partition dual_partition(const Partition& p) {
  std::vector<int> dual;
  if (!p.parts.empty()) {
    dual.resize(p.parts[0], 0);
    for (int part : p.parts)
      for (int j = 0; j < part; ++j) ++dual[j];
  }
  return Partition(std::move(dual));
}

/// All compositions of `total` passing `filter`, in lexicographic order.
inline std::vector<Composition> enumerate_compositions(
    int total, const std::function<bool(const std::vector<int>&)>& filter) {
  if (total < 1) throw error("enumerate_compositions requires total >= 1");
  std::vector<Composition> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int left) {
    if (left == 0) {
      if (!filter || filter(cur)) out.emplace_back(Composition{cur});
      return;
    }
    for (int next = 1; next <= left; ++next) {
      cur.push_back(next);
      rec(left - next);
      cur.pop_back();
    }
  };
  rec(total);
  return out;
}

/// Multiplicity of each value in a sequence.
inline std::map<int, int> value_multiplicities(const std::vector<int>& seq) {
  std::map<int, int> m;
  for (int v : seq) ++m[v];
  return m;
}

}  // namespace nicepar
