#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nicepar/parabolic.hpp"

namespace nicepar {

struct NicenessVerdict {
  bool nice;
  std::string rule;
};

namespace detail {

/// Decomposition a_1 <= ... <= a_r > b = ... = b < a_r >= ... >= a_1
/// (s copies of b, full sequence palindromic).
struct DipShape {
  int r;  // 1-based length of the rising prefix
  int s;  // number of central b blocks
  int b;
};

inline std::optional<DipShape> find_dip(const std::vector<int>& seq) {
  int len = static_cast<int>(seq.size());
  for (int r = 1; 2 * r < len; ++r) {
    int s = len - 2 * r;
    bool rising = true;
    for (int i = 0; i + 1 < r; ++i)
      if (seq[i] > seq[i + 1]) rising = false;
    if (!rising) continue;
    int b = seq[r];
    bool flat = true;
    for (int i = r; i < r + s; ++i)
      if (seq[i] != b) flat = false;
    if (!flat) continue;
    if (seq[r - 1] <= b) continue;
    return DipShape{r, s, b};
  }
  return std::nullopt;
}

inline bool odd_values_at_most_twice(const std::vector<int>& seq) {
  for (auto& [v, mult] : value_multiplicities(seq))
    if (v % 2 == 1 && mult > 2) return false;
  return true;
}

}  // namespace detail

inline NicenessVerdict nice_A(const BlockSequence& bs) {
  if (bs.type != LieType::A) throw precondition_error("nice_A expects a type A block sequence");
  if (is_unimodal(bs.blocks)) return {true, "A-unimodal"};
  return {false, "A-not-unimodal"};
}

inline NicenessVerdict nice_B(const BlockSequence& bs) {
  if (bs.type != LieType::B) throw precondition_error("nice_B expects a type B block sequence");
  const auto& q = bs.blocks;
  if (is_unimodal(q)) return {true, "B-unimodal"};
  if (auto dip = detail::find_dip(q)) {
    bool side = dip->r == 1 || q[dip->r - 2] < q[dip->r - 1];
    if (dip->b == q[dip->r - 1] - 1 && side) return {true, "B-dip"};
  }
  return {false, "B-not-nice"};
}

inline NicenessVerdict nice_C(const BlockSequence& bs) {
  if (bs.type != LieType::C) throw precondition_error("nice_C expects a type C block sequence");
  const auto& q = bs.blocks;
  if (!is_unimodal(q)) return {false, "C-not-unimodal"};
  if (q.size() % 2 == 0) return {true, "C-even-blocks"};
  // Odd block lengths come in mirror pairs, so "exactly twice" for the
  // values present is the same condition as "at most twice".
  if (detail::odd_values_at_most_twice(q)) return {true, "C-odd-twice"};
  return {false, "C-odd-repeat"};
}

inline NicenessVerdict nice_D(const BlockSequence& bs) {
  if (bs.type != LieType::D) throw precondition_error("nice_D expects a type D block sequence");
  if (canonicalize_D(bs.blocks) != bs.blocks) throw precondition_error("nice_D expects a canonical block sequence");
  const auto& q = bs.blocks;
  bool odd_count = q.size() % 2 == 1;
  if (is_unimodal(q)) {
    if (odd_count) return {true, "D-unimodal-odd"};
    if (detail::odd_values_at_most_twice(q)) return {true, "D-unimodal-even-twice"};
    return {false, "D-unimodal-even-repeat"};
  }
  if (auto dip = detail::find_dip(q)) {
    int ar = q[dip->r - 1];
    bool side = dip->r == 1 || q[dip->r - 2] < ar;
    if (dip->b == ar - 1 && ar % 2 == 1 && side) {
      if (odd_count) return {true, "D-dip-odd"};
      if (detail::odd_values_at_most_twice(q)) return {true, "D-dip-even-twice"};
    }
  }
  return {false, "D-not-nice"};
}

namespace tables {

inline const std::vector<std::vector<int>>& nice_G2() {
  static const std::vector<std::vector<int>> t = {{0, 0}, {1, 0}, {1, 1}};
  return t;
}

inline const std::vector<std::vector<int>>& nice_F4() {
  static const std::vector<std::vector<int>> t = {
      {0, 0, 0, 0}, {0, 0, 0, 1}, {0, 1, 0, 0}, {0, 1, 0, 1},
      {1, 0, 0, 0}, {1, 1, 0, 0}, {1, 1, 0, 1}, {1, 1, 1, 1},
  };
  return t;
}

inline const std::vector<std::vector<int>>& nice_E6() {
  static const std::vector<std::vector<int>> t = {
      {1, 1, 1, 1, 1, 1}, {1, 1, 1, 0, 1, 1}, {1, 1, 1, 0, 1, 0}, {1, 1, 0, 1, 0, 1},
      {1, 1, 0, 0, 1, 0}, {1, 1, 0, 0, 0, 1}, {1, 1, 0, 0, 0, 0}, {1, 0, 1, 1, 0, 1},
      {1, 0, 1, 0, 0, 1}, {1, 0, 1, 0, 0, 0}, {1, 0, 0, 1, 1, 1}, {1, 0, 0, 1, 0, 1},
      {1, 0, 0, 1, 0, 0}, {1, 0, 0, 0, 1, 1}, {1, 0, 0, 0, 1, 0}, {1, 0, 0, 0, 0, 1},
      {1, 0, 0, 0, 0, 0}, {0, 1, 1, 0, 1, 1}, {0, 1, 1, 0, 0, 1}, {0, 1, 0, 1, 0, 0},
      {0, 1, 0, 0, 0, 1}, {0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 1}, {0, 0, 1, 0, 0, 0},
      {0, 0, 0, 1, 0, 1}, {0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 1}, {0, 0, 0, 0, 1, 0},
      {0, 0, 0, 0, 0, 1}, {0, 0, 0, 0, 0, 0},
  };
  return t;
}

inline const std::vector<std::vector<int>>& nice_E7() {
  static const std::vector<std::vector<int>> t = {
      {1, 1, 1, 1, 1, 1, 1}, {1, 1, 1, 0, 1, 1, 1}, {1, 1, 1, 0, 1, 0, 1}, {1, 1, 0, 0, 1, 0, 1},
      {1, 1, 0, 0, 0, 0, 1}, {1, 0, 1, 1, 0, 1, 0}, {1, 0, 1, 0, 0, 1, 0}, {1, 0, 1, 0, 0, 0, 0},
      {1, 0, 0, 1, 0, 1, 1}, {1, 0, 0, 1, 0, 1, 0}, {1, 0, 0, 1, 0, 0, 1}, {1, 0, 0, 0, 1, 0, 0},
      {1, 0, 0, 0, 0, 1, 1}, {1, 0, 0, 0, 0, 1, 0}, {1, 0, 0, 0, 0, 0, 1}, {1, 0, 0, 0, 0, 0, 0},
      {0, 1, 1, 0, 0, 1, 1}, {0, 1, 0, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 1, 0}, {0, 0, 1, 0, 0, 0, 1},
      {0, 0, 1, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 1, 0}, {0, 0, 0, 1, 0, 0, 1}, {0, 0, 0, 1, 0, 0, 0},
      {0, 0, 0, 0, 1, 0, 1}, {0, 0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 0, 1},
      {0, 0, 0, 0, 0, 0, 0},
  };
  return t;
}

inline const std::vector<std::vector<int>>& nice_E8() {
  static const std::vector<std::vector<int>> t = {
      {1, 1, 1, 1, 1, 1, 1, 1}, {1, 1, 1, 0, 1, 1, 1, 1}, {1, 1, 1, 0, 1, 0, 1, 1},
      {1, 0, 0, 1, 0, 1, 1, 1}, {1, 0, 0, 1, 0, 1, 0, 1},
      {1, 0, 0, 1, 0, 0, 1, 1}, {1, 0, 0, 1, 0, 0, 1, 0}, {1, 0, 0, 0, 1, 0, 0, 1},
      {1, 0, 0, 0, 0, 1, 1, 1}, {1, 0, 0, 0, 0, 1, 0, 1}, {1, 0, 0, 0, 0, 1, 0, 0},
      {1, 0, 0, 0, 0, 0, 1, 1}, {1, 0, 0, 0, 0, 0, 1, 0}, {1, 0, 0, 0, 0, 0, 0, 1},
      {1, 0, 0, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0, 0, 1}, {0, 1, 0, 0, 0, 0, 0, 0},
      {0, 0, 1, 0, 0, 0, 1, 0}, {0, 0, 0, 1, 0, 0, 1, 1}, {0, 0, 0, 1, 0, 0, 1, 0},
      {0, 0, 0, 1, 0, 0, 0, 1}, {0, 0, 0, 0, 1, 0, 0, 1}, {0, 0, 0, 0, 1, 0, 0, 0},
      {0, 0, 0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 0, 0, 1, 1}, {0, 0, 0, 0, 0, 0, 1, 0},
      {0, 0, 0, 0, 0, 0, 0, 1}, {0, 0, 0, 0, 0, 0, 0, 0},
  };
  return t;
}

inline const std::vector<std::vector<int>>& nice_table(LieType t) {
  switch (t) {
    case LieType::G2: return nice_G2();
    case LieType::F4: return nice_F4();
    case LieType::E6: return nice_E6();
    case LieType::E7: return nice_E7();
    case LieType::E8: return nice_E8();
    default: throw unsupported_operation("no exceptional table for classical types");
  }
}

}  // namespace tables

inline NicenessVerdict nice_exceptional(const ParabolicSpec& spec) {
  const auto& table = tables::nice_table(spec.type);
  for (const auto& row : table)
    if (row == spec.coloring) return {true, "exceptional-table"};
  return {false, "exceptional-table"};
}

inline NicenessVerdict is_nice(const ParabolicSpec& spec) {
  if (!is_classical(spec.type)) return nice_exceptional(spec);
  BlockSequence bs = coloring_to_blocks(spec);
  switch (spec.type) {
    case LieType::A: return nice_A(bs);
    case LieType::B: return nice_B(bs);
    case LieType::C: return nice_C(bs);
    default: return nice_D(bs);
  }
}

inline NicenessVerdict is_nice(const BlockSequence& bs) {
  switch (bs.type) {
    case LieType::A: return nice_A(bs);
    case LieType::B: return nice_B(bs);
    case LieType::C: return nice_C(bs);
    case LieType::D: return nice_D(bs);
    default: throw unsupported_operation("block sequences exist only for classical types");
  }
}

// ---------------------------------------------------------------------------
// Even nilpotent elements and orbit counts.

/// A nilpotent of sl_N is even iff all Jordan block sizes share one parity.
inline bool even_A(const Partition& p) {
  for (std::size_t i = 1; i < p.parts.size(); ++i)
    if ((p.parts[i] & 1) != (p.parts[0] & 1)) return false;
  return true;
}

/// A nice type-A parabolic comes from an even nilpotent iff its block
/// sequence is palindromic.
inline bool even_nilpotent_nice_A(const BlockSequence& bs) {
  if (bs.type != LieType::A) throw precondition_error("even_nilpotent_nice_A expects type A");
  if (!is_unimodal(bs.blocks)) throw precondition_error("even_nilpotent_nice_A expects a nice sequence");
  return is_palindromic(bs.blocks);
}

namespace detail {

/// Unimodal palindromic compositions of `total`, generated from the weakly
/// increasing half plus an optional middle part.
inline std::vector<std::vector<int>> unimodal_palindromic_compositions(int total) {
  std::vector<std::vector<int>> out;
  std::vector<int> half;
  std::function<void(int, int)> rec = [&](int left, int minpart) {
    if (left == 0 && !half.empty()) {
      std::vector<int> seq(half);
      seq.insert(seq.end(), half.rbegin(), half.rend());
      out.push_back(std::move(seq));
    }
    if (left >= minpart && left >= 1) {
      std::vector<int> seq(half);
      seq.push_back(left);
      seq.insert(seq.end(), half.rbegin(), half.rend());
      out.push_back(std::move(seq));
    }
    for (int next = minpart; 2 * next <= left; ++next) {
      half.push_back(next);
      rec(left - 2 * next, next);
      half.pop_back();
    }
  };
  rec(total, 1);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

struct EvenOrbitCount {
  int count;
  std::vector<Composition> compositions;
};

/// Number of even nilpotent orbits, parametrized by unimodal palindromic
/// compositions with the type-specific parity filter. Types map to the
/// algebras sl_{rank+1}, so_{2 rank+1}, sp_{2 rank}, so_{2 rank}.
inline EvenOrbitCount count_even_orbits(LieType type, int rank) {
  if (!is_classical(type)) throw unsupported_operation("count_even_orbits: classical types only");
  // Orbit counting makes sense below the simple-type rank floors too
  // (sp_4, so_3, ...), so only positivity is required here.
  if (rank < 1) throw error("count_even_orbits requires rank >= 1");
  int total = 0;
  switch (type) {
    case LieType::A: total = rank + 1; break;
    case LieType::B: total = 2 * rank + 1; break;
    default: total = 2 * rank; break;
  }
  EvenOrbitCount out{0, {}};
  for (auto& seq : detail::unimodal_palindromic_compositions(total)) {
    bool all_even = std::all_of(seq.begin(), seq.end(), [](int x) { return x % 2 == 0; });
    std::size_t parts = seq.size();
    bool keep = true;
    if (type == LieType::C && parts % 2 == 1) keep = all_even;
    if ((type == LieType::B || type == LieType::D) && parts % 2 == 0) keep = all_even;
    if (keep) {
      ++out.count;
      out.compositions.emplace_back(Composition{seq});
    }
  }
  return out;
}

/// Even orbit count for sl_n itself (compositions of n, no parity filter).
inline int count_even_orbits_sl(int n) {
  return static_cast<int>(detail::unimodal_palindromic_compositions(n).size());
}

// ---------------------------------------------------------------------------
// Generating function identity, by exact truncated power series.

namespace series {

using Series = std::vector<mpz_class>;  // index = exponent, truncated

inline Series zero(int deg) { return Series(deg + 1, mpz_class(0)); }

inline Series mul(const Series& a, const Series& b) {
  int deg = static_cast<int>(a.size()) - 1;
  Series out = zero(deg);
  for (int i = 0; i <= deg; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= deg; ++j)
      if (b[j] != 0) out[i + j] += a[i] * b[j];
  }
  return out;
}

/// Multiplicative inverse of a series with constant term +-1.
inline Series inverse(const Series& a) {
  int deg = static_cast<int>(a.size()) - 1;
  if (a[0] != 1 && a[0] != -1) throw error("series inverse needs unit constant term");
  Series out = zero(deg);
  out[0] = a[0];
  for (int k = 1; k <= deg; ++k) {
    mpz_class acc = 0;
    for (int j = 1; j <= k; ++j) acc += a[j] * out[k - j];
    out[k] = -acc * a[0];
  }
  return out;
}

}  // namespace series

struct GenfunCoefficients {
  std::vector<mpz_class> lhs;  // sum_{j>=1} q^j (1+q^j) / prod_{i<=j} (1-q^{2i})
  std::vector<mpz_class> rhs;  // partitions into odd parts + partitions into even parts
  bool match() const { return lhs == rhs; }
};

inline GenfunCoefficients genfun_coefficients(int max_degree) {
  if (max_degree < 1) throw error("genfun_coefficients requires max_degree >= 1");
  using series::Series;
  int D = max_degree;
  Series lhs = series::zero(D);
  // prod_{i=1..j}(1-q^{2i}) maintained by explicit multiplication
  Series prod = series::zero(D);
  prod[0] = 1;
  for (int j = 1; j <= D; ++j) {
    Series factor = series::zero(D);
    factor[0] = 1;
    if (2 * j <= D) factor[2 * j] = -1;
    prod = series::mul(prod, factor);
    Series numer = series::zero(D);
    numer[j] = 1;
    if (2 * j <= D) numer[2 * j] += 1;
    Series term = series::mul(numer, series::inverse(prod));
    for (int k = 0; k <= D; ++k) lhs[k] += term[k];
  }

  auto inv_product = [&](int start, int step) {
    Series p = series::zero(D);
    p[0] = 1;
    for (int e = start; e <= D; e += step) {
      Series factor = series::zero(D);
      factor[0] = 1;
      factor[e] = -1;
      p = series::mul(p, factor);
    }
    return series::inverse(p);
  };
  Series odd = inv_product(1, 2);
  Series even = inv_product(2, 2);
  Series rhs = series::zero(D);
  for (int k = 0; k <= D; ++k) rhs[k] = odd[k] + even[k];
  rhs[0] -= 2;  // both products start at 1; the orbit count has no constant term

  return GenfunCoefficients{std::move(lhs), std::move(rhs)};
}

}  // namespace nicepar
