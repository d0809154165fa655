#pragma once

#include <climits>
#include <map>
#include <vector>

#include "nicepar/parabolic.hpp"

namespace nicepar {

namespace detail {

/// min(blocks[i..j]) with 1-based inclusive indices.
inline int window_min(const std::vector<int>& blocks, int i, int j) {
  int m = INT_MAX;
  for (int k = i; k <= j; ++k) m = std::min(m, blocks[k - 1]);
  return m;
}

}  // namespace detail

/// Rank of x^j for a generic degree-1 element of the type-A parabolic with
/// the given diagonal block lengths: each super-diagonal block of x^j is a
/// product of j generic rectangles, so its generic rank is the min of the
/// j+1 participating block lengths.
inline int generic_rank_A(const std::vector<int>& blocks, int j) {
  if (j < 1) throw precondition_error("generic ranks are defined for j >= 1");
  int r = static_cast<int>(blocks.size());
  int total = 0;
  for (int i = 1; i + j <= r; ++i) total += detail::window_min(blocks, i, i + j);
  return total;
}

/// Type C. An even number of blocks behaves like sl_{2n}; with an odd count
/// the entries of x^j that cross the middle pair up a map with its adjoint
/// under the symplectic pairing, which caps the rank at an even value.
inline int generic_rank_C(const std::vector<int>& blocks, int j) {
  if (j < 1) throw precondition_error("generic ranks are defined for j >= 1");
  int L = static_cast<int>(blocks.size());
  if (L % 2 == 0) return generic_rank_A(blocks, j);
  int r = (L - 1) / 2;
  int total = 0;
  for (int i = 1; i + j <= L; ++i) {
    if (i + j <= r + 1 || i >= r + 1) {
      total += detail::window_min(blocks, i, i + j);
    } else {
      int s = detail::window_min(blocks, i, i + j);
      int u = std::min(r + 1 - i, i + j - r - 1);
      int v = detail::window_min(blocks, r + 1 - u, r + 1 + u);
      int t = v - (v & 1);
      total += std::min(s, t);
    }
  }
  return total;
}

/// Types B and D. An odd number of blocks behaves like sl_d; with an even
/// count (type D after canonicalization; impossible for B) the central square
/// is skew relative to the symmetric pairing, so the crossing entries lose
/// one rank whenever the governing central min is odd.
inline int generic_rank_BD(const std::vector<int>& blocks, int j, bool is_B) {
  if (j < 1) throw precondition_error("generic ranks are defined for j >= 1");
  int L = static_cast<int>(blocks.size());
  if (L % 2 == 1) return generic_rank_A(blocks, j);
  if (is_B) throw inconsistency_error("a type B block sequence cannot have an even block count");
  int r = L / 2;
  int total = 0;
  for (int i = 1; i + j <= L; ++i) {
    if (i + j <= r || i >= r + 1) {
      total += detail::window_min(blocks, i, i + j);
    } else {
      int s = detail::window_min(blocks, i, i + j);
      int u = std::min(r + 1 - i, i + j - r);
      int v = detail::window_min(blocks, r + 1 - u, r + u);
      int t = v - (v & 1);
      total += std::min(s, t);
    }
  }
  return total;
}

inline int generic_rank(const BlockSequence& bs, int j) {
  switch (bs.type) {
    case LieType::A: return generic_rank_A(bs.blocks, j);
    case LieType::C: return generic_rank_C(bs.blocks, j);
    case LieType::B: return generic_rank_BD(bs.blocks, j, true);
    case LieType::D: return generic_rank_BD(bs.blocks, j, false);
    default: throw unsupported_operation("generic ranks exist only for classical types");
  }
}

struct JordanForm {
  std::map<int, int> multiplicities;  // block size -> count
  std::vector<int> ranks;             // rank x, rank x^2, ... ending at 0

  Partition partition() const {
    std::vector<int> parts;
    for (auto it = multiplicities.rbegin(); it != multiplicities.rend(); ++it)
      parts.insert(parts.end(), it->second, it->first);
    return Partition(std::move(parts));
  }
};

/// Jordan form of a generic degree-1 element: block multiplicities are second
/// differences of kernel dimensions. A negative multiplicity cannot occur for
/// correct ranks, so it is reported as a bug rather than clamped.
inline JordanForm jordan_form(const BlockSequence& bs) {
  int N = gl_size(bs.type, bs.rank);
  std::vector<int> ranks{N};  // ranks[j] = rank x^j, ranks[0] = N
  for (int j = 1; j <= N; ++j) {
    int rj = generic_rank(bs, j);
    ranks.push_back(rj);
    if (rj == 0) break;
  }
  if (ranks.back() != 0) throw inconsistency_error("nilpotent power ranks failed to reach zero");
  JordanForm jf;
  jf.ranks.assign(ranks.begin() + 1, ranks.end());
  int total = 0;
  for (std::size_t j = 1; j < ranks.size(); ++j) {
    int above = j + 1 < ranks.size() ? ranks[j + 1] : 0;
    int aj = ranks[j - 1] - 2 * ranks[j] + above;
    if (aj < 0) throw inconsistency_error("negative Jordan multiplicity: rank formula bug");
    if (aj > 0) jf.multiplicities[static_cast<int>(j)] = aj;
    total += static_cast<int>(j) * aj;
  }
  if (total != N) throw inconsistency_error("Jordan multiplicities do not fill the matrix size");
  return jf;
}

/// Centralizer dimension of a nilpotent with the given Jordan type.
/// Type A is the gl_N centralizer (sum of squares of the dual partition);
/// C and B/D adjust by the number of odd parts.
inline int centralizer_dim(const Partition& p, LieType type) {
  Partition dual = dual_partition(p);
  long long sq = 0;
  for (int m : dual.parts) sq += static_cast<long long>(m) * m;
  long long odd = 0;
  for (int n : p.parts)
    if (n % 2 == 1) ++odd;
  switch (type) {
    case LieType::A:
      return static_cast<int>(sq);
    case LieType::C: {
      std::map<int, int> mult = value_multiplicities(p.parts);
      for (auto& [v, m] : mult)
        if (v % 2 == 1 && m % 2 == 1) throw invalid_partition("odd parts must have even multiplicity in type C");
      return static_cast<int>((sq + odd) / 2);
    }
    case LieType::B:
    case LieType::D: {
      std::map<int, int> mult = value_multiplicities(p.parts);
      for (auto& [v, m] : mult)
        if (v % 2 == 0 && m % 2 == 1) throw invalid_partition("even parts must have even multiplicity in types B/D");
      return static_cast<int>((sq - odd) / 2);
    }
    default:
      throw unsupported_operation("centralizer_dim: classical types only");
  }
}

/// Independent closed-form route to the classification: a parabolic is nice
/// iff the generic centralizer dimension equals the Levi dimension.
inline bool nice_via_dimension(const BlockSequence& bs) {
  Partition p = jordan_form(bs).partition();
  return centralizer_dim(p, bs.type) == levi_dim(bs);
}

}  // namespace nicepar
