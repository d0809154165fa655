#pragma once

#include <map>
#include <string>
#include <vector>

#include "nicepar/classify.hpp"
#include "nicepar/exact.hpp"
#include "nicepar/oracle.hpp"

namespace nicepar {

/// The constructed Richardson element: a {0, +1, -1} matrix supported on
/// degree-1 positions, lying in the classical algebra of the block sequence.
struct RichardsonMatrix {
  BlockSequence blocks;
  int size;
  std::map<std::pair<int, int>, int> entries;          // (row, col) 1-based -> +-1
  std::vector<std::pair<int, int>> support_roots;      // chosen gl root labels alpha_{ij}

  ExactMatrix to_exact() const {
    ExactMatrix m(size, size);
    for (const auto& [pos, val] : entries) m.at(pos.first - 1, pos.second - 1) = val;
    return m;
  }
};

/// One rectangle's worth of chosen positions (already in matrix coordinates).
struct RectangleChoice {
  int rect_index;  // i for R_{i,i+1}, 1-based
  std::vector<SparseEntry> entries;
};

namespace detail {

/// Matrix position of rectangle cell (k, l): columns count from the left of
/// block i+1, rows from the bottom of block i, so (1,1) is the lower left
/// corner of R_{i,i+1}.
struct RectangleMap {
  const std::vector<int>& blocks;
  std::vector<int> off;  // off[i] = rows/cols before block i+1 (0-based block)

  explicit RectangleMap(const std::vector<int>& b) : blocks(b), off(b.size() + 1, 0) {
    for (std::size_t i = 0; i < b.size(); ++i) off[i + 1] = off[i] + b[i];
  }

  int rows(int i) const { return blocks[i - 1]; }      // a_i
  int cols(int i) const { return blocks[i]; }          // a_{i+1}

  SparseEntry cell(int i, int k, int l, int val) const {
    if (k < 1 || k > cols(i) || l < 1 || l > rows(i))
      throw inconsistency_error("recipe selected a cell outside its rectangle");
    int row = off[i - 1] + rows(i) - l + 1;
    int col = off[i] + k;
    return {row, col, val};
  }
};

inline void push_unique(std::vector<SparseEntry>& v, const SparseEntry& e) {
  for (const auto& x : v)
    if (x.row == e.row && x.col == e.col) {
      if (x.val != e.val) throw inconsistency_error("recipe clauses disagree on a cell value");
      return;
    }
  v.push_back(e);
}

}  // namespace detail

/// Type A selection: in each rectangle a skew-diagonal run of
/// min(a_i, a_{i+1}) ones, anchored at (1,1) for odd i and at the upper right
/// corner for even i.
inline std::vector<RectangleChoice> choose_S1_A(const BlockSequence& bs) {
  if (bs.type != LieType::A) throw precondition_error("choose_S1_A expects type A");
  if (!is_unimodal(bs.blocks)) throw precondition_error("choose_S1_A expects a nice (unimodal) sequence");
  detail::RectangleMap rm(bs.blocks);
  std::vector<RectangleChoice> out;
  for (int i = 1; i + 1 <= static_cast<int>(bs.blocks.size()); ++i) {
    RectangleChoice rc{i, {}};
    int ai = rm.rows(i), an = rm.cols(i);
    int s = std::min(ai, an);
    for (int m = 1; m <= s; ++m) {
      if (i % 2 == 1)
        rc.entries.push_back(rm.cell(i, m, m, 1));
      else
        rc.entries.push_back(rm.cell(i, an - m + 1, ai - m + 1, 1));
    }
    out.push_back(std::move(rc));
  }
  return out;
}

/// Type C selection. Even block count: the type A rule on the first half,
/// with the full skew-diagonal of the central square. Odd block count: each
/// rectangle splits its choice between the (1,1) corner and the upper right
/// corner, ceil/floor of a_i/2 apiece.
inline std::vector<RectangleChoice> choose_S1_C(const BlockSequence& bs) {
  if (bs.type != LieType::C) throw precondition_error("choose_S1_C expects type C");
  if (!is_nice(bs).nice) throw precondition_error("choose_S1_C expects a nice sequence");
  detail::RectangleMap rm(bs.blocks);
  std::vector<RectangleChoice> out;
  int L = static_cast<int>(bs.blocks.size());
  if (L % 2 == 0) {
    int R = L / 2;
    for (int i = 1; i <= R; ++i) {
      RectangleChoice rc{i, {}};
      int ai = rm.rows(i), an = rm.cols(i);
      int s = std::min(ai, an);
      for (int m = 1; m <= s; ++m) {
        if (i == R || i % 2 == 1)
          rc.entries.push_back(rm.cell(i, m, m, 1));
        else
          rc.entries.push_back(rm.cell(i, an - m + 1, ai - m + 1, 1));
      }
      out.push_back(std::move(rc));
    }
    return out;
  }
  int R = (L - 1) / 2;
  for (int i = 1; i <= R; ++i) {
    RectangleChoice rc{i, {}};
    int ai = rm.rows(i), an = rm.cols(i);
    int big = (ai + 1) / 2, small = ai / 2;
    int from_corner = i % 2 == 1 ? big : small;
    int from_top = i % 2 == 1 ? small : small + 1;
    for (int m = 1; m <= from_corner; ++m) detail::push_unique(rc.entries, rm.cell(i, m, m, 1));
    for (int m = 1; m <= from_top; ++m)
      detail::push_unique(rc.entries, rm.cell(i, an - m + 1, ai - m + 1, 1));
    out.push_back(std::move(rc));
  }
  return out;
}

/// Types B and D. Odd block count: corner plus top runs as in type C, except
/// that both runs take ceil(a_i/2) entries when a_i and a_{i+1} have
/// different parities, and the top run takes floor(a_i/2)+1 otherwise.
/// Even block count (type D): the type A rule with min(a_i, a_{i+1}) entries
/// on ordinary rectangles, and floor(a_r/2) two-by-two diag(1,-1) boxes along
/// the skew diagonal of the central square.
inline std::vector<RectangleChoice> choose_S1_BD(const BlockSequence& bs, bool is_B) {
  if ((is_B && bs.type != LieType::B) || (!is_B && bs.type != LieType::D))
    throw precondition_error("choose_S1_BD type mismatch");
  if (!is_nice(bs).nice) throw precondition_error("choose_S1_BD expects a nice sequence");
  detail::RectangleMap rm(bs.blocks);
  std::vector<RectangleChoice> out;
  int L = static_cast<int>(bs.blocks.size());
  if (L % 2 == 1) {
    int R = (L - 1) / 2;
    for (int i = 1; i <= R; ++i) {
      RectangleChoice rc{i, {}};
      int ai = rm.rows(i), an = rm.cols(i);
      int big = (ai + 1) / 2, small = ai / 2;
      bool parity_differs = (ai % 2) != (an % 2);
      int from_corner = big;
      int from_top = parity_differs ? big : small + 1;
      for (int m = 1; m <= from_corner; ++m) detail::push_unique(rc.entries, rm.cell(i, m, m, 1));
      for (int m = 1; m <= from_top; ++m)
        detail::push_unique(rc.entries, rm.cell(i, an - m + 1, ai - m + 1, 1));
      out.push_back(std::move(rc));
    }
    return out;
  }
  int R = L / 2;
  for (int i = 1; i + 1 <= R; ++i) {
    RectangleChoice rc{i, {}};
    int ai = rm.rows(i), an = rm.cols(i);
    int s = std::min(ai, an);
    for (int m = 1; m <= s; ++m) {
      if (i % 2 == 1)
        rc.entries.push_back(rm.cell(i, m, m, 1));
      else
        rc.entries.push_back(rm.cell(i, an - m + 1, ai - m + 1, 1));
    }
    out.push_back(std::move(rc));
  }
  {
    // central square: paired skew-diagonal boxes, anchored at (1,1) for odd r
    // and at (a_r, a_r) for even r
    RectangleChoice rc{R, {}};
    int ar = bs.blocks[R - 1];
    int boxes = ar / 2;
    for (int t = 1; t <= boxes; ++t) {
      int p = R % 2 == 1 ? 2 * t - 1 : ar - 2 * t + 1;
      rc.entries.push_back(rm.cell(R, p, p + 1, 1));
      rc.entries.push_back(rm.cell(R, p + 1, p, -1));
    }
    out.push_back(std::move(rc));
  }
  return out;
}

/// Assemble X_R: chosen entries plus the adjoint completion that places the
/// matrix inside the algebra (sp for C, so for B/D, nothing for A).
inline RichardsonMatrix build_matrix(const BlockSequence& bs) {
  std::vector<RectangleChoice> choices;
  switch (bs.type) {
    case LieType::A: choices = choose_S1_A(bs); break;
    case LieType::C: choices = choose_S1_C(bs); break;
    case LieType::B: choices = choose_S1_BD(bs, true); break;
    case LieType::D: choices = choose_S1_BD(bs, false); break;
    default: throw unsupported_operation("Richardson recipes cover classical types only");
  }
  int N = gl_size(bs.type, bs.rank);
  RichardsonMatrix xr{bs, N, {}, {}};
  auto place = [&](int row, int col, int val) {
    auto [it, fresh] = xr.entries.emplace(std::make_pair(row, col), val);
    if (!fresh && it->second != val) throw inconsistency_error("conflicting signed completion");
  };
  for (const auto& rc : choices)
    for (const auto& e : rc.entries) {
      place(e.row, e.col, e.val);
      xr.support_roots.emplace_back(e.row, e.col);
    }
  if (bs.type != LieType::A) {
    auto eta = [&](int i) { return i <= N / 2 ? 1 : -1; };
    std::vector<std::pair<std::pair<int, int>, int>> mirrors;
    for (const auto& [pos, val] : xr.entries) {
      auto [i, j] = pos;
      int mi = N + 1 - j, mj = N + 1 - i;
      if (mi == i && mj == j) continue;  // self-adjoint position (C central square)
      int mval = bs.type == LieType::C ? -eta(i) * eta(j) * val : -val;
      mirrors.push_back({{mi, mj}, mval});
    }
    for (const auto& [pos, val] : mirrors) place(pos.first, pos.second, val);
  }
  for (const auto& [pos, val] : xr.entries)
    if (position_degree(bs, pos.first, pos.second) != 1)
      throw inconsistency_error("Richardson entry outside the degree-1 band");
  return xr;
}

// ---------------------------------------------------------------------------
// Exports.

inline std::string to_text_grid(const RichardsonMatrix& xr) {
  std::string out;
  for (int i = 1; i <= xr.size; ++i) {
    for (int j = 1; j <= xr.size; ++j) {
      if (j > 1) out += ' ';
      auto it = xr.entries.find({i, j});
      if (it == xr.entries.end())
        out += '.';
      else if (it->second == 1)
        out += '1';
      else
        out += "-1";
    }
    out += '\n';
  }
  return out;
}

inline std::string to_csv(const RichardsonMatrix& xr) {
  std::string out = "row,col,value\n";
  for (const auto& [pos, val] : xr.entries)
    out += std::to_string(pos.first) + "," + std::to_string(pos.second) + "," + std::to_string(val) + "\n";
  return out;
}

inline std::string to_json(const RichardsonMatrix& xr) {
  std::string out = "{\"size\":" + std::to_string(xr.size) + ",\"entries\":[";
  bool first = true;
  for (const auto& [pos, val] : xr.entries) {
    if (!first) out += ',';
    first = false;
    out += "[" + std::to_string(pos.first) + "," + std::to_string(pos.second) + "," + std::to_string(val) + "]";
  }
  out += "],\"support_roots\":[";
  first = true;
  for (const auto& [i, j] : xr.support_roots) {
    if (!first) out += ',';
    first = false;
    out += "[" + std::to_string(i) + "," + std::to_string(j) + "]";
  }
  out += "]}";
  return out;
}

}  // namespace nicepar
