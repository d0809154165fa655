#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nicepar/combinatorics.hpp"
#include "nicepar/rootsystem.hpp"

namespace nicepar {

/// A standard parabolic subalgebra: u_i = 1 means the root spaces of alpha_i
/// are not in the Levi factor (crossed node).
struct ParabolicSpec {
  LieType type;
  int rank;
  std::vector<int> coloring;

  ParabolicSpec(LieType t, int r, std::vector<int> u) : type(t), rank(r), coloring(std::move(u)) {
    validate_rank(type, rank);
    if (static_cast<int>(coloring.size()) != rank)
      throw error("coloring length must equal the rank");
    for (int v : coloring)
      if (v != 0 && v != 1) throw error("coloring entries must be 0 or 1");
  }

  bool operator==(const ParabolicSpec&) const = default;
  bool operator<(const ParabolicSpec& o) const {
    return std::tie(type, rank, coloring) < std::tie(o.type, o.rank, o.coloring);
  }
};

/// Rewrites a central block pair (...,1,1,...) as (...,2,...); identity on
/// everything else. This removes the D_n encoding ambiguity.
inline std::vector<int> canonicalize_D(std::vector<int> blocks) {
  std::size_t k = blocks.size();
  if (k >= 2 && k % 2 == 0 && blocks[k / 2 - 1] == 1 && blocks[k / 2] == 1) {
    blocks[k / 2 - 1] = 2;
    blocks.erase(blocks.begin() + k / 2);
  }
  return blocks;
}

/// Diagonal block sizes of the standard Levi factor in the gl_N realization.
/// Palindromic for B/C/D; type D is stored canonically (no central 1,1 pair).
struct BlockSequence {
  LieType type;
  int rank;
  std::vector<int> blocks;

  BlockSequence(LieType t, int r, std::vector<int> b) : type(t), rank(r), blocks(std::move(b)) {
    if (!is_classical(type)) throw unsupported_operation("block sequences exist only for classical types");
    validate_rank(type, rank);
    if (type == LieType::D) blocks = canonicalize_D(std::move(blocks));
    for (int x : blocks)
      if (x < 1) throw error("block lengths must be positive");
    int total = std::accumulate(blocks.begin(), blocks.end(), 0);
    if (total != gl_size(type, rank))
      throw error("block lengths must sum to " + std::to_string(gl_size(type, rank)));
    if (type != LieType::A && !is_palindromic(blocks))
      throw error("block sequence must be palindromic for types B/C/D");
    if (type == LieType::B && blocks.size() % 2 == 0)
      throw inconsistency_error("type B block count cannot be even");
  }

  std::size_t count() const { return blocks.size(); }
  bool operator==(const BlockSequence&) const = default;
};

/// dims[j] = dim g_j for the grading defined by the coloring.
struct GradedDims {
  std::map<int, int> dims;

  int at(int j) const {
    auto it = dims.find(j);
    return it == dims.end() ? 0 : it->second;
  }
  int total() const {
    int s = 0;
    for (auto& [j, d] : dims) s += d;
    return s;
  }
  int max_degree() const { return dims.empty() ? 0 : dims.rbegin()->first; }
};

namespace detail {

/// Doubled ad-H eigenvalues on the first n coordinates of the gl_N model.
/// Entries step down by 0 or 2 within the first half; the crossing to the
/// mirrored half is encoded by the final value.
inline std::vector<int> doubled_weights(const ParabolicSpec& spec) {
  int n = spec.rank;
  const auto& u = spec.coloring;
  std::vector<int> s(n, 0);
  switch (spec.type) {
    case LieType::B:
      s[n - 1] = 2 * u[n - 1];
      for (int i = n - 2; i >= 0; --i) s[i] = s[i + 1] + 2 * u[i];
      break;
    case LieType::C:
      s[n - 1] = u[n - 1];
      for (int i = n - 2; i >= 0; --i) s[i] = s[i + 1] + 2 * u[i];
      break;
    case LieType::D:
      s[n - 1] = u[n - 1] - u[n - 2];
      s[n - 2] = u[n - 1] + u[n - 2];
      for (int i = n - 3; i >= 0; --i) s[i] = s[i + 1] + 2 * u[i];
      // The two D_n encodings of the same subalgebra differ by the diagram
      // flip; normalize to a weakly decreasing diagonal.
      if (s[n - 1] < 0) s[n - 1] = -s[n - 1];
      break;
    default:
      throw unsupported_operation("doubled_weights: B/C/D only");
  }
  return s;
}

inline std::vector<int> run_lengths(const std::vector<int>& d) {
  std::vector<int> runs;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i > 0 && d[i] == d[i - 1])
      ++runs.back();
    else
      runs.push_back(1);
  }
  return runs;
}

}  // namespace detail

inline BlockSequence coloring_to_blocks(const ParabolicSpec& spec) {
  if (!is_classical(spec.type)) throw unsupported_operation("coloring_to_blocks: classical types only");
  int n = spec.rank;
  if (spec.type == LieType::A) {
    std::vector<int> blocks;
    int last = 0;
    for (int i = 0; i < n; ++i)
      if (spec.coloring[i] == 1) {
        blocks.push_back(i + 1 - last);
        last = i + 1;
      }
    blocks.push_back(n + 1 - last);
    return BlockSequence(spec.type, n, std::move(blocks));
  }
  std::vector<int> s = detail::doubled_weights(spec);
  std::vector<int> d;
  d.reserve(gl_size(spec.type, n));
  for (int i = 0; i < n; ++i) d.push_back(s[i]);
  if (spec.type == LieType::B) d.push_back(0);
  for (int i = n - 1; i >= 0; --i) d.push_back(-s[i]);
  return BlockSequence(spec.type, n, detail::run_lengths(d));
}

inline ParabolicSpec blocks_to_coloring(const BlockSequence& bs) {
  int n = bs.rank;
  const auto& blocks = bs.blocks;
  if (bs.type == LieType::A) {
    std::vector<int> u(n, 0);
    int pos = 0;
    for (std::size_t i = 0; i + 1 < blocks.size(); ++i) {
      pos += blocks[i];
      u[pos - 1] = 1;
    }
    return ParabolicSpec(bs.type, n, std::move(u));
  }
  // Doubled run values: consecutive runs differ by 2, the sequence is
  // antisymmetric, and the middle run (or pair) sits at 0 (or +-1).
  int k = static_cast<int>(blocks.size());
  std::vector<int> vals(k);
  if (k % 2 == 1) {
    for (int j = 0; j < k; ++j) vals[j] = 2 * ((k - 1) / 2 - j);
  } else {
    for (int j = 0; j < k / 2; ++j) vals[j] = 2 * (k / 2 - 1 - j) + 1;
    for (int j = k / 2; j < k; ++j) vals[j] = -vals[k - 1 - j];
  }
  std::vector<int> d;
  for (int j = 0; j < k; ++j) d.insert(d.end(), blocks[j], vals[j]);
  std::vector<int> u(n, 0);
  auto half = [&](int i) { return d[i]; };  // doubled eigenvalue at matrix position i (0-based)
  switch (bs.type) {
    case LieType::B:
      for (int i = 0; i + 1 < n; ++i) u[i] = (half(i) - half(i + 1)) / 2;
      u[n - 1] = half(n - 1) / 2;
      break;
    case LieType::C:
      for (int i = 0; i + 1 < n; ++i) u[i] = (half(i) - half(i + 1)) / 2;
      u[n - 1] = half(n - 1);
      break;
    case LieType::D:
      for (int i = 0; i + 2 < n; ++i) u[i] = (half(i) - half(i + 1)) / 2;
      u[n - 2] = (half(n - 2) - half(n - 1)) / 2;
      u[n - 1] = (half(n - 2) + half(n - 1)) / 2;
      break;
    default:
      break;
  }
  for (int v : u)
    if (v != 0 && v != 1) throw inconsistency_error("block sequence does not define a 0/1 coloring");
  return ParabolicSpec(bs.type, n, std::move(u));
}

/// Canonical representative of a D coloring under the diagram flip that
/// exchanges the fork nodes; identity for other types.
inline ParabolicSpec canonicalize_coloring(ParabolicSpec spec) {
  if (spec.type == LieType::D && spec.coloring[spec.rank - 1] < spec.coloring[spec.rank - 2])
    std::swap(spec.coloring[spec.rank - 1], spec.coloring[spec.rank - 2]);
  return spec;
}

inline GradedDims graded_dims(const ParabolicSpec& spec) {
  auto rs = shared_root_system(spec.type, spec.rank);
  GradedDims gd;
  gd.dims[0] = spec.rank;
  for (int k = 0; k < rs->num_roots(); ++k) {
    int deg = 0;
    for (int i = 0; i < spec.rank; ++i) deg += spec.coloring[i] * rs->root(k)[i];
    ++gd.dims[deg];
  }
  return gd;
}

/// Dimension of the standard Levi factor. Type A uses the gl convention
/// (sum of squared block lengths); B/C/D count gl blocks on one side plus
/// the middle orthogonal/symplectic factor.
inline int levi_dim(const BlockSequence& bs) {
  const auto& b = bs.blocks;
  if (bs.type == LieType::A) {
    int s = 0;
    for (int x : b) s += x * x;
    return s;
  }
  std::size_t k = b.size();
  int s = 0;
  for (std::size_t i = 0; i < k / 2; ++i) s += b[i] * b[i];
  if (k % 2 == 1) {
    int m = b[k / 2];
    s += (bs.type == LieType::C) ? m * (m + 1) / 2 : m * (m - 1) / 2;
  }
  return s;
}

namespace detail {

struct DiagramInfo {
  LieType type;
  int rank;
  std::vector<int> order;  // original node for each Bourbaki position
};

/// Identify the simple type of a connected induced subdiagram and produce a
/// Bourbaki ordering of its nodes.
inline DiagramInfo identify_subdiagram(LieType parent, int parent_rank, const std::vector<int>& nodes) {
  auto cartan = simple_cartan(parent, parent_rank);
  auto dvec = root_norm_halves(parent, parent_rank);
  int m = static_cast<int>(nodes.size());
  if (m == 0) throw invalid_subdiagram("empty node set");
  std::set<int> nodeset(nodes.begin(), nodes.end());
  if (static_cast<int>(nodeset.size()) != m) throw invalid_subdiagram("duplicate nodes");
  for (int v : nodes)
    if (v < 0 || v >= parent_rank) throw invalid_subdiagram("node out of range");

  std::vector<int> vs(nodeset.begin(), nodeset.end());
  std::map<int, std::vector<int>> adj;
  for (int a : vs)
    for (int b : vs)
      if (a != b && cartan[a][b] != 0) adj[a].push_back(b);
  // connectivity
  {
    std::vector<int> stack{vs[0]};
    std::set<int> seen{vs[0]};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : adj[x])
        if (seen.insert(y).second) stack.push_back(y);
    }
    if (static_cast<int>(seen.size()) != m) throw invalid_subdiagram("node set is not connected");
  }
  if (m == 1) return {LieType::A, 1, vs};

  auto bond = [&](int a, int b) { return cartan[a][b] * cartan[b][a]; };
  auto shorter = [&](int a, int b) { return dvec[a] < dvec[b]; };

  std::vector<int> branch, leaves;
  int max_bond = 1;
  for (int a : vs) {
    if (adj[a].size() > 3) throw invalid_subdiagram("node of degree > 3");
    if (adj[a].size() == 3) branch.push_back(a);
    if (adj[a].size() == 1) leaves.push_back(a);
    for (int b : adj[a]) max_bond = std::max(max_bond, bond(a, b));
  }
  if (branch.size() > 1) throw invalid_subdiagram("more than one branch node");

  if (branch.empty()) {
    // path: walk from the smaller-indexed endpoint
    if (leaves.size() != 2) throw invalid_subdiagram("not a path");
    std::sort(leaves.begin(), leaves.end());
    std::vector<int> path{leaves[0]};
    std::set<int> used{leaves[0]};
    while (static_cast<int>(path.size()) < m) {
      bool grew = false;
      for (int y : adj[path.back()])
        if (used.insert(y).second) {
          path.push_back(y);
          grew = true;
          break;
        }
      if (!grew) throw invalid_subdiagram("not a path");
    }
    int doubles = 0, triples = 0, dpos = -1;
    for (int i = 0; i + 1 < m; ++i) {
      int w = bond(path[i], path[i + 1]);
      if (w == 2) ++doubles, dpos = i;
      if (w == 3) ++triples;
    }
    if (triples > 0) {
      if (m != 2 || doubles != 0) throw invalid_subdiagram("triple bond in a diagram of rank > 2");
      if (shorter(path[0], path[1])) std::reverse(path.begin(), path.end());
      return {LieType::G2, 2, path};  // alpha_1 long
    }
    if (doubles > 1) throw invalid_subdiagram("more than one double bond");
    if (doubles == 1) {
      if (m == 2) {
        // B2 with alpha_1 long, alpha_2 short
        if (shorter(path[0], path[1])) std::reverse(path.begin(), path.end());
        return {LieType::B, 2, path};
      }
      if (dpos == 0) {
        std::reverse(path.begin(), path.end());
        dpos = m - 2;
      }
      if (dpos == m - 2)
        return {shorter(path[m - 1], path[m - 2]) ? LieType::B : LieType::C, m, path};
      if (m == 4 && dpos == 1) {
        if (shorter(path[0], path[3])) std::reverse(path.begin(), path.end());
        return {LieType::F4, 4, path};
      }
      throw invalid_subdiagram("double bond in the interior of a long path");
    }
    return {LieType::A, m, path};
  }

  // one branch node: D or E shapes (all bonds single here)
  if (max_bond != 1) throw invalid_subdiagram("multiple bond in a branched diagram");
  int z = branch[0];
  std::vector<std::vector<int>> arms;
  for (int y : adj[z]) {
    std::vector<int> arm{y};
    std::set<int> used{z, y};
    while (true) {
      bool grew = false;
      for (int w : adj[arm.back()])
        if (used.insert(w).second) {
          arm.push_back(w);
          grew = true;
          break;
        }
      if (!grew) break;
    }
    arms.push_back(arm);
  }
  std::sort(arms.begin(), arms.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.front() < b.front();
  });
  std::size_t l0 = arms[0].size(), l1 = arms[1].size(), l2 = arms[2].size();
  if (l0 == 1 && l1 == 1) {
    // D_{l2+3}: long arm reversed, branch, then the two short leaves
    std::vector<int> order(arms[2].rbegin(), arms[2].rend());
    order.push_back(z);
    order.push_back(std::min(arms[0][0], arms[1][0]));
    order.push_back(std::max(arms[0][0], arms[1][0]));
    return {LieType::D, static_cast<int>(l2) + 3, order};
  }
  if (l0 == 1 && l1 == 2 && (l2 == 2 || l2 == 3 || l2 == 4)) {
    LieType t = l2 == 2 ? LieType::E6 : (l2 == 3 ? LieType::E7 : LieType::E8);
    std::vector<int> order;
    order.push_back(arms[1][1]);  // alpha_1
    order.push_back(arms[0][0]);  // alpha_2
    order.push_back(arms[1][0]);  // alpha_3
    order.push_back(z);           // alpha_4
    for (int w : arms[2]) order.push_back(w);
    return {t, static_cast<int>(l2) + 4, order};
  }
  throw invalid_subdiagram("branched diagram is not of simple type");
}

}  // namespace detail

/// Intersection with the subalgebra generated by a connected set of simple
/// roots; the coloring restricts.
inline ParabolicSpec restrict_to_subdiagram(const ParabolicSpec& spec, const std::vector<int>& nodes) {
  auto info = detail::identify_subdiagram(spec.type, spec.rank, nodes);
  std::vector<int> u;
  u.reserve(info.order.size());
  for (int v : info.order) u.push_back(spec.coloring[v]);
  return ParabolicSpec(info.type, info.rank, std::move(u));
}

// ---------------------------------------------------------------------------
// Text encodings: "A6:1,0,1,0,0,1" (coloring) and "C5#3,4,3" (blocks).

struct SpecInput {
  ParabolicSpec spec;
  std::optional<BlockSequence> blocks_given;
};

inline std::string to_string(const ParabolicSpec& spec) {
  std::string s = type_name(spec.type);
  if (is_classical(spec.type)) s += std::to_string(spec.rank);
  s += ':';
  for (int i = 0; i < spec.rank; ++i) {
    if (i) s += ',';
    s += std::to_string(spec.coloring[i]);
  }
  return s;
}

inline std::string to_string(const BlockSequence& bs) {
  std::string s = type_name(bs.type) + std::to_string(bs.rank) + "#";
  for (std::size_t i = 0; i < bs.blocks.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(bs.blocks[i]);
  }
  return s;
}

inline SpecInput parse_spec(const std::string& text) {
  std::size_t sep = text.find_first_of(":#");
  if (sep == std::string::npos) throw parse_error("expected ':' or '#' separator", text.size());
  std::string head = text.substr(0, sep);
  if (head.empty()) throw parse_error("missing type", 0);

  LieType type;
  int rank = 0;
  if (head == "G2" || head == "F4" || head == "E6" || head == "E7" || head == "E8") {
    type = head == "G2"   ? LieType::G2
           : head == "F4" ? LieType::F4
           : head == "E6" ? LieType::E6
           : head == "E7" ? LieType::E7
                          : LieType::E8;
    rank = exceptional_rank(type);
  } else {
    char t = head[0];
    if (t != 'A' && t != 'B' && t != 'C' && t != 'D') throw parse_error("unknown type '" + head + "'", 0);
    type = t == 'A' ? LieType::A : t == 'B' ? LieType::B : t == 'C' ? LieType::C : LieType::D;
    if (head.size() == 1) throw parse_error("missing rank", 1);
    for (std::size_t i = 1; i < head.size(); ++i)
      if (!isdigit(static_cast<unsigned char>(head[i]))) throw parse_error("bad rank digit", i);
    rank = std::stoi(head.substr(1));
    try {
      validate_rank(type, rank);
    } catch (const error& e) {
      throw parse_error(e.what(), 1);
    }
  }

  std::vector<int> values;
  std::size_t pos = sep + 1;
  while (pos < text.size()) {
    std::size_t start = pos;
    while (pos < text.size() && text[pos] != ',') ++pos;
    std::string tok = text.substr(start, pos - start);
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return isdigit(static_cast<unsigned char>(c)); }))
      throw parse_error("expected a nonnegative integer", start);
    values.push_back(std::stoi(tok));
    if (pos < text.size()) ++pos;  // skip comma
  }
  if (values.empty()) throw parse_error("empty value list", sep + 1);
  if (text.back() == ',') throw parse_error("trailing comma", text.size() - 1);

  if (text[sep] == ':') {
    if (static_cast<int>(values.size()) != rank)
      throw parse_error("coloring has " + std::to_string(values.size()) + " entries, expected " + std::to_string(rank), sep + 1);
    for (std::size_t i = 0; i < values.size(); ++i)
      if (values[i] != 0 && values[i] != 1) throw parse_error("coloring entries must be 0 or 1", sep + 1);
    return SpecInput{ParabolicSpec(type, rank, values), std::nullopt};
  }

  if (!is_classical(type)) throw parse_error("block form is not defined for exceptional types", sep);
  try {
    BlockSequence bs(type, rank, values);
    ParabolicSpec spec = blocks_to_coloring(bs);
    return SpecInput{spec, bs};
  } catch (const parse_error&) {
    throw;
  } catch (const error& e) {
    throw parse_error(e.what(), sep + 1);
  }
}

}  // namespace nicepar
