#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "nicepar/exact.hpp"
#include "nicepar/parabolic.hpp"

namespace nicepar {

/// splitmix64; output is identical across platforms for a given seed.
struct Rng {
  uint64_t state;

  explicit Rng(uint64_t seed) : state(seed) {}

  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform nonzero integer in [-9, 9].
  int coefficient() {
    uint64_t r = next() % 18;
    return r < 9 ? static_cast<int>(r) - 9 : static_cast<int>(r) - 8;
  }
};

/// Element of g_1 as (root index, coefficient) pairs over a fixed root system.
using G1Element = std::vector<std::pair<int, int>>;

/// The grading of g induced by a coloring, over the shared Chevalley basis.
/// All rank computations are exact; this class is the ground truth the
/// closed-form modules are tested against.
class GradedModel {
 public:
  explicit GradedModel(const ParabolicSpec& spec)
      : spec_(spec), rs_(shared_root_system(spec.type, spec.rank)) {
    int n = spec.rank;
    for (int k = 0; k < rs_->num_roots(); ++k) {
      int deg = 0;
      for (int i = 0; i < n; ++i) deg += spec.coloring[i] * rs_->root(k)[i];
      degree_[k] = deg;
      basis_[deg].push_back(n + k);
    }
    for (int i = 0; i < n; ++i) basis_[0].push_back(i);
    for (auto& [deg, b] : basis_) std::sort(b.begin(), b.end());
  }

  const ParabolicSpec& spec() const { return spec_; }
  const RootSystem& roots() const { return *rs_; }

  int dim_at(int j) const {
    auto it = basis_.find(j);
    return it == basis_.end() ? 0 : static_cast<int>(it->second.size());
  }
  int min_degree() const { return basis_.begin()->first; }
  int max_degree() const { return basis_.rbegin()->first; }
  int dim_g() const { return rs_->dim(); }
  int dim_m() const { return dim_at(0); }
  int dim_nilradical() const {
    int s = 0;
    for (auto& [deg, b] : basis_)
      if (deg > 0) s += static_cast<int>(b.size());
    return s;
  }

  /// Coefficients for every degree-1 root, in root index order.
  G1Element sample(Rng& rng) const {
    G1Element x;
    auto it = basis_.find(1);
    if (it == basis_.end()) return x;
    for (int b : it->second) x.emplace_back(b - spec_.rank, rng.coefficient());
    return x;
  }

  /// Matrix of ad(x): g_j -> g_{j+1} in the root-vector basis.
  /// x must be supported on degree-1 roots.
  ExactMatrix ad_block(const G1Element& x, int from_degree) const {
    for (const auto& [a, ca] : x)
      if (degree_.at(a) != 1) throw error("element is not in g_1");
    rs_->ensure_constants();
    auto from = basis_.find(from_degree);
    auto to = basis_.find(from_degree + 1);
    std::size_t nc = from == basis_.end() ? 0 : from->second.size();
    std::size_t nr = to == basis_.end() ? 0 : to->second.size();
    ExactMatrix m(nr, nc);
    if (nr == 0 || nc == 0) return m;
    std::map<int, std::size_t> rowpos;
    for (std::size_t r = 0; r < to->second.size(); ++r) rowpos[to->second[r]] = r;
    int n = spec_.rank;
    for (std::size_t c = 0; c < from->second.size(); ++c) {
      int b = from->second[c];
      if (b < n) {
        // [x, H_i] = -sum_a c_a <a, alpha_i^vee> X_a
        for (auto& [a, ca] : x) {
          int val = -ca * rs_->pairing(a, b);
          if (val != 0) m.at(rowpos.at(n + a), c) += val;
        }
      } else {
        int beta = b - n;
        for (auto& [a, ca] : x) {
          if (beta == rs_->neg(a)) {
            // lands in g_0: only possible when from_degree == -1
            const auto& co = rs_->coroot(a);
            for (int i = 0; i < n; ++i)
              if (co[i] != 0) m.at(rowpos.at(i), c) += ca * co[i];
          } else {
            int s = rs_->sum_index(a, beta);
            if (s >= 0) {
              int val = ca * rs_->chevalley(a, beta);
              if (val != 0) m.at(rowpos.at(n + s), c) += val;
            }
          }
        }
      }
    }
    return m;
  }

  int ad_rank(const G1Element& x, int from_degree) const {
    return static_cast<int>(ad_block(x, from_degree).rank());
  }

  /// The genericity test: ad(x): g_0 -> g_1 surjective, i.e.
  /// dim m^x = dim m - dim g_1.
  bool is_generic(const G1Element& x) const { return ad_rank(x, 0) == dim_at(1); }

  /// dim g^x computed from every graded block directly (negative degrees are
  /// not inferred from the positive ones).
  int centralizer_dim(const G1Element& x) const {
    int total_rank = 0;
    for (int j = min_degree(); j <= max_degree(); ++j) total_rank += ad_rank(x, j);
    return dim_g() - total_rank;
  }

  /// ad(x): g_j -> g_{j+1} surjective for all j >= 0.
  bool surjective_nonneg(const G1Element& x) const {
    for (int j = 0; j < max_degree(); ++j)
      if (ad_rank(x, j) != dim_at(j + 1)) return false;
    return true;
  }

  /// ad(x): g_{j-1} -> g_j injective for all j <= 0.
  bool injective_nonpos(const G1Element& x) const {
    for (int j = min_degree(); j <= -1; ++j)
      if (ad_rank(x, j) != dim_at(j)) return false;
    return true;
  }

 private:
  ParabolicSpec spec_;
  std::shared_ptr<const RootSystem> rs_;
  std::map<int, int> degree_;           // root index -> degree
  std::map<int, std::vector<int>> basis_;  // degree -> basis indices (RootSystem convention)
};

struct OracleVerdict {
  enum class Result { nice, not_nice, indeterminate };
  Result result;
  int samples = 0;          // samples drawn
  int generic_samples = 0;  // samples passing the genericity test
  int witness_centralizer = -1;

  bool nice() const { return result == Result::nice; }
  bool determinate() const { return result != Result::indeterminate; }
};

/// Monte Carlo niceness verdict with exact per-sample arithmetic. The locus
/// of good elements is Zariski open and dense, so a handful of generic
/// samples decides; a run where no sample passes the genericity test is
/// reported as indeterminate rather than as a verdict.
inline OracleVerdict is_nice_oracle(const ParabolicSpec& spec, int trials = 5, uint64_t seed = 1) {
  if (trials < 1) throw error("is_nice_oracle requires trials >= 1");
  GradedModel model(spec);
  if (model.dim_at(1) == 0) {
    // Trivial parabolic p = g: x = 0 works.
    OracleVerdict v{OracleVerdict::Result::nice};
    v.witness_centralizer = model.dim_g();
    return v;
  }
  Rng rng(seed);
  OracleVerdict v{OracleVerdict::Result::not_nice};
  for (int t = 0; t < trials; ++t) {
    G1Element x = model.sample(rng);
    ++v.samples;
    if (!model.is_generic(x)) continue;
    ++v.generic_samples;
    int cd = model.centralizer_dim(x);
    bool by_dim = cd == model.dim_m();
    bool by_surjectivity = model.surjective_nonneg(x);
    if (by_dim != by_surjectivity) {
      v.result = OracleVerdict::Result::indeterminate;
      return v;
    }
    if (by_dim) {
      v.result = OracleVerdict::Result::nice;
      v.witness_centralizer = cd;
      return v;
    }
  }
  if (v.generic_samples == 0) v.result = OracleVerdict::Result::indeterminate;
  return v;
}

inline int centralizer_dim_oracle(const GradedModel& model, const G1Element& x) {
  return model.centralizer_dim(x);
}

// ---------------------------------------------------------------------------
// Explicit gl_N models of the classical algebras, with the forms
//   L (skew-diagonal ones) for so_N,
//   M = [[0, L], [-L, 0]] for sp_2n.

struct SparseEntry {
  int row, col, val;  // 1-based positions
};
using SparseMat = std::vector<SparseEntry>;

/// Exact ranks of x, x^2, ...; stops once the rank reaches zero.
inline std::vector<int> matrix_power_ranks(const ExactMatrix& x, int max_j) {
  if (x.rows() != x.cols()) throw error("matrix_power_ranks expects a square matrix");
  std::vector<int> ranks;
  ExactMatrix p = x;
  for (int j = 1; j <= max_j; ++j) {
    int r = static_cast<int>(p.rank());
    ranks.push_back(r);
    if (r == 0) break;
    p = p * x;
  }
  return ranks;
}

class MatrixModel {
 public:
  MatrixModel(LieType type, int rank) : type_(type), rank_(rank), N_(gl_size(type, rank)) { build_basis(); }

  LieType type() const { return type_; }
  int N() const { return N_; }
  int dim() const { return static_cast<int>(basis_.size()); }

  const std::vector<SparseMat>& basis() const { return basis_; }

  /// The invariant bilinear form: L for so, M for sp, none for sl.
  ExactMatrix form() const {
    if (type_ == LieType::A) throw unsupported_operation("sl_N carries no defining form here");
    ExactMatrix f(N_, N_);
    for (int i = 1; i <= N_; ++i) {
      int sign = (type_ == LieType::C && i > N_ / 2) ? -1 : 1;
      f.at(i - 1, N_ - i) = sign;
    }
    return f;
  }

  bool contains(const ExactMatrix& x) const {
    if (static_cast<int>(x.rows()) != N_ || static_cast<int>(x.cols()) != N_) return false;
    if (type_ == LieType::A) {
      mpq_class tr = 0;
      for (int i = 0; i < N_; ++i) tr += x.at(i, i);
      return tr == 0;
    }
    ExactMatrix f = form();
    return (x.transpose() * f + f * x).is_zero();
  }

  /// dim of the centralizer of x inside the algebra, by exact kernel
  /// computation of ad(x) on the model basis. For sl the value reported is
  /// the gl_N centralizer dimension (one more than in sl).
  int centralizer_dim(const ExactMatrix& x) const {
    // Columns: [x, b] for each basis element b, coordinates = all N^2 entries.
    ExactMatrix m(N_ * N_, dim());
    for (int k = 0; k < dim(); ++k) {
      for (const auto& e : basis_[k]) {
        // x * E - E * x contributions of entry E = (r,c,val)
        for (int i = 0; i < N_; ++i) {
          const mpq_class& xv = x.at(i, e.row - 1);
          if (xv != 0) m.at(i * N_ + (e.col - 1), k) += xv * e.val;
        }
        for (int j = 0; j < N_; ++j) {
          const mpq_class& xv = x.at(e.col - 1, j);
          if (xv != 0) m.at((e.row - 1) * N_ + j, k) -= xv * e.val;
        }
      }
    }
    int image = static_cast<int>(m.rank());
    int centralizer = dim() - image;
    if (type_ == LieType::A) centralizer += 1;  // report in gl_N
    return centralizer;
  }

 private:
  LieType type_;
  int rank_, N_;
  std::vector<SparseMat> basis_;

  void build_basis() {
    if (type_ == LieType::A) {
      for (int i = 1; i <= N_; ++i)
        for (int j = 1; j <= N_; ++j)
          if (i != j) basis_.push_back({{i, j, 1}});
      for (int i = 1; i < N_; ++i) basis_.push_back({{i, i, 1}, {i + 1, i + 1, -1}});
      return;
    }
    if (type_ == LieType::B || type_ == LieType::D) {
      // A_{N+1-j, N+1-i} = -A_{ij}; anti-diagonal entries vanish.
      for (int i = 1; i <= N_; ++i)
        for (int j = 1; j <= N_; ++j) {
          if (i + j == N_ + 1) continue;
          int mi = N_ + 1 - j, mj = N_ + 1 - i;
          if (std::make_pair(i, j) < std::make_pair(mi, mj)) basis_.push_back({{i, j, 1}, {mi, mj, -1}});
        }
      return;
    }
    // sp_{2n}: A_{2n+1-j, 2n+1-i} = -eta_i eta_j A_{ij}
    int n = N_ / 2;
    auto eta = [&](int i) { return i <= n ? 1 : -1; };
    for (int i = 1; i <= N_; ++i)
      for (int j = 1; j <= N_; ++j) {
        int mi = N_ + 1 - j, mj = N_ + 1 - i;
        if (i + j == N_ + 1) {
          basis_.push_back({{i, j, 1}});  // self-mirror, unconstrained
        } else if (std::make_pair(i, j) < std::make_pair(mi, mj)) {
          basis_.push_back({{i, j, 1}, {mi, mj, -eta(i) * eta(j)}});
        }
      }
  }
};

/// Degree of each matrix position under the grading of a block sequence:
/// deg(i, j) = block(j) - block(i).
inline int position_degree(const BlockSequence& bs, int i, int j) {
  auto block_of = [&](int p) {
    int acc = 0;
    for (std::size_t b = 0; b < bs.blocks.size(); ++b) {
      acc += bs.blocks[b];
      if (p <= acc) return static_cast<int>(b);
    }
    throw error("position out of range");
  };
  return block_of(j) - block_of(i);
}

// ---------------------------------------------------------------------------
// Translation of explicit gl_N root labels into the abstract root system.

/// Weight of a gl position in the epsilon-coordinates of the classical type.
inline std::vector<int> position_weight(LieType type, int rank, int pos) {
  int n = rank;
  std::vector<int> w(n, 0);
  switch (type) {
    case LieType::A:
      throw unsupported_operation("type A uses the direct alpha-interval formula");
    case LieType::B:
      if (pos <= n) w[pos - 1] = 1;
      else if (pos >= n + 2) w[2 * n + 1 - pos] = -1;
      return w;
    case LieType::C:
    case LieType::D:
      if (pos <= n) w[pos - 1] = 1;
      else w[2 * n - pos] = -1;
      return w;
    default:
      throw unsupported_operation("classical types only");
  }
}

/// Coefficient vector over the simple roots of the root e_i - e_j attached to
/// matrix position (i, j).
inline std::vector<int> position_root(LieType type, int rank, int i, int j) {
  int n = rank;
  if (type == LieType::A) {
    std::vector<int> c(n, 0);
    for (int k = i; k < j; ++k) c[k - 1] = 1;
    return c;
  }
  std::vector<int> w = position_weight(type, rank, i);
  std::vector<int> wj = position_weight(type, rank, j);
  for (int k = 0; k < n; ++k) w[k] -= wj[k];
  // Solve S c = w where column k of S is alpha_k in epsilon coordinates.
  std::vector<std::vector<mpq_class>> S(n, std::vector<mpq_class>(n + 1, 0));
  for (int k = 0; k + 1 < n; ++k) {
    S[k][k] = 1;
    S[k + 1][k] = -1;
  }
  if (type == LieType::B) S[n - 1][n - 1] = 1;
  if (type == LieType::C) S[n - 1][n - 1] = 2;
  if (type == LieType::D) {
    S[n - 2][n - 1] = 1;
    S[n - 1][n - 1] = 1;
  }
  for (int k = 0; k < n; ++k) S[k][n] = w[k];
  // Gaussian elimination, exact.
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (S[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw inconsistency_error("singular simple-root matrix");
    std::swap(S[piv], S[col]);
    for (int r = 0; r < n; ++r) {
      if (r == col || S[r][col] == 0) continue;
      mpq_class f = S[r][col] / S[col][col];
      for (int c2 = col; c2 <= n; ++c2) S[r][c2] -= f * S[col][c2];
    }
  }
  std::vector<int> out(n);
  for (int k = 0; k < n; ++k) {
    mpq_class v = S[k][n] / S[k][k];
    if (v.get_den() != 1) throw inconsistency_error("non-integral root coefficients");
    out[k] = static_cast<int>(v.get_num().get_si());
  }
  return out;
}

}  // namespace nicepar
