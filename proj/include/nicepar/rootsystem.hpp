#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "nicepar/exact.hpp"

namespace nicepar {

enum class LieType { A, B, C, D, E6, E7, E8, F4, G2 };

inline bool is_classical(LieType t) {
  return t == LieType::A || t == LieType::B || t == LieType::C || t == LieType::D;
}

inline std::string type_name(LieType t) {
  switch (t) {
    case LieType::A: return "A";
    case LieType::B: return "B";
    case LieType::C: return "C";
    case LieType::D: return "D";
    case LieType::E6: return "E6";
    case LieType::E7: return "E7";
    case LieType::E8: return "E8";
    case LieType::F4: return "F4";
    case LieType::G2: return "G2";
  }
  return "?";
}

inline int exceptional_rank(LieType t) {
  switch (t) {
    case LieType::E6: return 6;
    case LieType::E7: return 7;
    case LieType::E8: return 8;
    case LieType::F4: return 4;
    case LieType::G2: return 2;
    default: return 0;
  }
}

inline void validate_rank(LieType t, int rank) {
  switch (t) {
    case LieType::A:
      if (rank < 1) throw error("type A requires rank >= 1");
      return;
    case LieType::B:
      if (rank < 2) throw error("type B requires rank >= 2");
      return;
    case LieType::C:
      if (rank < 3) throw error("type C requires rank >= 3");
      return;
    case LieType::D:
      if (rank < 4) throw error("type D requires rank >= 4");
      return;
    default:
      if (rank != exceptional_rank(t))
        throw error("type " + type_name(t) + " has fixed rank " + std::to_string(exceptional_rank(t)));
  }
}

inline int dim_g(LieType t, int n) {
  switch (t) {
    case LieType::A: return (n + 1) * (n + 1) - 1;
    case LieType::B: return n * (2 * n + 1);
    case LieType::C: return n * (2 * n + 1);
    case LieType::D: return n * (2 * n - 1);
    case LieType::G2: return 14;
    case LieType::F4: return 52;
    case LieType::E6: return 78;
    case LieType::E7: return 133;
    case LieType::E8: return 248;
  }
  return 0;
}

/// Size of the defining gl_N realization for classical types.
inline int gl_size(LieType t, int n) {
  switch (t) {
    case LieType::A: return n + 1;
    case LieType::B: return 2 * n + 1;
    case LieType::C: return 2 * n;
    case LieType::D: return 2 * n;
    default: throw unsupported_operation("gl realization only for classical types");
  }
}

/// Cartan matrix in Bourbaki numbering: cartan[i][j] = <alpha_i, alpha_j^vee>.
inline std::vector<std::vector<int>> simple_cartan(LieType t, int n) {
  validate_rank(t, n);
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  auto chain = [&](int i, int j) { c[i][j] = c[j][i] = -1; };
  switch (t) {
    case LieType::A:
      for (int i = 0; i + 1 < n; ++i) chain(i, i + 1);
      break;
    case LieType::B:
      for (int i = 0; i + 2 < n; ++i) chain(i, i + 1);
      c[n - 2][n - 1] = -2;  // alpha_n short
      c[n - 1][n - 2] = -1;
      break;
    case LieType::C:
      for (int i = 0; i + 2 < n; ++i) chain(i, i + 1);
      c[n - 2][n - 1] = -1;  // alpha_n long
      c[n - 1][n - 2] = -2;
      break;
    case LieType::D:
      for (int i = 0; i + 3 < n; ++i) chain(i, i + 1);
      chain(n - 3, n - 2);
      chain(n - 3, n - 1);
      break;
    case LieType::E6:
    case LieType::E7:
    case LieType::E8:
      chain(0, 2);
      chain(1, 3);
      for (int i = 2; i + 1 < n; ++i) chain(i, i + 1);
      break;
    case LieType::F4:
      chain(0, 1);
      c[1][2] = -2;
      c[2][1] = -1;
      chain(2, 3);
      break;
    case LieType::G2:
      c[0][1] = -3;  // alpha_1 long, alpha_2 short
      c[1][0] = -1;
      break;
  }
  return c;
}

/// d_i = (alpha_i, alpha_i)/2, with short roots normalized to squared length 2.
inline std::vector<int> root_norm_halves(LieType t, int n) {
  std::vector<int> d(n, 1);
  switch (t) {
    case LieType::B:
      for (int i = 0; i + 1 < n; ++i) d[i] = 2;
      break;
    case LieType::C:
      d[n - 1] = 2;
      break;
    case LieType::F4:
      d[0] = d[1] = 2;
      break;
    case LieType::G2:
      d[0] = 3;
      break;
    default:
      break;
  }
  return d;
}

/// Root system with a Chevalley basis. Roots are integer coefficient vectors
/// over the simple roots. Structure constant signs are fixed by the
/// extraspecial-pair convention on the (height, lex) ordering of positive
/// roots; the constants are built once and immutable afterwards.
class RootSystem {
 public:
  /// Sparse element of g: key 0..rank-1 is the i-th simple coroot,
  /// key rank+k is the root vector for root index k.
  using Elem = std::map<int, mpq_class>;

  RootSystem(LieType t, int rank) : type_(t), n_(rank), cartan_(simple_cartan(t, rank)), d_(root_norm_halves(t, rank)) {
    generate_roots();
    build_tables();
  }

  LieType type() const { return type_; }
  int rank() const { return n_; }
  int num_positive() const { return P_; }
  int num_roots() const { return 2 * P_; }
  int dim() const { return n_ + 2 * P_; }

  const std::vector<int>& root(int k) const { return roots_[k]; }
  bool is_positive(int k) const { return k < P_; }
  int neg(int k) const { return k < P_ ? k + P_ : k - P_; }
  int height(int k) const { return heights_[k]; }
  int norm2(int k) const { return norm2_[k]; }

  int index_of(const std::vector<int>& v) const {
    auto it = index_.find(v);
    return it == index_.end() ? -1 : it->second;
  }

  /// Index of root a + root b, or -1 when the sum is not a root (including 0).
  int sum_index(int a, int b) const { return sum_[a * 2 * P_ + b]; }

  /// <root k, alpha_i^vee>
  int pairing(int k, int i) const {
    int s = 0;
    for (int j = 0; j < n_; ++j) s += roots_[k][j] * cartan_[j][i];
    return s;
  }

  /// Coroot of root k expanded over the simple coroots.
  const std::vector<int>& coroot(int k) const { return coroots_[k]; }

  /// Chevalley constant N(a, b) with [X_a, X_b] = N(a,b) X_{a+b}; 0 when a+b
  /// is not a root.
  int chevalley(int a, int b) const {
    ensure_constants();
    if (sum_index(a, b) < 0) return 0;
    return nconst_[a * 2 * P_ + b];
  }

  Elem bracket_basis(int bi, int bj) const;
  Elem bracket(const Elem& x, const Elem& y) const;

  void ensure_constants() const {
    std::call_once(constants_once_, [this]() { const_cast<RootSystem*>(this)->build_constants(); });
  }

 private:
  LieType type_;
  int n_;
  std::vector<std::vector<int>> cartan_;
  std::vector<int> d_;

  int P_ = 0;
  std::vector<std::vector<int>> roots_;  // positives (height,lex sorted), then negatives
  std::vector<int> heights_;
  std::vector<int> norm2_;
  std::vector<std::vector<int>> coroots_;
  std::map<std::vector<int>, int> index_;
  std::vector<int> sum_;                    // (2P)^2 sum table
  std::vector<std::pair<int, int>> extra_;  // extraspecial pair per positive root (-1,-1 for simple)
  mutable std::vector<int8_t> nconst_;
  mutable std::once_flag constants_once_;

  void generate_roots();
  void build_tables();
  void build_constants();
  int down_string(int b, int a) const {
    // p = max k with b - k a a root
    int p = 0;
    std::vector<int> v = roots_[b];
    for (;;) {
      for (int i = 0; i < n_; ++i) v[i] -= roots_[a][i];
      if (index_.count(v) == 0) break;
      ++p;
    }
    return p;
  }
  long long compute_n(int a, int b, std::vector<int8_t>& memo, std::vector<uint8_t>& have) const;
};

inline void RootSystem::generate_roots() {
  std::vector<std::vector<int>> pos;
  std::map<std::vector<int>, int> seen;
  for (int i = 0; i < n_; ++i) {
    std::vector<int> v(n_, 0);
    v[i] = 1;
    seen[v] = 1;
    pos.push_back(v);
  }
  // Closure by height: beta + alpha_i is a root iff q = p - <beta, alpha_i^vee> > 0.
  for (std::size_t h = 0; h < pos.size(); ++h) {
    std::vector<int> beta = pos[h];
    for (int i = 0; i < n_; ++i) {
      int pair = 0;
      for (int j = 0; j < n_; ++j) pair += beta[j] * cartan_[j][i];
      int p = 0;
      {
        std::vector<int> v = beta;
        for (;;) {
          v[i] -= 1;
          bool root = seen.count(v) > 0;
          bool zero = std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
          if (zero || !root) break;
          ++p;
        }
      }
      if (p - pair > 0) {
        std::vector<int> v = beta;
        v[i] += 1;
        if (!seen.count(v)) {
          seen[v] = 1;
          pos.push_back(v);
        }
      }
    }
  }
  auto ht = [](const std::vector<int>& v) {
    int s = 0;
    for (int x : v) s += x;
    return s;
  };
  std::sort(pos.begin(), pos.end(), [&](const std::vector<int>& a, const std::vector<int>& b) {
    int ha = ht(a), hb = ht(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });
  P_ = static_cast<int>(pos.size());
  roots_ = pos;
  for (const auto& v : pos) {
    std::vector<int> m(v);
    for (int& x : m) x = -x;
    roots_.push_back(m);
  }
  heights_.resize(2 * P_);
  for (int k = 0; k < 2 * P_; ++k) heights_[k] = ht(roots_[k]);
  for (int k = 0; k < 2 * P_; ++k) index_[roots_[k]] = k;
}

inline void RootSystem::build_tables() {
  norm2_.resize(2 * P_);
  coroots_.resize(2 * P_);
  for (int k = 0; k < 2 * P_; ++k) {
    const auto& v = roots_[k];
    int s = 0;
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) s += v[i] * v[j] * d_[j] * cartan_[i][j];
    norm2_[k] = s;
    int dal = s / 2;
    std::vector<int> co(n_);
    for (int j = 0; j < n_; ++j) {
      int num = v[j] * d_[j];
      if (num % dal != 0) throw inconsistency_error("coroot expansion not integral");
      co[j] = num / dal;
    }
    coroots_[k] = co;
  }
  sum_.assign(4 * P_ * P_, -1);
  for (int a = 0; a < 2 * P_; ++a)
    for (int b = 0; b < 2 * P_; ++b) {
      if (b == neg(a)) continue;
      std::vector<int> v(n_);
      for (int i = 0; i < n_; ++i) v[i] = roots_[a][i] + roots_[b][i];
      auto it = index_.find(v);
      if (it != index_.end()) sum_[a * 2 * P_ + b] = it->second;
    }
  extra_.assign(P_, {-1, -1});
  for (int g = 0; g < P_; ++g) {
    if (heights_[g] == 1) continue;
    for (int a = 0; a < P_; ++a) {
      if (heights_[a] >= heights_[g]) break;
      std::vector<int> v(n_);
      for (int i = 0; i < n_; ++i) v[i] = roots_[g][i] - roots_[a][i];
      auto it = index_.find(v);
      if (it != index_.end() && it->second < P_) {
        extra_[g] = {a, it->second};
        break;
      }
    }
    if (extra_[g].first < 0) throw inconsistency_error("no extraspecial pair found");
  }
}

inline long long RootSystem::compute_n(int a, int b, std::vector<int8_t>& memo, std::vector<uint8_t>& have) const {
  int R = 2 * P_;
  int g = sum_[a * R + b];
  if (g < 0) return 0;
  if (have[a * R + b]) return memo[a * R + b];
  long long val;
  bool pa = a < P_, pb = b < P_;
  if (pa && pb) {
    if (b < a) {
      val = -compute_n(b, a, memo, have);
    } else {
      auto [eps, eta] = extra_[g];
      if (a == eps) {
        val = down_string(b, a) + 1;
      } else {
        long long denom = compute_n(g, neg(eps), memo, have);
        if (denom == 0) throw inconsistency_error("vanishing extraspecial denominator");
        long long t1 = 0, t2 = 0;
        int am = sum_[a * R + neg(eps)];
        if (am >= 0) t1 = compute_n(neg(eps), a, memo, have) * compute_n(am, b, memo, have);
        int bm = sum_[b * R + neg(eps)];
        if (bm >= 0) t2 = compute_n(b, neg(eps), memo, have) * compute_n(bm, a, memo, have);
        long long num = -(t1 + t2);
        if (num % denom != 0) throw inconsistency_error("non-integral structure constant");
        val = num / denom;
      }
    }
  } else if (!pa && !pb) {
    val = -compute_n(neg(a), neg(b), memo, have);
  } else if (!pa) {
    val = -compute_n(b, a, memo, have);
  } else {
    // a > 0 > b with a + b a root
    int beta = neg(b);
    if (g < P_) {
      long long num = -compute_n(beta, g, memo, have) * norm2_[g];
      if (num % norm2_[a] != 0) throw inconsistency_error("non-integral structure constant");
      val = num / norm2_[a];
    } else {
      int delta = neg(g);
      long long num = compute_n(delta, a, memo, have) * norm2_[delta];
      if (num % norm2_[beta] != 0) throw inconsistency_error("non-integral structure constant");
      val = num / norm2_[beta];
    }
  }
  if (val > 127 || val < -127) throw inconsistency_error("structure constant out of range");
  memo[a * R + b] = static_cast<int8_t>(val);
  have[a * R + b] = 1;
  return val;
}

inline void RootSystem::build_constants() {
  int R = 2 * P_;
  std::vector<int8_t> memo(R * R, 0);
  std::vector<uint8_t> have(R * R, 0);
  for (int a = 0; a < R; ++a)
    for (int b = 0; b < R; ++b)
      if (sum_[a * R + b] >= 0) compute_n(a, b, memo, have);
  nconst_ = std::move(memo);
}

inline RootSystem::Elem RootSystem::bracket_basis(int bi, int bj) const {
  Elem out;
  bool hi = bi < n_, hj = bj < n_;
  if (hi && hj) return out;
  if (hi) {
    int k = bj - n_;
    int c = pairing(k, bi);
    if (c != 0) out[bj] = c;
    return out;
  }
  if (hj) {
    int k = bi - n_;
    int c = pairing(k, bj);
    if (c != 0) out[bi] = -c;
    return out;
  }
  int a = bi - n_, b = bj - n_;
  if (b == neg(a)) {
    const auto& co = coroots_[a];
    for (int i = 0; i < n_; ++i)
      if (co[i] != 0) out[i] = co[i];
    return out;
  }
  int s = sum_index(a, b);
  if (s >= 0) {
    int c = chevalley(a, b);
    if (c != 0) out[n_ + s] = c;
  }
  return out;
}

inline RootSystem::Elem RootSystem::bracket(const Elem& x, const Elem& y) const {
  Elem out;
  for (const auto& [bi, ci] : x)
    for (const auto& [bj, cj] : y) {
      Elem term = bracket_basis(bi, bj);
      for (const auto& [bk, ck] : term) {
        mpq_class v = ci * cj * ck;
        if (v != 0) {
          auto [it, fresh] = out.try_emplace(bk, v);
          if (!fresh) {
            it->second += v;
            if (it->second == 0) out.erase(it);
          }
        }
      }
    }
  return out;
}

/// Shared per-(type, rank) instances; construction is cheap but the constant
/// tables are worth reusing across sweeps.
inline std::shared_ptr<const RootSystem> shared_root_system(LieType t, int rank) {
  static std::mutex mu;
  static std::map<std::pair<LieType, int>, std::shared_ptr<const RootSystem>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(t, rank);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto rs = std::make_shared<const RootSystem>(t, rank);
  cache.emplace(key, rs);
  return rs;
}

}  // namespace nicepar
