#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gcsq/signed_graph.hpp"

namespace gcsq {

using Assignment = std::vector<std::uint8_t>;

struct QuadraticTerm {
  std::size_t i = 0;  // i < j
  std::size_t j = 0;
  double value = 0.0;

  friend bool operator==(const QuadraticTerm&, const QuadraticTerm&) = default;
};

/// Minimize  sum_i linear[i] x_i + sum_{i<j} q_ij x_i x_j  over x in {0,1}^n.
///
/// Quadratic terms are stored once per unordered pair, sorted by (i, j).
/// A per-variable neighbor view is kept alongside for O(degree) flip deltas.
class QuboProblem {
 public:
  struct Neighbor {
    std::size_t index;
    double coefficient;
  };

  QuboProblem() = default;
  /// Duplicate pairs accumulate, (j, i) is folded onto (i, j) and zero
  /// coefficients are dropped. Throws on out-of-range or diagonal indices
  /// and on non-finite coefficients.
  QuboProblem(std::vector<double> linear, std::vector<QuadraticTerm> quadratic);

  std::size_t size() const noexcept { return linear_.size(); }
  std::span<const double> linear() const noexcept { return linear_; }
  std::span<const QuadraticTerm> quadratic() const noexcept { return quadratic_; }
  std::span<const Neighbor> neighbors(std::size_t i) const {
    return {neighbors_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
  }

  /// Largest absolute coefficient, linear or quadratic (0 for an empty problem).
  double max_abs_coefficient() const;

  /// True when f(x) = f(~x) for every x, i.e. 2 q_i + sum_j q_ij = 0 for all i.
  bool is_complement_symmetric() const;

  friend bool operator==(const QuboProblem& a, const QuboProblem& b) {
    return a.linear_ == b.linear_ && a.quadratic_ == b.quadratic_;
  }

 private:
  std::vector<double> linear_;
  std::vector<QuadraticTerm> quadratic_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Neighbor> neighbors_;
};

/// QUBO whose objective equals cut_weight(g, x) for every x:
/// linear q_i = sum_{j != i} w_ij, quadratic q_ij = -2 w_ij.
QuboProblem build_bipartition_qubo(const SignedGraph& g);

/// Objective value of `x`. Throws on a length mismatch.
double evaluate(const QuboProblem& q, const Assignment& x);

/// Change in objective from flipping bit i of x.
double flip_delta(const QuboProblem& q, const Assignment& x, std::size_t i);

struct SolverResult {
  Assignment assignment;
  double objective = 0.0;
  std::uint64_t evaluations = 0;  // exact: states visited; sa: flip proposals
  std::optional<std::uint64_t> seed;
  std::string backend;
};

/// Simulated-annealing parameters. Unset fields resolve per problem:
/// t_initial = max |coefficient|, t_final = 1e-3 * t_initial,
/// sweeps = 100 * n.
struct SaConfig {
  std::optional<std::size_t> sweeps;
  std::size_t restarts = 8;
  std::optional<double> t_initial;
  std::optional<double> t_final;
  std::uint64_t seed = 0;
};

inline constexpr std::size_t kDefaultExactCap = 24;

/// Global minimum by Gray-code enumeration. For complement-symmetric
/// problems (every bipartition QUBO) x_0 is fixed to 0, halving the search
/// to 2^(n-1) states. Throws kSolver when n exceeds `cap`.
SolverResult solve_exact(const QuboProblem& q, std::size_t cap = kDefaultExactCap);

/// Single-bit-flip Metropolis annealing with a geometric schedule; best
/// state over all restarts. Restart r draws from mix_seed(seed, r); ties
/// across restarts go to the lowest restart index.
SolverResult solve_sa(const QuboProblem& q, const SaConfig& cfg);

struct SolverOptions {
  /// "auto" picks exact when n <= exact_cap and sa otherwise; any other
  /// value names a registered backend.
  std::string backend = "auto";
  std::size_t exact_cap = kDefaultExactCap;
  SaConfig sa;
};

using SolverBackend =
    std::function<SolverResult(const QuboProblem&, const SolverOptions&)>;

/// Named solver backends. Pre-populated with "exact" and "sa"; external
/// clients (for instance an annealer bridge) register under a new name.
class SolverRegistry {
 public:
  static SolverRegistry& global();

  void add(std::string name, SolverBackend backend);
  bool contains(std::string_view name) const;
  std::vector<std::string> names() const;

  SolverResult solve(const QuboProblem& q, const SolverOptions& options) const;

 private:
  SolverRegistry();

  mutable std::mutex mutex_;
  std::map<std::string, SolverBackend, std::less<>> backends_;
};

/// Dispatch through the global registry. Throws kInvalidArgument on an
/// unknown backend name.
SolverResult solve(const QuboProblem& q, const SolverOptions& options = {});

/// {"n": .., "linear": [..], "quadratic": [[i, j, v], ..]}
std::string qubo_to_json(const QuboProblem& q);
QuboProblem qubo_from_json(std::string_view text);

}  // namespace gcsq
