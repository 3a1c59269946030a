#include "gcsq/qubo.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include <json.hpp>

#include "gcsq/error.hpp"
#include "gcsq/rng.hpp"

namespace gcsq {

QuboProblem::QuboProblem(std::vector<double> linear, std::vector<QuadraticTerm> quadratic)
    : linear_(std::move(linear)) {
  const std::size_t n = linear_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(linear_[i])) {
      throw Error(ErrorCode::kNonFinite, "non-finite linear coefficient " + std::to_string(i));
    }
  }
  for (auto& t : quadratic) {
    if (t.i >= n || t.j >= n) {
      throw Error(ErrorCode::kOutOfRange, "quadratic term (" + std::to_string(t.i) + ", " +
                                              std::to_string(t.j) + ") outside " +
                                              std::to_string(n) + " variables");
    }
    if (t.i == t.j) {
      throw Error(ErrorCode::kInvalidArgument,
                  "diagonal quadratic term at " + std::to_string(t.i) + "; fold it into linear");
    }
    if (!std::isfinite(t.value)) {
      throw Error(ErrorCode::kNonFinite, "non-finite quadratic coefficient");
    }
    if (t.i > t.j) std::swap(t.i, t.j);
  }
  std::stable_sort(quadratic.begin(), quadratic.end(), [](const auto& a, const auto& b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  });
  for (const auto& t : quadratic) {
    if (!quadratic_.empty() && quadratic_.back().i == t.i && quadratic_.back().j == t.j) {
      quadratic_.back().value += t.value;
    } else {
      quadratic_.push_back(t);
    }
  }
  std::erase_if(quadratic_, [](const auto& t) { return t.value == 0.0; });

  std::vector<std::size_t> degree(n, 0);
  for (const auto& t : quadratic_) {
    ++degree[t.i];
    ++degree[t.j];
  }
  offsets_.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) offsets_[i + 1] = offsets_[i] + degree[i];
  neighbors_.resize(offsets_[n]);
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  // Terms are sorted by (i, j): filling lower-index neighbors first, then
  // higher-index ones, leaves every neighbor list sorted by index.
  for (const auto& t : quadratic_) neighbors_[cursor[t.j]++] = {t.i, t.value};
  for (const auto& t : quadratic_) neighbors_[cursor[t.i]++] = {t.j, t.value};
}

double QuboProblem::max_abs_coefficient() const {
  double m = 0.0;
  for (double v : linear_) m = std::max(m, std::abs(v));
  for (const auto& t : quadratic_) m = std::max(m, std::abs(t.value));
  return m;
}

bool QuboProblem::is_complement_symmetric() const {
  const double scale = 1.0 + max_abs_coefficient();
  for (std::size_t i = 0; i < size(); ++i) {
    double s = 2.0 * linear_[i];
    double mag = std::abs(s);
    for (const auto& nb : neighbors(i)) {
      s += nb.coefficient;
      mag += std::abs(nb.coefficient);
    }
    if (std::abs(s) > 1e-12 * (scale + mag)) return false;
  }
  return true;
}

QuboProblem build_bipartition_qubo(const SignedGraph& g) {
  const std::size_t n = g.size();
  std::vector<double> linear(n, 0.0);
  std::vector<QuadraticTerm> quadratic;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) linear[i] += g.weight(i, j);
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      if (g.weight(i, j) != 0.0) quadratic.push_back({i, j, -2.0 * g.weight(i, j)});
    }
  }
  return QuboProblem(std::move(linear), std::move(quadratic));
}

double evaluate(const QuboProblem& q, const Assignment& x) {
  if (x.size() != q.size()) {
    throw Error(ErrorCode::kShapeMismatch, "assignment has " + std::to_string(x.size()) +
                                               " bits for " + std::to_string(q.size()) +
                                               " variables");
  }
  double value = 0.0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (x[i]) value += q.linear()[i];
  }
  for (const auto& t : q.quadratic()) {
    if (x[t.i] && x[t.j]) value += t.value;
  }
  return value;
}

namespace {

// Local field h_i = q_i + sum_j q_ij x_j; flipping i changes the objective
// by (1 - 2 x_i) h_i.
std::vector<double> local_fields(const QuboProblem& q, const Assignment& x) {
  std::vector<double> h(q.linear().begin(), q.linear().end());
  for (const auto& t : q.quadratic()) {
    if (x[t.j]) h[t.i] += t.value;
    if (x[t.i]) h[t.j] += t.value;
  }
  return h;
}

void apply_flip(const QuboProblem& q, Assignment& x, std::vector<double>& h, std::size_t i) {
  x[i] ^= 1;
  const double sign = x[i] ? 1.0 : -1.0;
  for (const auto& nb : q.neighbors(i)) h[nb.index] += sign * nb.coefficient;
}

}  // namespace

double flip_delta(const QuboProblem& q, const Assignment& x, std::size_t i) {
  if (x.size() != q.size() || i >= q.size()) {
    throw Error(ErrorCode::kShapeMismatch, "flip_delta: bad assignment or index");
  }
  double h = q.linear()[i];
  for (const auto& nb : q.neighbors(i)) {
    if (x[nb.index]) h += nb.coefficient;
  }
  return x[i] ? -h : h;
}

SolverResult solve_exact(const QuboProblem& q, std::size_t cap) {
  const std::size_t n = q.size();
  if (n > cap) {
    throw Error(ErrorCode::kSolver, "exact solver limited to " + std::to_string(cap) +
                                        " variables, problem has " + std::to_string(n));
  }
  if (n >= 63) throw Error(ErrorCode::kSolver, "exact solver cannot enumerate 2^63 states");
  SolverResult result;
  result.backend = "exact";
  result.assignment.assign(n, 0);
  if (n == 0) return result;

  const std::size_t first_free = q.is_complement_symmetric() ? 1 : 0;
  const std::size_t free_vars = n - first_free;
  const std::uint64_t states = std::uint64_t{1} << free_vars;

  // Incremental values drift by a few ulps over 2^23 flips, so states near
  // the running minimum are re-scored exactly before being kept.
  double sum_abs = 0.0;
  for (double v : q.linear()) sum_abs += std::abs(v);
  for (const auto& t : q.quadratic()) sum_abs += std::abs(t.value);
  const double band = 1e-9 * (1.0 + sum_abs);

  Assignment x(n, 0);
  std::vector<double> h = local_fields(q, x);
  double value = 0.0;
  double best_running = 0.0;
  double best_exact = 0.0;
  Assignment best = x;
  for (std::uint64_t t = 1; t < states; ++t) {
    const std::size_t i = first_free + static_cast<std::size_t>(std::countr_zero(t));
    value += x[i] ? -h[i] : h[i];
    apply_flip(q, x, h, i);
    if (value <= best_running + band) {
      best_running = std::min(best_running, value);
      const double exact = evaluate(q, x);
      if (exact < best_exact) {
        best_exact = exact;
        best = x;
      }
    }
  }
  result.assignment = std::move(best);
  result.objective = best_exact;
  result.evaluations = states;
  return result;
}

SolverResult solve_sa(const QuboProblem& q, const SaConfig& cfg) {
  const std::size_t n = q.size();
  if (cfg.restarts == 0) throw Error(ErrorCode::kInvalidArgument, "SA restarts must be >= 1");
  if (cfg.sweeps && *cfg.sweeps == 0) {
    throw Error(ErrorCode::kInvalidArgument, "SA sweeps must be >= 1");
  }
  const std::size_t sweeps = cfg.sweeps.value_or(std::max<std::size_t>(1, 100 * n));
  double t0 = cfg.t_initial.value_or(q.max_abs_coefficient());
  if (!cfg.t_initial && t0 == 0.0) t0 = 1.0;
  const double tf = cfg.t_final.value_or(1e-3 * t0);
  if (!(t0 > tf && tf > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "SA schedule needs t_initial > t_final > 0");
  }
  const double cooling = sweeps > 1 ? std::pow(tf / t0, 1.0 / static_cast<double>(sweeps - 1)) : 1.0;

  SolverResult result;
  result.backend = "sa";
  result.seed = cfg.seed;
  result.assignment.assign(n, 0);
  if (n == 0) return result;

  double best_overall = std::numeric_limits<double>::infinity();
  for (std::size_t r = 0; r < cfg.restarts; ++r) {
    Rng rng(mix_seed(cfg.seed, r));
    Assignment x(n);
    for (auto& bit : x) bit = static_cast<std::uint8_t>(rng.next() >> 63);
    std::vector<double> h = local_fields(q, x);
    double value = evaluate(q, x);
    double best_value = value;
    Assignment best = x;

    double temperature = t0;
    for (std::size_t s = 0; s < sweeps; ++s, temperature *= cooling) {
      for (std::size_t i = 0; i < n; ++i) {
        const double delta = x[i] ? -h[i] : h[i];
        if (delta <= 0.0 || rng.uniform() < std::exp(-delta / temperature)) {
          apply_flip(q, x, h, i);
          value += delta;
          if (value < best_value) {
            best_value = value;
            best = x;
          }
        }
      }
    }
    result.evaluations += static_cast<std::uint64_t>(sweeps) * n;

    const double exact = evaluate(q, best);
    if (exact < best_overall) {
      best_overall = exact;
      result.assignment = std::move(best);
    }
  }
  result.objective = best_overall;
  return result;
}

SolverRegistry::SolverRegistry() {
  backends_.emplace("exact", [](const QuboProblem& q, const SolverOptions& o) {
    return solve_exact(q, o.exact_cap);
  });
  backends_.emplace("sa", [](const QuboProblem& q, const SolverOptions& o) {
    return solve_sa(q, o.sa);
  });
}

SolverRegistry& SolverRegistry::global() {
  static SolverRegistry registry;
  return registry;
}

void SolverRegistry::add(std::string name, SolverBackend backend) {
  if (name.empty() || name == "auto") {
    throw Error(ErrorCode::kInvalidArgument, "backend name '" + name + "' is reserved");
  }
  std::lock_guard lock(mutex_);
  backends_[std::move(name)] = std::move(backend);
}

bool SolverRegistry::contains(std::string_view name) const {
  std::lock_guard lock(mutex_);
  return name == "auto" || backends_.find(name) != backends_.end();
}

std::vector<std::string> SolverRegistry::names() const {
  std::lock_guard lock(mutex_);
  std::vector<std::string> out{"auto"};
  for (const auto& [name, _] : backends_) out.push_back(name);
  return out;
}

SolverResult SolverRegistry::solve(const QuboProblem& q, const SolverOptions& options) const {
  std::string_view name = options.backend;
  if (name == "auto") name = q.size() <= options.exact_cap ? "exact" : "sa";
  SolverBackend backend;
  {
    std::lock_guard lock(mutex_);
    auto it = backends_.find(name);
    if (it == backends_.end()) {
      throw Error(ErrorCode::kInvalidArgument, "unknown solver backend '" + std::string(name) + "'");
    }
    backend = it->second;
  }
  SolverResult r = backend(q, options);
  if (r.assignment.size() != q.size()) {
    throw Error(ErrorCode::kSolver, "backend '" + std::string(name) +
                                        "' returned an assignment of the wrong length");
  }
  r.objective = evaluate(q, r.assignment);
  if (r.backend.empty()) r.backend = std::string(name);
  return r;
}

SolverResult solve(const QuboProblem& q, const SolverOptions& options) {
  return SolverRegistry::global().solve(q, options);
}

std::string qubo_to_json(const QuboProblem& q) {
  nlohmann::json j;
  j["n"] = q.size();
  j["linear"] = std::vector<double>(q.linear().begin(), q.linear().end());
  auto quad = nlohmann::json::array();
  for (const auto& t : q.quadratic()) quad.push_back({t.i, t.j, t.value});
  j["quadratic"] = std::move(quad);
  return j.dump();
}

QuboProblem qubo_from_json(std::string_view text) {
  try {
    const auto j = nlohmann::json::parse(text);
    auto linear = j.at("linear").get<std::vector<double>>();
    if (j.contains("n") && j.at("n").get<std::size_t>() != linear.size()) {
      throw Error(ErrorCode::kShapeMismatch, "QUBO JSON: n does not match linear length");
    }
    std::vector<QuadraticTerm> quad;
    for (const auto& entry : j.at("quadratic")) {
      if (!entry.is_array() || entry.size() != 3) {
        throw Error(ErrorCode::kParse, "QUBO JSON: quadratic entries must be [i, j, v]");
      }
      quad.push_back({entry[0].get<std::size_t>(), entry[1].get<std::size_t>(),
                      entry[2].get<double>()});
    }
    return QuboProblem(std::move(linear), std::move(quad));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("QUBO JSON: ") + e.what());
  }
}

}  // namespace gcsq
