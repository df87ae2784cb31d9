#include "cubical/stochastic.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numeric>
#include <random>

#include "cubical/axioms.hpp"
#include "cubical/content.hpp"
#include "cubical/random.hpp"

namespace cubical {

namespace {

void require_distribution(const std::vector<double>& d, std::size_t n, const char* what) {
  if (d.size() != n)
    throw Error(ErrorCode::NotADistribution, std::string(what) + " has the wrong number of entries");
  for (double x : d)
    if (!std::isfinite(x) || x < 0.0)
      throw Error(ErrorCode::NotADistribution, std::string(what) + " has a negative or non-finite entry");
}

void require_unit_sum(const std::vector<double>& d, const char* what) {
  const double sum = std::accumulate(d.begin(), d.end(), 0.0);
  if (std::abs(sum - 1.0) > kDistributionTolerance)
    throw Error(ErrorCode::NotADistribution, std::string(what) + " does not sum to 1");
}

std::vector<double> cumulative(const std::vector<double>& d) {
  std::vector<double> c(d.size());
  std::partial_sum(d.begin(), d.end(), c.begin());
  return c;
}

/// Inverse-CDF draw; mass lost to rounding goes to the last positive entry.
std::size_t draw(const std::vector<double>& cdf, const std::vector<double>& weights, double u) {
  const double scaled = u * cdf.back();
  auto it = std::upper_bound(cdf.begin(), cdf.end(), scaled);
  std::size_t i = static_cast<std::size_t>(it - cdf.begin());
  if (i >= cdf.size()) i = cdf.size() - 1;
  while (weights[i] == 0.0 && i > 0) --i;
  return i;
}

}  // namespace

StochasticSystem StochasticSystem::build(TokenSystem system, std::vector<double> xi,
                                         std::vector<double> theta) {
  require_cubical(system);
  require_distribution(xi, system.num_states(), "xi");
  require_unit_sum(xi, "xi");
  require_distribution(theta, system.num_tokens(), "theta");
  for (TokenId t : system.tokens())
    if (theta[t.value] == 0.0)
      throw Error(ErrorCode::ZeroTokenProbability,
                  "token '" + system.token_name(t) + "' has probability zero");
  require_unit_sum(theta, "theta");

  const std::size_t n = system.num_states();
  TransitionMatrix p = TransitionMatrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (StateId s : system.states()) {
    double off = 0.0;
    for (TokenId t : system.tokens()) {
      const StateId v = system.step(s, t);
      if (v == s) continue;
      auto& cell = p(static_cast<Eigen::Index>(s.value), static_cast<Eigen::Index>(v.value));
      if (cell != 0.0)
        throw Error(ErrorCode::InternalInconsistency,
                    "two tokens move state '" + system.state_name(s) + "' to the same state");
      cell = theta[t.value];
      off += theta[t.value];
    }
    const double stay = 1.0 - off;
    if (!(stay > 0.0 && stay < 1.0))
      throw Error(ErrorCode::InternalInconsistency, "holding probability outside (0, 1)");
    p(static_cast<Eigen::Index>(s.value), static_cast<Eigen::Index>(s.value)) = stay;
  }
  return StochasticSystem(std::move(system), std::move(xi), std::move(theta), std::move(p));
}

std::vector<double> uniform_distribution(std::size_t n) {
  return std::vector<double>(n, 1.0 / static_cast<double>(n));
}

TransitionMatrix n_step_matrix(const StochasticSystem& chain, std::size_t n) {
  const auto size = chain.matrix().rows();
  TransitionMatrix result = TransitionMatrix::Identity(size, size);
  TransitionMatrix base = chain.matrix();
  while (n > 0) {
    if (n & 1u) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

bool check_regularity(const StochasticSystem& chain) {
  const TransitionMatrix pn = n_step_matrix(chain, chain.system().num_states() - 1);
  if ((pn.array() > 0.0).all()) return true;
  throw Error(ErrorCode::InternalInconsistency, "transition matrix power is not entrywise positive");
}

std::vector<double> stationary_closed_form(const StochasticSystem& chain) {
  const TokenSystem& sys = chain.system();
  const StateContents contents(sys);
  std::vector<double> t(sys.num_states(), 1.0);
  for (StateId s : sys.states())
    for (TokenId tok : contents.of(s)) t[s.value] *= chain.theta()[tok.value];
  const double total = std::accumulate(t.begin(), t.end(), 0.0);
  for (double& x : t) x /= total;
  return t;
}

std::vector<double> stationary_solve(const StochasticSystem& chain) {
  const auto n = chain.matrix().rows();
  // (P^T - I) pi = 0 with the last equation replaced by sum(pi) = 1.
  Eigen::MatrixXd a = chain.matrix().transpose() - Eigen::MatrixXd::Identity(n, n);
  a.row(n - 1).setOnes();
  Eigen::VectorXd b = Eigen::VectorXd::Zero(n);
  b(n - 1) = 1.0;
  const Eigen::VectorXd pi = a.fullPivLu().solve(b);
  return std::vector<double>(pi.data(), pi.data() + n);
}

bool check_detailed_balance(const StochasticSystem& chain, const std::vector<double>& pi) {
  const TokenSystem& sys = chain.system();
  if (pi.size() != sys.num_states()) return false;
  for (StateId s : sys.states())
    for (StateId v : sys.states()) {
      const double lhs = pi[s.value] * chain.p(s, v);
      const double rhs = pi[v.value] * chain.p(v, s);
      const double scale = std::max({std::abs(pi[s.value]), std::abs(pi[v.value]), 1e-300});
      if (std::abs(lhs - rhs) > kBalanceTolerance * scale) return false;
    }

  const StateContents contents(sys);
  std::vector<double> t(sys.num_states(), 1.0);
  for (StateId s : sys.states())
    for (TokenId tok : contents.of(s)) t[s.value] *= chain.theta()[tok.value];
  for (StateId s : sys.states())
    for (StateId v : sys.states()) {
      if (!is_adjacent(sys, s, v)) continue;
      const double lhs = t[v.value] * chain.p(v, s);
      const double rhs = chain.p(s, v) * t[s.value];
      if (std::abs(lhs - rhs) > kBalanceTolerance * std::max(t[s.value], t[v.value])) return false;
    }
  return true;
}

std::vector<double> Trajectory::frequencies() const {
  const double total = static_cast<double>(std::accumulate(counts.begin(), counts.end(), std::uint64_t{0}));
  std::vector<double> f;
  for (auto c : counts) f.push_back(total > 0 ? static_cast<double>(c) / total : 0.0);
  return f;
}

Trajectory simulate(const StochasticSystem& chain, std::uint64_t seed, std::size_t steps,
                    bool keep_path) {
  const TokenSystem& sys = chain.system();
  std::mt19937_64 rng(seed);
  const auto xi_cdf = cumulative(chain.xi());
  const auto theta_cdf = cumulative(chain.theta());

  Trajectory tr;
  tr.seed = seed;
  tr.counts.assign(sys.num_states(), 0);
  StateId s{draw(xi_cdf, chain.xi(), uniform01(rng))};
  if (keep_path) tr.states.reserve(steps + 1);
  if (keep_path) tr.states.push_back(s);
  ++tr.counts[s.value];
  for (std::size_t i = 0; i < steps; ++i) {
    const TokenId t{draw(theta_cdf, chain.theta(), uniform01(rng))};
    s = sys.step(s, t);
    if (keep_path) tr.states.push_back(s);
    ++tr.counts[s.value];
  }
  if (!keep_path) tr.states.push_back(s);
  return tr;
}

std::vector<std::uint64_t> simulate_counts(const StochasticSystem& chain, std::uint64_t seed,
                                           std::size_t steps, std::size_t chains) {
  std::vector<std::future<Trajectory>> runs;
  for (std::size_t c = 0; c < chains; ++c)
    runs.push_back(std::async(std::launch::async, [&chain, seed, steps, c] {
      return simulate(chain, seed + c, steps, false);
    }));
  std::vector<std::uint64_t> total(chain.system().num_states(), 0);
  for (auto& r : runs) {
    const Trajectory tr = r.get();
    for (std::size_t i = 0; i < total.size(); ++i) total[i] += tr.counts[i];
  }
  return total;
}

}  // namespace cubical
