#pragma once

// The Markov chain of a cubical system driven by random token occurrences,
// its closed-form stationary distribution, and seeded simulation.

#include <cstddef>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "cubical/core.hpp"

namespace cubical {

/// Tolerance for distributions summing to one.
inline constexpr double kDistributionTolerance = 1e-9;
/// Relative tolerance for detailed balance.
inline constexpr double kBalanceTolerance = 1e-12;

using TransitionMatrix = Eigen::MatrixXd;

/// A verified cubical system with an initial distribution xi over states and
/// a strictly positive distribution theta over tokens.
class StochasticSystem {
 public:
  /// Throws NotCubical, ZeroTokenProbability, NotADistribution, and
  /// InternalInconsistency if two tokens move some state to the same place.
  static StochasticSystem build(TokenSystem system, std::vector<double> xi, std::vector<double> theta);

  const TokenSystem& system() const noexcept { return system_; }
  const std::vector<double>& xi() const noexcept { return xi_; }
  const std::vector<double>& theta() const noexcept { return theta_; }
  /// p(S, V) = theta_t when S t = V != S; p(S, S) takes the rest of the row.
  const TransitionMatrix& matrix() const noexcept { return matrix_; }
  double p(StateId s, StateId v) const { return matrix_(s.value, v.value); }

 private:
  StochasticSystem(TokenSystem system, std::vector<double> xi, std::vector<double> theta,
                   TransitionMatrix matrix)
      : system_(std::move(system)), xi_(std::move(xi)), theta_(std::move(theta)), matrix_(std::move(matrix)) {}

  TokenSystem system_;
  std::vector<double> xi_;
  std::vector<double> theta_;
  TransitionMatrix matrix_;
};

std::vector<double> uniform_distribution(std::size_t n);

/// P^n.
TransitionMatrix n_step_matrix(const StochasticSystem& chain, std::size_t n);

/// P^(|S|-1) is entrywise positive. Throws InternalInconsistency if not,
/// which cannot happen for a valid chain.
bool check_regularity(const StochasticSystem& chain);

/// pi(S) proportional to the product of theta over the content of S.
std::vector<double> stationary_closed_form(const StochasticSystem& chain);

/// Solves pi P = pi, sum(pi) = 1 directly.
std::vector<double> stationary_solve(const StochasticSystem& chain);

/// pi(S) p(S, V) = pi(V) p(V, S) for all pairs, and the content-product
/// ratio t(V) / t(S) = p(S, V) / p(V, S) on every adjacent pair.
bool check_detailed_balance(const StochasticSystem& chain, const std::vector<double>& pi);

struct Trajectory {
  std::uint64_t seed = 0;
  std::vector<StateId> states;       // initial state plus one entry per step
  std::vector<std::uint64_t> counts; // visits per state, over `states`

  std::vector<double> frequencies() const;
};

/// Initial state drawn from xi, then one token per step drawn from theta and
/// applied. Bit-reproducible per (seed, chain): std::mt19937_64 with
/// inverse-CDF draws on 53-bit uniforms. With keep_path = false only counts
/// are recorded (states holds the final state).
Trajectory simulate(const StochasticSystem& chain, std::uint64_t seed, std::size_t steps,
                    bool keep_path = true);

/// Independent trajectories with seeds seed, seed + 1, ..., run concurrently,
/// counts merged in seed order.
std::vector<std::uint64_t> simulate_counts(const StochasticSystem& chain, std::uint64_t seed,
                                           std::size_t steps, std::size_t chains);

}  // namespace cubical
