#pragma once

#include <Eigen/Dense>

#include <memory>

#include "mktsim/agents/policy.hpp"

namespace mktsim {

// Per-dimension running mean/std (Welford). Used to normalize observations;
// the identity until the first update, and only ever updated explicitly, so
// statistics stay frozen across a rollout batch and after training.
class RunningNormalizer {
 public:
  RunningNormalizer() = default;
  explicit RunningNormalizer(std::size_t dim);

  void update(const Observation& obs);
  Eigen::VectorXd normalize(const Observation& obs) const;

  std::size_t dim() const { return static_cast<std::size_t>(mean_.size()); }
  std::uint64_t count() const { return count_; }
  const Eigen::VectorXd& mean() const { return mean_; }
  const Eigen::VectorXd& m2() const { return m2_; }
  Eigen::VectorXd stddev() const;

  void restore(std::uint64_t count, Eigen::VectorXd mean, Eigen::VectorXd m2);

 private:
  std::uint64_t count_ = 0;
  Eigen::VectorXd mean_;
  Eigen::VectorXd m2_;
};

// Gaussian linear policy: action ~ N(W x + b, sigma^2 I) over normalized
// observations. sigma = 0 (or deterministic mode) makes act pure.
class LinearPolicy final : public Policy {
 public:
  LinearPolicy(std::size_t observation_dim, std::size_t action_dim, double sigma = 0.0);

  Action act(const Observation& obs, Rng& rng) override;
  void set_deterministic(bool on) override { deterministic_ = on; }
  std::size_t action_dim() const override { return static_cast<std::size_t>(weights_.rows()); }
  std::size_t observation_dim() const { return static_cast<std::size_t>(weights_.cols()); }
  std::string name() const override { return "linear"; }
  std::unique_ptr<Policy> clone() const override { return std::make_unique<LinearPolicy>(*this); }

  // Mean action W x + b for a (raw) observation.
  Eigen::VectorXd mean_action(const Observation& obs) const;

  Eigen::MatrixXd& weights() { return weights_; }
  const Eigen::MatrixXd& weights() const { return weights_; }
  Eigen::VectorXd& bias() { return bias_; }
  const Eigen::VectorXd& bias() const { return bias_; }
  double sigma() const { return sigma_; }
  void set_sigma(double sigma) { sigma_ = sigma; }
  RunningNormalizer& normalizer() { return normalizer_; }
  const RunningNormalizer& normalizer() const { return normalizer_; }

  bool finite_parameters() const;

 private:
  Eigen::MatrixXd weights_;  // action_dim x observation_dim
  Eigen::VectorXd bias_;
  double sigma_;
  bool deterministic_ = false;
  RunningNormalizer normalizer_;
};

}  // namespace mktsim
