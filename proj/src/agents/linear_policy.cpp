#include "mktsim/agents/linear_policy.hpp"

#include <cmath>

#include "mktsim/util/errors.hpp"

namespace mktsim {

RunningNormalizer::RunningNormalizer(std::size_t dim)
    : mean_(Eigen::VectorXd::Zero(static_cast<Eigen::Index>(dim))),
      m2_(Eigen::VectorXd::Zero(static_cast<Eigen::Index>(dim))) {}

void RunningNormalizer::update(const Observation& obs) {
  if (obs.size() != dim()) throw RuntimeFault("normalizer dimension mismatch");
  ++count_;
  for (Eigen::Index i = 0; i < mean_.size(); ++i) {
    double x = obs[static_cast<std::size_t>(i)];
    double delta = x - mean_[i];
    mean_[i] += delta / static_cast<double>(count_);
    m2_[i] += delta * (x - mean_[i]);
  }
}

Eigen::VectorXd RunningNormalizer::stddev() const {
  if (count_ < 2) return Eigen::VectorXd::Ones(mean_.size());
  Eigen::VectorXd sd = (m2_ / static_cast<double>(count_)).cwiseSqrt();
  for (Eigen::Index i = 0; i < sd.size(); ++i) {
    if (!(sd[i] > 1e-8)) sd[i] = 1.0;  // constant dimensions pass through
  }
  return sd;
}

Eigen::VectorXd RunningNormalizer::normalize(const Observation& obs) const {
  if (obs.size() != dim()) throw RuntimeFault("normalizer dimension mismatch");
  Eigen::Map<const Eigen::VectorXd> x(obs.data(), static_cast<Eigen::Index>(obs.size()));
  if (count_ < 2) return x;
  return (x - mean_).cwiseQuotient(stddev());
}

void RunningNormalizer::restore(std::uint64_t count, Eigen::VectorXd mean, Eigen::VectorXd m2) {
  count_ = count;
  mean_ = std::move(mean);
  m2_ = std::move(m2);
}

LinearPolicy::LinearPolicy(std::size_t observation_dim, std::size_t action_dim, double sigma)
    : weights_(Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(action_dim),
                                     static_cast<Eigen::Index>(observation_dim))),
      bias_(Eigen::VectorXd::Zero(static_cast<Eigen::Index>(action_dim))),
      sigma_(sigma),
      normalizer_(observation_dim) {
  if (sigma < 0.0) throw ConfigError("sigma must be >= 0");
}

Eigen::VectorXd LinearPolicy::mean_action(const Observation& obs) const {
  return weights_ * normalizer_.normalize(obs) + bias_;
}

Action LinearPolicy::act(const Observation& obs, Rng& rng) {
  Eigen::VectorXd u = mean_action(obs);
  Action a(static_cast<std::size_t>(u.size()));
  if (sigma_ > 0.0 && !deterministic_) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (Eigen::Index i = 0; i < u.size(); ++i) {
      a[static_cast<std::size_t>(i)] = u[i] + sigma_ * gauss(rng);
    }
  } else {
    for (Eigen::Index i = 0; i < u.size(); ++i) a[static_cast<std::size_t>(i)] = u[i];
  }
  return a;
}

bool LinearPolicy::finite_parameters() const {
  return weights_.allFinite() && bias_.allFinite();
}

}  // namespace mktsim
