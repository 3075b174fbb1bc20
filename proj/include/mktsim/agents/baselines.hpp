#pragma once

#include <deque>
#include <memory>
#include <vector>

#include "mktsim/agents/policy.hpp"

namespace mktsim {

// Maximal buy intent on the first step of each episode, hold afterwards.
// Stock environment.
class BuyAndHoldPolicy final : public Policy {
 public:
  explicit BuyAndHoldPolicy(std::size_t num_symbols) : n_(num_symbols) {}
  Action act(const Observation&, Rng&) override;
  void begin_episode() override { first_ = true; }
  std::size_t action_dim() const override { return n_; }
  std::string name() const override { return "buy_and_hold"; }
  std::unique_ptr<Policy> clone() const override {
    return std::make_unique<BuyAndHoldPolicy>(*this);
  }

 private:
  std::size_t n_;
  bool first_ = true;
};

// Zero action every step: hold in the stock env.
class ZeroPolicy final : public Policy {
 public:
  explicit ZeroPolicy(std::size_t num_symbols) : n_(num_symbols) {}
  Action act(const Observation&, Rng&) override { return Action(n_, 0.0); }
  std::size_t action_dim() const override { return n_; }
  std::string name() const override { return "zero"; }
  std::unique_ptr<Policy> clone() const override { return std::make_unique<ZeroPolicy>(*this); }

 private:
  std::size_t n_;
};

// Uniform random intents in [-1, 1]; comparison strawman, not a baseline in
// the classical sense.
class RandomPolicy final : public Policy {
 public:
  explicit RandomPolicy(std::size_t num_symbols) : n_(num_symbols) {}
  Action act(const Observation&, Rng& rng) override {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Action a(n_);
    for (auto& v : a) v = u(rng);
    return a;
  }
  std::size_t action_dim() const override { return n_; }
  std::string name() const override { return "random"; }
  std::unique_ptr<Policy> clone() const override { return std::make_unique<RandomPolicy>(*this); }

 private:
  std::size_t n_;
};

// Equal logits every step -> 1/N weights. Allocation environment.
class EqualWeightPolicy final : public Policy {
 public:
  explicit EqualWeightPolicy(std::size_t num_symbols) : n_(num_symbols) {}
  Action act(const Observation&, Rng&) override { return Action(n_, 0.0); }
  std::size_t action_dim() const override { return n_; }
  std::string name() const override { return "equal_weight"; }
  std::unique_ptr<Policy> clone() const override {
    return std::make_unique<EqualWeightPolicy>(*this);
  }

 private:
  std::size_t n_;
};

// Cross-sectional momentum: ranks symbols by trailing return over an internal
// price history, buys the top_k and sells the rest. Ties break by symbol
// index; holds until enough history has accumulated. Stock environment.
class MomentumPolicy final : public Policy {
 public:
  MomentumPolicy(std::size_t num_symbols, int lookback, int top_k);
  Action act(const Observation& obs, Rng&) override;
  void begin_episode() override { history_.clear(); }
  std::size_t action_dim() const override { return n_; }
  std::string name() const override { return "momentum"; }
  std::unique_ptr<Policy> clone() const override {
    return std::make_unique<MomentumPolicy>(*this);
  }

 private:
  std::size_t n_;
  int lookback_;
  int top_k_;
  std::deque<std::vector<double>> history_;
};

// Rolling minimum-variance weights via the projected-gradient QP, emitted as
// log-weight logits. Falls back to equal weights until enough history.
// Allocation environment.
class MinVariancePolicy final : public Policy {
 public:
  MinVariancePolicy(std::size_t num_symbols, int lookback);
  Action act(const Observation& obs, Rng&) override;
  void begin_episode() override { history_.clear(); }
  std::size_t action_dim() const override { return n_; }
  std::string name() const override { return "min_variance"; }
  std::unique_ptr<Policy> clone() const override {
    return std::make_unique<MinVariancePolicy>(*this);
  }

 private:
  std::size_t n_;
  int lookback_;
  std::deque<std::vector<double>> history_;
};

// Rolling mean-variance weights: max mu'w - lambda w'Sigma w on the simplex.
// Allocation environment.
class MeanVariancePolicy final : public Policy {
 public:
  MeanVariancePolicy(std::size_t num_symbols, int lookback, double risk_aversion);
  Action act(const Observation& obs, Rng&) override;
  void begin_episode() override { history_.clear(); }
  std::size_t action_dim() const override { return n_; }
  std::string name() const override { return "mean_variance"; }
  std::unique_ptr<Policy> clone() const override {
    return std::make_unique<MeanVariancePolicy>(*this);
  }

 private:
  std::size_t n_;
  int lookback_;
  double risk_aversion_;
  std::deque<std::vector<double>> history_;
};

// Close prices live at obs[1 + N .. 1 + 2N) for both environments.
std::vector<double> closes_from_observation(const Observation& obs, std::size_t num_symbols);

}  // namespace mktsim
