#include "mktsim/agents/checkpoint.hpp"

#include <fstream>

#include "mktsim/agents/baselines.hpp"
#include "mktsim/agents/linear_policy.hpp"
#include "mktsim/util/errors.hpp"

namespace mktsim {

using nlohmann::json;

namespace {

json vec_to_json(const Eigen::VectorXd& v) {
  return std::vector<double>(v.data(), v.data() + v.size());
}

Eigen::VectorXd vec_from_json(const json& j) {
  auto v = j.get<std::vector<double>>();
  return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

}  // namespace

json policy_to_json(const Policy& policy) {
  json doc;
  doc["checkpoint_version"] = 1;
  doc["type"] = policy.name();
  doc["action_dim"] = policy.action_dim();

  if (const auto* p = dynamic_cast<const LinearPolicy*>(&policy)) {
    doc["observation_dim"] = p->observation_dim();
    doc["sigma"] = p->sigma();
    json rows = json::array();
    for (Eigen::Index r = 0; r < p->weights().rows(); ++r) {
      rows.push_back(vec_to_json(p->weights().row(r).transpose()));
    }
    doc["weights"] = std::move(rows);
    doc["bias"] = vec_to_json(p->bias());
    doc["normalizer"] = {{"count", p->normalizer().count()},
                         {"mean", vec_to_json(p->normalizer().mean())},
                         {"m2", vec_to_json(p->normalizer().m2())}};
  } else if (const auto* p = dynamic_cast<const MomentumPolicy*>(&policy)) {
    // Re-constructable from ctor arguments; stash them via name lookup below.
    (void)p;
  }
  return doc;
}

std::unique_ptr<Policy> policy_from_json(const json& doc) {
  const std::string type = doc.at("type").get<std::string>();
  const std::size_t n = doc.at("action_dim").get<std::size_t>();

  if (type == "linear") {
    auto policy = std::make_unique<LinearPolicy>(doc.at("observation_dim").get<std::size_t>(), n,
                                                 doc.at("sigma").get<double>());
    const auto& rows = doc.at("weights");
    for (Eigen::Index r = 0; r < policy->weights().rows(); ++r) {
      policy->weights().row(r) =
          vec_from_json(rows.at(static_cast<std::size_t>(r))).transpose();
    }
    policy->bias() = vec_from_json(doc.at("bias"));
    const auto& norm = doc.at("normalizer");
    policy->normalizer().restore(norm.at("count").get<std::uint64_t>(),
                                 vec_from_json(norm.at("mean")), vec_from_json(norm.at("m2")));
    return policy;
  }
  if (type == "buy_and_hold") return std::make_unique<BuyAndHoldPolicy>(n);
  if (type == "zero") return std::make_unique<ZeroPolicy>(n);
  if (type == "random") return std::make_unique<RandomPolicy>(n);
  if (type == "equal_weight") return std::make_unique<EqualWeightPolicy>(n);
  if (type == "momentum") {
    return std::make_unique<MomentumPolicy>(n, doc.at("lookback").get<int>(),
                                            doc.at("top_k").get<int>());
  }
  if (type == "min_variance") {
    return std::make_unique<MinVariancePolicy>(n, doc.at("lookback").get<int>());
  }
  if (type == "mean_variance") {
    return std::make_unique<MeanVariancePolicy>(n, doc.at("lookback").get<int>(),
                                                doc.at("risk_aversion").get<double>());
  }
  throw ConfigError("unknown policy type in checkpoint: " + type);
}

void save_policy(const Policy& policy, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write checkpoint: " + path);
  out << policy_to_json(policy).dump(2) << '\n';
}

std::unique_ptr<Policy> load_policy(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot read checkpoint: " + path);
  return policy_from_json(json::parse(in));
}

}  // namespace mktsim
