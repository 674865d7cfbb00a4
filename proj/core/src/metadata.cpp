#include "plg/metadata.hpp"

#include <algorithm>

#include "json.hpp"
#include "plg/errors.hpp"

namespace plg {

namespace {

using Json = nlohmann::ordered_json;

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

Json beta_json(const BetaSpec& b) {
  Json j;
  j["kind"] = b.kind_name();
  if (b.functional()) {
    j["c"] = b.f.c;
    j["k"] = b.f.k;
  } else {
    j["value"] = b.beta;
  }
  return j;
}

BetaSpec beta_from_json(const Json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "constant") return BetaSpec::constant_beta(j.at("value").get<double>());
  GrowthFn f{j.at("c").get<double>(), j.at("k").get<double>()};
  if (kind == "below-one") return BetaSpec::below_one(f);
  if (kind == "above-one") return BetaSpec::above_one(f);
  throw Error(Errc::parse_error, "unknown beta kind '" + kind + "'");
}

}  // namespace

EmbeddingMeta to_meta(const EmbeddedPlg& e, const std::string& gd_source) {
  EmbeddingMeta m;
  m.alpha = e.params.alpha;
  m.beta = e.params.beta;
  m.regime = regime_name(e.plan.regime);
  m.gd_nodes = sorted(e.gd_nodes);
  m.gamma = sorted(e.gamma);
  m.w1 = sorted(e.w1);
  m.degree_one_nodes = sorted(e.degree_one_nodes);
  m.rim_order = e.rim_order;
  m.gd_source = gd_source;
  if (e.gadget) {
    m.pm_matching = e.gadget->matching;
    std::sort(m.pm_matching.begin(), m.pm_matching.end());
    m.pm_multiplicity = "total";
  }
  m.gd_interval = e.plan.gd_interval;
  m.gamma_interval = e.plan.gamma_interval;
  return m;
}

std::string emit_meta_json(const EmbeddingMeta& m) {
  Json j;
  j["alpha"] = m.alpha;
  j["beta"] = beta_json(m.beta);
  j["regime"] = m.regime;
  j["gd_nodes"] = m.gd_nodes;
  j["gamma"] = m.gamma;
  j["w1"] = m.w1;
  j["degree_one_nodes"] = m.degree_one_nodes;
  j["rim_order"] = m.rim_order;
  j["gd_source"] = m.gd_source;
  if (!m.pm_matching.empty()) {
    Json pairs = Json::array();
    for (const auto& [a, b] : m.pm_matching) pairs.push_back({a, b});
    j["pm_matching"] = pairs;
    j["pm_multiplicity"] = m.pm_multiplicity;
  }
  if (m.gd_interval) j["gd_interval"] = {m.gd_interval->first, m.gd_interval->second};
  if (m.gamma_interval) j["gamma_interval"] = {m.gamma_interval->first, m.gamma_interval->second};
  return j.dump(2) + "\n";
}

EmbeddingMeta parse_meta_json(const std::string& text) {
  try {
    const Json j = Json::parse(text);
    EmbeddingMeta m;
    m.alpha = j.at("alpha").get<double>();
    m.beta = beta_from_json(j.at("beta"));
    m.regime = j.at("regime").get<std::string>();
    regime_from_name(m.regime);
    m.gd_nodes = j.at("gd_nodes").get<std::vector<int>>();
    m.gamma = j.at("gamma").get<std::vector<int>>();
    m.w1 = j.at("w1").get<std::vector<int>>();
    m.degree_one_nodes = j.at("degree_one_nodes").get<std::vector<int>>();
    m.rim_order = j.at("rim_order").get<std::vector<int>>();
    m.gd_source = j.at("gd_source").get<std::string>();
    if (j.contains("pm_matching")) {
      for (const Json& p : j.at("pm_matching")) m.pm_matching.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
      m.pm_multiplicity = j.value("pm_multiplicity", std::string("total"));
    }
    if (j.contains("gd_interval"))
      m.gd_interval = {j["gd_interval"].at(0).get<long long>(), j["gd_interval"].at(1).get<long long>()};
    if (j.contains("gamma_interval"))
      m.gamma_interval = {j["gamma_interval"].at(0).get<long long>(),
                          j["gamma_interval"].at(1).get<long long>()};
    return m;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(Errc::parse_error, std::string("metadata: ") + ex.what());
  }
}

}  // namespace plg
