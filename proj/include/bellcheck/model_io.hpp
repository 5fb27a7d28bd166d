#pragma once

#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bellcheck/errors.hpp"
#include "bellcheck/model.hpp"
#include "bellcheck/scenario.hpp"

namespace bellcheck {

using Json = nlohmann::json;

inline std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = hex[h & 0xf];
    h >>= 4;
  }
  return out;
}

/// A parsed model file: the model, its optional scenario, and the canonical
/// serialisation the digest is taken over.
struct LoadedModel {
  Model model;
  std::optional<EPRBScenario> scenario;
  std::string canonical;
  std::string digest;
};

inline PastSelector parse_past_selector(const Model& m, const std::string& text) {
  if (text == "mutual") return PastSelector::mutual_past();
  if (text == "joint") return PastSelector::joint_past();
  if (text == "past-a") return PastSelector::past_of_a();
  if (text == "past-b") return PastSelector::past_of_b();
  if (text.rfind("slice:", 0) == 0) return PastSelector::slice_block(m.slice(text.substr(6)));
  if (text.rfind("srla:", 0) == 0) return PastSelector::srla_block(m.slice(text.substr(5)));
  if (text.rfind("custom:", 0) == 0)
    return PastSelector::custom(m.universe().find(text.substr(7)));
  throw InputError("unknown past selector '" + text + "'");
}

namespace detail {

inline const Json& require(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("model file is missing '") + key + "'");
  return *it;
}

inline std::vector<std::string> string_list(const Json& j, const std::string& what) {
  if (!j.is_array()) throw InputError(what + " must be a list");
  std::vector<std::string> out;
  for (const auto& v : j) {
    if (!v.is_string()) throw InputError(what + " must be a list of strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

inline Json model_to_json(const Model& m, const std::optional<EPRBScenario>& scen) {
  Json j;
  j["points"] = m.site().point_names();
  Json order = Json::array();
  const auto& names = m.site().point_names();
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t k = 0; k < names.size(); ++k)
      if (i != k && m.site().precedes(i, k)) order.push_back({names[i], names[k]});
  j["order"] = std::move(order);

  Json regions = Json::object();
  const auto& u = m.universe();
  for (std::size_t i = 2; i < u.declared_count(); ++i)  // skip the auto 0 and M
    regions[u.regions()[i].name] = bit_names(u.regions()[i].points, names);
  j["regions"] = std::move(regions);

  Json slices = Json::object();
  for (const auto& [name, s] : m.slices())
    slices[name] = Json{{"lower", bit_names(s.lower, names)},
                        {"upper", bit_names(s.upper, names)}};
  j["slices"] = std::move(slices);

  j["histories"] = m.histories();
  Json gens = Json::object();
  for (const auto& g : m.generators()) {
    Json spec{{"event", bit_names(g.event, m.histories())}, {"home", g.home.name}};
    if (g.nonseparable) spec["nonseparable"] = true;
    gens[g.name] = std::move(spec);
  }
  j["generators"] = std::move(gens);

  Json measure = Json::object();
  for (std::size_t h = 0; h < m.history_count(); ++h)
    measure[m.histories()[h]] = to_string(m.measure()[h]);
  j["measure"] = std::move(measure);

  if (scen) {
    Json s;
    s["wing_a"] = scen->wing_a.name;
    s["wing_b"] = scen->wing_b.name;
    s["setting_a"] = scen->setting_a_name;
    s["setting_b"] = scen->setting_b_name;
    s["outcome_a"] = scen->outcome_a_name;
    s["outcome_b"] = scen->outcome_b_name;
    s["past"] = scen->past.describe();
    if (scen->past_partition)
      s["past_partition"] = {scen->past_partition->first.name,
                             scen->past_partition->second.name};
    j["scenario"] = std::move(s);
  }
  return j;
}

}  // namespace detail

inline LoadedModel model_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("model file must be a JSON object");
  const auto points = detail::string_list(detail::require(j, "points"), "points");
  std::vector<std::pair<std::string, std::string>> order;
  for (const auto& pair : detail::require(j, "order")) {
    if (!pair.is_array() || pair.size() != 2)
      throw InputError("order entries must be [before, after] pairs");
    order.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
  }
  CausalSite site(points, order);

  std::vector<Region> declared;
  if (j.contains("regions"))
    for (const auto& [name, pts] : j.at("regions").items())
      declared.push_back(site.make_region(name, detail::string_list(pts, "region '" + name + "'")));
  RegionUniverse universe(site, declared);

  std::map<std::string, Slice> slices;
  if (j.contains("slices"))
    for (const auto& [name, spec] : j.at("slices").items()) {
      Bits lower(site.size()), upper(site.size());
      for (const auto& p : detail::string_list(detail::require(spec, "lower"), "slice lower"))
        lower.set(site.point(p));
      for (const auto& p : detail::string_list(detail::require(spec, "upper"), "slice upper"))
        upper.set(site.point(p));
      slices.emplace(name, Slice::between(site, name, lower, upper));
    }

  const auto histories = detail::string_list(detail::require(j, "histories"), "histories");
  std::map<std::string, std::size_t> hist_index;
  for (std::size_t i = 0; i < histories.size(); ++i) hist_index[histories[i]] = i;

  std::vector<Generator> generators;
  if (j.contains("generators"))
    for (const auto& [name, spec] : j.at("generators").items()) {
      Event e(histories.size());
      for (const auto& h :
           detail::string_list(detail::require(spec, "event"), "generator '" + name + "' event")) {
        auto it = hist_index.find(h);
        if (it == hist_index.end())
          throw InputError("generator '" + name + "' references unknown history '" + h + "'");
        e.set(it->second);
      }
      const std::string home = detail::require(spec, "home").get<std::string>();
      bool nonsep = spec.contains("nonseparable") && spec.at("nonseparable").get<bool>();
      generators.push_back({name, std::move(e), universe.find(home), nonsep});
    }

  std::vector<Rational> measure(histories.size(), Rational(0));
  const Json& mj = detail::require(j, "measure");
  for (const auto& [h, v] : mj.items()) {
    auto it = hist_index.find(h);
    if (it == hist_index.end())
      throw InputError("measure references unknown history '" + h + "'");
    measure[it->second] = parse_rational(v.get<std::string>());
  }

  Model model(std::move(site), histories, std::move(universe), std::move(generators),
              std::move(measure), std::move(slices));

  std::optional<EPRBScenario> scenario;
  if (j.contains("scenario")) {
    const Json& s = j.at("scenario");
    EPRBScenario sc;
    sc.wing_a = model.universe().find(detail::require(s, "wing_a").get<std::string>());
    sc.wing_b = model.universe().find(detail::require(s, "wing_b").get<std::string>());
    sc.setting_a_name = detail::require(s, "setting_a").get<std::string>();
    sc.setting_b_name = detail::require(s, "setting_b").get<std::string>();
    sc.outcome_a_name = detail::require(s, "outcome_a").get<std::string>();
    sc.outcome_b_name = detail::require(s, "outcome_b").get<std::string>();
    sc.setting_a = model.generator(sc.setting_a_name).event;
    sc.setting_b = model.generator(sc.setting_b_name).event;
    sc.outcome_a = model.generator(sc.outcome_a_name).event;
    sc.outcome_b = model.generator(sc.outcome_b_name).event;
    sc.past = parse_past_selector(model, detail::require(s, "past").get<std::string>());
    if (s.contains("past_partition")) {
      const auto pp = detail::string_list(s.at("past_partition"), "past_partition");
      if (pp.size() != 2) throw InputError("past_partition must name two regions");
      sc.past_partition = {model.universe().find(pp[0]), model.universe().find(pp[1])};
    }
    validate_scenario(model, sc);
    scenario = std::move(sc);
  }

  LoadedModel out{std::move(model), std::move(scenario), "", ""};
  out.canonical = detail::model_to_json(out.model, out.scenario).dump(2) + "\n";
  out.digest = fnv1a_hex(out.canonical);
  return out;
}

inline LoadedModel parse_model_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("model file is not valid JSON: ") + e.what());
  }
  return model_from_json(j);
}

inline LoadedModel load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_model_text(buf.str());
}

inline std::string serialize_model(const Model& m,
                                   const std::optional<EPRBScenario>& scen = std::nullopt) {
  return detail::model_to_json(m, scen).dump(2) + "\n";
}

inline std::string model_digest(const Model& m,
                                const std::optional<EPRBScenario>& scen = std::nullopt) {
  return fnv1a_hex(serialize_model(m, scen));
}

}  // namespace bellcheck
