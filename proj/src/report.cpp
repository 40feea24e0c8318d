#include "hfp/report.hpp"

#include <fstream>
#include <sstream>

#include "hfp/error.hpp"

namespace hfp {

SeifertInput input_from_json(const nlohmann::json& doc) {
  SeifertInput in;
  try {
    if (!doc.is_object()) throw Error(ErrorCode::ParseError, "input must be a JSON object");
    in.base_genus = doc.at("base_genus").get<std::int64_t>();
    for (const auto& f : doc.at("fibers")) {
      if (!f.is_array() || f.size() != 2) throw Error(ErrorCode::ParseError, "each fiber must be [p, q]");
      in.fibers.push_back({f[0].get<std::int64_t>(), f[1].get<std::int64_t>()});
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  return in;
}

SeifertInput load_input(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::stringstream buf;
  buf << file.rdbuf();
  nlohmann::json doc = nlohmann::json::parse(buf.str(), nullptr, false);
  if (doc.is_discarded()) throw Error(ErrorCode::ParseError, path + " is not valid JSON");
  return input_from_json(doc);
}

json to_json(const Rational& r) { return r.to_string(); }

json to_json(const SeifertInput& input) {
  json fibers = json::array();
  for (const auto& f : input.fibers) fibers.push_back({f.p, f.q});
  return {{"base_genus", input.base_genus}, {"fibers", fibers}};
}

json to_json(const SeifertSummary& s) {
  return {{"d", s.order_d}, {"g_sigma", s.fiber_genus}, {"num_fibers", s.num_fibers}, {"base_genus", s.base_genus()}};
}

json to_json(const SpincLabel& label) { return format_label(label); }

json to_json(const SpincClass& cls) {
  return {{"label", format_label(cls.canonical)},
          {"sl", to_json(cls.sl_value)},
          {"epsilon", to_json(cls.epsilon_value)},
          {"chern_pairing", to_json(cls.chern_pairing)},
          {"torsion", cls.torsion()}};
}

json to_json(const GradingProfile& p) {
  json out = {{"period", p.period},
              {"eta_period", p.eta_period},
              {"spike", p.spike},
              {"slope_per_unit", to_json(p.slope_per_unit)},
              {"anchor", p.anchor},
              {"rise_per_period", p.rise_per_period}};
  auto b = least_even_upper_bound(p);
  out["b_A"] = b ? json(*b) : json("infinity");
  return out;
}

json to_json(const Well& w) {
  json out = {{"left", w.left.to_string()}, {"right", w.right.to_string()}, {"height", w.height}};
  if (w.boundary) out["boundary"] = true;
  return out;
}

json to_json(const WellGroup& g) {
  json wells = json::array();
  for (const auto& w : g.wells) wells.push_back(to_json(w));
  json u = json::array();
  for (const auto& e : g.u_matrix) {
    json entry = {{"from", e.from}, {"to", e.to}};
    if (g.periodic) entry["t_power"] = e.t_power;
    u.push_back(entry);
  }
  return {{"periodic", g.periodic},
          {"wells", wells},
          {"u_incidence", u},
          {"t_shift", {{"period", g.t_shift.period}, {"height_delta", g.t_shift.height_delta}}}};
}

json to_json(const CountTable& t) {
  json b = json::object();
  for (const auto& [k, n] : t.b_counts) b[std::to_string(k)] = n;
  return {{"level", t.level}, {"a_rank", t.a_rank}, {"b_counts", b}};
}

json to_json(const OmegaToken& t) {
  return {{"genus", t.genus}, {"index", t.index}, {"grading", t.grading}, {"position", t.position}};
}

json to_json(const HFDescription& hf) {
  json out = {{"class", format_label(hf.cls.canonical)},
              {"sl", to_json(hf.cls.sl_value)},
              {"epsilon", to_json(hf.cls.epsilon_value)},
              {"chern_pairing", to_json(hf.cls.chern_pairing)}};
  json tower = nullptr;
  if (hf.tower) tower = {{"bottom_grading", hf.tower->bottom_grading}};
  out["tower"] = tower;
  json omegas = json::array();
  for (const auto& t : hf.omega_summands) omegas.push_back(to_json(t));
  out["omegas"] = omegas;
  json group = to_json(hf.well_part);
  out["wells"] = group["wells"];
  out["u_incidence"] = group["u_incidence"];
  out["t_shift"] = group["t_shift"];
  CountTable per_class;
  per_class.level = hf.cls.epsilon_value.is_integer() ? hf.cls.epsilon_value.num() : 0;
  per_class.a_rank = hf.well_part.wells.size();
  for (const auto& t : hf.omega_summands) ++per_class.b_counts[t.index];
  out["totals"] = to_json(per_class);
  out["coefficient_ring"] = hf.coefficient_ring_tag;
  out["split_over_ZU"] = hf.split_over_ZU;
  return out;
}

json to_json(const LevelSummary& level) {
  json classes = json::array();
  for (const auto& hf : level.classes) classes.push_back(to_json(hf));
  return {{"level", level.level},
          {"classes", classes},
          {"totals", to_json(level.totals)},
          {"annotations", level.annotations}};
}

json to_json(const OracleReport& r) {
  json levels = json::array();
  for (const auto& v : r.levels)
    levels.push_back({{"level", v.level},
                      {"oracle_rank", v.stable_rank},
                      {"predicted_rank", v.predicted_stable},
                      {"truncated_rank", v.raw_rank},
                      {"predicted_truncated_rank", v.predicted_raw},
                      {"well_count", v.well_count},
                      {"verdict", v.match ? "match" : "mismatch"}});
  return {{"eta_string", r.eta_string},
          {"periods", r.periods},
          {"page_window", {r.p_min, r.p_max}},
          {"delta", r.delta},
          {"stable_delta", r.stable_delta},
          {"band", r.band},
          {"window_converged", r.window_converged},
          {"levels", levels},
          {"verdict", r.all_match ? "match" : "mismatch"}};
}

json envelope(const std::string& command, const SeifertInput& input, json result) {
  return {{"version", kVersion}, {"command", command}, {"input", to_json(input)}, {"result", std::move(result)}};
}

}  // namespace hfp
