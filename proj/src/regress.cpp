#include "hfp/regress.hpp"

#include <algorithm>

#include "hfp/counting.hpp"
#include "hfp/error.hpp"
#include "hfp/hf.hpp"

namespace hfp {

namespace {

SeifertSummary example(std::int64_t g) { return validate_and_derive({g, {{2, 1}, {7, 3}, {14, 1}}}); }

json level_digest(const SeifertSummary& s, std::int64_t level) {
  LevelSummary sum = aggregate_level(s, level);
  json classes = json::array();
  for (const auto& hf : sum.classes) {
    std::vector<std::int64_t> heights;
    for (const auto& w : hf.well_part.wells) heights.push_back(w.height);
    classes.push_back({{"class", format_label(hf.cls.canonical)},
                       {"wells", hf.well_part.wells.size()},
                       {"tower", hf.tower.has_value()},
                       {"t_shift", {hf.well_part.t_shift.period, hf.well_part.t_shift.height_delta}}});
  }
  return {{"a_rank", sum.totals.a_rank}, {"classes", classes}};
}

// Well heights and tower bottom relative to the lowest well.
json relative_gradings(const SeifertSummary& s, const std::string& label) {
  HFDescription hf = assemble_hf(s, canonicalize(s, parse_label(label)));
  std::vector<std::int64_t> heights;
  for (const auto& w : hf.well_part.wells) heights.push_back(w.height);
  std::sort(heights.begin(), heights.end());
  std::int64_t base = heights.empty() ? 0 : heights.front();
  for (auto& h : heights) h -= base;
  json out = {{"wells", heights}};
  out["tower"] = hf.tower ? json(hf.tower->bottom_grading - base) : json(nullptr);
  return out;
}

json omega_gradings(const SeifertSummary& s, std::int64_t level) {
  std::vector<json> out;
  for (const auto& hf : aggregate_level(s, level).classes)
    for (const auto& t : hf.omega_summands) out.push_back({t.index, t.grading});
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t nine_well_case(const SeifertSummary& s) {
  HFDescription hf = assemble_hf(s, canonicalize(s, parse_label("-1;0,0,0")));
  std::size_t best = 0;
  for (std::size_t k = 0; k < hf.well_part.wells.size(); ++k) {
    if (hf.well_part.wells[k].height != 7) continue;
    std::size_t n = std::count_if(hf.well_part.u_matrix.begin(), hf.well_part.u_matrix.end(),
                                  [&](const UEntry& e) { return e.from == k; });
    best = std::max(best, n);
  }
  return static_cast<std::int64_t>(best);
}

}  // namespace

std::vector<Fixture> default_fixtures() {
  std::vector<Fixture> f;
  f.push_back({"example.summary", [] { return to_json(example(0)); },
               {{"d", 14}, {"g_sigma", 3}, {"num_fibers", 3}, {"base_genus", 0}}});
  const std::int64_t ranks[] = {1, 1, 2, 1, 1};
  for (std::int64_t e = 0; e <= 4; ++e)
    f.push_back({"example.level" + std::to_string(e) + ".a_rank",
                 [e] { return json(rank_table(example(0), e).a_rank); }, ranks[e]});
  for (std::int64_t e : {-1, 5})
    f.push_back({"example.level" + std::to_string(e) + ".trivial",
                 [e] { return json(aggregate_level(example(0), e).totals.a_rank); }, 0});
  f.push_back({"example.level0.classes", [] { return level_digest(example(0), 0); },
               json::parse(R"({"a_rank":1,"classes":[{"class":"-1;0,0,0","wells":1,"tower":false,"t_shift":[14,4]}]})")});
  f.push_back({"example.level1.classes", [] { return level_digest(example(0), 1); },
               json::parse(R"({"a_rank":1,"classes":[{"class":"-2;0,0,13","wells":1,"tower":false,"t_shift":[14,2]}]})")});
  f.push_back({"example.level2.classes", [] { return level_digest(example(0), 2); },
               json::parse(R"({"a_rank":2,"classes":[{"class":"-2;0,0,12","wells":2,"tower":true,"t_shift":[14,0]}]})")});
  f.push_back({"example.level3.classes", [] { return level_digest(example(0), 3); },
               json::parse(R"({"a_rank":1,"classes":[{"class":"-2;0,0,11","wells":1,"tower":false,"t_shift":[14,-2]}]})")});
  f.push_back({"example.level4.classes", [] { return level_digest(example(0), 4); },
               json::parse(R"({"a_rank":1,"classes":[{"class":"-2;0,0,10","wells":1,"tower":false,"t_shift":[14,-4]}]})")});
  f.push_back({"example.level2.relative_gradings", [] { return relative_gradings(example(0), "-2;0,0,12"); },
               {{"wells", {0, 2}}, {"tower", 5}}});
  f.push_back({"example.lefschetz",
               [] {
                 auto s = example(0);
                 return json{lefschetz(s, 1), lefschetz(s, 2), predicted_level_two_rank(s)};
               },
               {1, 2, 2}});
  f.push_back({"example.oracle",
               [] {
                 auto s = example(0);
                 auto r = compare_with_closed_form(s, canonicalize(s, parse_label("-1;0,0,0")));
                 json odd = json::array();
                 for (const auto& v : r.levels)
                   if (v.stable_rank != 0) odd.push_back({v.level, v.stable_rank});
                 return json{{"verdict", r.all_match}, {"nonzero", odd}};
               },
               json::parse(R"({"verdict":true,"nonzero":[[-15,1],[-11,1],[-7,1],[-3,1],[1,1],[5,1],[9,1],[13,1],[17,1],[21,1],[25,1]]})")});
  f.push_back({"genus1.level14", [] { return to_json(rank_table(example(1), 14)); },
               {{"level", 14}, {"a_rank", 11}, {"b_counts", {{"1", 10}}}}});
  f.push_back({"genus1.level14.omegas", [] { return omega_gradings(example(1), 14); },
               json::parse("[[1,1],[1,1],[1,1],[1,1],[1,1],[1,1],[1,1],[1,1],[1,3],[1,5]]")});
  f.push_back({"genus2.level28", [] { return to_json(rank_table(example(2), 28)); },
               {{"level", 28}, {"a_rank", 15}, {"b_counts", {{"1", 1}, {"2", 10}, {"3", 3}}}}});
  f.push_back({"genus2.level28.omegas", [] { return omega_gradings(example(2), 28); },
               json::parse("[[1,7],[2,2],[2,2],[2,2],[2,2],[2,2],[2,2],[2,2],[2,2],[2,4],[2,6],[3,3],[3,5],[3,7]]")});
  f.push_back({"genus2.height7.u_image", [] { return json(nine_well_case(example(2))); }, 9});
  return f;
}

std::vector<FixtureResult> run_fixtures(const std::vector<Fixture>& fixtures) {
  std::vector<FixtureResult> out;
  for (const auto& f : fixtures) {
    FixtureResult r;
    r.name = f.name;
    r.expected = f.expected;
    try {
      r.observed = f.compute();
      r.passed = r.observed == r.expected;
    } catch (const std::exception& e) {
      r.error = e.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

json to_json(const std::vector<FixtureResult>& results) {
  json list = json::array();
  std::size_t failed = 0;
  for (const auto& r : results) {
    json entry = {{"name", r.name}, {"passed", r.passed}};
    if (!r.passed) {
      entry["expected"] = r.expected;
      entry["observed"] = r.observed;
      if (!r.error.empty()) entry["error"] = r.error;
      ++failed;
    }
    list.push_back(entry);
  }
  return {{"fixtures", list}, {"total", results.size()}, {"failed", failed}};
}

}  // namespace hfp
