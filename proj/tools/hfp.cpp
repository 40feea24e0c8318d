#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <string>

#include "hfp/book.hpp"
#include "hfp/counting.hpp"
#include "hfp/error.hpp"
#include "hfp/hf.hpp"
#include "hfp/plot.hpp"
#include "hfp/regress.hpp"
#include "hfp/report.hpp"

using namespace hfp;

namespace {

struct Flags {
  std::string input;
  std::string label;
  std::optional<std::int64_t> epsilon;
  std::string window;
  std::int64_t power = 1;
  std::optional<std::int64_t> periods;
  std::optional<std::int64_t> delta;
  std::string format = "ascii";
};

std::pair<HalfInt, HalfInt> parse_window(const std::string& text) {
  auto colon = text.find(':', 1);
  if (colon == std::string::npos) throw Error(ErrorCode::ParseError, "window needs lo:hi");
  HalfInt lo = HalfInt::from_rational(Rational::parse(text.substr(0, colon)));
  HalfInt hi = HalfInt::from_rational(Rational::parse(text.substr(colon + 1)));
  if (hi < lo) throw Error(ErrorCode::ParseError, "window has hi < lo");
  return {lo, hi};
}

SpincClass require_class(const SeifertSummary& s, const Flags& f) {
  if (f.label.empty()) throw Error(ErrorCode::InvalidArgument, "--A <Q;r1,...,rn> is required");
  return canonicalize(s, parse_label(f.label));
}

std::int64_t require_epsilon(const Flags& f) {
  if (!f.epsilon) throw Error(ErrorCode::InvalidArgument, "--epsilon <int> is required");
  return *f.epsilon;
}

void print(const json& doc) { std::cout << doc.dump(2) << "\n"; }

int run(const std::string& command, const Flags& f) {
  if (command == "regress") {
    auto results = run_fixtures(default_fixtures());
    json doc = {{"version", kVersion}, {"command", command}, {"result", to_json(results)}};
    print(doc);
    for (const auto& r : results)
      if (!r.passed) return 4;
    return 0;
  }
  SeifertInput input = load_input(f.input);
  SeifertSummary s = validate_and_derive(input);
  if (command == "info") {
    print(envelope(command, input, to_json(s)));
  } else if (command == "spinc") {
    json result;
    if (!f.label.empty()) {
      result = to_json(require_class(s, f));
    } else {
      result = json::array();
      for (const auto& cls : enumerate_classes_at_level(s, require_epsilon(f))) result.push_back(to_json(cls));
    }
    print(envelope(command, input, result));
  } else if (command == "profile") {
    GradingProfile p = build_profile(s, require_class(s, f));
    json result = to_json(p);
    if (!f.window.empty()) {
      auto [lo, hi] = parse_window(f.window);
      json samples = json::array();
      for (std::int64_t x2 = lo.twice(); x2 <= hi.twice(); ++x2)
        samples.push_back({{"x", HalfInt::from_twice(x2).to_string()}, {"F", p.at_twice(x2)}});
      result["samples"] = samples;
    }
    print(envelope(command, input, result));
  } else if (command == "wells") {
    GradingProfile p = build_profile(s, require_class(s, f));
    WellGroup group;
    if (f.window.empty()) {
      group = period_wells(p);
    } else {
      auto [lo, hi] = parse_window(f.window);
      group = window_wells(p, lo, hi);
      group.u_matrix = u_action(p, group);
    }
    print(envelope(command, input, to_json(group)));
  } else if (command == "hf") {
    print(envelope(command, input, to_json(assemble_hf(s, require_class(s, f)))));
  } else if (command == "level") {
    print(envelope(command, input, to_json(aggregate_level(s, require_epsilon(f)))));
  } else if (command == "lefschetz") {
    print(envelope(command, input, {{"power", f.power}, {"lefschetz", lefschetz(s, f.power)}}));
  } else if (command == "oracle") {
    OracleReport r = compare_with_closed_form(s, require_class(s, f), {f.periods, f.delta});
    print(envelope(command, input, to_json(r)));
    return r.all_match ? 0 : 3;
  } else if (command == "plot") {
    GradingProfile p = build_profile(s, require_class(s, f));
    auto [lo, hi] = f.window.empty() ? std::make_pair(HalfInt::integer(0), HalfInt::integer(p.period))
                                     : parse_window(f.window);
    std::cout << render_profile(p, lo, hi, parse_plot_format(f.format));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Heegaard Floer homology of zero-surgeries on periodic mapping tori"};
  app.require_subcommand(1);
  Flags f;
  const char* commands[][2] = {
      {"info", "d and fiber genus"},
      {"spinc", "canonical class of --A, or all classes at --epsilon"},
      {"profile", "grading profile of --A"},
      {"wells", "wells and U incidence of --A (one period, or --window)"},
      {"hf", "HF+ description for --A"},
      {"level", "aggregate over the classes at --epsilon"},
      {"lefschetz", "fixed points of phi^--power"},
      {"oracle", "book homology against the closed form for --A (g = 0)"},
      {"plot", "render the profile of --A over --window"},
      {"regress", "run the golden fixtures"},
  };
  for (auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    if (std::string(name) != "regress") sub->add_option("input", f.input, "input JSON file")->required();
    sub->add_option("--A", f.label, "class label Q;r1,...,rn")->allow_extra_args(false);
    sub->add_option("--epsilon", f.epsilon, "level");
    sub->add_option("--window", f.window, "lo:hi");
    sub->add_option("--power", f.power, "power of phi");
    sub->add_option("--periods", f.periods, "page window in periods");
    sub->add_option("--delta", f.delta, "U truncation");
    sub->add_option("--format", f.format, "svg, ascii or json");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  std::string command = app.get_subcommands().front()->get_name();
  try {
    return run(command, f);
  } catch (const Error& e) {
    json err = {{"error", std::string(to_string(e.code()))}, {"message", e.what()}};
    std::cerr << err.dump() << "\n";
    return e.code() == ErrorCode::ParseError ? 1 : 2;
  }
}
