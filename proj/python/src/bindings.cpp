#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "hfp/book.hpp"
#include "hfp/counting.hpp"
#include "hfp/error.hpp"
#include "hfp/hf.hpp"
#include "hfp/plot.hpp"
#include "hfp/regress.hpp"
#include "hfp/report.hpp"

namespace py = pybind11;
using namespace hfp;

namespace {

struct Loaded {
  SeifertInput input;
  SeifertSummary summary;
};

Loaded load(const std::string& input_json) {
  nlohmann::json doc = nlohmann::json::parse(input_json, nullptr, false);
  if (doc.is_discarded()) throw Error(ErrorCode::ParseError, "input is not valid JSON");
  SeifertInput in = input_from_json(doc);
  return {in, validate_and_derive(in)};
}

SpincClass cls(const Loaded& l, const std::string& label) { return canonicalize(l.summary, parse_label(label)); }

std::string wrap(const char* command, const Loaded& l, json result) {
  return envelope(command, l.input, std::move(result)).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "closed-form HF+ of zero-surgeries on periodic mapping tori";
  m.attr("version") = kVersion;

  static py::exception<Error> error(m, "HfpError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, (std::string(to_string(e.code())) + "|" + e.what()).c_str());
    }
  });

  m.def("info", [](const std::string& in) {
    auto l = load(in);
    return wrap("info", l, to_json(l.summary));
  });
  m.def("spinc", [](const std::string& in, const std::string& label) {
    auto l = load(in);
    return wrap("spinc", l, to_json(cls(l, label)));
  });
  m.def("classes_at_level", [](const std::string& in, std::int64_t level) {
    auto l = load(in);
    json out = json::array();
    for (const auto& c : enumerate_classes_at_level(l.summary, level)) out.push_back(to_json(c));
    return wrap("spinc", l, out);
  });
  m.def("profile", [](const std::string& in, const std::string& label) {
    auto l = load(in);
    return wrap("profile", l, to_json(build_profile(l.summary, cls(l, label))));
  });
  m.def("wells", [](const std::string& in, const std::string& label) {
    auto l = load(in);
    return wrap("wells", l, to_json(period_wells(build_profile(l.summary, cls(l, label)))));
  });
  m.def("hf", [](const std::string& in, const std::string& label) {
    auto l = load(in);
    return wrap("hf", l, to_json(assemble_hf(l.summary, cls(l, label))));
  });
  m.def("level", [](const std::string& in, std::int64_t level) {
    auto l = load(in);
    return wrap("level", l, to_json(aggregate_level(l.summary, level)));
  });
  m.def("count_N", [](const std::string& in, std::int64_t D, std::int64_t E) {
    return count_N(load(in).summary, D, E);
  });
  m.def("lefschetz", [](const std::string& in, std::int64_t power) { return lefschetz(load(in).summary, power); },
        py::arg("input"), py::arg("power") = 1);
  m.def(
      "oracle",
      [](const std::string& in, const std::string& label, std::optional<std::int64_t> periods,
         std::optional<std::int64_t> delta) {
        auto l = load(in);
        return wrap("oracle", l, to_json(compare_with_closed_form(l.summary, cls(l, label), {periods, delta})));
      },
      py::arg("input"), py::arg("label"), py::arg("periods") = py::none(), py::arg("delta") = py::none());
  m.def("plot", [](const std::string& in, const std::string& label, const std::string& lo, const std::string& hi,
                   const std::string& format) {
    auto l = load(in);
    return render_profile(build_profile(l.summary, cls(l, label)), HalfInt::from_rational(Rational::parse(lo)),
                          HalfInt::from_rational(Rational::parse(hi)), parse_plot_format(format));
  });
  m.def("regress", [] { return to_json(run_fixtures(default_fixtures())).dump(); });
}
