#pragma once

#include <json.hpp>
#include <string>

#include "hfp/book.hpp"
#include "hfp/counting.hpp"
#include "hfp/hf.hpp"
#include "hfp/profile.hpp"
#include "hfp/seifert.hpp"
#include "hfp/spinc.hpp"
#include "hfp/wells.hpp"

namespace hfp {

using json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "hfperiodic 0.1.0";

SeifertInput input_from_json(const nlohmann::json& doc);
SeifertInput load_input(const std::string& path);

json to_json(const Rational& r);
json to_json(const SeifertInput& input);
json to_json(const SeifertSummary& s);
json to_json(const SpincLabel& label);
json to_json(const SpincClass& cls);
json to_json(const GradingProfile& profile);
json to_json(const Well& w);
json to_json(const WellGroup& group);
json to_json(const CountTable& table);
json to_json(const OmegaToken& token);
json to_json(const HFDescription& hf);
json to_json(const LevelSummary& level);
json to_json(const OracleReport& report);

// {"version", "command", "input", "result"}
json envelope(const std::string& command, const SeifertInput& input, json result);

}  // namespace hfp
