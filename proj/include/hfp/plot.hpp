#pragma once

#include <string>

#include "hfp/profile.hpp"

namespace hfp {

enum class PlotFormat { Svg, Ascii, Json };

PlotFormat parse_plot_format(const std::string& name);

// Renders F over [lo, hi]; output depends only on the arguments.
std::string render_profile(const GradingProfile& profile, HalfInt lo, HalfInt hi,
                           PlotFormat format);

}  // namespace hfp
