#include "hfp/plot.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <vector>

#include "hfp/error.hpp"
#include "hfp/report.hpp"

namespace hfp {

PlotFormat parse_plot_format(const std::string& name) {
  if (name == "svg") return PlotFormat::Svg;
  if (name == "ascii") return PlotFormat::Ascii;
  if (name == "json") return PlotFormat::Json;
  throw Error(ErrorCode::ParseError, "unknown plot format '" + name + "'");
}

namespace {

constexpr int kMargin = 30;
constexpr int kStepX = 10;
constexpr int kStepY = 20;

std::string render_json(const std::vector<std::pair<std::int64_t, std::int64_t>>& pts) {
  json points = json::array();
  for (auto [x2, v] : pts) points.push_back({{"x", HalfInt::from_twice(x2).to_string()}, {"F", v}});
  json doc = {{"points", points}};
  return doc.dump(2) + "\n";
}

std::string render_ascii(const std::vector<std::pair<std::int64_t, std::int64_t>>& pts, std::int64_t top,
                         std::int64_t bottom) {
  std::ostringstream out;
  std::size_t width = pts.size();
  for (std::int64_t h = top; h >= bottom; --h) {
    if (mod_pos(h, 2) == 1) out << "      " << std::string(width, '-') << "\n";
    std::string row(width, ' ');
    for (std::size_t k = 0; k < width; ++k) {
      if (pts[k].second == h) row[k] = '*';
      else if (k > 0) {
        std::int64_t a = pts[k - 1].second, b = pts[k].second;
        if ((a < h && h < b) || (b < h && h < a)) row[k] = '|';
      }
    }
    while (!row.empty() && row.back() == ' ') row.pop_back();
    out << std::setw(4) << h << " |" << row << "\n";
  }
  out << "\n    x  F(x)\n";
  for (auto [x2, v] : pts) out << std::setw(5) << HalfInt::from_twice(x2).to_string() << "  " << v << "\n";
  return out.str();
}

std::string render_svg(const std::vector<std::pair<std::int64_t, std::int64_t>>& pts, std::int64_t top,
                       std::int64_t bottom) {
  std::int64_t lo2 = pts.front().first;
  auto px = [&](std::int64_t x2) { return kMargin + kStepX * (x2 - lo2); };
  auto py = [&](std::int64_t v) { return kMargin + kStepY * (top - v); };
  std::int64_t w = 2 * kMargin + kStepX * (pts.back().first - lo2);
  std::int64_t h = 2 * kMargin + kStepY * (top - bottom);
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\" viewBox=\"0 0 "
      << w << " " << h << "\">\n";
  out << "<rect width=\"" << w << "\" height=\"" << h << "\" fill=\"white\"/>\n";
  for (std::int64_t n = bottom; n <= top; ++n) {
    if (mod_pos(n, 2) != 1) continue;
    std::int64_t y = py(n) - kStepY / 4;
    out << "<line x1=\"" << kMargin << "\" y1=\"" << y << "\" x2=\"" << w - kMargin << "\" y2=\"" << y
        << "\" stroke=\"#999\" stroke-dasharray=\"4 3\"/>\n";
    out << "<text x=\"4\" y=\"" << py(n) + 4 << "\" font-size=\"10\">" << n << "</text>\n";
  }
  out << "<polyline fill=\"none\" stroke=\"black\" points=\"";
  for (std::size_t k = 0; k < pts.size(); ++k) out << (k ? " " : "") << px(pts[k].first) << "," << py(pts[k].second);
  out << "\"/>\n";
  for (auto [x2, v] : pts) out << "<circle cx=\"" << px(x2) << "\" cy=\"" << py(v) << "\" r=\"2\"/>\n";
  for (auto [x2, v] : pts) {
    if (mod_pos(x2, 2) != 0) continue;
    out << "<text x=\"" << px(x2) - 3 << "\" y=\"" << h - 8 << "\" font-size=\"8\">" << x2 / 2 << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace

std::string render_profile(const GradingProfile& profile, HalfInt lo, HalfInt hi, PlotFormat format) {
  if (hi < lo) throw Error(ErrorCode::InvalidArgument, "plot window is empty");
  std::vector<std::pair<std::int64_t, std::int64_t>> pts;
  for (std::int64_t x2 = lo.twice(); x2 <= hi.twice(); ++x2) pts.emplace_back(x2, profile.at_twice(x2));
  std::int64_t top = pts.front().second, bottom = top;
  for (auto [x2, v] : pts) {
    top = std::max(top, v);
    bottom = std::min(bottom, v);
  }
  switch (format) {
    case PlotFormat::Json: return render_json(pts);
    case PlotFormat::Ascii: return render_ascii(pts, top, bottom);
    case PlotFormat::Svg: return render_svg(pts, top, bottom);
  }
  return {};
}

}  // namespace hfp
