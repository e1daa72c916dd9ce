#include "eigenbath/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

#include "eigenbath/errors.hpp"

namespace eigenbath {

namespace {

std::string escape_xml(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string short_number(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.4g", v);
  return buffer;
}

}  // namespace

void write_svg(const std::filesystem::path& path, const Plot& plot) {
  double x_min = std::numeric_limits<double>::infinity();
  double x_max = -x_min, y_min = x_min, y_max = -x_min;
  for (const auto& s : plot.series)
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      x_min = std::min(x_min, s.x[i]);
      x_max = std::max(x_max, s.x[i]);
      y_min = std::min(y_min, s.y[i]);
      y_max = std::max(y_max, s.y[i]);
    }
  if (!std::isfinite(x_min)) { x_min = 0; x_max = 1; y_min = 0; y_max = 1; }
  for (const auto& s : plot.series)
    if (s.kind == PlotSeries::Kind::bars) y_min = std::min(y_min, 0.0);
  if (x_max == x_min) x_max = x_min + 1;
  if (y_max == y_min) y_max = y_min + 1;
  const double y_pad = 0.05 * (y_max - y_min);
  y_max += y_pad;
  if (y_min != 0.0) y_min -= y_pad;

  const double ml = 64, mr = 16, mt = 36, mb = 48;
  const double pw = plot.width - ml - mr;
  const double ph = plot.height - mt - mb;
  auto px = [&](double x) { return ml + (x - x_min) / (x_max - x_min) * pw; };
  auto py = [&](double y) {
    return mt + ph - (y - y_min) / (y_max - y_min) * ph;
  };

  if (path.has_parent_path())
    std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path.string());
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << plot.width
      << "\" height=\"" << plot.height << "\" viewBox=\"0 0 " << plot.width
      << ' ' << plot.height << "\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << plot.width << "\" height=\""
      << plot.height << "\" fill=\"white\"/>\n";

  for (const auto& s : plot.series) {
    if (s.kind == PlotSeries::Kind::bars) {
      const double w = s.bar_width > 0
                           ? s.bar_width
                           : (s.x.size() > 1 ? s.x[1] - s.x[0] : 1.0);
      for (std::size_t i = 0; i < s.x.size(); ++i) {
        const double x0 = px(s.x[i] - 0.5 * w);
        const double x1 = px(s.x[i] + 0.5 * w);
        const double y0 = py(std::max(0.0, s.y[i]));
        const double y1 = py(std::min(0.0, s.y[i]));
        out << "<rect x=\"" << short_number(x0) << "\" y=\""
            << short_number(y0) << "\" width=\"" << short_number(x1 - x0)
            << "\" height=\"" << short_number(std::max(0.1, y1 - y0))
            << "\" fill=\"" << s.color << "\" fill-opacity=\"0.7\"/>\n";
      }
    } else {
      out << "<polyline fill=\"none\" stroke=\"" << s.color
          << "\" stroke-width=\"1.5\" points=\"";
      for (std::size_t i = 0; i < s.x.size(); ++i) {
        if (i) out << ' ';
        out << short_number(px(s.x[i])) << ',' << short_number(py(s.y[i]));
      }
      out << "\"/>\n";
    }
  }

  // Frame and ticks.
  out << "<rect x=\"" << ml << "\" y=\"" << mt << "\" width=\"" << pw
      << "\" height=\"" << ph
      << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
  const int n_ticks = 5;
  for (int i = 0; i <= n_ticks; ++i) {
    const double fx = x_min + (x_max - x_min) * i / n_ticks;
    const double fy = y_min + (y_max - y_min) * i / n_ticks;
    out << "<line x1=\"" << short_number(px(fx)) << "\" y1=\"" << mt + ph
        << "\" x2=\"" << short_number(px(fx)) << "\" y2=\"" << mt + ph + 4
        << "\" stroke=\"black\"/>\n"
        << "<text x=\"" << short_number(px(fx)) << "\" y=\"" << mt + ph + 18
        << "\" font-size=\"11\" text-anchor=\"middle\">"
        << escape_xml(short_number(fx)) << "</text>\n"
        << "<line x1=\"" << ml - 4 << "\" y1=\"" << short_number(py(fy))
        << "\" x2=\"" << ml << "\" y2=\"" << short_number(py(fy))
        << "\" stroke=\"black\"/>\n"
        << "<text x=\"" << ml - 8 << "\" y=\"" << short_number(py(fy) + 4)
        << "\" font-size=\"11\" text-anchor=\"end\">"
        << escape_xml(short_number(fy)) << "</text>\n";
  }

  out << "<text x=\"" << plot.width / 2 << "\" y=\"20\" font-size=\"14\" "
      << "text-anchor=\"middle\">" << escape_xml(plot.title) << "</text>\n"
      << "<text x=\"" << plot.width / 2 << "\" y=\"" << plot.height - 10
      << "\" font-size=\"12\" text-anchor=\"middle\">"
      << escape_xml(plot.x_label) << "</text>\n"
      << "<text x=\"16\" y=\"" << mt + ph / 2
      << "\" font-size=\"12\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
      << mt + ph / 2 << ")\">" << escape_xml(plot.y_label) << "</text>\n"
      << "</svg>\n";
  if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace eigenbath
