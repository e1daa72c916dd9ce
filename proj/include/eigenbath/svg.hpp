#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace eigenbath {

// Minimal self-contained SVG renderings: the CSV carries the data, the SVG
// is a convenience view.
struct PlotSeries {
  enum class Kind { line, bars };
  Kind kind = Kind::line;
  std::vector<double> x;
  std::vector<double> y;
  std::string color = "#1f6fb2";
  double bar_width = 0.0;  // x units; bars only
};

struct Plot {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<PlotSeries> series;
  int width = 720;
  int height = 480;
};

void write_svg(const std::filesystem::path& path, const Plot& plot);

}  // namespace eigenbath
