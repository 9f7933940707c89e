// Standalone SVG emission for the plot outputs: path + hull renderings,
// investor graphs with their hull chains, and log-log scatters with a fitted
// line. Hand-rolled on purpose: deterministic bytes, diff-able, no plotting
// dependency.

#ifndef RANCHER_SVG_HPP
#define RANCHER_SVG_HPP

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rancher/geom.hpp"
#include "rancher/stats.hpp"

namespace rancher::svg {

struct BBox {
  double xmin = 0.0, xmax = 0.0, ymin = 0.0, ymax = 0.0;
  bool empty = true;

  void expand(Point2 p);
  void pad(double frac);
};

class Canvas {
 public:
  Canvas(int width, int height, BBox world, std::string title);

  void polyline(std::span<const Point2> pts, std::string_view color,
                double stroke_width);
  void polygon(std::span<const Point2> pts, std::string_view stroke,
               std::string_view fill, double fill_opacity);
  void circle(Point2 p, double radius_px, std::string_view color);
  void segment(Point2 a, Point2 b, std::string_view color,
               double stroke_width);
  void text(double px, double py, std::string_view s, int size_px,
            std::string_view anchor = "start");
  void comment(std::string_view s);
  void legend(
      std::span<const std::pair<std::string_view, std::string_view>> entries);
  void axes();

  std::string finish() const;

 private:
  double px(double wx) const;
  double py(double wy) const;

  int width_, height_;
  BBox world_;
  std::string title_;
  std::string body_;
};

struct PlotOptions {
  std::string title;
  std::string manifest_json;  // embedded as an XML comment when non-empty
  std::size_t max_polyline_points = 20000;  // longer paths get decimated
};

// Walk path with the final hull overlaid.
std::string render_path_plot(std::span<const Point2> path,
                             std::span<const Point2> hull,
                             const PlotOptions& opts);

// Investor graph (n, x_n) with the upper/lower hull chains as envelopes.
std::string render_graph_plot(std::span<const Point2> graph,
                              std::span<const Point2> upper,
                              std::span<const Point2> lower,
                              const PlotOptions& opts);

// log10-log10 scatter of (n, w) points with the fitted line drawn from its
// slope and intercept.
std::string render_loglog_scatter(
    std::span<const std::pair<double, double>> points,
    const RegressionFit& fit, const PlotOptions& opts);

}  // namespace rancher::svg

#endif
