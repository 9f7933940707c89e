#include "rancher/svg.hpp"

#include <algorithm>
#include <cmath>

#include "rancher/io.hpp"

namespace rancher::svg {

namespace {

constexpr int kMarginLeft = 64;
constexpr int kMarginRight = 20;
constexpr int kMarginTop = 36;
constexpr int kMarginBottom = 48;

std::string fmt(double v) {
  // Pixel coordinates rounded to centipixels keep files small and bytes
  // deterministic.
  return format_double(std::round(v * 100.0) / 100.0);
}

std::vector<double> nice_ticks(double lo, double hi, int target = 6) {
  std::vector<double> out;
  if (!(hi > lo)) return out;
  const double raw = (hi - lo) / target;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  const double norm = raw / mag;
  const double step =
      mag * (norm < 1.5 ? 1.0 : norm < 3.5 ? 2.0 : norm < 7.5 ? 5.0 : 10.0);
  double t = std::ceil(lo / step) * step;
  for (; t <= hi + step * 1e-9; t += step) {
    out.push_back(std::fabs(t) < step * 1e-9 ? 0.0 : t);
  }
  return out;
}

std::vector<Point2> decimate(std::span<const Point2> pts, std::size_t cap) {
  std::vector<Point2> out;
  if (pts.size() <= cap) {
    out.assign(pts.begin(), pts.end());
    return out;
  }
  const std::size_t stride = (pts.size() + cap - 1) / cap;
  for (std::size_t i = 0; i < pts.size(); i += stride) out.push_back(pts[i]);
  if (!(out.back() == pts.back())) out.push_back(pts.back());
  return out;
}

}  // namespace

void BBox::expand(Point2 p) {
  if (empty) {
    xmin = xmax = p.x;
    ymin = ymax = p.y;
    empty = false;
    return;
  }
  xmin = std::min(xmin, p.x);
  xmax = std::max(xmax, p.x);
  ymin = std::min(ymin, p.y);
  ymax = std::max(ymax, p.y);
}

void BBox::pad(double frac) {
  if (empty) {
    // Unit box so an empty dataset still renders axes.
    xmin = 0.0;
    xmax = 1.0;
    ymin = 0.0;
    ymax = 1.0;
    empty = false;
    return;
  }
  double dx = (xmax - xmin) * frac;
  double dy = (ymax - ymin) * frac;
  if (dx == 0.0) dx = std::max(1.0, std::fabs(xmax)) * frac;
  if (dy == 0.0) dy = std::max(1.0, std::fabs(ymax)) * frac;
  xmin -= dx;
  xmax += dx;
  ymin -= dy;
  ymax += dy;
}

Canvas::Canvas(int width, int height, BBox world, std::string title)
    : width_(width), height_(height), world_(world), title_(std::move(title)) {
  if (world_.empty || !(world_.xmax > world_.xmin) ||
      !(world_.ymax > world_.ymin)) {
    world_ = BBox{};
    world_.pad(0.05);
  }
}

double Canvas::px(double wx) const {
  const double f = (wx - world_.xmin) / (world_.xmax - world_.xmin);
  return kMarginLeft + f * (width_ - kMarginLeft - kMarginRight);
}

double Canvas::py(double wy) const {
  const double f = (wy - world_.ymin) / (world_.ymax - world_.ymin);
  return height_ - kMarginBottom - f * (height_ - kMarginTop - kMarginBottom);
}

void Canvas::polyline(std::span<const Point2> pts, std::string_view color,
                      double stroke_width) {
  if (pts.size() < 2) return;
  body_ += "<polyline fill=\"none\" stroke=\"";
  body_ += color;
  body_ += "\" stroke-width=\"" + fmt(stroke_width) + "\" points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) body_ += ' ';
    body_ += fmt(px(pts[i].x)) + ',' + fmt(py(pts[i].y));
  }
  body_ += "\"/>\n";
}

void Canvas::polygon(std::span<const Point2> pts, std::string_view stroke,
                     std::string_view fill, double fill_opacity) {
  if (pts.size() < 2) return;
  body_ += "<polygon stroke=\"";
  body_ += stroke;
  body_ += "\" fill=\"";
  body_ += fill;
  body_ += "\" fill-opacity=\"" + fmt(fill_opacity) + "\" points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) body_ += ' ';
    body_ += fmt(px(pts[i].x)) + ',' + fmt(py(pts[i].y));
  }
  body_ += "\"/>\n";
}

void Canvas::circle(Point2 p, double radius_px, std::string_view color) {
  body_ += "<circle cx=\"" + fmt(px(p.x)) + "\" cy=\"" + fmt(py(p.y)) +
           "\" r=\"" + fmt(radius_px) + "\" fill=\"";
  body_ += color;
  body_ += "\"/>\n";
}

void Canvas::segment(Point2 a, Point2 b, std::string_view color,
                     double stroke_width) {
  body_ += "<line x1=\"" + fmt(px(a.x)) + "\" y1=\"" + fmt(py(a.y)) +
           "\" x2=\"" + fmt(px(b.x)) + "\" y2=\"" + fmt(py(b.y)) +
           "\" stroke=\"";
  body_ += color;
  body_ += "\" stroke-width=\"" + fmt(stroke_width) + "\"/>\n";
}

void Canvas::text(double x, double y, std::string_view s, int size_px,
                  std::string_view anchor) {
  body_ += "<text x=\"" + fmt(x) + "\" y=\"" + fmt(y) + "\" font-size=\"" +
           std::to_string(size_px) +
           "\" font-family=\"monospace\" text-anchor=\"";
  body_ += anchor;
  body_ += "\">";
  for (char c : s) {
    switch (c) {
      case '<': body_ += "&lt;"; break;
      case '>': body_ += "&gt;"; break;
      case '&': body_ += "&amp;"; break;
      default: body_ += c;
    }
  }
  body_ += "</text>\n";
}

void Canvas::comment(std::string_view s) {
  std::string safe(s);
  std::size_t pos = 0;
  while ((pos = safe.find("--", pos)) != std::string::npos) {
    safe.replace(pos, 2, "- -");
  }
  body_ += "<!-- " + safe + " -->\n";
}

void Canvas::legend(
    std::span<const std::pair<std::string_view, std::string_view>> entries) {
  double y = kMarginTop + 14.0;
  for (const auto& [label, color] : entries) {
    body_ += "<line x1=\"" + fmt(kMarginLeft + 10) + "\" y1=\"" + fmt(y - 4) +
             "\" x2=\"" + fmt(kMarginLeft + 34) + "\" y2=\"" + fmt(y - 4) +
             "\" stroke=\"";
    body_ += color;
    body_ += "\" stroke-width=\"2\"/>\n";
    text(kMarginLeft + 40.0, y, label, 11);
    y += 16.0;
  }
}

void Canvas::axes() {
  const double x0 = kMarginLeft, x1 = width_ - kMarginRight;
  const double y0 = height_ - kMarginBottom, y1 = kMarginTop;
  body_ += "<rect x=\"" + fmt(x0) + "\" y=\"" + fmt(y1) + "\" width=\"" +
           fmt(x1 - x0) + "\" height=\"" + fmt(y0 - y1) +
           "\" fill=\"none\" stroke=\"#444\" stroke-width=\"1\"/>\n";
  for (double t : nice_ticks(world_.xmin, world_.xmax)) {
    const double x = px(t);
    body_ += "<line x1=\"" + fmt(x) + "\" y1=\"" + fmt(y0) + "\" x2=\"" +
             fmt(x) + "\" y2=\"" + fmt(y0 + 5) +
             "\" stroke=\"#444\" stroke-width=\"1\"/>\n";
    text(x, y0 + 18, format_double(t), 11, "middle");
  }
  for (double t : nice_ticks(world_.ymin, world_.ymax)) {
    const double y = py(t);
    body_ += "<line x1=\"" + fmt(x0 - 5) + "\" y1=\"" + fmt(y) + "\" x2=\"" +
             fmt(x0) + "\" y2=\"" + fmt(y) +
             "\" stroke=\"#444\" stroke-width=\"1\"/>\n";
    text(x0 - 8, y + 4, format_double(t), 11, "end");
  }
  if (!title_.empty()) {
    text(width_ / 2.0, kMarginTop - 12.0, title_, 13, "middle");
  }
}

std::string Canvas::finish() const {
  std::string out =
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
      std::to_string(width_) + "\" height=\"" + std::to_string(height_) +
      "\" viewBox=\"0 0 " + std::to_string(width_) + " " +
      std::to_string(height_) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += body_;
  out += "</svg>\n";
  return out;
}

std::string render_path_plot(std::span<const Point2> path,
                             std::span<const Point2> hull,
                             const PlotOptions& opts) {
  BBox box;
  for (const Point2& p : path) box.expand(p);
  for (const Point2& p : hull) box.expand(p);
  box.pad(0.05);
  Canvas canvas(800, 800, box, opts.title);
  if (!opts.manifest_json.empty()) canvas.comment(opts.manifest_json);
  canvas.axes();
  if (!hull.empty()) {
    canvas.polygon(hull, "#c0392b", "#c0392b", 0.06);
  }
  const auto thin = decimate(path, opts.max_polyline_points);
  canvas.polyline(thin, "#2c5f8a", 1.0);
  if (!path.empty()) {
    canvas.circle(path.front(), 3.0, "#111");
    canvas.circle(path.back(), 3.0, "#c0392b");
  }
  return canvas.finish();
}

std::string render_graph_plot(std::span<const Point2> graph,
                              std::span<const Point2> upper,
                              std::span<const Point2> lower,
                              const PlotOptions& opts) {
  BBox box;
  for (const Point2& p : graph) box.expand(p);
  for (const Point2& p : upper) box.expand(p);
  for (const Point2& p : lower) box.expand(p);
  box.pad(0.05);
  Canvas canvas(900, 600, box, opts.title);
  if (!opts.manifest_json.empty()) canvas.comment(opts.manifest_json);
  canvas.axes();
  canvas.polyline(decimate(graph, opts.max_polyline_points), "#2c5f8a", 1.0);
  canvas.polyline(upper, "#c0392b", 1.2);
  canvas.polyline(lower, "#27ae60", 1.2);
  const std::pair<std::string_view, std::string_view> entries[] = {
      {"log price", "#2c5f8a"},
      {"upper hull chain", "#c0392b"},
      {"lower hull chain", "#27ae60"}};
  canvas.legend(entries);
  return canvas.finish();
}

std::string render_loglog_scatter(
    std::span<const std::pair<double, double>> points,
    const RegressionFit& fit, const PlotOptions& opts) {
  BBox box;
  std::vector<Point2> logpts;
  logpts.reserve(points.size());
  for (const auto& [n, w] : points) {
    if (!(n > 0.0) || !(w > 0.0)) continue;
    const Point2 p{std::log10(n), std::log10(w)};
    logpts.push_back(p);
    box.expand(p);
  }
  box.pad(0.08);
  Canvas canvas(800, 600, box, opts.title);
  if (!opts.manifest_json.empty()) canvas.comment(opts.manifest_json);
  canvas.axes();
  for (const Point2& p : logpts) canvas.circle(p, 2.5, "#2c5f8a");
  if (!logpts.empty()) {
    const Point2 a{box.xmin, fit.intercept + fit.slope * box.xmin};
    const Point2 b{box.xmax, fit.intercept + fit.slope * box.xmax};
    canvas.segment(a, b, "#c0392b", 1.5);
    canvas.text(kMarginLeft + 10.0, kMarginTop + 16.0,
                "slope " + format_double(fit.slope) + " (se " +
                    format_double(fit.stderr_slope) + ")",
                12);
  }
  return canvas.finish();
}

}  // namespace rancher::svg
