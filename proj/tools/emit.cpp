#include "emit.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>

#include "triq/error.hpp"

namespace triq::cli {

namespace {

using triq::SweepAxis;
using triq::SweepResult;
using triq::SweepRow;

size_t axis_count(const SweepResult& r) { return r.axes.size(); }

size_t value_column_count(const SweepResult& r) {
  return r.columns.size() - axis_count(r) - 1 - (r.any_error ? 1 : 0);
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

// Linear 4-stop colormap (dark violet, blue, green, yellow).
struct Rgb {
  double r, g, b;
};

Rgb colormap(double t) {
  static constexpr Rgb stops[4] = {{0x44 / 255.0, 0x01 / 255.0, 0x54 / 255.0},
                                   {0x31 / 255.0, 0x68 / 255.0, 0x8e / 255.0},
                                   {0x35 / 255.0, 0xb7 / 255.0, 0x79 / 255.0},
                                   {0xfd / 255.0, 0xe7 / 255.0, 0x25 / 255.0}};
  t = std::clamp(t, 0.0, 1.0) * 3.0;
  const int i = std::min(2, static_cast<int>(t));
  const double f = t - i;
  return {stops[i].r + f * (stops[i + 1].r - stops[i].r),
          stops[i].g + f * (stops[i + 1].g - stops[i].g),
          stops[i].b + f * (stops[i + 1].b - stops[i].b)};
}

std::string hex_color(const Rgb& c) {
  char buf[8];
  std::snprintf(buf, sizeof(buf), "#%02x%02x%02x",
                static_cast<int>(std::lround(c.r * 255.0)),
                static_cast<int>(std::lround(c.g * 255.0)),
                static_cast<int>(std::lround(c.b * 255.0)));
  return buf;
}

const char* kSeriesPalette[8] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                 "#ff7f0e", "#8c564b", "#e377c2", "#7f7f7f"};

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  void take(double x) {
    if (!std::isfinite(x)) return;
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  bool ok() const { return lo <= hi; }
  // Map x to [0, 1]; degenerate ranges pin to the middle.
  double unit(double x) const { return hi > lo ? (x - lo) / (hi - lo) : 0.5; }
};

// Five round tick values covering [lo, hi].
std::vector<double> ticks(double lo, double hi) {
  std::vector<double> out;
  if (!(hi > lo)) return {lo};
  for (int i = 0; i <= 4; ++i) out.push_back(lo + (hi - lo) * i / 4.0);
  return out;
}

struct Svg {
  std::string body;
  void tag(const std::string& t) { body += t + "\n"; }
  void line(double x1, double y1, double x2, double y2, const std::string& style) {
    tag("<line x1=\"" + format_label(x1) + "\" y1=\"" + format_label(y1) +
        "\" x2=\"" + format_label(x2) + "\" y2=\"" + format_label(y2) + "\" " +
        style + "/>");
  }
  void text(double x, double y, const std::string& s, const std::string& extra = "") {
    tag("<text x=\"" + format_label(x) + "\" y=\"" + format_label(y) +
        "\" font-family=\"monospace\" font-size=\"12\" " + extra + ">" + s +
        "</text>");
  }
  void rect(double x, double y, double w, double h, const std::string& fill) {
    tag("<rect x=\"" + format_label(x) + "\" y=\"" + format_label(y) +
        "\" width=\"" + format_label(w) + "\" height=\"" + format_label(h) +
        "\" fill=\"" + fill + "\"/>");
  }
};

constexpr double kWidth = 800, kHeight = 560;
constexpr double kLeft = 80, kRight = 660, kTop = 50, kBottom = 500;

std::string svg_document(const std::string& config_echo, const std::string& body) {
  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         format_label(kWidth) + "\" height=\"" + format_label(kHeight) +
         "\" viewBox=\"0 0 " + format_label(kWidth) + " " + format_label(kHeight) +
         "\">\n";
  out += "<!-- config: " + config_echo + " -->\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
  out += body;
  out += "</svg>\n";
  return out;
}

void draw_frame(Svg& svg, const std::string& xlabel, const std::string& ylabel,
                const Range& xr, const Range& yr) {
  const std::string axis_style = "stroke=\"#000000\" stroke-width=\"1\"";
  svg.line(kLeft, kBottom, kRight, kBottom, axis_style);
  svg.line(kLeft, kBottom, kLeft, kTop, axis_style);
  for (double t : ticks(xr.lo, xr.hi)) {
    const double x = kLeft + (kRight - kLeft) * xr.unit(t);
    svg.line(x, kBottom, x, kBottom + 5, axis_style);
    svg.text(x - 18, kBottom + 20, format_label(t));
  }
  for (double t : ticks(yr.lo, yr.hi)) {
    const double y = kBottom - (kBottom - kTop) * yr.unit(t);
    svg.line(kLeft - 5, y, kLeft, y, axis_style);
    svg.text(kLeft - 72, y + 4, format_label(t));
  }
  svg.text(0.5 * (kLeft + kRight) - 20, kHeight - 14, xlabel);
  svg.text(14, kTop - 14, ylabel);
}

std::string svg_heatmap(const SweepResult& r, const std::string& config_echo) {
  if (axis_count(r) != 2)
    fail(errc::usage, "heatmap needs a two-axis sweep");
  const SweepAxis& ax = r.axes[0];
  const SweepAxis& ay = r.axes[1];
  if (ax.count < 2 || ay.count < 2)
    fail(errc::usage, "heatmap needs at least 2 points per axis");
  if (value_column_count(r) != 1)
    fail(errc::usage, "heatmap needs exactly one value column");

  Range vr;
  for (const auto& row : r.rows) vr.take(row.values[0]);

  Svg svg;
  Range xr, yr;
  xr.take(ax.min);
  xr.take(ax.max);
  yr.take(ay.min);
  yr.take(ay.max);

  const double cw = (kRight - kLeft) / ax.count;
  const double ch = (kBottom - kTop) / ay.count;
  for (int kx = 0; kx < ax.count; ++kx) {
    for (int ky = 0; ky < ay.count; ++ky) {
      const SweepRow& row = r.rows[static_cast<size_t>(kx) * ay.count + ky];
      const double v = row.values[0];
      const std::string fill =
          std::isfinite(v) ? hex_color(colormap(vr.unit(v))) : "#bbbbbb";
      svg.rect(kLeft + kx * cw, kBottom - (ky + 1) * ch, cw + 0.5, ch + 0.5, fill);
    }
  }
  draw_frame(svg, ax.name, ay.name, xr, yr);

  // Color bar with min/max labels.
  const double bar_x = kRight + 30, bar_w = 20;
  for (int i = 0; i < 100; ++i) {
    const double t = (99 - i) / 99.0;
    svg.rect(bar_x, kTop + (kBottom - kTop) * i / 100.0, bar_w,
             (kBottom - kTop) / 100.0 + 0.5, hex_color(colormap(t)));
  }
  svg.text(bar_x, kTop - 10, vr.ok() ? format_label(vr.hi) : "");
  svg.text(bar_x, kBottom + 16, vr.ok() ? format_label(vr.lo) : "");
  svg.text(bar_x, kTop - 26, r.columns[2]);
  return svg_document(config_echo, svg.body);
}

std::string svg_lines(const SweepResult& r, const std::string& config_echo) {
  const size_t naxis = axis_count(r);
  const size_t nval = value_column_count(r);

  // Collect series: pairs of (label, list of (x, y)).
  struct Series {
    std::string label;
    std::vector<std::pair<double, double>> pts;
  };
  std::vector<Series> series;
  std::string xlabel;

  if (naxis == 1) {
    xlabel = r.axes[0].name;
    for (size_t v = 0; v < nval; ++v) {
      Series s;
      s.label = r.columns[1 + v];
      for (const auto& row : r.rows) s.pts.push_back({row.coords[0], row.values[v]});
      series.push_back(std::move(s));
    }
  } else if (naxis == 2) {
    if (nval != 1)
      fail(errc::usage, "two-axis line plot needs exactly one value column");
    xlabel = r.axes[1].name;
    const int n2 = r.axes[1].count;
    for (int k1 = 0; k1 < r.axes[0].count; ++k1) {
      Series s;
      s.label = r.axes[0].name + "=" + format_label(r.axes[0].value_at(k1));
      for (int k2 = 0; k2 < n2; ++k2) {
        const SweepRow& row = r.rows[static_cast<size_t>(k1) * n2 + k2];
        s.pts.push_back({row.coords[1], row.values[0]});
      }
      series.push_back(std::move(s));
    }
  } else {
    fail(errc::usage, "line plot needs one or two axes");
  }

  Range xr, yr;
  for (const auto& s : series)
    for (const auto& [x, y] : s.pts) {
      xr.take(x);
      if (std::isfinite(y)) yr.take(y);
    }
  if (!yr.ok()) fail(errc::usage, "no finite values to plot");

  Svg svg;
  draw_frame(svg, xlabel, naxis == 1 ? "value" : r.columns[2], xr, yr);
  for (size_t si = 0; si < series.size(); ++si) {
    const char* color = kSeriesPalette[si % 8];
    std::string points;
    auto flush = [&] {
      if (points.empty()) return;
      svg.tag("<polyline fill=\"none\" stroke=\"" + std::string(color) +
              "\" stroke-width=\"1.5\" points=\"" + points + "\"/>");
      points.clear();
    };
    for (const auto& [x, y] : series[si].pts) {
      if (!std::isfinite(y)) {
        flush();  // break the polyline across failed points
        continue;
      }
      const double px = kLeft + (kRight - kLeft) * xr.unit(x);
      const double py = kBottom - (kBottom - kTop) * yr.unit(y);
      points += format_label(px) + "," + format_label(py) + " ";
    }
    flush();
    const double ly = kTop + 16.0 * si;
    svg.line(kRight + 20, ly, kRight + 44, ly,
             "stroke=\"" + std::string(color) + "\" stroke-width=\"2\"");
    svg.text(kRight + 50, ly + 4, series[si].label);
  }
  return svg_document(config_echo, svg.body);
}

}  // namespace

std::string format_value(double x) {
  char buf[40];
  auto [p, ec] =
      std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, 17);
  (void)ec;
  return std::string(buf, p);
}

std::string format_label(double x) {
  char buf[40];
  auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  (void)ec;
  return std::string(buf, p);
}

std::string csv_from_sweep(const SweepResult& result) {
  std::string out;
  for (size_t c = 0; c < result.columns.size(); ++c) {
    if (c) out += ',';
    out += csv_escape(result.columns[c]);
  }
  out += '\n';
  for (const auto& row : result.rows) {
    bool first = true;
    auto put = [&](const std::string& field) {
      if (!first) out += ',';
      first = false;
      out += field;
    };
    for (double c : row.coords) put(format_value(c));
    for (double v : row.values) put(std::isfinite(v) ? format_value(v) : "");
    put(csv_escape(row.path));
    if (result.any_error) put(csv_escape(row.error));
    out += '\n';
  }
  return out;
}

std::string json_from_sweep(const SweepResult& result,
                            const nlohmann::ordered_json& config_echo) {
  nlohmann::ordered_json doc;
  doc["config"] = config_echo;
  doc["columns"] = result.columns;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : result.rows) {
    nlohmann::ordered_json jr = nlohmann::ordered_json::array();
    for (double c : row.coords) jr.push_back(c);
    for (double v : row.values) {
      if (std::isfinite(v))
        jr.push_back(v);
      else
        jr.push_back(nullptr);
    }
    jr.push_back(row.path);
    if (result.any_error) jr.push_back(row.error);
    rows.push_back(std::move(jr));
  }
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

std::string svg_from_sweep(const SweepResult& result, SvgKind kind,
                           const std::string& config_echo) {
  if (kind == SvgKind::heatmap) return svg_heatmap(result, config_echo);
  return svg_lines(result, config_echo);
}

}  // namespace triq::cli
