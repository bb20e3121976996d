#include "sscale/plot.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "sscale/error.hpp"
#include "sscale/io.hpp"
#include "sscale/scaling_model.hpp"

namespace sscale {

PlotKind plot_kind_from_string(const std::string& s) {
  if (s == "tstep_vs_P") return PlotKind::TstepVsRanks;
  if (s == "tstep_vs_nP") return PlotKind::TstepVsWork;
  if (s == "eta_vs_nP") return PlotKind::EtaVsWork;
  if (s == "dof_throughput") return PlotKind::DofThroughput;
  throw ValidationError("unknown plot kind '" + s +
                        "' (tstep_vs_P, tstep_vs_nP, eta_vs_nP, "
                        "dof_throughput)");
}

std::string to_string(PlotKind k) {
  switch (k) {
    case PlotKind::TstepVsRanks: return "tstep_vs_P";
    case PlotKind::TstepVsWork: return "tstep_vs_nP";
    case PlotKind::EtaVsWork: return "eta_vs_nP";
    case PlotKind::DofThroughput: return "dof_throughput";
  }
  return "?";
}

PlotSpec make_plot_spec(PlotKind kind,
                        std::span<const ScalingSeries* const> series,
                        int dof_multiplier) {
  if (series.empty()) throw ValidationError("no series to plot");
  PlotSpec spec;
  spec.kind = kind;
  switch (kind) {
    case PlotKind::TstepVsRanks:
      spec.title = "time per step vs. ranks";
      spec.x_label = "ranks P";
      spec.y_label = "t_step [s]";
      break;
    case PlotKind::TstepVsWork:
      spec.title = "time per step vs. grid points per rank";
      spec.x_label = "n/P";
      spec.y_label = "t_step [s]";
      break;
    case PlotKind::EtaVsWork:
      spec.title = "parallel efficiency vs. grid points per rank";
      spec.x_label = "n/P";
      spec.y_label = "efficiency";
      break;
    case PlotKind::DofThroughput:
      spec.title = "dof throughput per rank vs. grid points per rank";
      spec.x_label = "n/P";
      spec.y_label = "MDOFS";
      break;
  }
  for (const ScalingSeries* s : series) {
    if (s == nullptr || s->records.empty()) {
      throw ValidationError("empty series in plot input");
    }
    PlotSeries ps;
    ps.label = s->problem_id;
    const auto pts = efficiency_series(*s, dof_multiplier);
    for (const auto& p : pts) {
      double x = 0.0, y = 0.0;
      switch (kind) {
        case PlotKind::TstepVsRanks:
          x = double(p.ranks);
          y = p.t_step;
          break;
        case PlotKind::TstepVsWork:
          x = p.n_over_p;
          y = p.t_step;
          break;
        case PlotKind::EtaVsWork:
          x = p.n_over_p;
          y = p.eta;
          break;
        case PlotKind::DofThroughput:
          x = p.n_over_p;
          y = p.mdofs;
          break;
      }
      ps.points.push_back({x, y});
    }
    spec.series.push_back(std::move(ps));
  }
  return spec;
}

namespace {

constexpr double kWidth = 860, kHeight = 560;
constexpr double kLeft = 72, kRight = 24, kTop = 46, kBottom = 64;

const char* const kPalette[] = {"#d32f2f", "#1976d2", "#388e3c", "#f57c00",
                                "#7b1fa2", "#00796b", "#455a64", "#c2185b"};

std::string escape_xml(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (const char c : s) {
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

struct Axis {
  bool log = true;
  double lo = 0.0, hi = 1.0;  // in log10 units when log

  double to_px(double v, double px0, double px1) const {
    const double u = log ? std::log10(v) : v;
    return px0 + (u - lo) / (hi - lo) * (px1 - px0);
  }
};

Axis fit_axis(const PlotSpec& spec, bool is_x, bool log_scale) {
  double vmin = 0.0, vmax = 0.0;
  bool first = true;
  for (const auto& s : spec.series) {
    for (const auto& p : s.points) {
      const double v = is_x ? p[0] : p[1];
      if (first || v < vmin) vmin = v;
      if (first || v > vmax) vmax = v;
      first = false;
    }
  }
  Axis ax;
  ax.log = log_scale;
  if (log_scale) {
    if (!(vmin > 0)) throw ValidationError("log axis needs positive values");
    ax.lo = std::floor(std::log10(vmin));
    ax.hi = std::ceil(std::log10(vmax));
    if (ax.hi - ax.lo < 1.0) ax.hi = ax.lo + 1.0;
  } else {
    ax.lo = 0.0;
    ax.hi = std::max(1.05, vmax * 1.05);
  }
  return ax;
}

void axis_ticks(std::ostringstream& svg, const Axis& ax, bool is_x) {
  const double px0 = is_x ? kLeft : kHeight - kBottom;
  const double px1 = is_x ? kWidth - kRight : kTop;
  if (ax.log) {
    for (int k = int(ax.lo); k <= int(ax.hi); ++k) {
      const double p = ax.to_px(std::pow(10.0, k), px0, px1);
      if (is_x) {
        svg << "<line x1='" << p << "' y1='" << kTop << "' x2='" << p
            << "' y2='" << kHeight - kBottom
            << "' stroke='#dddddd' stroke-width='1'/>\n";
        svg << "<text x='" << p << "' y='" << kHeight - kBottom + 18
            << "' text-anchor='middle' font-size='12'>1e" << k
            << "</text>\n";
      } else {
        svg << "<line x1='" << kLeft << "' y1='" << p << "' x2='"
            << kWidth - kRight << "' y2='" << p
            << "' stroke='#dddddd' stroke-width='1'/>\n";
        svg << "<text x='" << kLeft - 8 << "' y='" << p + 4
            << "' text-anchor='end' font-size='12'>1e" << k << "</text>\n";
      }
    }
  } else {
    for (double v = 0.0; v <= ax.hi + 1e-9; v += 0.2) {
      const double p = ax.to_px(v, px0, px1);
      svg << "<line x1='" << kLeft << "' y1='" << p << "' x2='"
          << kWidth - kRight << "' y2='" << p
          << "' stroke='#dddddd' stroke-width='1'/>\n";
      std::ostringstream label;
      label.precision(2);
      label << v;
      svg << "<text x='" << kLeft - 8 << "' y='" << p + 4
          << "' text-anchor='end' font-size='12'>" << label.str()
          << "</text>\n";
    }
  }
}

}  // namespace

std::string render_svg(const PlotSpec& spec) {
  if (spec.series.empty()) throw ValidationError("no series to plot");
  for (const auto& s : spec.series) {
    if (s.points.empty())
      throw ValidationError("plot series '" + s.label + "' has no points");
  }
  const bool linear_y = spec.kind == PlotKind::EtaVsWork;
  const Axis xa = fit_axis(spec, true, true);
  const Axis ya = fit_axis(spec, false, !linear_y);

  auto X = [&](double v) { return xa.to_px(v, kLeft, kWidth - kRight); };
  auto Y = [&](double v) { return ya.to_px(v, kHeight - kBottom, kTop); };

  std::ostringstream svg;
  svg << "<svg xmlns='http://www.w3.org/2000/svg' width='" << kWidth
      << "' height='" << kHeight << "' viewBox='0 0 " << kWidth << ' '
      << kHeight << "'>\n";
  svg << "<rect width='100%' height='100%' fill='white'/>\n";
  svg << "<text x='" << kWidth / 2 << "' y='24' text-anchor='middle' "
      << "font-size='16'>" << escape_xml(spec.title) << "</text>\n";

  axis_ticks(svg, xa, true);
  axis_ticks(svg, ya, false);

  // frame
  svg << "<rect x='" << kLeft << "' y='" << kTop << "' width='"
      << kWidth - kLeft - kRight << "' height='" << kHeight - kTop - kBottom
      << "' fill='none' stroke='#333333'/>\n";
  svg << "<text x='" << (kLeft + kWidth - kRight) / 2 << "' y='"
      << kHeight - 16 << "' text-anchor='middle' font-size='13'>"
      << escape_xml(spec.x_label) << "</text>\n";
  svg << "<text x='18' y='" << (kTop + kHeight - kBottom) / 2
      << "' text-anchor='middle' font-size='13' transform='rotate(-90 18 "
      << (kTop + kHeight - kBottom) / 2 << ")'>" << escape_xml(spec.y_label)
      << "</text>\n";

  if (spec.eta_reference) {
    const double y = Y(*spec.eta_reference);
    svg << "<g id='reference-lines'>\n"
        << "<line id='ref-eta' class='reference' data-eta='"
        << format_double(*spec.eta_reference) << "' x1='" << kLeft
        << "' y1='" << y << "' x2='" << kWidth - kRight << "' y2='" << y
        << "' stroke='#888888' stroke-dasharray='6 4'/>\n"
        << "</g>\n";
  }

  // Ideal strong scaling: t proportional to 1/P (or to n/P), anchored at
  // each series' first point.
  if (spec.ideal_guide && (spec.kind == PlotKind::TstepVsRanks ||
                           spec.kind == PlotKind::TstepVsWork)) {
    svg << "<g id='ideal-guides'>\n";
    const double slope = spec.kind == PlotKind::TstepVsRanks ? -1.0 : 1.0;
    for (const auto& s : spec.series) {
      const auto& p0 = s.points.front();
      double x_lo = p0[0], x_hi = p0[0];
      for (const auto& p : s.points) {
        x_lo = std::min(x_lo, p[0]);
        x_hi = std::max(x_hi, p[0]);
      }
      const double y_at = [&](double x) {
        return p0[1] * std::pow(x / p0[0], slope);
      }(x_lo);
      svg << "<line class='ideal-guide' x1='" << X(x_lo) << "' y1='"
          << Y(y_at) << "' x2='" << X(x_hi) << "' y2='"
          << Y(p0[1] * std::pow(x_hi / p0[0], slope))
          << "' stroke='#7fb3d5' stroke-dasharray='4 4'/>\n";
    }
    svg << "</g>\n";
  }

  const std::size_t n_colors = sizeof(kPalette) / sizeof(kPalette[0]);
  for (std::size_t i = 0; i < spec.series.size(); ++i) {
    const auto& s = spec.series[i];
    const char* color = kPalette[i % n_colors];
    svg << "<polyline fill='none' stroke='" << color
        << "' stroke-width='1.5' points='";
    for (const auto& p : s.points) svg << X(p[0]) << ',' << Y(p[1]) << ' ';
    svg << "'/>\n";
    for (const auto& p : s.points) {
      svg << "<circle cx='" << X(p[0]) << "' cy='" << Y(p[1])
          << "' r='3' fill='" << color << "'/>\n";
    }
    const double ly = kTop + 16 + double(i) * 16;
    svg << "<line x1='" << kWidth - kRight - 150 << "' y1='" << ly
        << "' x2='" << kWidth - kRight - 126 << "' y2='" << ly
        << "' stroke='" << color << "' stroke-width='2'/>\n";
    svg << "<text x='" << kWidth - kRight - 120 << "' y='" << ly + 4
        << "' font-size='11'>" << escape_xml(s.label) << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

std::string points_csv(const PlotSpec& spec) {
  std::ostringstream out;
  out << "series,x,y\n";
  for (const auto& s : spec.series) {
    for (const auto& p : s.points) {
      out << s.label << ',' << format_double(p[0]) << ','
          << format_double(p[1]) << '\n';
    }
  }
  return out.str();
}

}  // namespace sscale
