#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sscale/run_record.hpp"

namespace sscale {

// Plot kinds mirror the figures a scaling study needs: time per step
// against ranks or per-rank work, efficiency against per-rank work, and
// per-rank dof throughput.
enum class PlotKind { TstepVsRanks, TstepVsWork, EtaVsWork, DofThroughput };

struct PlotSeries {
  std::string label;
  std::vector<std::array<double, 2>> points;  // (x, y)
};

struct PlotSpec {
  PlotKind kind = PlotKind::TstepVsWork;
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<PlotSeries> series;        // each nonempty
  bool ideal_guide = false;              // dashed t ~ 1/P reference
  std::optional<double> eta_reference;   // horizontal line for eta plots
};

PlotKind plot_kind_from_string(const std::string& s);
std::string to_string(PlotKind k);

// Builds the point sets for `kind` from the given series; labels are the
// problem ids. Data is passed through untransformed beyond the kind's
// coordinate choice.
PlotSpec make_plot_spec(PlotKind kind,
                        std::span<const ScalingSeries* const> series,
                        int dof_multiplier = 1);

// Self-contained SVG with log axes (linear y for efficiency), one
// polyline per series, a legend, and optional reference lines.
std::string render_svg(const PlotSpec& spec);

// The testable artifact: "series,x,y" rows with full-precision values.
std::string points_csv(const PlotSpec& spec);

}  // namespace sscale
