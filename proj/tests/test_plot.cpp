#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>
#include <string>

#include "sscale/error.hpp"
#include "sscale/plot.hpp"
#include "sscale/scaling_model.hpp"
#include "sscale/synth.hpp"

using namespace sscale;

namespace {
ScalingSeries demo_series(const std::string& platform, double coeff) {
  CostModel m;
  m.compute_coeff = coeff;
  m.overhead = 1e-3;
  GenerateOptions opts;
  opts.platform = platform;
  return generate(m, 100000000, {8, 16, 32, 64}, opts);
}
}  // namespace

TEST_CASE("plot csv is a pass-through of the input points") {
  const auto a = demo_series("alpha", 1e-8);
  const auto b = demo_series("beta", 2e-8);
  const ScalingSeries* both[] = {&a, &b};
  const PlotSpec spec = make_plot_spec(PlotKind::TstepVsWork, both);

  std::istringstream csv(points_csv(spec));
  std::string line;
  std::getline(csv, line);
  CHECK(line == "series,x,y");
  std::size_t row = 0;
  const std::vector<const ScalingSeries*> order = {&a, &b};
  while (std::getline(csv, line)) {
    const auto& series = *order[row / 4];
    const auto& rec = series.records[row % 4];
    const auto c1 = line.find(',');
    const auto c2 = line.find(',', c1 + 1);
    CHECK(line.substr(0, c1) == series.problem_id);
    CHECK(std::stod(line.substr(c1 + 1, c2 - c1 - 1)) ==
          double(series.gridpoints) / double(rec.ranks));
    CHECK(std::stod(line.substr(c2 + 1)) == rec.t_step);
    ++row;
  }
  CHECK(row == 8);
}

TEST_CASE("dof throughput plot recomputes mdofs") {
  const auto a = demo_series("alpha", 1e-8);
  const ScalingSeries* one[] = {&a};
  const PlotSpec spec = make_plot_spec(PlotKind::DofThroughput, one, 4);
  REQUIRE(spec.series.size() == 1);
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    const auto& r = a.records[i];
    const double expected =
        double(r.gridpoints) * 4 / (r.t_step * double(r.ranks)) / 1e6;
    CHECK(spec.series[0].points[i][1] == expected);
  }
}

TEST_CASE("eta plots carry the target reference line") {
  const auto a = demo_series("alpha", 1e-8);
  const ScalingSeries* one[] = {&a};
  PlotSpec spec = make_plot_spec(PlotKind::EtaVsWork, one);
  spec.eta_reference = 0.8;
  const std::string svg = render_svg(spec);
  CHECK(svg.find("<svg") == 0);
  CHECK(svg.rfind("</svg>\n") == svg.size() - 7);
  CHECK(svg.find("id='ref-eta'") != std::string::npos);
  CHECK(svg.find("data-eta='0.8'") != std::string::npos);
  CHECK(svg.find("id='reference-lines'") != std::string::npos);
}

TEST_CASE("svg contains a polyline per series and escaped labels") {
  const auto a = demo_series("alpha", 1e-8);
  const auto b = demo_series("beta", 2e-8);
  const ScalingSeries* both[] = {&a, &b};
  PlotSpec spec = make_plot_spec(PlotKind::TstepVsRanks, both);
  spec.ideal_guide = true;
  spec.series[0].label = "tag<1>";
  const std::string svg = render_svg(spec);

  std::size_t polylines = 0, pos = 0;
  while ((pos = svg.find("<polyline", pos)) != std::string::npos) {
    ++polylines;
    pos += 9;
  }
  CHECK(polylines == 2);
  CHECK(svg.find("tag&lt;1&gt;") != std::string::npos);
  CHECK(svg.find("id='ideal-guides'") != std::string::npos);
  CHECK(svg.find("class='ideal-guide'") != std::string::npos);
}

TEST_CASE("plots refuse empty inputs") {
  CHECK_THROWS_AS(make_plot_spec(PlotKind::TstepVsWork, {}), ValidationError);
  PlotSpec spec;
  spec.series.push_back({"empty", {}});
  CHECK_THROWS_AS(render_svg(spec), ValidationError);
}

TEST_CASE("plot kind names round-trip") {
  for (const auto kind :
       {PlotKind::TstepVsRanks, PlotKind::TstepVsWork, PlotKind::EtaVsWork,
        PlotKind::DofThroughput}) {
    CHECK(plot_kind_from_string(to_string(kind)) == kind);
  }
  CHECK_THROWS_AS(plot_kind_from_string("piechart"), ValidationError);
}
