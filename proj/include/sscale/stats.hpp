#pragma once

#include <span>

namespace sscale {

double mean(std::span<const double> xs);

// Population standard deviation (divides by N).
double stddev(std::span<const double> xs);

// Median; averages the middle pair for even counts.
double median(std::span<const double> xs);

}  // namespace sscale
