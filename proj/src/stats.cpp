#include "sscale/stats.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <vector>

#include "sscale/error.hpp"

namespace sscale {

namespace {
Eigen::Map<const Eigen::ArrayXd> as_array(std::span<const double> xs) {
  return {xs.data(), Eigen::Index(xs.size())};
}
}  // namespace

double mean(std::span<const double> xs) {
  if (xs.empty()) throw ValidationError("mean of empty sample");
  return as_array(xs).mean();
}

double stddev(std::span<const double> xs) {
  if (xs.empty()) throw ValidationError("stddev of empty sample");
  const auto a = as_array(xs);
  return std::sqrt((a - a.mean()).square().mean());
}

double median(std::span<const double> xs) {
  if (xs.empty()) throw ValidationError("median of empty sample");
  std::vector<double> v(xs.begin(), xs.end());
  std::sort(v.begin(), v.end());
  const std::size_t mid = v.size() / 2;
  if (v.size() % 2 == 1) return v[mid];
  return 0.5 * (v[mid - 1] + v[mid]);
}

}  // namespace sscale
