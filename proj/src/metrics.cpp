#include "sqwalk/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace sqwalk {

namespace {

void check_pair(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) {
    throw std::invalid_argument("distribution lengths differ");
  }
  for (std::span<const double> d : {p, q}) {
    double sum = 0.0;
    for (double x : d) {
      if (!(x >= -1e-12)) throw std::invalid_argument("negative probability");
      sum += x;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
      throw std::invalid_argument("probabilities do not sum to 1");
    }
  }
}

}  // namespace

double total_variation(std::span<const double> p, std::span<const double> q) {
  check_pair(p, q);
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) sum += std::abs(p[i] - q[i]);
  return 0.5 * sum;
}

double hellinger(std::span<const double> p, std::span<const double> q) {
  check_pair(p, q);
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double d = std::sqrt(std::max(p[i], 0.0)) - std::sqrt(std::max(q[i], 0.0));
    sum += d * d;
  }
  return std::sqrt(0.5 * sum);
}

FidelityReport fidelity_report(std::span<const double> p,
                               std::span<const double> q) {
  const double d = total_variation(p, q);
  const double h = hellinger(p, q);
  return {d, h, 1.0 - d, 1.0 - h};
}

}  // namespace sqwalk
