#pragma once

#include <initializer_list>
#include <span>

namespace sqwalk {

struct FidelityReport {
  double d;  // total variation distance
  double h;  // Hellinger distance
  double one_minus_d;
  double one_minus_h;
};

/// d(p, q) = 1/2 sum_x |p_x - q_x|. Inputs must be equal-length valid
/// distributions; throws std::invalid_argument otherwise.
double total_variation(std::span<const double> p, std::span<const double> q);

/// h(p, q) = sqrt(1/2 sum_x (sqrt(p_x) - sqrt(q_x))^2).
double hellinger(std::span<const double> p, std::span<const double> q);

/// Both distances and their complements. No ordering between 1-d and 1-h
/// holds in general; they are reported independently.
FidelityReport fidelity_report(std::span<const double> p,
                               std::span<const double> q);

inline double total_variation(std::initializer_list<double> p,
                              std::initializer_list<double> q) {
  return total_variation(std::span(p.begin(), p.size()),
                         std::span(q.begin(), q.size()));
}

inline double hellinger(std::initializer_list<double> p,
                        std::initializer_list<double> q) {
  return hellinger(std::span(p.begin(), p.size()),
                   std::span(q.begin(), q.size()));
}

inline FidelityReport fidelity_report(std::initializer_list<double> p,
                                      std::initializer_list<double> q) {
  return fidelity_report(std::span(p.begin(), p.size()),
                         std::span(q.begin(), q.size()));
}

}  // namespace sqwalk
