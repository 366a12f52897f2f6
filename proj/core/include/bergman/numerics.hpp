#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace bergman {

/// Gauss–Legendre nodes and weights on [-1, 1], nodes ascending.
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussLegendreRule gauss_legendre(std::size_t order);

/// Neumaier-compensated accumulator. Results depend on insertion order only.
class CompensatedSum {
 public:
  void add(double x) noexcept;
  double value() const noexcept { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

class ComplexCompensatedSum {
 public:
  void add(std::complex<double> x) noexcept {
    re_.add(x.real());
    im_.add(x.imag());
  }
  std::complex<double> value() const noexcept { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum re_;
  CompensatedSum im_;
};

}  // namespace bergman
