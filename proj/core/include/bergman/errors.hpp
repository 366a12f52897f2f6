#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace bergman {

/// Argument outside the domain of an operation (poles, β ≤ −2, bad orders).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A quadrature node produced NaN or Inf.
class NonFiniteSampleError : public std::runtime_error {
 public:
  NonFiniteSampleError(const std::string& what, double r, double theta)
      : std::runtime_error(what), r_(r), theta_(theta) {}
  double r() const noexcept { return r_; }
  double theta() const noexcept { return theta_; }

 private:
  double r_;
  double theta_;
};

/// A sequence that should converge did not (ε-extrapolation, series sums).
class DivergenceError : public std::runtime_error {
 public:
  DivergenceError(const std::string& what, std::vector<std::complex<double>> sequence = {})
      : std::runtime_error(what), sequence_(std::move(sequence)) {}
  const std::vector<std::complex<double>>& sequence() const noexcept { return sequence_; }

 private:
  std::vector<std::complex<double>> sequence_;
};

/// The requested accuracy cannot be met at the configured truncation.
class ResolutionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bergman
