#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace bergman {

/// Complex polynomial Σ c_k z^k.
struct Polynomial {
  std::vector<std::complex<double>> coeffs;

  std::complex<double> operator()(std::complex<double> z) const {
    std::complex<double> acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
    return acc;
  }

  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }

  static Polynomial monomial(std::size_t k) {
    Polynomial p;
    p.coeffs.assign(k + 1, 0.0);
    p.coeffs[k] = 1.0;
    return p;
  }

  /// Degree drawn uniformly in [0, max_degree], coefficients with independent
  /// standard normal real and imaginary parts; leading coefficient nonzero.
  static Polynomial random(std::mt19937_64& rng, std::size_t max_degree) {
    std::uniform_int_distribution<std::size_t> deg(0, max_degree);
    std::normal_distribution<double> normal(0.0, 1.0);
    Polynomial p;
    p.coeffs.resize(deg(rng) + 1);
    for (auto& c : p.coeffs) c = {normal(rng), normal(rng)};
    if (std::abs(p.coeffs.back()) < 1e-3) p.coeffs.back() = 1.0;
    return p;
  }
};

}  // namespace bergman
