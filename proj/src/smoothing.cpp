#include "hml/smoothing.hpp"

namespace hml {

double rho(double u) {
  return static_cast<double>(rho<long double>(static_cast<long double>(u), 64));
}

std::pair<double, double> rho_derivatives(double u) {
  auto [d1, d2] = rho_derivatives<long double>(static_cast<long double>(u), 64);
  return {static_cast<double>(d1), static_cast<double>(d2)};
}

}  // namespace hml
