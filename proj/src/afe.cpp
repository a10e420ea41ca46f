#include "hml/afe.hpp"

namespace hml {

AfeSplit make_afe_split(int k, double t, double x) {
  if (k < 1 || k > 3) throw DomainError("make_afe_split: k must be 1, 2 or 3");
  if (!(t >= 10.0)) throw DomainError("make_afe_split: t below validity floor 10");
  if (!(x >= 1.0)) throw DomainError("make_afe_split: need x >= 1");
  double q = t / 6.283185307179586476925286766559;
  AfeSplit sp;
  sp.k = k;
  sp.t = t;
  sp.x = x;
  sp.y = std::pow(q, k) / x;
  if (!(sp.y >= 1.0)) throw DomainError("make_afe_split: derived y < 1");
  return sp;
}

AfeSplit default_afe_split(int k, double t) {
  double q = t / 6.283185307179586476925286766559;
  switch (k) {
    case 1:
      return make_afe_split(1, t, std::sqrt(q));
    case 2:
      return make_afe_split(2, t, 2.0 * q);
    case 3:
      return make_afe_split(3, t, 2.0 * std::pow(q, 1.5));
    default:
      throw DomainError("default_afe_split: k must be 1, 2 or 3");
  }
}

double afe_error_budget(const AfeSplit& sp, double sigma) {
  if (sp.k < 1 || sp.k > 3) throw DomainError("afe_error_budget: k must be 1, 2 or 3");
  if (!(sp.t >= 10.0)) throw DomainError("afe_error_budget: t below validity floor 10");
  double lt = std::log(sp.t);
  double first = std::pow(sp.t, sp.k * (1.0 - sigma) / 3.0 - 1.0);
  double second = std::pow(sp.t, sp.k * (0.5 - sigma) - 2.0) * std::pow(sp.y, sigma) *
                  std::pow(lt, sp.k - 1);
  return first + second;
}

}  // namespace hml
