#include "stabgeo/sheaf.hpp"

#include <cmath>

namespace stabgeo {

std::string SheafClass::name() const {
  return skyscraper_ ? std::string("O_pt") : "O(" + std::to_string(n_) + ")";
}

Complex central_charge(const StabPoint& s, const SheafClass& c) {
  const Complex rot = std::exp(Complex{s.x(), kPi * s.y()});
  if (s.is_algebraic()) {
    const auto& a = s.algebraic();
    // Express (rank, degree) in the basis O(k), O(k+1).
    const double coeff_next = static_cast<double>(c.degree()) - static_cast<double>(c.rank()) * a.k;
    const double coeff_k = c.rank() - coeff_next;
    const Complex z_next = std::exp(Complex{a.alpha, kPi * a.beta});
    return rot * (coeff_k + coeff_next * z_next);
  }
  const Complex tau = closure_tau(s);
  return rot * (-static_cast<double>(c.degree()) + tau * static_cast<double>(c.rank()));
}

MassPhase mass_phase_algebraic_table(const ChartPoint& p, const SheafClass& c) {
  if (!(p.beta >= 1.0)) throw DomainError("algebraic table needs beta >= 1");
  const double ex = std::exp(p.x);
  const double ea = std::exp(p.alpha);
  if (c.is_skyscraper()) return {(ea + 1.0) * ex, p.beta + p.y, p.y + 1.0};
  const int n = c.degree_index();
  if (n < p.k) {
    const double j = static_cast<double>(p.k) - n;
    return {(j * ea + (j + 1.0)) * ex, p.beta + p.y - 1.0, p.y};
  }
  if (n == p.k) return {ex, p.y, p.y};
  if (n == p.k + 1) return {ea * ex, p.beta + p.y, p.beta + p.y};
  const double j = static_cast<double>(n) - p.k;
  return {(j * ea + (j - 1.0)) * ex, p.beta + p.y, p.y + 1.0};
}

MassPhase mass_phase(const StabPoint& s, const SheafClass& c) {
  switch (s.form()) {
    case Form::Geometric: {
      const auto& g = s.geometric();
      if (c.is_skyscraper()) return {std::exp(g.x), g.y + 1.0, g.y + 1.0};
      const Complex z = g.tau - static_cast<double>(c.degree_index());
      const double phase = g.y + std::arg(z) / kPi;
      return {std::exp(g.x) * std::abs(z), phase, phase};
    }
    case Form::Boundary: {
      const auto& b = s.boundary();
      if (c.is_skyscraper()) return {std::exp(b.x), b.y + 1.0, b.y + 1.0};
      const int n = c.degree_index();
      const double phase = (n <= s.chamber()) ? b.y : b.y + 1.0;
      return {std::exp(b.x) * std::abs(b.tau - n), phase, phase};
    }
    case Form::Algebraic: {
      const auto& a = s.algebraic();
      return mass_phase_algebraic_table(ChartPoint{a.k, a.alpha, a.beta, a.x, a.y}, c);
    }
  }
  throw DomainError("unreachable");
}

double mass_in_geometric_chart(const ChartPoint& p, const SheafClass& c) {
  if (!(p.beta > 0.0 && p.beta < 1.0)) throw DomainError("geometric chart needs 0 < beta < 1");
  const Complex w = std::exp(Complex{p.alpha, kPi * p.beta});
  const double ex = std::exp(p.x);
  if (c.is_skyscraper()) return std::abs(w - 1.0) * ex;
  const int n = c.degree_index();
  if (n < p.k) {
    const double j = static_cast<double>(p.k) - n;
    return std::abs(j * w - (j + 1.0)) * ex;
  }
  if (n == p.k) return ex;
  if (n == p.k + 1) return std::exp(p.alpha) * ex;
  const double j = static_cast<double>(n) - p.k;
  return std::abs(j * w - (j - 1.0)) * ex;
}

std::vector<SheafClass> enumerate_test_objects(int n_min, int n_max) {
  if (n_min > n_max) throw DomainError("empty object range");
  std::vector<SheafClass> out;
  out.reserve(static_cast<std::size_t>(n_max - n_min) + 2);
  for (int n = n_min; n <= n_max; ++n) out.push_back(SheafClass::line_bundle(n));
  out.push_back(SheafClass::skyscraper());
  return out;
}

}  // namespace stabgeo
