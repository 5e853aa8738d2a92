#include "stabgeo/coords.hpp"

#include <cmath>

namespace stabgeo {

namespace {

bool is_integer(double t) { return std::floor(t) == t; }

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

}  // namespace

std::string to_string(Form form) {
  switch (form) {
    case Form::Geometric:
      return "geometric";
    case Form::Boundary:
      return "boundary";
    case Form::Algebraic:
      return "algebraic";
  }
  return "unknown";
}

StabPoint StabPoint::geometric(Complex tau, double x, double y) {
  if (!(tau.imag() > 0.0) || !std::isfinite(tau.real()) || !std::isfinite(tau.imag()))
    throw DomainError("geometric point needs Im tau > 0");
  if (!std::isfinite(x) || !std::isfinite(y)) throw DomainError("non-finite shift");
  return StabPoint(GeometricCoords{tau, x, y});
}

StabPoint StabPoint::boundary(double tau, double x, double y) {
  if (!std::isfinite(tau) || is_integer(tau))
    throw DomainError("boundary point needs tau in R \\ Z");
  if (!std::isfinite(x) || !std::isfinite(y)) throw DomainError("non-finite shift");
  return StabPoint(BoundaryCoords{tau, x, y});
}

StabPoint StabPoint::algebraic(int k, double alpha, double beta, double x, double y) {
  if (!(beta >= 1.0) || !std::isfinite(beta) || !std::isfinite(alpha))
    throw DomainError("algebraic point needs beta >= 1");
  if (!std::isfinite(x) || !std::isfinite(y)) throw DomainError("non-finite shift");
  if (beta == 1.0) return chart_to_stab(ChartPoint{k, alpha, 1.0, x, y});
  return StabPoint(AlgebraicCoords{k, alpha, beta, x, y});
}

Form StabPoint::form() const {
  switch (coords_.index()) {
    case 0:
      return Form::Geometric;
    case 1:
      return Form::Boundary;
    default:
      return Form::Algebraic;
  }
}

const GeometricCoords& StabPoint::geometric() const {
  return std::get<GeometricCoords>(coords_);
}
const BoundaryCoords& StabPoint::boundary() const {
  return std::get<BoundaryCoords>(coords_);
}
const AlgebraicCoords& StabPoint::algebraic() const {
  return std::get<AlgebraicCoords>(coords_);
}

double StabPoint::x() const {
  return std::visit([](const auto& c) { return c.x; }, coords_);
}

double StabPoint::y() const {
  return std::visit([](const auto& c) { return c.y; }, coords_);
}

int StabPoint::chamber() const {
  if (is_boundary()) return static_cast<int>(std::floor(boundary().tau));
  if (is_algebraic()) return algebraic().k;
  throw DomainError("geometric points lie in every chart");
}

StabPoint StabPoint::with_shift_coords(double x, double y) const {
  auto copy = coords_;
  std::visit(
      [&](auto& c) {
        c.x = x;
        c.y = y;
      },
      copy);
  return StabPoint(copy);
}

bool approx_equal(const StabPoint& a, const StabPoint& b, double tol) {
  if (a.form() != b.form()) return false;
  if (!close(a.x(), b.x(), tol) || !close(a.y(), b.y(), tol)) return false;
  switch (a.form()) {
    case Form::Geometric:
      return std::abs(a.geometric().tau - b.geometric().tau) <= tol;
    case Form::Boundary:
      return close(a.boundary().tau, b.boundary().tau, tol);
    case Form::Algebraic:
      return a.algebraic().k == b.algebraic().k &&
             close(a.algebraic().alpha, b.algebraic().alpha, tol) &&
             close(a.algebraic().beta, b.algebraic().beta, tol);
  }
  return false;
}

QuotientPoint QuotientPoint::of(const StabPoint& s) {
  return QuotientPoint(s.with_shift_coords(0.0, 0.0));
}
QuotientPoint QuotientPoint::geometric(Complex tau) {
  return QuotientPoint(StabPoint::geometric(tau));
}
QuotientPoint QuotientPoint::boundary(double tau) {
  return QuotientPoint(StabPoint::boundary(tau));
}
QuotientPoint QuotientPoint::algebraic(int k, double alpha, double beta) {
  return of(StabPoint::algebraic(k, alpha, beta));
}

bool approx_equal(const QuotientPoint& a, const QuotientPoint& b, double tol) {
  return approx_equal(a.representative(), b.representative(), tol);
}

StabPoint chart_to_stab(const ChartPoint& p) {
  if (!(p.beta > 0.0)) throw DomainError("chart point needs beta > 0");
  if (p.beta > 1.0) return StabPoint::algebraic(p.k, p.alpha, p.beta, p.x, p.y);
  if (p.beta == 1.0) {
    const double ea = std::exp(p.alpha);
    const double tau = p.k + 1.0 / (1.0 + ea);
    return StabPoint::boundary(tau, p.x + std::log1p(ea), p.y);
  }
  // 1 - e^{alpha + i pi beta}, written to avoid cancellation near alpha = 0, beta = 0.
  const double theta = kPi * p.beta;
  const double half = std::sin(0.5 * theta);
  const double re = -std::expm1(p.alpha) * std::cos(theta) + 2.0 * half * half;
  const double im = -std::exp(p.alpha) * std::sin(theta);
  const Complex one_minus{re, im};
  const Complex tau = static_cast<double>(p.k) + 1.0 / one_minus;
  return StabPoint::geometric(tau, p.x + std::log(std::abs(one_minus)),
                              p.y + std::arg(one_minus) / kPi);
}

ChartPoint stab_to_chart(const StabPoint& s, int k) {
  switch (s.form()) {
    case Form::Geometric: {
      const auto& g = s.geometric();
      const Complex u = g.tau - static_cast<double>(k);
      const Complex u1 = u - 1.0;
      // e^{alpha + i pi beta} = (u - 1) / u; both args lie in (0, pi).
      const double alpha = std::log(std::abs(u1)) - std::log(std::abs(u));
      const double beta = (std::arg(u1) - std::arg(u)) / kPi;
      return ChartPoint{k, alpha, beta, g.x + std::log(std::abs(u)),
                        g.y + std::arg(u) / kPi};
    }
    case Form::Boundary: {
      const auto& b = s.boundary();
      const double t = b.tau - k;
      if (!(t > 0.0 && t < 1.0))
        throw ChamberMismatch("boundary point is not in chamber " + std::to_string(k));
      return ChartPoint{k, std::log1p(-t) - std::log(t), 1.0, b.x + std::log(t), b.y};
    }
    case Form::Algebraic: {
      const auto& a = s.algebraic();
      if (a.k != k)
        throw ChamberMismatch("algebraic point lies in chamber " + std::to_string(a.k) +
                              ", not " + std::to_string(k));
      return ChartPoint{a.k, a.alpha, a.beta, a.x, a.y};
    }
  }
  throw DomainError("unreachable");
}

StabPoint project_closure(const StabPoint& s) {
  if (!s.is_algebraic()) return s;
  const auto& a = s.algebraic();
  return chart_to_stab(ChartPoint{a.k, a.alpha, 1.0, a.x, a.y});
}

QuotientPoint project_closure(const QuotientPoint& q) {
  return QuotientPoint::of(project_closure(q.representative()));
}

StabPoint c_act(const StabPoint& s, double shift_x, double shift_y) {
  return s.with_shift_coords(s.x() + shift_x, s.y() + shift_y);
}

Complex closure_tau(const StabPoint& s) {
  switch (s.form()) {
    case Form::Geometric:
      return s.geometric().tau;
    case Form::Boundary:
      return Complex{s.boundary().tau, 0.0};
    case Form::Algebraic:
      break;
  }
  throw DomainError("closure_tau needs a geometric or boundary point");
}

}  // namespace stabgeo
