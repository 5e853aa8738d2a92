#pragma once

// Coordinates on the space of stability conditions of the projective line.
//
// A point is stored in one of three canonical forms:
//   Geometric  (tau in the upper half-plane, x, y)
//   Boundary   (tau real and non-integer, x, y)
//   Algebraic  (chamber k, alpha, beta > 1, x, y)
// An algebraic point with beta == 1 is the same point as a Boundary point and
// is always stored in Boundary form.

#include <complex>
#include <stdexcept>
#include <string>
#include <variant>

namespace stabgeo {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ChamberMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

enum class Form { Geometric, Boundary, Algebraic };

std::string to_string(Form form);

struct GeometricCoords {
  Complex tau;
  double x = 0.0;
  double y = 0.0;
};

struct BoundaryCoords {
  double tau = 0.5;
  double x = 0.0;
  double y = 0.0;
};

struct AlgebraicCoords {
  int k = 0;
  double alpha = 0.0;
  double beta = 1.0;
  double x = 0.0;
  double y = 0.0;
};

/// X_k chart coordinates. beta in (0,1) is geometric, beta == 1 the wall,
/// beta > 1 algebraic.
struct ChartPoint {
  int k = 0;
  double alpha = 0.0;
  double beta = 0.5;
  double x = 0.0;
  double y = 0.0;
};

class StabPoint {
 public:
  static StabPoint geometric(Complex tau, double x = 0.0, double y = 0.0);
  static StabPoint boundary(double tau, double x = 0.0, double y = 0.0);
  /// beta == 1 yields the Boundary form.
  static StabPoint algebraic(int k, double alpha, double beta, double x = 0.0,
                             double y = 0.0);

  Form form() const;
  bool is_geometric() const { return form() == Form::Geometric; }
  bool is_boundary() const { return form() == Form::Boundary; }
  bool is_algebraic() const { return form() == Form::Algebraic; }

  const GeometricCoords& geometric() const;
  const BoundaryCoords& boundary() const;
  const AlgebraicCoords& algebraic() const;

  double x() const;
  double y() const;

  /// Chamber of a Boundary or Algebraic point.
  int chamber() const;

  /// Same point with (x, y) replaced.
  StabPoint with_shift_coords(double x, double y) const;

  const std::variant<GeometricCoords, BoundaryCoords, AlgebraicCoords>& coords()
      const {
    return coords_;
  }

 private:
  explicit StabPoint(std::variant<GeometricCoords, BoundaryCoords, AlgebraicCoords> c)
      : coords_(c) {}

  std::variant<GeometricCoords, BoundaryCoords, AlgebraicCoords> coords_;
};

/// Equality of canonical forms, coordinate-wise within tol.
bool approx_equal(const StabPoint& a, const StabPoint& b, double tol = 1e-12);

/// A C-orbit, represented by the orbit member with x = y = 0.
class QuotientPoint {
 public:
  static QuotientPoint of(const StabPoint& s);
  static QuotientPoint geometric(Complex tau);
  static QuotientPoint boundary(double tau);
  static QuotientPoint algebraic(int k, double alpha, double beta);

  const StabPoint& representative() const { return rep_; }
  Form form() const { return rep_.form(); }

 private:
  explicit QuotientPoint(StabPoint rep) : rep_(rep) {}
  StabPoint rep_;
};

bool approx_equal(const QuotientPoint& a, const QuotientPoint& b,
                  double tol = 1e-12);

StabPoint chart_to_stab(const ChartPoint& p);
ChartPoint stab_to_chart(const StabPoint& s, int k);

/// Collapses algebraic points onto the wall beta = 1 of their chamber.
StabPoint project_closure(const StabPoint& s);
QuotientPoint project_closure(const QuotientPoint& q);

/// The C-action: (x, y) += shift.
StabPoint c_act(const StabPoint& s, double shift_x, double shift_y);

/// Closure parameter tau of a Geometric or Boundary point (real for Boundary).
Complex closure_tau(const StabPoint& s);

}  // namespace stabgeo
