#pragma once

// Data-parallel scans used by the oracles and the geodesic checks. Each kernel
// has a serial reference and an OpenMP version; both reduce with max/min and
// break ties toward the lowest index, so they agree bit for bit.

#include <cstddef>
#include <functional>
#include <vector>

#include "stabgeo/coords.hpp"
#include "stabgeo/sheaf.hpp"

namespace stabgeo {

enum class Exec { Serial, Parallel };

struct LatticeScan {
  double max_value = 0.0;
  long argmax = 0;
  double min_value = 0.0;
  long argmin = 0;
};

/// max/min of log|tau1-n| - log|tau2-n| over |n| <= window (no tail limit).
LatticeScan scan_lattice_log(Complex tau1, Complex tau2, long window, Exec exec);
/// max/min of arg((tau1-n)/(tau2-n)) over |n| <= window.
LatticeScan scan_lattice_arg(Complex tau1, Complex tau2, long window, Exec exec);

struct ObjectScan {
  double mass_abs = 0.0;  // sup |log(m1/m2)|
  double phase_abs = 0.0;  // sup |phi1 - phi2| over both phi^+ and phi^-
  SheafClass mass_witness = SheafClass::skyscraper();
  SheafClass phase_witness = SheafClass::skyscraper();
  double mass_max = 0.0, mass_min = 0.0;  // range of log(m1/m2)
  double phase_max = 0.0, phase_min = 0.0;  // range of phi1 - phi2
};

ObjectScan scan_objects(const StabPoint& s1, const StabPoint& s2, int window, Exec exec);

/// Symmetric n x n matrix of dist(i, j), row-major.
std::vector<double> distance_matrix(std::size_t n,
                                    const std::function<double(std::size_t, std::size_t)>& dist,
                                    Exec exec);

/// max over i < j < k of |D(i,k) - D(i,j) - D(j,k)|.
double max_triple_defect(const std::vector<double>& matrix, std::size_t n, Exec exec);

}  // namespace stabgeo
