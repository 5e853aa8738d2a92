#include "stabgeo/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace stabgeo {

namespace {

// Running max/min with lowest-index tie-breaking.
struct Extremum {
  double max_value = -std::numeric_limits<double>::infinity();
  long argmax = 0;
  double min_value = std::numeric_limits<double>::infinity();
  long argmin = 0;

  void add(double v, long i) {
    if (v > max_value || (v == max_value && i < argmax)) {
      max_value = v;
      argmax = i;
    }
    if (v < min_value || (v == min_value && i < argmin)) {
      min_value = v;
      argmin = i;
    }
  }

  void merge(const Extremum& o) {
    if (o.max_value > max_value || (o.max_value == max_value && o.argmax < argmax)) {
      max_value = o.max_value;
      argmax = o.argmax;
    }
    if (o.min_value < min_value || (o.min_value == min_value && o.argmin < argmin)) {
      min_value = o.min_value;
      argmin = o.argmin;
    }
  }
};

template <class Fn>
Extremum scan_range(long lo, long hi, Exec exec, Fn&& value_at) {
  Extremum total;
  if (exec == Exec::Serial) {
    for (long i = lo; i <= hi; ++i) total.add(value_at(i), i);
    return total;
  }
#pragma omp parallel
  {
    Extremum local;
#pragma omp for schedule(static) nowait
    for (long i = lo; i <= hi; ++i) local.add(value_at(i), i);
#pragma omp critical(stabgeo_scan_merge)
    total.merge(local);
  }
  return total;
}

LatticeScan to_scan(const Extremum& e) {
  return LatticeScan{e.max_value, e.argmax, e.min_value, e.argmin};
}

}  // namespace

LatticeScan scan_lattice_log(Complex tau1, Complex tau2, long window, Exec exec) {
  return to_scan(scan_range(-window, window, exec, [&](long n) {
    const double t = static_cast<double>(n);
    return std::log(std::abs(tau1 - t)) - std::log(std::abs(tau2 - t));
  }));
}

LatticeScan scan_lattice_arg(Complex tau1, Complex tau2, long window, Exec exec) {
  return to_scan(scan_range(-window, window, exec, [&](long n) {
    const double t = static_cast<double>(n);
    return std::arg((tau1 - t) / (tau2 - t));
  }));
}

ObjectScan scan_objects(const StabPoint& s1, const StabPoint& s2, int window, Exec exec) {
  // Object index i in [0, 2*window]: O(i - window); index 2*window+1: O_pt.
  const long last = 2L * window + 1;
  auto object = [&](long i) {
    return i == last ? SheafClass::skyscraper()
                     : SheafClass::line_bundle(static_cast<int>(i - window));
  };
  auto log_ratio = [&](long i) {
    const auto c = object(i);
    return std::log(mass_phase(s1, c).mass / mass_phase(s2, c).mass);
  };
  // Both phi^+ and phi^- differences: index 2i and 2i+1.
  auto phase_diff = [&](long j) {
    const auto c = object(j / 2);
    const auto a = mass_phase(s1, c);
    const auto b = mass_phase(s2, c);
    return (j % 2 == 0) ? a.phase_max - b.phase_max : a.phase_min - b.phase_min;
  };
  const Extremum mass = scan_range(0, last, exec, log_ratio);
  const Extremum phase = scan_range(0, 2 * last + 1, exec, phase_diff);

  ObjectScan out;
  out.mass_max = mass.max_value;
  out.mass_min = mass.min_value;
  out.phase_max = phase.max_value;
  out.phase_min = phase.min_value;
  if (mass.max_value >= -mass.min_value) {
    out.mass_abs = mass.max_value;
    out.mass_witness = object(mass.argmax);
  } else {
    out.mass_abs = -mass.min_value;
    out.mass_witness = object(mass.argmin);
  }
  if (phase.max_value >= -phase.min_value) {
    out.phase_abs = phase.max_value;
    out.phase_witness = object(phase.argmax / 2);
  } else {
    out.phase_abs = -phase.min_value;
    out.phase_witness = object(phase.argmin / 2);
  }
  return out;
}

std::vector<double> distance_matrix(std::size_t n,
                                    const std::function<double(std::size_t, std::size_t)>& dist,
                                    Exec exec) {
  std::vector<double> m(n * n, 0.0);
  const long count = static_cast<long>(n);
  if (exec == Exec::Serial) {
    for (long i = 0; i < count; ++i)
      for (long j = i + 1; j < count; ++j)
        m[i * n + j] = m[j * n + i] = dist(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    return m;
  }
#pragma omp parallel for schedule(dynamic, 4)
  for (long i = 0; i < count; ++i)
    for (long j = i + 1; j < count; ++j)
      m[i * n + j] = m[j * n + i] = dist(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  return m;
}

double max_triple_defect(const std::vector<double>& matrix, std::size_t n, Exec exec) {
  const long count = static_cast<long>(n);
  double worst = 0.0;
  auto row = [&](long i) {
    double w = 0.0;
    for (long j = i + 1; j < count; ++j)
      for (long k = j + 1; k < count; ++k)
        w = std::max(w, std::abs(matrix[i * n + k] - matrix[i * n + j] - matrix[j * n + k]));
    return w;
  };
  if (exec == Exec::Serial) {
    for (long i = 0; i < count; ++i) worst = std::max(worst, row(i));
    return worst;
  }
#pragma omp parallel for schedule(dynamic, 2) reduction(max : worst)
  for (long i = 0; i < count; ++i) worst = std::max(worst, row(i));
  return worst;
}

}  // namespace stabgeo
