#pragma once

#include <optional>
#include <string>
#include <vector>

#include "triq/model.hpp"

namespace triq {

// Deterministic parameter-grid driver behind the sweep and thermal CLI
// commands. Grid points are generated by index arithmetic (never accumulated
// addition), evaluated concurrently, and gathered in row-index order, so the
// output is identical for any worker count.

struct SweepAxis {
  std::string name;  // one of j, eta, omega, T
  double min = 0.0;
  double max = 0.0;
  int count = 0;

  double value_at(int k) const;
  void validate() const;
};

// One grid description. Quantities are drawn from {n_ab, t3, chi_t3, chi_m,
// thermal_t3, delta}; the thermal quantities need a temperature source:
// either a T axis or a non-empty temperature_list (one output column per
// listed temperature). A single-point axis (count = 1 with min = max) is
// allowed so one-off evaluations share the sweep plumbing.
struct SweepSpec {
  SweepAxis axis1;
  std::optional<SweepAxis> axis2;
  CouplingConfig fixed;                 // values for the axes are overwritten
  std::vector<std::string> quantities;
  std::vector<double> temperature_list;
  char central = 'B';
  double fd_step = 0.0;                 // <= 0: default step per point
  bool numeric_only = false;

  void validate() const;
};

struct SweepRow {
  std::vector<double> coords;   // axis values, axis1 first
  std::vector<double> values;   // one per value column; NaN where failed
  std::string path;             // analytic | numeric | numeric-fallback
                                //   (+ ";one-sided-fd" when differenced at j=0)
  std::string error;            // empty on success, else "<category>: detail"
};

struct SweepResult {
  std::vector<SweepAxis> axes;       // the realized axes (1 or 2)
  std::vector<std::string> columns;  // axis names, value names, "path"
                                     //   ("error" appended iff any row failed)
  std::vector<SweepRow> rows;        // row-major over (axis1, axis2)
  bool any_error = false;
};

// threads <= 0 resolves to the TRIQ_THREADS environment variable when set,
// else the hardware concurrency. Failed points carry their error in-row and
// never abort the sweep.
SweepResult run_sweep(const SweepSpec& spec, int threads = 0);

}  // namespace triq
