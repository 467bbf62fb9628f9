#include "triq/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <thread>

#include "triq/correlations.hpp"
#include "triq/error.hpp"
#include "triq/thermal.hpp"

namespace triq {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

const std::vector<std::string>& known_quantities() {
  static const std::vector<std::string> q = {"n_ab",  "t3",         "chi_t3",
                                             "chi_m", "thermal_t3", "delta"};
  return q;
}

bool is_thermal(const std::string& q) { return q == "thermal_t3" || q == "delta"; }

bool is_ground(const std::string& q) { return q == "n_ab" || q == "t3"; }

// Shortest round-trip decimal form, for column names like thermal_t3_T0.05.
std::string short_double(double x) {
  char buf[32];
  auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  (void)ec;
  return std::string(buf, p);
}

}  // namespace

double SweepAxis::value_at(int k) const {
  if (count == 1) return min;
  return min + (max - min) * static_cast<double>(k) / (count - 1);
}

void SweepAxis::validate() const {
  if (name != "j" && name != "eta" && name != "omega" && name != "T")
    fail(errc::invalid_config, "unknown sweep axis '" + name + "'");
  if (count < 1) fail(errc::invalid_config, "axis count must be >= 1");
  if (!std::isfinite(min) || !std::isfinite(max))
    fail(errc::invalid_config, "axis bounds must be finite");
  if (count == 1) {
    if (min != max)
      fail(errc::invalid_config, "single-point axis needs min = max");
  } else if (!(min < max)) {
    fail(errc::invalid_config, "axis needs min < max");
  }
}

void SweepSpec::validate() const {
  axis1.validate();
  if (axis2) {
    axis2->validate();
    if (axis2->name == axis1.name)
      fail(errc::invalid_config, "axis2 duplicates axis1");
  }
  for (const SweepAxis* ax : {&axis1, axis2 ? &*axis2 : nullptr}) {
    if (ax && ax->name == "T" && ax->min < 0.0)
      fail(errc::invalid_config, "temperature axis must start at >= 0");
  }
  if (central != 'A' && central != 'B' && central != 'C')
    fail(errc::invalid_config, "central qubit must be A, B or C");
  if (quantities.empty()) fail(errc::invalid_config, "no quantities requested");
  const auto& known = known_quantities();
  bool has_t_axis = axis1.name == "T" || (axis2 && axis2->name == "T");
  for (const auto& q : quantities) {
    if (std::find(known.begin(), known.end(), q) == known.end())
      fail(errc::invalid_config, "unknown quantity '" + q + "'");
    if (is_thermal(q) && !has_t_axis && temperature_list.empty())
      fail(errc::invalid_config,
           "quantity '" + q + "' needs a T axis or a temperature list");
    if (!is_thermal(q) && has_t_axis)
      fail(errc::invalid_config,
           "quantity '" + q + "' does not vary along a T axis");
    if (q == "delta" && !has_t_axis)
      for (double t : temperature_list)
        if (t == 0.0)
          fail(errc::invalid_config, "delta needs temperatures > 0");
  }
  for (double t : temperature_list)
    if (!(t >= 0.0) || !std::isfinite(t))
      fail(errc::invalid_config, "temperatures must be finite and >= 0");
}

namespace {

// Value-column names in row order: plain ground/chi quantities keep their
// name; thermal quantities get one column per listed temperature unless T is
// an axis.
std::vector<std::string> value_columns(const SweepSpec& spec) {
  const bool has_t_axis =
      spec.axis1.name == "T" || (spec.axis2 && spec.axis2->name == "T");
  std::vector<std::string> cols;
  for (const auto& q : spec.quantities) {
    if (is_thermal(q) && !has_t_axis) {
      for (double t : spec.temperature_list)
        cols.push_back(q + "_T" + short_double(t));
    } else {
      cols.push_back(q);
    }
  }
  return cols;
}

struct PointTask {
  CouplingConfig config;
  double axis_temperature = -1.0;  // >= 0 when T is an axis coordinate
};

void apply_axis(const std::string& name, double value, PointTask* task) {
  if (name == "j")
    task->config.j = value;
  else if (name == "eta")
    task->config.eta = value;
  else if (name == "omega")
    task->config.omega = value;
  else
    task->axis_temperature = value;
}

// Evaluate every value column for one grid point. On failure the remaining
// columns stay NaN and the error is recorded; the sweep carries on.
void evaluate_point(const SweepSpec& spec, const PointTask& task, SweepRow* row) {
  bool need_ground = false, need_chi_t3 = false, need_chi_m = false,
       need_thermal = false;
  for (const auto& q : spec.quantities) {
    need_ground |= is_ground(q);
    need_chi_t3 |= q == "chi_t3";
    need_chi_m |= q == "chi_m";
    need_thermal |= is_thermal(q);
  }

  bool one_sided = false;
  bool ground_numeric = false, ground_fallback = false;
  try {
    GroundMeasures gm;
    if (need_ground) {
      gm = ground_measures(task.config, spec.numeric_only);
      ground_numeric = gm.numeric;
      ground_fallback = gm.fallback;
    }
    FdValue chi_t3_v, chi_m_v;
    const double step =
        spec.fd_step > 0.0 ? spec.fd_step : default_fd_step(task.config.j);
    if (need_chi_t3) {
      chi_t3_v = mqc_susceptibility(task.config, spec.central, step, spec.numeric_only);
      one_sided |= chi_t3_v.one_sided;
    }
    if (need_chi_m) {
      chi_m_v = magnetic_susceptibility(task.config, step, spec.numeric_only);
      one_sided |= chi_m_v.one_sided;
    }

    Spectrum thermal_spec;
    double t3_zero = 0.0;
    if (need_thermal) {
      thermal_spec = eigendecompose(build_hamiltonian(task.config));
      t3_zero = t3(gibbs_state(thermal_spec, 0.0).rho, spec.central);
    }
    auto thermal_value = [&](const std::string& q, double t) {
      if (q == "thermal_t3")
        return t3(gibbs_state(thermal_spec, t).rho, spec.central);
      if (!(t > 0.0))
        fail(errc::invalid_parameter, "robustness delta needs temperature > 0");
      return t3_zero - t3(gibbs_state(thermal_spec, t).rho, spec.central);
    };

    size_t col = 0;
    for (const auto& q : spec.quantities) {
      if (q == "n_ab") {
        row->values[col++] = gm.n_ab;
      } else if (q == "t3") {
        row->values[col++] = spec.central == 'A'   ? gm.t3_a
                             : spec.central == 'B' ? gm.t3_b
                                                   : gm.t3_c;
      } else if (q == "chi_t3") {
        row->values[col++] = chi_t3_v.value;
      } else if (q == "chi_m") {
        row->values[col++] = chi_m_v.value;
      } else if (task.axis_temperature >= 0.0) {
        row->values[col++] = thermal_value(q, task.axis_temperature);
      } else {
        for (double t : spec.temperature_list)
          row->values[col++] = thermal_value(q, t);
      }
    }
  } catch (const Error& e) {
    row->error = e.what();  // what() carries the category prefix
  } catch (const std::exception& e) {
    row->error = std::string("error: ") + e.what();
  }

  // Path bookkeeping: ground/chi quantities define the row's path; rows with
  // only thermal quantities always went through the eigensolver.
  const bool ground_based = need_ground || need_chi_t3 || need_chi_m;
  if (!ground_based) {
    row->path = "numeric";
  } else if (ground_fallback) {
    row->path = "numeric-fallback";
  } else if (need_ground) {
    row->path = ground_numeric ? "numeric" : "analytic";
  } else {
    // susceptibilities only: report the configured preference
    row->path = spec.numeric_only ? "numeric" : "analytic";
  }
  if (one_sided) row->path += ";one-sided-fd";
}

int resolve_threads(int requested, size_t rows) {
  int n = requested;
  if (n <= 0) {
    if (const char* env = std::getenv("TRIQ_THREADS")) {
      char* end = nullptr;
      const long v = std::strtol(env, &end, 10);
      if (end != env && *end == '\0' && v > 0) n = static_cast<int>(v);
    }
  }
  if (n <= 0) n = static_cast<int>(std::thread::hardware_concurrency());
  if (n <= 0) n = 1;
  return static_cast<int>(std::min<size_t>(static_cast<size_t>(n), rows));
}

}  // namespace

SweepResult run_sweep(const SweepSpec& spec, int threads) {
  spec.validate();
  spec.fixed.validate();

  SweepResult result;
  result.axes.push_back(spec.axis1);
  if (spec.axis2) result.axes.push_back(*spec.axis2);
  result.columns.push_back(spec.axis1.name);
  if (spec.axis2) result.columns.push_back(spec.axis2->name);
  const std::vector<std::string> vcols = value_columns(spec);
  result.columns.insert(result.columns.end(), vcols.begin(), vcols.end());
  result.columns.push_back("path");

  const int n1 = spec.axis1.count;
  const int n2 = spec.axis2 ? spec.axis2->count : 1;
  const size_t nrows = static_cast<size_t>(n1) * static_cast<size_t>(n2);
  result.rows.resize(nrows);

  auto evaluate_row = [&](size_t r) {
    const int k1 = static_cast<int>(r) / n2;
    const int k2 = static_cast<int>(r) % n2;
    PointTask task;
    task.config = spec.fixed;
    SweepRow& row = result.rows[r];
    row.coords.push_back(spec.axis1.value_at(k1));
    apply_axis(spec.axis1.name, row.coords.back(), &task);
    if (spec.axis2) {
      row.coords.push_back(spec.axis2->value_at(k2));
      apply_axis(spec.axis2->name, row.coords.back(), &task);
    }
    row.values.assign(vcols.size(), kNan);
    evaluate_point(spec, task, &row);
  };

  const int nthreads = resolve_threads(threads, nrows);
  if (nthreads <= 1) {
    for (size_t r = 0; r < nrows; ++r) evaluate_row(r);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(nthreads));
    for (int t = 0; t < nthreads; ++t)
      pool.emplace_back([&] {
        for (size_t r = next.fetch_add(1); r < nrows; r = next.fetch_add(1))
          evaluate_row(r);
      });
    for (auto& th : pool) th.join();
  }

  for (const auto& row : result.rows) result.any_error |= !row.error.empty();
  if (result.any_error) result.columns.push_back("error");
  return result;
}

}  // namespace triq
