#include "triq/thermal.hpp"

#include <cmath>
#include <string>

#include "triq/correlations.hpp"
#include "triq/error.hpp"

namespace triq {

ThermalPoint gibbs_state(const Spectrum& spectrum, double temperature,
                         double degeneracy_tol) {
  if (!(temperature >= 0.0) || !std::isfinite(temperature))
    fail(errc::invalid_parameter,
         "temperature must be >= 0, got " + std::to_string(temperature));

  ThermalPoint tp;
  tp.temperature = temperature;
  const double e0 = spectrum.energies[0];
  double z = 0.0;
  if (temperature == 0.0) {
    // Zero-temperature limit: equal mixture over the (near-)degenerate
    // ground space.
    for (int i = 0; i < 8; ++i) {
      tp.weights[i] = (spectrum.energies[i] - e0 < degeneracy_tol) ? 1.0 : 0.0;
      z += tp.weights[i];
    }
  } else {
    for (int i = 0; i < 8; ++i) {
      tp.weights[i] = std::exp(-(spectrum.energies[i] - e0) / temperature);
      z += tp.weights[i];
    }
  }
  for (double& w : tp.weights) w /= z;

  SymMat rho = SymMat::zero(8);
  for (int k = 0; k < 8; ++k) {
    if (tp.weights[k] == 0.0) continue;
    for (int i = 0; i < 8; ++i)
      for (int jj = i; jj < 8; ++jj)
        rho.at(i, jj) += tp.weights[k] * spectrum.vectors.at(i, k) *
                         spectrum.vectors.at(jj, k);
  }
  for (int i = 0; i < 8; ++i)
    for (int jj = 0; jj < i; ++jj) rho.at(i, jj) = rho.at(jj, i);
  tp.rho = DensityMatrix::checked(rho, "ABC");
  return tp;
}

double thermal_t3(const CouplingConfig& config, double temperature, char central) {
  config.validate();
  const Spectrum spec = eigendecompose(build_hamiltonian(config));
  return t3(gibbs_state(spec, temperature).rho, central);
}

double robustness_delta(const CouplingConfig& config, double temperature,
                        char central) {
  if (!(temperature > 0.0))
    fail(errc::invalid_parameter, "robustness delta needs temperature > 0");
  config.validate();
  const Spectrum spec = eigendecompose(build_hamiltonian(config));
  return t3(gibbs_state(spec, 0.0).rho, central) -
         t3(gibbs_state(spec, temperature).rho, central);
}

std::vector<double> temperature_grid(double tmax, int count) {
  if (count < 2 || !(tmax > 1e-3))
    fail(errc::invalid_parameter, "temperature grid needs count >= 2 and tmax > 1e-3");
  const double t0 = 1e-3;
  const double knee = std::min(0.1, tmax / 2.0);
  int ngeo = std::max(2, 3 * count / 10);
  if (ngeo > count - 1) ngeo = count - 1;
  std::vector<double> grid;
  grid.reserve(static_cast<size_t>(count));
  for (int i = 0; i < ngeo; ++i) {
    // ngeo can clamp down to 1 (count = 2); the lone geometric point is t0.
    const double frac = (ngeo > 1) ? static_cast<double>(i) / (ngeo - 1) : 0.0;
    grid.push_back(t0 * std::pow(knee / t0, frac));
  }
  const int nlin = count - ngeo;
  for (int k = 1; k <= nlin; ++k)
    grid.push_back(knee + (tmax - knee) * static_cast<double>(k) / nlin);
  return grid;
}

double thermal_crossing(double j_magnitude, double eta, double omega, double tlo,
                        double thi, char central) {
  if (!(j_magnitude > 0.0) || !(0.0 < tlo && tlo < thi))
    fail(errc::invalid_parameter, "crossing search needs j > 0 and 0 < tlo < thi");
  CouplingConfig frustrated{j_magnitude, 1.0, eta, omega};
  CouplingConfig nonfrustrated{-j_magnitude, 1.0, eta, omega};
  auto diff = [&](double t) {
    return thermal_t3(frustrated, t, central) - thermal_t3(nonfrustrated, t, central);
  };
  double flo = diff(tlo), fhi = diff(thi);
  if (flo == 0.0) return tlo;
  if (fhi == 0.0) return thi;
  if ((flo > 0.0) == (fhi > 0.0))
    fail(errc::numeric_convergence,
         "thermal T3 difference does not change sign on the given interval");
  while (thi - tlo > 1e-6) {
    const double mid = 0.5 * (tlo + thi);
    const double fm = diff(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      tlo = mid;
      flo = fm;
    } else {
      thi = mid;
    }
  }
  return 0.5 * (tlo + thi);
}

}  // namespace triq
