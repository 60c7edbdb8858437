#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "coefrand/series.hpp"

namespace coefrand {

// sigma^2_t = c0 + c1 sigma^2_{t-1} + c2 shock^2_{t-1}
struct GarchParams {
  double c0 = 1.0;
  double c1 = 0.0;
  double c2 = 0.0;
};

// Which innovation carries the GARCH recursion.
enum class GarchPlacement { None, OnV, OnEpsX };

// How the coefficient process is parameterized: a stationary AR(1) root
// rho_beta with unit-variance normalization, or a near-integrated root
// 1 + c_beta / T with no normalization.
enum class CoefficientMode { StationaryRho, NearIntegratedC };

// Full generative specification for one simulated sample:
//   y_t = alpha_y + (beta + omega_beta s_{beta,t}) x_{t-1} + eps_{y,t}
//   x_t = alpha_x + s_{x,t},  s_{x,t} = rho_x s_{x,t-1} + eps_{x,t},  s_{x,0} = 0
//   eps_{y,t} = gamma eps_{x,t} + v_t
struct DgpConfig {
  std::size_t T = 100;
  double beta = 0.0;
  double omega_beta2 = 0.0;
  double rho_x = 0.95;
  CoefficientMode coef_mode = CoefficientMode::StationaryRho;
  double rho_beta = 0.6;   // used in StationaryRho mode
  double c_beta = 0.0;     // used in NearIntegratedC mode
  double gamma = -0.8;
  GarchParams garch;
  GarchPlacement garch_placement = GarchPlacement::OnV;
  double alpha_y = 0.0;
  double alpha_x = 0.0;
  double v_shock_variance = 0.36;  // Var(u_{v,t})
  std::uint64_t seed = 1;

  // local-to-unity persistence implied by rho_x at this T
  double implied_c_x() const { return static_cast<double>(T) * (rho_x - 1.0); }

  void validate() const;  // throws InvalidConfig
};

struct SimulatedPath {
  Series y;       // y_1..y_T
  Series x;       // levels x_0..x_T
  Series s_beta;  // coefficient path s_{beta,1}..s_{beta,T}, kept for diagnostics
};

// Deterministic function of config (including config.seed).
SimulatedPath simulate(const DgpConfig& config);

// DGP1..DGP3: GARCH on v_t with shock variances diag(1, 0.36, 1) (weak,
// moderate, strong). DGP4..DGP6: GARCH on eps_{x,t} with diag(1, 1, 1).
// All use gamma = -0.8 and rho_x = 0.95.
DgpConfig preset_dgp(std::string_view name, std::size_t T, double rho_beta, double omega_beta2,
                     std::uint64_t seed);

// Pairs y_1..y_T with x_0..x_{T-1}.
Dataset to_dataset(const SimulatedPath& path, bool demean_flag = true);

// Flat key = value text round-trip for CLI use.
std::string config_to_kv(const DgpConfig& config);
DgpConfig config_from_kv(std::istream& in);

}  // namespace coefrand
