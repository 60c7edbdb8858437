#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "coefrand/error.hpp"

namespace coefrand {

// A plain ordered real sequence. Containers validate finiteness where it
// matters (Dataset construction, CSV ingestion).
using Series = std::vector<double>;

double mean_of(std::span<const double> s);

// Returns s - mean(s). Idempotent up to round-off.
Series demean(const Series& s);

// The regression's raw material: y_t paired with x_{t-1}, entry t of x_lag
// holding x_{t-1}. When demean_flag is set (the default, matching how every
// statistic is computed on real data), both series are demeaned at
// construction; the flag is stored so subsample windows know to re-demean
// locally. Disable it only for the zero-intercept simulation designs.
struct Dataset {
  Series y;
  Series x_lag;
  bool demeaned = false;

  Dataset(Series y_in, Series x_lag_in, bool demean_flag = true);

  std::size_t size() const { return y.size(); }
};

struct OlsFit {
  double beta_hat = 0.0;
  Series residuals_z;   // z_t(beta_hat) = y_t - beta_hat * x_{t-1}
  double sigma2_hat = 0.0;  // T^-1 sum z_t^2
};

// Slope-through-origin OLS: beta_hat = sum(y_t x_{t-1}) / sum(x_{t-1}^2).
// Throws DegenerateRegressor when the predictor is identically zero.
OlsFit ols_beta(const Dataset& data);

// z_t(beta) = y_t - beta * x_{t-1}, entrywise.
Series residual_z(const Dataset& data, double beta);

}  // namespace coefrand
