#include "coefrand/series.hpp"

#include <cmath>
#include <utility>

#include "coefrand/kernels.hpp"

namespace coefrand {

double mean_of(std::span<const double> s) {
  if (s.empty()) throw Error(Errc::InvalidInput, "mean of empty series");
  return kernels::sum(s.data(), s.size()) / static_cast<double>(s.size());
}

Series demean(const Series& s) {
  const double m = mean_of(s);
  Series out(s.size());
  kernels::sub_scalar(s.data(), m, out.data(), s.size());
  return out;
}

namespace {

void check_finite(const Series& s, const char* name) {
  for (double v : s) {
    if (!std::isfinite(v)) throw Error(Errc::InvalidInput, std::string(name) + " contains a non-finite value");
  }
}

}  // namespace

Dataset::Dataset(Series y_in, Series x_lag_in, bool demean_flag)
    : y(std::move(y_in)), x_lag(std::move(x_lag_in)), demeaned(demean_flag) {
  if (y.size() != x_lag.size())
    throw Error(Errc::InvalidInput, "y and x_lag must have identical length");
  if (y.size() < 4)
    throw Error(Errc::InvalidInput, "need T >= 4 observations");
  check_finite(y, "y");
  check_finite(x_lag, "x_lag");
  if (demeaned) {
    y = demean(y);
    x_lag = demean(x_lag);
  }
}

OlsFit ols_beta(const Dataset& data) {
  const std::size_t n = data.size();
  const double sxx = kernels::sumsq(data.x_lag.data(), n);
  if (sxx <= 0.0)
    throw Error(Errc::DegenerateRegressor, "sum of squared x_{t-1} is zero");
  const double sxy = kernels::dot(data.y.data(), data.x_lag.data(), n);
  OlsFit fit;
  fit.beta_hat = sxy / sxx;
  fit.residuals_z = residual_z(data, fit.beta_hat);
  fit.sigma2_hat = kernels::sumsq(fit.residuals_z.data(), n) / static_cast<double>(n);
  return fit;
}

Series residual_z(const Dataset& data, double beta) {
  const std::size_t n = data.size();
  Series z(n);
  for (std::size_t t = 0; t < n; ++t) z[t] = data.y[t] - beta * data.x_lag[t];
  return z;
}

}  // namespace coefrand
