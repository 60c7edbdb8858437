#include "coefrand/teststats.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>

#include "coefrand/kernels.hpp"

namespace coefrand {

const char* to_string(StatKind kind) {
  switch (kind) {
    case StatKind::LM: return "lm";
    case StatKind::LMstar: return "lm_star";
    case StatKind::Wald: return "wald";
    case StatKind::WaldStar: return "wald_star";
    case StatKind::Sum: return "sum";
    case StatKind::Product: return "product";
    case StatKind::LTLM: return "lt_lm";
  }
  return "?";
}

StatKind stat_kind_from_string(std::string_view name) {
  if (name == "lm") return StatKind::LM;
  if (name == "lm_star" || name == "lmstar") return StatKind::LMstar;
  if (name == "wald") return StatKind::Wald;
  if (name == "wald_star" || name == "waldstar") return StatKind::WaldStar;
  if (name == "sum") return StatKind::Sum;
  if (name == "product" || name == "prod") return StatKind::Product;
  if (name == "lt_lm" || name == "ltlm" || name == "lt") return StatKind::LTLM;
  throw Error(Errc::InvalidInput, "unknown statistic name: " + std::string(name));
}

double parzen_weight(double u) {
  if (u < 0.0 || !std::isfinite(u)) throw Error(Errc::InvalidInput, "Parzen weight needs u >= 0");
  if (u <= 0.5) return 1.0 - 6.0 * u * u + 6.0 * u * u * u;
  if (u <= 1.0) {
    const double v = 1.0 - u;
    return 2.0 * v * v * v;
  }
  return 0.0;
}

int truncation_length(std::size_t T) {
  const int l = static_cast<int>(std::floor(4.0 * std::cbrt(static_cast<double>(T) / 100.0)));
  return std::max(l, 1);
}

namespace {

constexpr double kGramSingularTol = 1e-12;   // on 1 - corr(x1, x2)^2
constexpr double kRssRelZeroTol = 1e-14;     // RSS relative to total SS

struct View {
  const double* y;
  const double* x;
  std::size_t n;
};

View prepared(std::span<const double> y, std::span<const double> x, bool window_demean,
              StatWorkspace& ws) {
  const std::size_t n = y.size();
  if (n != x.size()) throw Error(Errc::InvalidInput, "window length mismatch");
  if (n < 4) throw Error(Errc::InvalidInput, "window shorter than 4");
  if (!window_demean) return {y.data(), x.data(), n};
  ws.yd.resize(n);
  ws.xd.resize(n);
  const double my = kernels::sum(y.data(), n) / static_cast<double>(n);
  const double mx = kernels::sum(x.data(), n) / static_cast<double>(n);
  kernels::sub_scalar(y.data(), my, ws.yd.data(), n);
  kernels::sub_scalar(x.data(), mx, ws.xd.data(), n);
  return {ws.yd.data(), ws.xd.data(), n};
}

struct Ols {
  double beta;
  double sxx;
  double sigma2;  // T^-1 sum z^2, with z left in ws.z
};

Ols window_ols(const View& v, StatWorkspace& ws) {
  const double sxx = kernels::sumsq(v.x, v.n);
  if (sxx <= 0.0) throw Error(Errc::DegenerateRegressor, "sum of squared x is zero");
  const double beta = kernels::dot(v.y, v.x, v.n) / sxx;
  ws.z.resize(v.n);
  for (std::size_t t = 0; t < v.n; ++t) ws.z[t] = v.y[t] - beta * v.x[t];
  const double sigma2 = kernels::sumsq(ws.z.data(), v.n) / static_cast<double>(v.n);
  return {beta, sxx, sigma2};
}

double lm_core(const View& v, StatWorkspace& ws, bool robust) {
  const Ols ols = window_ols(v, ws);
  ws.w.resize(v.n);
  kernels::mul(v.x, ws.z.data(), ws.w.data(), v.n);
  const double num = kernels::prefix_square_sum(ws.w.data(), v.n);
  const double n = static_cast<double>(v.n);
  if (robust) {
    const double denom = kernels::sumsq(ws.w.data(), v.n);
    if (denom <= 0.0) throw Error(Errc::ZeroDenominator, "all x_{t-1} z_t products are zero");
    return num / (n * denom);
  }
  if (ols.sigma2 <= 0.0) throw Error(Errc::ZeroResidualVariance, "exact fit, sigma2_hat is zero");
  return num / (n * ols.sigma2 * ols.sxx);
}

// Second-stage pieces. xi ends up in ws.xi; the scaled gram factors are kept
// so the Wald quadratic forms stay well conditioned for tiny-scale predictors.
struct Stage2 {
  double g11, g12, g22;
  double n1, n2, r, det_s;  // column norms, correlation, 1 - r^2
  double c1, c2;            // X'Z
  double th1, th2;
  double sum_x;
  double rss;
  double total_ss;  // sum of squared demeaned z^2
};

Stage2 stage2_core(const View& v, const double* z, StatWorkspace& ws) {
  const std::size_t n = v.n;
  const double dn = static_cast<double>(n);
  ws.z2.resize(n);
  ws.x1.resize(n);
  ws.x2.resize(n);
  ws.xi.resize(n);
  kernels::mul(z, z, ws.z2.data(), n);
  kernels::sub_scalar(ws.z2.data(), kernels::sum(ws.z2.data(), n) / dn, ws.z2.data(), n);
  const double mx = kernels::sum(v.x, n) / dn;
  kernels::sub_scalar(v.x, mx, ws.x1.data(), n);
  kernels::mul(v.x, v.x, ws.x2.data(), n);
  kernels::sub_scalar(ws.x2.data(), kernels::sum(ws.x2.data(), n) / dn, ws.x2.data(), n);

  Stage2 s{};
  s.g11 = kernels::sumsq(ws.x1.data(), n);
  s.g22 = kernels::sumsq(ws.x2.data(), n);
  s.g12 = kernels::dot(ws.x1.data(), ws.x2.data(), n);
  s.n1 = std::sqrt(s.g11);
  s.n2 = std::sqrt(s.g22);
  if (!(s.n1 > 0.0) || !(s.n2 > 0.0))
    throw Error(Errc::SingularGram, "a second-stage regressor is constant");
  s.r = s.g12 / (s.n1 * s.n2);
  s.det_s = 1.0 - s.r * s.r;
  if (s.det_s <= kGramSingularTol)
    throw Error(Errc::SingularGram, "x and x^2 are collinear in this sample");
  s.c1 = kernels::dot(ws.x1.data(), ws.z2.data(), n);
  s.c2 = kernels::dot(ws.x2.data(), ws.z2.data(), n);
  const double u1 = s.c1 / s.n1;
  const double u2 = s.c2 / s.n2;
  s.th1 = (u1 - s.r * u2) / s.det_s / s.n1;
  s.th2 = (u2 - s.r * u1) / s.det_s / s.n2;
  for (std::size_t t = 0; t < n; ++t)
    ws.xi[t] = ws.z2[t] - s.th1 * ws.x1[t] - s.th2 * ws.x2[t];
  s.rss = kernels::sumsq(ws.xi.data(), n);
  s.total_ss = kernels::sumsq(ws.z2.data(), n);
  s.sum_x = kernels::sum(v.x, n);
  return s;
}

// F' (X'X)^{-1} F through the scaled factors.
double inv_gram_quadform(const Stage2& s, double f1, double f2) {
  const double u1 = f1 / s.n1;
  const double u2 = f2 / s.n2;
  const double q = (u1 * u1 - 2.0 * s.r * u1 * u2 + u2 * u2) / s.det_s;
  return std::max(q, 0.0);
}

void check_stage2_variance(const Stage2& s) {
  if (s.total_ss <= 0.0 || s.rss <= s.total_ss * kRssRelZeroTol)
    throw Error(Errc::ZeroResidualVariance, "second-stage residual variance is zero");
}

double wald_core(const View& v, StatWorkspace& ws) {
  window_ols(v, ws);
  const Stage2 s = stage2_core(v, ws.z.data(), ws);
  check_stage2_variance(s);
  const double sigma2_xi = s.rss / static_cast<double>(v.n);
  return inv_gram_quadform(s, s.c1, s.c2) / sigma2_xi;
}

LongRunEstimates hac_estimates(const double* xi, std::size_t n, const double* x, int l,
                               std::vector<double>& dx) {
  if (l < 1) throw Error(Errc::InvalidInput, "truncation length must be positive");
  if (static_cast<std::size_t>(l) >= n)
    throw Error(Errc::TruncationTooLarge, "truncation length >= sample size");
  const double dn = static_cast<double>(n);
  const double short_run = kernels::sumsq(xi, n) / dn;
  LongRunEstimates est;
  est.truncation_l = l;
  double s2 = short_run;
  double lam = 0.0;
  dx.resize(n - 1);
  for (std::size_t m = 0; m + 1 < n; ++m) dx[m] = x[m + 1] - x[m];
  for (int i = 1; i <= l; ++i) {
    const double w = parzen_weight(static_cast<double>(i) / (l + 1));
    s2 += w * 2.0 / dn * kernels::dot(xi, xi + i, n - i);
    lam += w / dn * kernels::dot(dx.data(), xi + i, n - i);
  }
  const double floor_value = short_run * 1e-6;
  if (s2 < floor_value) {
    s2 = floor_value;
    est.clamped = true;
  }
  est.sigma2_xi_lr = s2;
  est.lambda_x_eta = lam;
  return est;
}

double wald_star_core(const View& v, StatWorkspace& ws, int truncation) {
  window_ols(v, ws);
  const Stage2 s = stage2_core(v, ws.z.data(), ws);
  check_stage2_variance(s);
  const int l = truncation > 0 ? truncation : truncation_length(v.n);
  const LongRunEstimates lr = hac_estimates(ws.xi.data(), v.n, v.x, l, ws.dx);
  if (lr.sigma2_xi_lr <= 0.0)
    throw Error(Errc::ZeroLongRunVariance, "long-run variance estimate is zero");
  const double r1 = static_cast<double>(v.n) * lr.lambda_x_eta;
  const double r2 = 2.0 * lr.lambda_x_eta * s.sum_x;
  return inv_gram_quadform(s, s.c1 - r1, s.c2 - r2) / lr.sigma2_xi_lr;
}

double lt_core(const View& v, StatWorkspace& ws) {
  const Ols ols = window_ols(v, ws);
  ws.x2.resize(v.n);
  ws.z2.resize(v.n);
  kernels::mul(v.x, v.x, ws.x2.data(), v.n);
  kernels::sub_scalar(ws.x2.data(), kernels::sum(ws.x2.data(), v.n) / static_cast<double>(v.n),
                      ws.x2.data(), v.n);
  const double sx2 = kernels::sumsq(ws.x2.data(), v.n);
  if (sx2 <= 0.0) throw Error(Errc::DegenerateRegressor, "x^2 is constant");
  if (ols.sigma2 <= 0.0) throw Error(Errc::ZeroResidualVariance, "exact fit, sigma2_hat is zero");
  kernels::mul(ws.z.data(), ws.z.data(), ws.z2.data(), v.n);
  const double cov = kernels::dot(ws.x2.data(), ws.z2.data(), v.n);
  return cov * cov / (2.0 * ols.sigma2 * ols.sigma2 * sx2);
}

}  // namespace

double eval_stat(StatKind kind, std::span<const double> y, std::span<const double> x,
                 bool window_demean, StatFamily family, StatWorkspace& ws, int truncation) {
  const View v = prepared(y, x, window_demean, ws);
  switch (kind) {
    case StatKind::LM:
      return lm_core(v, ws, /*robust=*/false);
    case StatKind::LMstar:
      return lm_core(v, ws, /*robust=*/true);
    case StatKind::Wald:
      return wald_core(v, ws);
    case StatKind::WaldStar:
      return wald_star_core(v, ws, truncation);
    case StatKind::LTLM:
      return lt_core(v, ws);
    case StatKind::Sum:
    case StatKind::Product: {
      double lm_part, wald_part;
      if (family == StatFamily::Robust) {
        lm_part = lm_core(v, ws, /*robust=*/true);
        wald_part = wald_star_core(v, ws, truncation);
      } else {
        lm_part = lm_core(v, ws, /*robust=*/false);
        wald_part = wald_core(v, ws);
      }
      return kind == StatKind::Sum ? wald_part + lm_part : wald_part * lm_part;
    }
  }
  throw Error(Errc::InvalidInput, "unhandled statistic kind");
}

double lm_stat(const Dataset& data) {
  StatWorkspace ws;
  return eval_stat(StatKind::LM, data.y, data.x_lag, false, StatFamily::Robust, ws);
}

double lm_star_stat(const Dataset& data) {
  StatWorkspace ws;
  return eval_stat(StatKind::LMstar, data.y, data.x_lag, false, StatFamily::Robust, ws);
}

SecondStage second_stage(const Dataset& data, double beta) {
  StatWorkspace ws;
  const View v{data.y.data(), data.x_lag.data(), data.size()};
  ws.z.resize(v.n);
  for (std::size_t t = 0; t < v.n; ++t) ws.z[t] = v.y[t] - beta * v.x[t];
  const Stage2 s = stage2_core(v, ws.z.data(), ws);
  SecondStage out;
  out.z2_demeaned = ws.z2;
  out.x1_demeaned = ws.x1;
  out.x2_demeaned = ws.x2;
  out.theta_hat[0] = s.th1;
  out.theta_hat[1] = s.th2;
  out.xi_residuals = ws.xi;
  out.gram[0][0] = s.g11;
  out.gram[0][1] = s.g12;
  out.gram[1][0] = s.g12;
  out.gram[1][1] = s.g22;
  out.sum_x = s.sum_x;
  return out;
}

double wald_stat(const Dataset& data) {
  StatWorkspace ws;
  return eval_stat(StatKind::Wald, data.y, data.x_lag, false, StatFamily::Robust, ws);
}

LongRunEstimates long_run_estimates(const SecondStage& stage, const Series& x_lag, int l) {
  if (stage.xi_residuals.size() != x_lag.size())
    throw Error(Errc::InvalidInput, "xi residuals and x_lag length mismatch");
  std::vector<double> dx;
  return hac_estimates(stage.xi_residuals.data(), stage.xi_residuals.size(), x_lag.data(), l, dx);
}

double wald_star_stat(const Dataset& data) {
  StatWorkspace ws;
  return eval_stat(StatKind::WaldStar, data.y, data.x_lag, false, StatFamily::Robust, ws);
}

double combined_stat(StatKind kind, const Dataset& data, StatFamily family) {
  if (kind != StatKind::Sum && kind != StatKind::Product)
    throw Error(Errc::InvalidInput, "combined_stat handles Sum and Product only");
  StatWorkspace ws;
  return eval_stat(kind, data.y, data.x_lag, false, family, ws);
}

double lt_lm_stat(const Dataset& data) {
  StatWorkspace ws;
  return eval_stat(StatKind::LTLM, data.y, data.x_lag, false, StatFamily::Robust, ws);
}

}  // namespace coefrand
