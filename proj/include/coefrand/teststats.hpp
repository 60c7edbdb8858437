#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "coefrand/series.hpp"

namespace coefrand {

enum class StatKind { LM, LMstar, Wald, WaldStar, Sum, Product, LTLM };

// Which constituents Sum and Product combine: the heteroskedasticity-robust
// pair (LMstar, WaldStar) or the homoskedastic pair (LM, Wald). Robust is
// the default everywhere downstream.
enum class StatFamily { Robust, Homoskedastic };

const char* to_string(StatKind kind);
StatKind stat_kind_from_string(std::string_view name);

// LM and LMstar share block-grid settings; everything else uses the
// Wald-family settings.
inline bool is_lm_family(StatKind kind) { return kind == StatKind::LM || kind == StatKind::LMstar; }

// Second-stage regression of demeaned squared residuals on the demeaned
// predictor and its demeaned square, fitted without intercept.
struct SecondStage {
  Series z2_demeaned;    // widetilde{z_t^2}
  Series x1_demeaned;    // x_{t-1} - mean
  Series x2_demeaned;    // x_{t-1}^2 - mean
  double theta_hat[2] = {0.0, 0.0};  // (delta_hat, omega_beta2_hat)
  Series xi_residuals;
  double gram[2][2] = {{0.0, 0.0}, {0.0, 0.0}};  // X'X
  double sum_x = 0.0;    // sum of x_{t-1} as passed in (drives the W* correction)
};

struct LongRunEstimates {
  double sigma2_xi_lr = 0.0;
  double lambda_x_eta = 0.0;
  int truncation_l = 0;
  bool clamped = false;  // set when the kernel sum went negative and was floored
};

// Parzen kernel weight: 1-6u^2+6u^3 on [0,1/2], 2(1-u)^3 on (1/2,1], 0 beyond.
double parzen_weight(double u);

// floor(4 (T/100)^{1/3}), floored at 1.
int truncation_length(std::size_t T);

double lm_stat(const Dataset& data);
double lm_star_stat(const Dataset& data);
SecondStage second_stage(const Dataset& data, double beta);
double wald_stat(const Dataset& data);
LongRunEstimates long_run_estimates(const SecondStage& stage, const Series& x_lag, int l);
double wald_star_stat(const Dataset& data);
double combined_stat(StatKind kind, const Dataset& data, StatFamily family = StatFamily::Robust);
double lt_lm_stat(const Dataset& data);

// Scratch buffers reused across the window loop in the subsampling module.
// One instance per thread; not shared.
struct StatWorkspace {
  std::vector<double> yd, xd, z, w, z2, x2, xi, dx;
};

// Evaluates `kind` on the (y, x) window. When window_demean is set the
// window is demeaned locally before anything else, which is how subsample
// statistics extend the full-sample demeaning convention. truncation < 0
// means truncation_length(window size). This is the single code path behind
// the public per-Dataset wrappers above.
double eval_stat(StatKind kind, std::span<const double> y, std::span<const double> x,
                 bool window_demean, StatFamily family, StatWorkspace& ws,
                 int truncation = -1);

}  // namespace coefrand
