// Copyright 2026 The qsdcluster Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qsdcluster/theory.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace qsd {
namespace {

constexpr double kThetaLo = 1e-12;
constexpr double kThetaHi = 50.0;
constexpr double kThetaTol = 1e-10;
constexpr double kCrossCheckTol = 1e-8;

double closed_form_vote(double a, double b, double delta) {
  const double d = std::sqrt(a) - std::sqrt(b);
  return delta * d * d / 2.0;
}

double closed_form_mixed(double a, double b) {
  const double d = std::sqrt(a) - std::sqrt(b);
  return d * d / 2.0;
}

}  // namespace

MeanFieldConstants mean_field_constants(double a, double b, double delta) {
  if (b <= 0.0) throw std::invalid_argument("b must be positive");
  if (delta <= 0.0 || delta >= 1.0)
    throw std::invalid_argument("delta must lie in (0,1)");

  MeanFieldConstants c;
  c.a = a;
  c.b = b;
  c.delta = delta;
  c.nonpositive_rate_warning = a <= b;
  c.connectivity_warning = a + b <= 4.0;

  c.rho = (a * delta + std::sqrt(a * a * delta * delta +
                                 4.0 * (1.0 - delta) * b * b)) /
          (2.0 * b);
  c.gamma = std::sqrt((1.0 - delta + c.rho * c.rho) / 2.0);
  c.cbar = 0.25 * (a * (c.rho + (1.0 - delta) * (1.0 - delta)) +
                   b * (c.rho + 1.0) * (1.0 - delta));

  // Eigenvalues of the reduced 2x2 block matrix
  // [[(1-d)a, b], [(1-d)b, a]] / (a+b).
  const double tr = (2.0 - delta) * a / (a + b);
  const double det = (1.0 - delta) * (a * a - b * b) / ((a + b) * (a + b));
  const double disc = std::sqrt(std::max(tr * tr - 4.0 * det, 0.0));
  c.lambda1 = (tr + disc) / 2.0;
  c.lambda2 = (tr - disc) / 2.0;
  c.eigengap = disc;
  return c;
}

std::vector<double> mean_field_eigenvector(const MeanFieldConstants& c,
                                           int unrevealed_same, int opposite) {
  const int n = 2 * opposite;
  const double base = 1.0 / (c.gamma * std::sqrt(static_cast<double>(n)));
  std::vector<double> v(unrevealed_same + opposite, base);
  for (int i = unrevealed_same; i < unrevealed_same + opposite; ++i)
    v[i] = c.rho * base;
  return v;
}

RateResult rate_function(double a, double b, double delta, double alpha,
                         double beta) {
  if (a <= 0.0 || b <= 0.0) throw std::invalid_argument("a, b must be positive");
  if (delta < 0.0 || delta > 1.0)
    throw std::invalid_argument("delta must lie in [0,1]");

  auto objective = [&](double theta) {
    return a + b - (1.0 - delta) * a * std::exp(-theta * alpha) -
           (1.0 - delta) * b * std::exp(theta * alpha) -
           delta * a * std::exp(-theta * beta) -
           delta * b * std::exp(theta * beta);
  };

  // The objective is strictly concave in theta (or constant when
  // alpha = beta = 0), so doubling until it stops increasing brackets
  // the maximizer. The maximizer can be large: for the mixed weights
  // it sits at log(a/b)/(2(rho-1)), and rho - 1 -> 0 as a -> b.
  double hi = kThetaHi;
  while (hi < 1e15 && objective(2.0 * hi) > objective(hi)) hi *= 2.0;
  hi *= 2.0;

  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = kThetaLo;
  double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
  double f1 = objective(x1), f2 = objective(x2);
  while (hi - lo > kThetaTol) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + gr * (hi - lo);
      f2 = objective(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - gr * (hi - lo);
      f1 = objective(x1);
    }
  }

  RateResult out;
  out.theta_star = (lo + hi) / 2.0;
  const double value = objective(out.theta_star);
  // Degenerate weights leave the supremum at 0 up to roundoff in the
  // cancelling exponentials; treat anything below that noise floor as
  // the boundary.
  if (value <= 1e-12 * (a + b)) {
    out.value = 0.0;
    out.theta_star = 0.0;
    out.boundary = true;
  } else {
    out.value = value / 2.0;
  }
  return out;
}

RateReport rate_report(double a, double b, double delta) {
  RateReport r;
  r.constants = mean_field_constants(a, b, delta);
  const double rho = r.constants.rho;

  const RateResult qsd = rate_function(a, b, delta, rho - 1.0, rho);
  const RateResult vote = rate_function(a, b, delta, 0.0, 1.0);
  const RateResult mixed = rate_function(a, b, delta, rho - 1.0, rho - 1.0);

  r.I_qsd = qsd.value;
  r.theta_qsd = qsd.theta_star;
  r.I_vote = vote.value;
  r.theta_vote = vote.theta_star;
  r.I_mixed = mixed.value;
  r.theta_mixed = mixed.theta_star;
  r.minimax_exponent = closed_form_mixed(a, b);

  if (std::abs(r.I_vote - closed_form_vote(a, b, delta)) > kCrossCheckTol)
    throw std::runtime_error("voting exponent disagrees with its closed form");
  if (std::abs(r.I_mixed - closed_form_mixed(a, b)) > kCrossCheckTol)
    throw std::runtime_error("mixed exponent disagrees with its closed form");
  return r;
}

std::string rate_report_json(const RateReport& r) {
  nlohmann::json j;
  j["params"] = {{"a", r.constants.a},
                 {"b", r.constants.b},
                 {"delta", r.constants.delta}};
  j["constants"] = {{"rho", r.constants.rho},
                    {"gamma", r.constants.gamma},
                    {"cbar", r.constants.cbar},
                    {"lambda1", r.constants.lambda1},
                    {"lambda2", r.constants.lambda2},
                    {"eigengap", r.constants.eigengap}};
  j["exponents"] = {{"I_qsd", r.I_qsd},
                    {"I_vote", r.I_vote},
                    {"I_mixed", r.I_mixed},
                    {"minimax", r.minimax_exponent}};
  j["theta_star"] = {{"qsd", r.theta_qsd},
                     {"vote", r.theta_vote},
                     {"mixed", r.theta_mixed}};
  j["warnings"] = nlohmann::json::array();
  if (r.constants.nonpositive_rate_warning)
    j["warnings"].push_back("a <= b: rate exponents may be non-positive");
  if (r.constants.connectivity_warning)
    j["warnings"].push_back(
        "a + b <= 4: connected-regime rate guarantee does not apply");
  return j.dump(2);
}

}  // namespace qsd
