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

#ifndef QSDCLUSTER_THEORY_HPP
#define QSDCLUSTER_THEORY_HPP

#include <string>
#include <vector>

namespace qsd {

/// Closed-form constants of the expected (mean-field) model.
///
/// rho is the positive root of rho^2 - a*delta*rho/b - (1-delta) = 0,
/// the ratio between the eigenvector value on the opposite community
/// and on the unrevealed same-side nodes. lambda1/lambda2 are the top
/// eigenvalues of the reduced 2x2 block matrix
/// [[(1-delta)a, b], [(1-delta)b, a]] / (a+b).
struct MeanFieldConstants {
  double a = 0.0, b = 0.0, delta = 0.0;
  double rho = 0.0;
  double gamma = 0.0;
  double cbar = 0.0;
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double eigengap = 0.0;
  // a <= b: the rate exponents may be non-positive.
  bool nonpositive_rate_warning = false;
  // a + b <= 4: the connected-regime guarantee does not apply.
  bool connectivity_warning = false;
};

// Throws std::invalid_argument for b <= 0 or delta outside (0,1).
MeanFieldConstants mean_field_constants(double a, double b, double delta);

/// Exact principal eigenvector of the expected transition submatrix:
/// 1/(gamma*sqrt(n)) on the unrevealed same-side nodes and
/// rho/(gamma*sqrt(n)) on the opposite community, unit L2 norm by
/// construction. Layout: first unrevealed_same entries, then opposite
/// entries; n is inferred as 2*opposite.
std::vector<double> mean_field_eigenvector(const MeanFieldConstants& c,
                                           int unrevealed_same, int opposite);

struct RateResult {
  double value = 0.0;       // the exponent I(alpha, beta)
  double theta_star = 0.0;  // maximizer
  bool boundary = false;    // supremum attained at theta -> 0 (I = 0)
};

/// Chernoff exponent
///   I(alpha,beta) = 1/2 sup_{theta>0} [ a + b
///       - (1-delta) a e^{-theta alpha} - (1-delta) b e^{theta alpha}
///       - delta a e^{-theta beta} - delta b e^{theta beta} ]
/// computed by golden-section search over theta in (0, 50] to
/// |dtheta| <= 1e-10. The objective is concave in theta.
RateResult rate_function(double a, double b, double delta, double alpha,
                         double beta);

/// Predicted error exponents for the three estimators and the
/// minimax lower bound.
struct RateReport {
  MeanFieldConstants constants;
  double I_qsd = 0.0;    // I(rho-1, rho); no closed form
  double I_vote = 0.0;   // I(0,1) = delta*(sqrt(a)-sqrt(b))^2/2
  double I_mixed = 0.0;  // I(rho-1, rho-1) = (sqrt(a)-sqrt(b))^2/2
  double minimax_exponent = 0.0;
  double theta_qsd = 0.0;
  double theta_vote = 0.0;
  double theta_mixed = 0.0;
};

/// Evaluates all exponents; the voting and mixed values are
/// cross-checked against their closed forms to 1e-8 (throws
/// std::runtime_error on disagreement).
RateReport rate_report(double a, double b, double delta);

std::string rate_report_json(const RateReport& r);

}  // namespace qsd

#endif  // QSDCLUSTER_THEORY_HPP
