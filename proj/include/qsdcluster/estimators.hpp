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

#ifndef QSDCLUSTER_ESTIMATORS_HPP
#define QSDCLUSTER_ESTIMATORS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qsdcluster/graph.hpp"
#include "qsdcluster/spectral.hpp"
#include "qsdcluster/theory.hpp"

namespace qsd {

enum class Method { QSD, SimpleVote, Mixed, SpectralBaseline };

std::string method_name(Method m);
Method method_from_name(const std::string& name);

struct MixedConstants {
  double rho = 0.0;
  double gamma = 0.0;
  double cbar = 0.0;
};

/// Per-unrevealed-node real scores for one estimator. Entries are
/// sorted by node id and cover exactly the unrevealed nodes of the
/// analyzed graph.
struct ScoreVector {
  Method method = Method::QSD;
  std::vector<std::pair<int, double>> scores;
  std::optional<MixedConstants> constants;
};

struct Prediction {
  Method method = Method::QSD;
  std::vector<std::pair<int, int>> assignments;  // (node, +1/-1)
  std::optional<double> error_rate;
};

/// Q(u) = mu_minus(u) - mu_plus(u): difference of the two
/// quasi-stationary distributions, one per absorbing revealed set.
/// Requires both transition views to be connected unless the policy
/// restricts them to their largest component, in which case dropped
/// nodes contribute zero mass to the corresponding term.
ScoreVector qsd_score(const LabeledGraph& g, double tol = kDefaultTol,
                      int max_iter = 0,
                      DisconnectedPolicy policy = DisconnectedPolicy::Fail);

/// S(u) = #edges into R+ minus #edges into R-.
ScoreVector simple_vote_score(const LabeledGraph& g);

/// M(u) = cbar * gamma * n * ln(n) * Q(u) - S(u), with the constants
/// taken from the mean-field model at (a, b, delta). n is the
/// generative node count from params.
ScoreVector mixed_score(const LabeledGraph& g, const SbmParams& params,
                        double tol = kDefaultTol, int max_iter = 0,
                        DisconnectedPolicy policy = DisconnectedPolicy::Fail);

/// sgn thresholding; an exact zero maps to +1.
Prediction classify(const ScoreVector& scores);

/// Sign of the second adjacency eigenvector on the unrevealed nodes,
/// with the global sign aligned by majority agreement on the revealed
/// nodes (ties keep the current sign).
Prediction spectral_baseline(const LabeledGraph& g, double tol = kDefaultTol,
                             int max_iter = 0);

/// Normalized Hamming distance between the prediction and the ground
/// truth over the predicted nodes; stores the value on pred and
/// returns it. Throws if ground truth is missing for any such node.
double evaluate(Prediction& pred, const LabeledGraph& g);

}  // namespace qsd

#endif  // QSDCLUSTER_ESTIMATORS_HPP
