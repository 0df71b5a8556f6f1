// Copyright 2026 The jonesdqc1 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef JONESDQC1_DISCRIMINATE_HPP
#define JONESDQC1_DISCRIMINATE_HPP

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "jonesdqc1/braid.hpp"
#include "jonesdqc1/dqc1.hpp"

namespace jonesdqc1 {

/// Exact Jones values closer than this are treated as the same knot.
inline constexpr double kClassTolerance = 1e-6;
/// Covariances with an eigenvalue below kSigmaMin^2 get kSigmaMin^2 I added.
inline constexpr double kSigmaMin = 1e-6;
inline constexpr int kBoundaryPoints = 256;
/// ½(134/135 + 15/18), reported alongside the obtained rate for context.
inline constexpr double kReferenceSuccessRate = 0.5 * (134.0 / 135.0 + 15.0 / 18.0);

/// Which trace closures take part in class clustering.
enum class ClosureFilter {
    /// Knots and links. With 4 strands and 3 crossings this yields the six
    /// distinct Jones values (class sizes 3, 90, 36, 48, 36, 3).
    all_closures,
    /// One-component closures only. With 4 strands and 3 crossings every such
    /// word uses each generator once, so all of them close to the unknot.
    knots_only,
};

struct PanelEntry {
    BraidWord braid;
    int knot_class = 0;
    std::complex<double> exact;
};

struct Panel {
    int strands = 0;
    int crossings = 0;
    int reps_per_knot = 0;
    std::uint64_t seed = 0;
    ClosureFilter filter = ClosureFilter::all_closures;
    /// Exact value of each class, in class order.
    std::vector<std::complex<double>> class_values;
    /// Number of knot-closure words found in each class.
    std::vector<int> class_sizes;
    std::vector<PanelEntry> entries;

    int class_count() const { return static_cast<int>(class_values.size()); }
    std::string selection_rule() const;
};

/// Enumerates every word, keeps those admitted by the filter, groups them by
/// exact Jones value (tolerance kClassTolerance, classes ordered by first
/// member) and takes the first reps_per_knot words of each class in
/// enumeration order. The seed is recorded but does not influence the
/// selection. Throws ShortfallError when a class is too small.
Panel select_panel(int strands, int crossings, int reps_per_knot, std::uint64_t seed = kDefaultSeed,
                   ClosureFilter filter = ClosureFilter::all_closures);

/// Exact Jones values of the admitted closures, clustered at kClassTolerance,
/// in order of first appearance.
std::vector<std::complex<double>> distinct_jones_values(int strands, int crossings, ClosureFilter filter);

struct EllipseStats {
    Eigen::Vector2d mean = Eigen::Vector2d::Zero();
    Eigen::Matrix2d covariance = Eigen::Matrix2d::Zero();
    double k_sigma = 2.0;
    /// True if kSigmaMin^2 I was added to a (near-)singular covariance.
    bool padded = false;

    double mahalanobis(const Eigen::Vector2d &p) const;
    bool contains(const Eigen::Vector2d &p) const { return mahalanobis(p) <= k_sigma; }
    /// Points on the k_sigma boundary, counter-clockwise from angle 0.
    std::vector<Eigen::Vector2d> boundary(int points = kBoundaryPoints) const;
};

/// Mean and unbiased covariance of (Re, Im). Throws InsufficientDataError for
/// fewer than 3 samples.
EllipseStats ellipse_fit(std::span<const std::complex<double>> samples, double k_sigma = 2.0);

/// Fraction of a 2D Gaussian inside Mahalanobis radius k: 1 - exp(-k^2/2).
double gaussian_coverage(double k_sigma);

/// Boundary of each ellipse sampled at `points` points; overlap if any sample
/// of one lies inside the other or either centre lies inside the other. A
/// point counts as inside at Mahalanobis distance <= k_sigma / cos(pi/points),
/// so near-tangent pairs resolve to true.
bool ellipses_overlap(const EllipseStats &a, const EllipseStats &b, int points = kBoundaryPoints);

struct BraidCloud {
    PanelEntry entry;
    std::vector<std::complex<double>> samples;
    EllipseStats ellipse;
};

struct DiscriminationReport {
    int distinct_pairs_total = 0;
    int distinct_pairs_separated = 0;
    int identical_pairs_total = 0;
    int identical_pairs_overlapping = 0;
    int passive_errors = 0;
    int fatal_errors = 0;
    double success_rate = 0.0;
    /// Set when a fraction had a zero denominator and was defined as 1.
    bool distinct_fraction_by_convention = false;
    bool identical_fraction_by_convention = false;

    double epsilon = 1.0;
    int repeats = 0;
    NoiseModel noise;
    Panel panel;
    std::vector<BraidCloud> clouds;
};

/// Simulates every panel braid (braid k uses a seed derived from
/// (noise.seed, k)), fits 2-sigma ellipses and scores all pairs.
DiscriminationReport run_discrimination(const Panel &panel, double epsilon, const NoiseModel &noise,
                                        int repeats);

std::string report_to_json(const DiscriminationReport &report);
/// knot_class,braid,re_v,im_v
std::string clouds_to_csv(const DiscriminationReport &report);
/// knot_class,braid,mean_re,mean_im,cov_rr,cov_ri,cov_ii,k_sigma,padded
std::string ellipses_to_csv(const DiscriminationReport &report);

}  // namespace jonesdqc1

#endif
