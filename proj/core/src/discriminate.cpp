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

#include "jonesdqc1/discriminate.hpp"

#include <cmath>
#include <numbers>

#include <nlohmann/json.hpp>
#include "jonesdqc1/errors.hpp"
#include "jonesdqc1/jones.hpp"
#include "jonesdqc1/oracle.hpp"
#include "text_util.hpp"

namespace jonesdqc1 {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t braid_seed(std::uint64_t seed, std::size_t index) { return splitmix64(seed ^ splitmix64(index)); }

}  // namespace

std::string Panel::selection_rule() const {
    return std::string("enumerate all words in lexicographic order over (+1,-1,+2,-2,...); keep ") +
           (filter == ClosureFilter::knots_only ? "one-component (knot) closures" : "all closures (knots and links)") +
           "; cluster exact Jones values at tolerance 1e-6, classes ordered by first member; "
           "take the first reps_per_knot words of each class";
}

namespace {

struct Clusters {
    std::vector<std::complex<double>> values;
    std::vector<std::vector<BraidWord>> members;
};

Clusters cluster_closures(int strands, int crossings, ClosureFilter filter) {
    Clusters out;
    for (auto &word : enumerate_words(strands, crossings)) {
        if (filter == ClosureFilter::knots_only && component_count(word) != 1) {
            continue;
        }
        const Complex v = eval_exact(word).value;
        size_t cls = 0;
        while (cls < out.values.size() && std::abs(out.values[cls] - v) > kClassTolerance) {
            cls++;
        }
        if (cls == out.values.size()) {
            out.values.push_back(v);
            out.members.emplace_back();
        }
        out.members[cls].push_back(std::move(word));
    }
    return out;
}

}  // namespace

std::vector<std::complex<double>> distinct_jones_values(int strands, int crossings, ClosureFilter filter) {
    return cluster_closures(strands, crossings, filter).values;
}

Panel select_panel(int strands, int crossings, int reps_per_knot, std::uint64_t seed, ClosureFilter filter) {
    if (reps_per_knot < 1) {
        throw DomainError("reps_per_knot must be >= 1");
    }
    if (strands < 2) {
        throw DomainError("panel needs at least 2 strands");
    }
    Panel panel;
    panel.strands = strands;
    panel.crossings = crossings;
    panel.reps_per_knot = reps_per_knot;
    panel.seed = seed;
    panel.filter = filter;

    Clusters clusters = cluster_closures(strands, crossings, filter);
    panel.class_values = clusters.values;
    const auto &members = clusters.members;

    std::string sizes;
    bool shortfall = false;
    for (const auto &m : members) {
        panel.class_sizes.push_back(static_cast<int>(m.size()));
        sizes += (sizes.empty() ? "" : ", ") + std::to_string(m.size());
        shortfall |= static_cast<int>(m.size()) < reps_per_knot;
    }
    if (members.empty()) {
        throw ShortfallError("no admissible closures among " + std::to_string(strands) + "-strand words of length " +
                             std::to_string(crossings));
    }
    if (shortfall) {
        throw ShortfallError("class-size shortfall: need " + std::to_string(reps_per_knot) +
                             " words per knot class, class sizes are [" + sizes + "]");
    }
    for (size_t cls = 0; cls < members.size(); cls++) {
        for (int r = 0; r < reps_per_knot; r++) {
            panel.entries.push_back({members[cls][r], static_cast<int>(cls), panel.class_values[cls]});
        }
    }
    return panel;
}

double EllipseStats::mahalanobis(const Eigen::Vector2d &p) const {
    const Eigen::Vector2d d = p - mean;
    return std::sqrt(std::max(0.0, d.dot(covariance.ldlt().solve(d))));
}

std::vector<Eigen::Vector2d> EllipseStats::boundary(int points) const {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> solver(covariance);
    const Eigen::Matrix2d axes =
        solver.eigenvectors() * solver.eigenvalues().cwiseMax(0.0).cwiseSqrt().asDiagonal();
    std::vector<Eigen::Vector2d> out;
    out.reserve(points);
    for (int k = 0; k < points; k++) {
        const double theta = 2.0 * std::numbers::pi * k / points;
        out.push_back(mean + k_sigma * axes * Eigen::Vector2d(std::cos(theta), std::sin(theta)));
    }
    return out;
}

EllipseStats ellipse_fit(std::span<const std::complex<double>> samples, double k_sigma) {
    if (samples.size() < 3) {
        throw InsufficientDataError("ellipse fit needs at least 3 samples, got " + std::to_string(samples.size()));
    }
    if (!(k_sigma > 0.0)) {
        throw DomainError("k_sigma must be positive");
    }
    EllipseStats e;
    e.k_sigma = k_sigma;
    for (const auto &s : samples) {
        e.mean += Eigen::Vector2d(s.real(), s.imag());
    }
    e.mean /= static_cast<double>(samples.size());
    for (const auto &s : samples) {
        const Eigen::Vector2d d = Eigen::Vector2d(s.real(), s.imag()) - e.mean;
        e.covariance += d * d.transpose();
    }
    e.covariance /= static_cast<double>(samples.size() - 1);
    e.covariance(1, 0) = e.covariance(0, 1);

    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> solver(e.covariance, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < kSigmaMin * kSigmaMin) {
        e.covariance += kSigmaMin * kSigmaMin * Eigen::Matrix2d::Identity();
        e.padded = true;
    }
    return e;
}

double gaussian_coverage(double k_sigma) { return 1.0 - std::exp(-0.5 * k_sigma * k_sigma); }

bool ellipses_overlap(const EllipseStats &a, const EllipseStats &b, int points) {
    if (points < 3) {
        throw DomainError("overlap test needs at least 3 boundary points");
    }
    const double slack = 1.0 / std::cos(std::numbers::pi / points);
    auto inside = [slack](const EllipseStats &e, const Eigen::Vector2d &p) {
        return e.mahalanobis(p) <= e.k_sigma * slack;
    };
    if (inside(a, b.mean) || inside(b, a.mean)) {
        return true;
    }
    for (const auto &p : a.boundary(points)) {
        if (inside(b, p)) {
            return true;
        }
    }
    for (const auto &p : b.boundary(points)) {
        if (inside(a, p)) {
            return true;
        }
    }
    return false;
}

DiscriminationReport run_discrimination(const Panel &panel, double epsilon, const NoiseModel &noise, int repeats) {
    if (repeats < 3) {
        throw DomainError("discrimination needs at least 3 repeats per braid");
    }
    noise.validate();
    DiscriminationReport report;
    report.epsilon = epsilon;
    report.repeats = repeats;
    report.noise = noise;
    report.panel = panel;

    for (size_t k = 0; k < panel.entries.size(); k++) {
        NoiseModel local = noise;
        local.seed = braid_seed(noise.seed, k);
        BraidCloud cloud{panel.entries[k], {}, {}};
        for (const auto &r : eval_dqc1(cloud.entry.braid, epsilon, local, repeats)) {
            cloud.samples.push_back(r.value);
        }
        cloud.ellipse = ellipse_fit(cloud.samples);
        report.clouds.push_back(std::move(cloud));
    }

    const auto &clouds = report.clouds;
    for (size_t i = 0; i < clouds.size(); i++) {
        for (size_t j = i + 1; j < clouds.size(); j++) {
            const bool overlap = ellipses_overlap(clouds[i].ellipse, clouds[j].ellipse);
            if (clouds[i].entry.knot_class == clouds[j].entry.knot_class) {
                report.identical_pairs_total++;
                report.identical_pairs_overlapping += overlap ? 1 : 0;
            } else {
                report.distinct_pairs_total++;
                report.distinct_pairs_separated += overlap ? 0 : 1;
            }
        }
    }
    report.passive_errors = report.distinct_pairs_total - report.distinct_pairs_separated;
    report.fatal_errors = report.identical_pairs_total - report.identical_pairs_overlapping;

    double distinct_fraction = 1.0, identical_fraction = 1.0;
    if (report.distinct_pairs_total > 0) {
        distinct_fraction = static_cast<double>(report.distinct_pairs_separated) / report.distinct_pairs_total;
    } else {
        report.distinct_fraction_by_convention = true;
    }
    if (report.identical_pairs_total > 0) {
        identical_fraction =
            static_cast<double>(report.identical_pairs_overlapping) / report.identical_pairs_total;
    } else {
        report.identical_fraction_by_convention = true;
    }
    report.success_rate = 0.5 * (distinct_fraction + identical_fraction);
    return report;
}

namespace {

nlohmann::ordered_json ellipse_json(const EllipseStats &e) {
    return {{"mean", {e.mean(0), e.mean(1)}},
            {"covariance", {{e.covariance(0, 0), e.covariance(0, 1)}, {e.covariance(1, 0), e.covariance(1, 1)}}},
            {"k_sigma", e.k_sigma},
            {"padded", e.padded}};
}

}  // namespace

std::string report_to_json(const DiscriminationReport &report) {
    using nlohmann::ordered_json;
    ordered_json classes = ordered_json::array();
    for (int c = 0; c < report.panel.class_count(); c++) {
        classes.push_back({{"knot_class", c},
                           {"exact_re", report.panel.class_values[c].real()},
                           {"exact_im", report.panel.class_values[c].imag()},
                           {"class_size", report.panel.class_sizes[c]}});
    }
    ordered_json braids = ordered_json::array();
    for (const auto &cloud : report.clouds) {
        braids.push_back({{"braid", cloud.entry.braid.str()},
                          {"knot_class", cloud.entry.knot_class},
                          {"exact_re", cloud.entry.exact.real()},
                          {"exact_im", cloud.entry.exact.imag()},
                          {"ellipse", ellipse_json(cloud.ellipse)}});
    }
    ordered_json j = {
        {"panel",
         {{"strands", report.panel.strands},
          {"crossings", report.panel.crossings},
          {"reps_per_knot", report.panel.reps_per_knot},
          {"selection_rule", report.panel.selection_rule()},
          {"classes", classes}}},
        {"simulation",
         {{"source", "simulated clouds (ellipses fitted to this tool's own Monte Carlo samples)"},
          {"epsilon", report.epsilon},
          {"repeats", report.repeats},
          {"noise", ordered_json::parse(report.noise.to_json())},
          {"k_sigma", report.clouds.empty() ? 2.0 : report.clouds.front().ellipse.k_sigma},
          {"coverage", gaussian_coverage(report.clouds.empty() ? 2.0 : report.clouds.front().ellipse.k_sigma)}}},
        {"distinct_pairs_total", report.distinct_pairs_total},
        {"distinct_pairs_separated", report.distinct_pairs_separated},
        {"identical_pairs_total", report.identical_pairs_total},
        {"identical_pairs_overlapping", report.identical_pairs_overlapping},
        {"passive_errors", report.passive_errors},
        {"fatal_errors", report.fatal_errors},
        {"success_rate", report.success_rate},
        {"distinct_fraction_by_convention", report.distinct_fraction_by_convention},
        {"identical_fraction_by_convention", report.identical_fraction_by_convention},
        {"reference_success_rate", kReferenceSuccessRate},
        {"braids", braids},
    };
    return j.dump(2);
}

std::string clouds_to_csv(const DiscriminationReport &report) {
    std::string out = "knot_class,braid,re_v,im_v\n";
    for (const auto &cloud : report.clouds) {
        const std::string prefix = std::to_string(cloud.entry.knot_class) + ",\"" + cloud.entry.braid.str() + "\",";
        for (const auto &v : cloud.samples) {
            out += prefix + detail::fmt_double(v.real()) + "," + detail::fmt_double(v.imag()) + "\n";
        }
    }
    return out;
}

std::string ellipses_to_csv(const DiscriminationReport &report) {
    std::string out = "knot_class,braid,mean_re,mean_im,cov_rr,cov_ri,cov_ii,k_sigma,padded\n";
    for (const auto &cloud : report.clouds) {
        const auto &e = cloud.ellipse;
        out += std::to_string(cloud.entry.knot_class) + ",\"" + cloud.entry.braid.str() + "\"," +
               detail::fmt_double(e.mean(0)) + "," + detail::fmt_double(e.mean(1)) + "," +
               detail::fmt_double(e.covariance(0, 0)) + "," + detail::fmt_double(e.covariance(0, 1)) + "," +
               detail::fmt_double(e.covariance(1, 1)) + "," + detail::fmt_double(e.k_sigma) + "," +
               (e.padded ? "1" : "0") + "\n";
    }
    return out;
}

}  // namespace jonesdqc1
