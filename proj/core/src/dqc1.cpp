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

#include "jonesdqc1/dqc1.hpp"

#include <cmath>
#include <numbers>

#include <nlohmann/json.hpp>
#include "jonesdqc1/errors.hpp"
#include "text_util.hpp"

namespace jonesdqc1 {

namespace {

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index r = 0; r < a.rows(); r++) {
        for (Eigen::Index c = 0; c < a.cols(); c++) {
            out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
        }
    }
    return out;
}

ComplexMatrix hadamard_on_control(int register_dim) {
    ComplexMatrix h(2, 2);
    const double s = 1.0 / std::sqrt(2.0);
    h << s, s, s, -s;
    return kron(h, ComplexMatrix::Identity(register_dim, register_dim));
}

DensityState conjugate(const DensityState &rho, const ComplexMatrix &g) {
    ComplexMatrix out = g * rho.matrix() * g.adjoint();
    return DensityState(rho.qubits(), std::move(out));
}

void check_epsilon(double epsilon) {
    if (!(epsilon > 0.0 && epsilon <= 1.0)) {
        throw DomainError("epsilon must lie in (0, 1], got " + detail::fmt_double(epsilon));
    }
}

struct Readout {
    double sx;
    double sy;
};

/// Unscaled <sigma_x>, <sigma_y> of the control qubit.
Readout control_expectations(const DensityState &rho) {
    const int half = rho.dim() / 2;
    Complex upper = 0.0;  // sum_z rho[(0,z),(1,z)]
    Complex lower = 0.0;  // sum_z rho[(1,z),(0,z)]
    for (int z = 0; z < half; z++) {
        upper += rho.matrix()(z, half + z);
        lower += rho.matrix()(half + z, z);
    }
    const Complex i(0.0, 1.0);
    return {(upper + lower).real(), (i * upper - i * lower).real()};
}

std::mt19937_64 repeat_rng(std::uint64_t seed, int repeat) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(repeat)};
    return std::mt19937_64(seq);
}

}  // namespace

DensityState::DensityState(int qubits, ComplexMatrix rho) : qubits_(qubits), rho_(std::move(rho)) {
    if (rho_.rows() != rho_.cols() || rho_.rows() != (Eigen::Index{1} << qubits_)) {
        throw ShapeError("density matrix must be 2^qubits square");
    }
}

double DensityState::hermiticity_error() const { return (rho_ - rho_.adjoint()).cwiseAbs().maxCoeff(); }

double DensityState::min_eigenvalue() const {
    ComplexMatrix h = 0.5 * (rho_ + rho_.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

bool DensityState::is_valid() const {
    return hermiticity_error() <= 1e-12 && std::abs(trace() - Complex(1.0)) <= 1e-12 && min_eigenvalue() >= -1e-10;
}

void NoiseModel::validate() const {
    if (!(gate_fidelity > 0.0 && gate_fidelity <= 1.0)) {
        throw DomainError("gate_fidelity must lie in (0, 1], got " + detail::fmt_double(gate_fidelity));
    }
    if (!(attenuation > 0.0 && attenuation <= 1.0)) {
        throw DomainError("attenuation must lie in (0, 1], got " + detail::fmt_double(attenuation));
    }
    if (!(readout_noise_std >= 0.0) || !std::isfinite(readout_noise_std)) {
        throw DomainError("readout_noise_std must be finite and >= 0");
    }
}

std::string NoiseModel::to_json() const {
    nlohmann::ordered_json j = {{"gate_fidelity", gate_fidelity},
                                {"coherent", coherent},
                                {"attenuation", attenuation},
                                {"readout_noise_std", readout_noise_std},
                                {"seed", seed}};
    return j.dump();
}

NoiseModel NoiseModel::from_json(const std::string &text) {
    NoiseModel m;
    try {
        auto j = nlohmann::json::parse(text);
        m.gate_fidelity = j.value("gate_fidelity", m.gate_fidelity);
        m.coherent = j.value("coherent", m.coherent);
        m.attenuation = j.value("attenuation", m.attenuation);
        m.readout_noise_std = j.value("readout_noise_std", m.readout_noise_std);
        m.seed = j.value("seed", m.seed);
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(ParseError::Kind::syntax, 0, std::string("invalid noise model JSON: ") + e.what());
    }
    m.validate();
    return m;
}

Eigen::Matrix2cd weight_rotation(double completion_phase) {
    const double phi = std::numbers::phi;
    const double norm = std::sqrt(1.0 + phi);
    const Complex phase = std::polar(1.0, completion_phase);
    Eigen::Matrix2cd r;
    r << std::sqrt(phi) / norm, -phase / norm, 1.0 / norm, phase * std::sqrt(phi) / norm;
    return r;
}

DensityState initial_state(int register_qubits, double epsilon, const Eigen::Matrix2cd &rotation) {
    if (register_qubits < 1) {
        throw DomainError("register needs at least one qubit");
    }
    check_epsilon(epsilon);
    ComplexMatrix control = ComplexMatrix::Zero(2, 2);
    control(0, 0) = 0.5 * (1.0 + epsilon);
    control(1, 1) = 0.5 * (1.0 - epsilon);

    ComplexMatrix zero = ComplexMatrix::Zero(2, 2);
    zero(0, 0) = 1.0;
    ComplexMatrix weight = rotation * zero * rotation.adjoint();

    const int rest = 1 << (register_qubits - 1);
    ComplexMatrix mixed = ComplexMatrix::Identity(rest, rest) / static_cast<double>(rest);
    return DensityState(register_qubits + 1, kron(control, kron(weight, mixed)));
}

ComplexMatrix controlled(const ComplexMatrix &u) {
    const auto d = u.rows();
    ComplexMatrix g = ComplexMatrix::Zero(2 * d, 2 * d);
    g.topLeftCorner(d, d).setIdentity();
    g.bottomRightCorner(d, d) = u;
    return g;
}

DensityState apply_controlled(const DensityState &rho, const DenseUnitary &u) {
    if (rho.dim() != 2 * u.dim()) {
        throw ShapeError("state dimension " + std::to_string(rho.dim()) + " does not fit a controlled " +
                         std::to_string(u.dim()) + "-dimensional unitary");
    }
    ComplexMatrix g = controlled(u.matrix()) * hadamard_on_control(u.dim());
    return conjugate(rho, g);
}

MeasurementRecord measure_xy(const DensityState &rho, double epsilon, double attenuation) {
    check_epsilon(epsilon);
    auto [x, y] = control_expectations(rho);
    MeasurementRecord rec;
    rec.sx = attenuation * x;
    rec.sy = attenuation * y;
    rec.m_estimate = Complex(rec.sx, rec.sy) / (epsilon * attenuation);
    return rec;
}

MeasurementRecord run_exact(const BraidWord &braid, const FibBasis &basis, double epsilon,
                            const Eigen::Matrix2cd &rotation) {
    DensityState rho = initial_state(basis.register_qubits(), epsilon, rotation);
    rho = apply_controlled(rho, braid_unitary(braid, basis));
    return measure_xy(rho, epsilon, 1.0);
}

double process_fidelity(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ShapeError("process_fidelity: shapes differ");
    }
    const double d = static_cast<double>(a.rows());
    return std::norm((a.adjoint() * b).trace()) / (d * d);
}

ComplexMatrix perturb_coherently(const ComplexMatrix &u, double fidelity, std::mt19937_64 &rng) {
    if (fidelity >= 1.0) {
        return u;
    }
    const auto d = u.rows();
    std::normal_distribution<double> normal(0.0, 1.0);
    ComplexMatrix g(d, d);
    for (Eigen::Index r = 0; r < d; r++) {
        for (Eigen::Index c = 0; c < d; c++) {
            double re = normal(rng);
            double im = normal(rng);
            g(r, c) = Complex(re, im);
        }
    }
    ComplexMatrix h = 0.5 * (g + g.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
    const Eigen::VectorXd lambda = solver.eigenvalues();

    const double dd = static_cast<double>(d);
    auto fidelity_at = [&](double s) {
        Complex tr = 0.0;
        for (Eigen::Index k = 0; k < d; k++) {
            tr += std::polar(1.0, s * lambda(k));
        }
        return std::norm(tr) / (dd * dd);
    };

    const double mean = lambda.mean();
    const double var = (lambda.array() - mean).square().mean();
    double lo = 0.0;
    double hi = std::sqrt((1.0 - fidelity) / std::max(var, 1e-300));
    int guard = 0;
    while (fidelity_at(hi) > fidelity) {
        lo = hi;
        hi *= 2.0;
        if (++guard > 64) {
            throw DomainError("cannot reach gate fidelity " + detail::fmt_double(fidelity));
        }
    }
    double s = hi;
    for (int iter = 0; iter < 200; iter++) {
        s = 0.5 * (lo + hi);
        double f = fidelity_at(s);
        if (std::abs(f - fidelity) < 1e-5) {
            break;
        }
        if (f > fidelity) {
            lo = s;
        } else {
            hi = s;
        }
    }

    Eigen::VectorXcd phases(d);
    for (Eigen::Index k = 0; k < d; k++) {
        phases(k) = std::polar(1.0, s * lambda(k));
    }
    const ComplexMatrix &v = solver.eigenvectors();
    return u * (v * phases.asDiagonal() * v.adjoint());
}

std::vector<MeasurementRecord> run_noisy(const BraidWord &braid, const FibBasis &basis, double epsilon,
                                         const NoiseModel &noise, int repeats) {
    if (repeats < 1) {
        throw DomainError("repeats must be >= 1");
    }
    if (braid.strands() != basis.strands()) {
        throw ShapeError("braid and basis strand counts differ");
    }
    noise.validate();
    check_epsilon(epsilon);

    const int reg = basis.dim();
    std::vector<ComplexMatrix> gates;
    if (braid.empty()) {
        gates.push_back(controlled(ComplexMatrix::Identity(reg, reg)));
    }
    for (int g : braid.word()) {
        gates.push_back(controlled(crossing_unitary(std::abs(g), g > 0 ? 1 : -1, basis).matrix()));
    }

    const DensityState start = conjugate(initial_state(basis.register_qubits(), epsilon), hadamard_on_control(reg));
    const int full = 2 * reg;
    const ComplexMatrix maximally_mixed = ComplexMatrix::Identity(full, full) / static_cast<double>(full);

    std::vector<MeasurementRecord> out;
    out.reserve(repeats);
    for (int r = 0; r < repeats; r++) {
        auto rng = repeat_rng(noise.seed, r);
        ComplexMatrix rho = start.matrix();
        for (const auto &gate : gates) {
            if (noise.coherent) {
                ComplexMatrix noisy = perturb_coherently(gate, noise.gate_fidelity, rng);
                rho = noisy * rho * noisy.adjoint();
            } else {
                rho = gate * rho * gate.adjoint();
                if (noise.gate_fidelity < 1.0) {
                    rho = noise.gate_fidelity * rho + (1.0 - noise.gate_fidelity) * maximally_mixed;
                }
            }
        }
        auto [x, y] = control_expectations(DensityState(start.qubits(), std::move(rho)));
        MeasurementRecord rec;
        rec.sx = noise.attenuation * x;
        rec.sy = noise.attenuation * y;
        if (noise.readout_noise_std > 0.0) {
            std::normal_distribution<double> readout(0.0, noise.readout_noise_std);
            rec.sx += readout(rng);
            rec.sy += readout(rng);
        }
        rec.m_estimate = Complex(rec.sx, rec.sy) / (epsilon * noise.attenuation);
        out.push_back(rec);
    }
    return out;
}

std::string records_to_csv(const std::vector<MeasurementRecord> &records) {
    std::string out = "repeat,sx,sy,re_m,im_m\n";
    for (size_t r = 0; r < records.size(); r++) {
        const auto &rec = records[r];
        out += std::to_string(r) + "," + detail::fmt_double(rec.sx) + "," + detail::fmt_double(rec.sy) + "," +
               detail::fmt_double(rec.m_estimate.real()) + "," + detail::fmt_double(rec.m_estimate.imag()) + "\n";
    }
    return out;
}

}  // namespace jonesdqc1
