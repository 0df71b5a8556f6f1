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

#ifndef JONESDQC1_DQC1_HPP
#define JONESDQC1_DQC1_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "jonesdqc1/braid.hpp"
#include "jonesdqc1/fibrep.hpp"

namespace jonesdqc1 {

inline constexpr std::uint64_t kDefaultSeed = 1729;

/// Normalized density matrix on the control qubit plus an n-qubit register.
/// The control is the most significant qubit: index = control * 2^n + z.
class DensityState {
   public:
    DensityState(int qubits, ComplexMatrix rho);

    int qubits() const noexcept { return qubits_; }
    int dim() const noexcept { return static_cast<int>(rho_.rows()); }
    const ComplexMatrix &matrix() const noexcept { return rho_; }

    Complex trace() const { return rho_.trace(); }
    double hermiticity_error() const;
    double min_eigenvalue() const;
    /// Hermitian and unit trace to 1e-12, eigenvalues >= -1e-10.
    bool is_valid() const;

   private:
    int qubits_;
    ComplexMatrix rho_;
};

struct NoiseModel {
    /// Process fidelity |Tr(U^dagger U~)|^2/d^2 of every controlled-crossing
    /// pulse (coherent) or the depolarizing retention parameter.
    double gate_fidelity = 1.0;
    bool coherent = true;
    /// End-to-end signal scale; divided back out by the reference normalization.
    double attenuation = 1.0;
    double readout_noise_std = 0.01;
    std::uint64_t seed = kDefaultSeed;

    /// Throws DomainError if a knob is out of range.
    void validate() const;

    std::string to_json() const;
    static NoiseModel from_json(const std::string &text);
};

struct MeasurementRecord {
    double sx = 0.0;
    double sy = 0.0;
    Complex m_estimate;
};

/// Takes |0> to (sqrt(phi)|0> + |1>)/sqrt(1+phi). The second column is
/// e^{i completion_phase} (-1, sqrt(phi))/sqrt(1+phi); any phase is a valid
/// completion and must not change the algorithm's output.
Eigen::Matrix2cd weight_rotation(double completion_phase = 0.0);

/// (I + eps Z)/2 on the control, R|0><0|R^dagger on the subspace-flag qubit
/// (the register MSB), I/2^(n-1) on the remaining register qubits.
DensityState initial_state(int register_qubits, double epsilon,
                           const Eigen::Matrix2cd &rotation = weight_rotation());

/// Hadamard on the control followed by |0><0| x I + |1><1| x U.
DensityState apply_controlled(const DensityState &rho, const DenseUnitary &u);

/// sx, sy are attenuation * <sigma_x>, <sigma_y> on the control;
/// m_estimate = (sx + i sy) / (epsilon * attenuation).
MeasurementRecord measure_xy(const DensityState &rho, double epsilon, double attenuation = 1.0);

MeasurementRecord run_exact(const BraidWord &braid, const FibBasis &basis, double epsilon,
                            const Eigen::Matrix2cd &rotation = weight_rotation());

/// Gate-by-gate simulation with one noisy controlled pulse per braid letter
/// (one noisy identity pulse for the empty word). Repeat r draws from an RNG
/// seeded by (noise.seed, r), so results are reproducible and independent of
/// how repeats are scheduled.
std::vector<MeasurementRecord> run_noisy(const BraidWord &braid, const FibBasis &basis,
                                         double epsilon, const NoiseModel &noise, int repeats);

/// The controlled gate |0><0| x I + |1><1| x U on n+1 qubits.
ComplexMatrix controlled(const ComplexMatrix &u);

/// U exp(i s H) with H a random Hermitian matrix (symmetrized complex
/// Gaussian) and s chosen by bisection so that |Tr exp(i s H)|^2/d^2 matches
/// fidelity within 1e-4.
ComplexMatrix perturb_coherently(const ComplexMatrix &u, double fidelity, std::mt19937_64 &rng);

/// |Tr(a^dagger b)|^2 / d^2
double process_fidelity(const ComplexMatrix &a, const ComplexMatrix &b);

/// CSV with header "repeat,sx,sy,re_m,im_m".
std::string records_to_csv(const std::vector<MeasurementRecord> &records);

}  // namespace jonesdqc1

#endif
