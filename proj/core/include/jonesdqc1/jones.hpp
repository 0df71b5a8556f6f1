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

#ifndef JONESDQC1_JONES_HPP
#define JONESDQC1_JONES_HPP

#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "jonesdqc1/braid.hpp"
#include "jonesdqc1/dqc1.hpp"
#include "jonesdqc1/fibrep.hpp"

namespace jonesdqc1 {

struct GoldenConstants {
    static constexpr double phi = std::numbers::phi;
    /// e^{2 pi i / 5}
    static Complex t();
    /// t^k for any integer k, reduced mod 5 before evaluation.
    static Complex t_power(long long k);
};

/// Audit record for one evaluation of V(e^{2 pi i/5}).
struct JonesResult {
    Complex value;
    Complex m_used;
    /// 2^(n-1) (1+phi) M
    Complex wtr_full;
    double kappa = 0.0;
    int writhe = 0;
    int strands = 0;
    int register_qubits = 0;

    double magnitude() const { return std::abs(value); }
    double argument() const { return std::arg(value); }
};

/// Padding correction (2^(n-1) - f_m) phi + (2^(n-1) - f_{m-1}).
/// Throws DomainError when 2^(n-1) < max(f_m, f_{m-1}).
double kappa(int register_qubits, int strands);

/// (-t^4)^(3w), evaluated with integer exponents as (-1)^w t^(12w mod 5).
Complex writhe_phase(int writhe);

/// V = (-t^4)^(3w) phi^-1 (2^(n-1)(1+phi) M - kappa).
JonesResult jones_from_m(Complex m_estimate, int writhe, int register_qubits, int strands);

/// Direct weighted trace of the braid unitary, no density-matrix simulation.
JonesResult eval_exact(const BraidWord &braid);

/// Noise absent: one noiseless DQC1 simulation (repeats must be 1).
/// Noise present: run_noisy with the given number of repeats.
std::vector<JonesResult> eval_dqc1(const BraidWord &braid, double epsilon,
                                   const std::optional<NoiseModel> &noise, int repeats);

/// {braid, strands, writhe, n, kappa, m_re, m_im, v_re, v_im, v_abs, v_arg}
std::string result_to_json(const BraidWord &braid, const JonesResult &r);
/// Header plus one row per (braid, result) pair.
std::string results_to_csv(const std::vector<std::pair<BraidWord, JonesResult>> &rows);

}  // namespace jonesdqc1

#endif
