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

#include "jonesdqc1/jones.hpp"

#include <cmath>

#include <nlohmann/json.hpp>
#include "jonesdqc1/errors.hpp"
#include "text_util.hpp"

namespace jonesdqc1 {

Complex GoldenConstants::t() { return std::polar(1.0, 2.0 * std::numbers::pi / 5.0); }

Complex GoldenConstants::t_power(long long k) {
    long long r = ((k % 5) + 5) % 5;
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / 5.0);
}

double kappa(int register_qubits, int strands) {
    if (register_qubits < 1 || register_qubits > 30 || strands < 2) {
        throw DomainError("kappa needs n >= 1 and m >= 2");
    }
    const double half = static_cast<double>(1ULL << (register_qubits - 1));
    const double fm = static_cast<double>(fib(strands));
    const double fm1 = static_cast<double>(fib(strands - 1));
    if (half < fm || half < fm1) {
        throw DomainError("register of " + std::to_string(register_qubits) + " qubits is too small for " +
                          std::to_string(strands) + " strands");
    }
    return (half - fm) * GoldenConstants::phi + (half - fm1);
}

Complex writhe_phase(int writhe) {
    const double sign = (writhe % 2 == 0) ? 1.0 : -1.0;
    return sign * GoldenConstants::t_power(12LL * writhe);
}

JonesResult jones_from_m(Complex m_estimate, int writhe, int register_qubits, int strands) {
    JonesResult r;
    r.m_used = m_estimate;
    r.kappa = kappa(register_qubits, strands);
    r.writhe = writhe;
    r.strands = strands;
    r.register_qubits = register_qubits;
    const double scale = static_cast<double>(1ULL << (register_qubits - 1)) * (1.0 + GoldenConstants::phi);
    r.wtr_full = scale * m_estimate;
    r.value = writhe_phase(writhe) * (r.wtr_full - r.kappa) / GoldenConstants::phi;
    return r;
}

JonesResult eval_exact(const BraidWord &braid) {
    const FibBasis basis = enumerate_fib_basis(braid.strands());
    const int n = basis.register_qubits();
    const Complex wtr = weighted_trace(braid_unitary(braid, basis), basis);
    const double scale = static_cast<double>(1ULL << (n - 1)) * (1.0 + GoldenConstants::phi);
    const Complex m = (wtr + kappa(n, braid.strands())) / scale;
    return jones_from_m(m, writhe(braid), n, braid.strands());
}

std::vector<JonesResult> eval_dqc1(const BraidWord &braid, double epsilon, const std::optional<NoiseModel> &noise,
                                   int repeats) {
    const FibBasis basis = enumerate_fib_basis(braid.strands());
    const int w = writhe(braid);
    std::vector<JonesResult> out;
    if (!noise) {
        if (repeats != 1) {
            throw DomainError("noiseless DQC1 evaluation takes exactly one repeat");
        }
        auto rec = run_exact(braid, basis, epsilon);
        out.push_back(jones_from_m(rec.m_estimate, w, basis.register_qubits(), braid.strands()));
        return out;
    }
    for (const auto &rec : run_noisy(braid, basis, epsilon, *noise, repeats)) {
        out.push_back(jones_from_m(rec.m_estimate, w, basis.register_qubits(), braid.strands()));
    }
    return out;
}

namespace {

nlohmann::ordered_json result_json(const BraidWord &braid, const JonesResult &r) {
    return {{"braid", braid.str()},     {"strands", r.strands},
            {"writhe", r.writhe},       {"n", r.register_qubits},
            {"kappa", r.kappa},         {"m_re", r.m_used.real()},
            {"m_im", r.m_used.imag()},  {"v_re", r.value.real()},
            {"v_im", r.value.imag()},   {"v_abs", r.magnitude()},
            {"v_arg", r.argument()}};
}

}  // namespace

std::string result_to_json(const BraidWord &braid, const JonesResult &r) { return result_json(braid, r).dump(); }

std::string results_to_csv(const std::vector<std::pair<BraidWord, JonesResult>> &rows) {
    std::string out = "braid,strands,writhe,n,kappa,m_re,m_im,v_re,v_im,v_abs,v_arg\n";
    for (const auto &[braid, r] : rows) {
        out += "\"" + braid.str() + "\"," + std::to_string(r.strands) + "," + std::to_string(r.writhe) + "," +
               std::to_string(r.register_qubits) + "," + detail::fmt_double(r.kappa) + "," +
               detail::fmt_double(r.m_used.real()) + "," + detail::fmt_double(r.m_used.imag()) + "," +
               detail::fmt_double(r.value.real()) + "," + detail::fmt_double(r.value.imag()) + "," +
               detail::fmt_double(r.magnitude()) + "," + detail::fmt_double(r.argument()) + "\n";
    }
    return out;
}

}  // namespace jonesdqc1
