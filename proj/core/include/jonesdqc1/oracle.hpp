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

#ifndef JONESDQC1_ORACLE_HPP
#define JONESDQC1_ORACLE_HPP

#include <complex>
#include <cstdint>
#include <span>
#include <string>

#include "jonesdqc1/braid.hpp"

namespace jonesdqc1 {

/// Largest crossing count accepted by the 2^c state sum.
inline constexpr int kMaxOracleCrossings = 24;

struct OracleConfig {
    /// Bracket variable A; the loop value is d = -A^2 - A^-2 and t = A^-4.
    std::complex<double> a;

    std::complex<double> d() const { return -a * a - 1.0 / (a * a); }
    std::complex<double> t() const { return 1.0 / (a * a * a * a); }

    /// A = e^{2 pi i/5}, which gives t = e^{2 pi i/5} and d = phi.
    static OracleConfig standard();
};

/// One Kauffman state of a braid closure: bit k of smoothing_choices set means
/// crossing k takes its B-smoothing.
struct PlanarState {
    std::uint64_t smoothing_choices = 0;
    int loop_count = 0;
};

/// Loops of the smoothed trace closure, counted with union-find over the
/// strand endpoints of every crossing layer.
PlanarState planar_state(int strands, std::span<const int> word, std::uint64_t smoothing_choices);

/// Same count by walking the diagram arc by arc. Slower; used to cross-check
/// planar_state.
int traced_loop_count(int strands, std::span<const int> word, std::uint64_t smoothing_choices);

/// Sum over all 2^c states of A^(#A - #B) d^(loops - 1), terms accumulated in
/// state-index order. Throws ResourceLimitError for c > kMaxOracleCrossings.
std::complex<double> kauffman_bracket(int strands, std::span<const int> word,
                                      const OracleConfig &cfg = OracleConfig::standard());
std::complex<double> kauffman_bracket(const BraidWord &braid,
                                      const OracleConfig &cfg = OracleConfig::standard());

/// (-A)^(-3w) times the bracket.
std::complex<double> jones_oracle(const BraidWord &braid,
                                  const OracleConfig &cfg = OracleConfig::standard());

/// Number of link components of the trace closure.
int component_count(const BraidWord &braid);

/// {braid, strands, components, bracket_re, bracket_im, jones_re, jones_im}
std::string oracle_to_json(const BraidWord &braid, const OracleConfig &cfg = OracleConfig::standard());

}  // namespace jonesdqc1

#endif
