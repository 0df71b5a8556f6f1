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

#ifndef JONESDQC1_FIBREP_HPP
#define JONESDQC1_FIBREP_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "jonesdqc1/braid.hpp"

namespace jonesdqc1 {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

/// Fibonacci numbers with f(1) = f(2) = 1. Throws DomainError for k < 1 and
/// for k > 93 (uint64 overflow).
std::uint64_t fib(int k);

enum class Subspace { P, S };

/// A string of p and * particles. Only strings that start with *, never have
/// two adjacent *, and have length >= 3 are admissible basis states.
class FibString {
   public:
    /// Accepts any p/* text; use is_admissible() to check the basis rules.
    /// Throws DomainError on characters other than 'p' and '*'.
    explicit FibString(std::string_view symbols);

    const std::string &str() const noexcept { return symbols_; }
    std::size_t size() const noexcept { return symbols_.size(); }
    char operator[](std::size_t i) const { return symbols_.at(i); }

    bool is_admissible() const;
    /// Last symbol p -> P (trace weight phi), last symbol * -> S (weight 1).
    Subspace subspace() const;

    auto operator<=>(const FibString &) const = default;

   private:
    std::string symbols_;
};

/// The *-prefixed Fibonacci basis for m strands, encoded into n qubits.
///
/// P-strings (ending p) come first, then S-strings (ending *), each block in
/// lexicographic order with p < *. A string encodes to
/// (subspace bit) * 2^(n-1) + (rank within its block); the subspace bit is the
/// most significant register bit. Integers outside the image are padding.
class FibBasis {
   public:
    int strands() const noexcept { return strands_; }
    int register_qubits() const noexcept { return register_qubits_; }
    /// 2^n
    int dim() const noexcept { return 1 << register_qubits_; }
    /// 2^(n-1), the offset of the S block.
    int half_dim() const noexcept { return 1 << (register_qubits_ - 1); }
    int p_count() const noexcept { return static_cast<int>(p_members_.size()); }
    int s_count() const noexcept { return static_cast<int>(s_members_.size()); }

    const std::vector<FibString> &p_members() const noexcept { return p_members_; }
    const std::vector<FibString> &s_members() const noexcept { return s_members_; }
    /// P block followed by S block.
    std::vector<FibString> members() const;

    /// Encoded integers in member order.
    std::vector<int> encoded_indices() const;
    bool is_padding(int index) const;
    std::optional<FibString> decode(int index) const;

   private:
    friend FibBasis enumerate_fib_basis(int strands);

    int strands_ = 0;
    int register_qubits_ = 0;
    std::vector<FibString> p_members_;
    std::vector<FibString> s_members_;
};

/// Throws DomainError for strands < 2.
FibBasis enumerate_fib_basis(int strands);

/// Throws DomainError if the string is not admissible or not in this basis.
int encode(const FibString &s, const FibBasis &basis);

/// Square complex matrix on the 2^n register.
class DenseUnitary {
   public:
    DenseUnitary() = default;
    explicit DenseUnitary(ComplexMatrix m) : m_(std::move(m)) {}

    static DenseUnitary identity(int dim) { return DenseUnitary(ComplexMatrix::Identity(dim, dim)); }

    int dim() const noexcept { return static_cast<int>(m_.rows()); }
    const ComplexMatrix &matrix() const noexcept { return m_; }
    Complex operator()(int r, int c) const { return m_(r, c); }

    DenseUnitary adjoint() const { return DenseUnitary(m_.adjoint()); }
    DenseUnitary operator*(const DenseUnitary &rhs) const { return DenseUnitary(m_ * rhs.m_); }

    /// max |(U^dagger U - I)_{rc}|
    double unitarity_error() const;

   private:
    ComplexMatrix m_;
};

/// max |a_rc - b_rc|; throws ShapeError on dimension mismatch.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

/// The Temperley-Lieb generator e_i on the encoded basis (zero on padding).
/// e_i only touches symbol i+1 (0-based index i) and requires its two
/// neighbours to be equal; e_i^2 = phi e_i.
ComplexMatrix temperley_lieb_generator(int i, const FibBasis &basis);

/// Representation of s_i^sign: A*1 + A^-1*e_i with A = e^{2 pi i/5} on basis
/// states, identity on padding. sign = -1 gives the adjoint.
DenseUnitary crossing_unitary(int i, int sign, const FibBasis &basis);

/// rho(g_k) ... rho(g_1): the first letter acts first on column vectors.
DenseUnitary braid_unitary(const BraidWord &braid, const FibBasis &basis);

/// phi * (trace over encoded P states) + (trace over encoded S states).
/// Padding diagonal entries are excluded.
Complex weighted_trace(const DenseUnitary &u, const FibBasis &basis);

/// Block diagonal across the subspace bit and exactly the identity on padding.
bool respects_encoding(const DenseUnitary &u, const FibBasis &basis, double tol);

/// One line per member: "<string> <encoded integer> <P|S>".
std::string basis_listing(const FibBasis &basis);

/// {"dim": d, "entries": [[[re, im], ...], ...]} row-major.
std::string matrix_to_json(const DenseUnitary &u);

}  // namespace jonesdqc1

#endif
