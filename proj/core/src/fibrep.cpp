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

#include "jonesdqc1/fibrep.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <nlohmann/json.hpp>
#include "jonesdqc1/errors.hpp"

namespace jonesdqc1 {

namespace {

constexpr double kPhi = std::numbers::phi;

/// Quantum dimension of a particle label.
double qdim(char symbol) { return symbol == 'p' ? kPhi : 1.0; }

Complex bracket_a() { return std::polar(1.0, 2.0 * std::numbers::pi / 5.0); }

}  // namespace

std::uint64_t fib(int k) {
    if (k < 1) {
        throw DomainError("fib is indexed from 1, got " + std::to_string(k));
    }
    if (k > 93) {
        throw DomainError("fib(" + std::to_string(k) + ") overflows 64 bits");
    }
    std::uint64_t a = 1, b = 1;
    for (int j = 2; j < k; j++) {
        std::uint64_t c = a + b;
        a = b;
        b = c;
    }
    return k <= 2 ? 1 : b;
}

FibString::FibString(std::string_view symbols) : symbols_(symbols) {
    for (char c : symbols_) {
        if (c != 'p' && c != '*') {
            throw DomainError("invalid basis state '" + symbols_ + "': symbols must be 'p' or '*'");
        }
    }
}

bool FibString::is_admissible() const {
    if (symbols_.size() < 3 || symbols_.front() != '*') {
        return false;
    }
    return symbols_.find("**") == std::string::npos;
}

Subspace FibString::subspace() const { return symbols_.back() == 'p' ? Subspace::P : Subspace::S; }

std::vector<FibString> FibBasis::members() const {
    std::vector<FibString> out = p_members_;
    out.insert(out.end(), s_members_.begin(), s_members_.end());
    return out;
}

std::vector<int> FibBasis::encoded_indices() const {
    std::vector<int> out;
    for (int k = 0; k < p_count(); k++) {
        out.push_back(k);
    }
    for (int k = 0; k < s_count(); k++) {
        out.push_back(half_dim() + k);
    }
    return out;
}

bool FibBasis::is_padding(int index) const {
    if (index < half_dim()) {
        return index >= p_count();
    }
    return index - half_dim() >= s_count();
}

std::optional<FibString> FibBasis::decode(int index) const {
    if (index < 0 || index >= dim() || is_padding(index)) {
        return std::nullopt;
    }
    return index < half_dim() ? p_members_[index] : s_members_[index - half_dim()];
}

FibBasis enumerate_fib_basis(int strands) {
    if (strands < 2) {
        throw DomainError("Fibonacci basis needs at least 2 strands, got " + std::to_string(strands));
    }
    if (strands > 24) {
        throw DomainError("Fibonacci basis limited to 24 strands, got " + std::to_string(strands));
    }
    FibBasis basis;
    basis.strands_ = strands;

    // Depth-first extension in p-before-* order yields lexicographic order with p < *.
    std::string current = "*";
    auto extend = [&](auto &&self) -> void {
        if (static_cast<int>(current.size()) == strands + 1) {
            FibString s(current);
            (s.subspace() == Subspace::P ? basis.p_members_ : basis.s_members_).push_back(std::move(s));
            return;
        }
        current.push_back('p');
        self(self);
        current.back() = '*';
        if (current[current.size() - 2] != '*') {
            self(self);
        }
        current.pop_back();
    };
    extend(extend);

    int largest = std::max(basis.p_count(), basis.s_count());
    int n = 1;
    while ((1 << (n - 1)) < largest) {
        n++;
    }
    basis.register_qubits_ = n;
    return basis;
}

int encode(const FibString &s, const FibBasis &basis) {
    if (!s.is_admissible()) {
        throw DomainError("invalid basis state '" + s.str() + "'");
    }
    const auto &block = s.subspace() == Subspace::P ? basis.p_members() : basis.s_members();
    auto it = std::lower_bound(block.begin(), block.end(), s, [](const FibString &a, const FibString &b) {
        return std::lexicographical_compare(a.str().begin(), a.str().end(), b.str().begin(), b.str().end(),
                                            [](char x, char y) { return x == 'p' && y == '*'; });
    });
    if (it == block.end() || *it != s) {
        throw DomainError("invalid basis state '" + s.str() + "' for " + std::to_string(basis.strands()) +
                          " strands");
    }
    int rank = static_cast<int>(it - block.begin());
    return s.subspace() == Subspace::P ? rank : basis.half_dim() + rank;
}

double DenseUnitary::unitarity_error() const {
    ComplexMatrix e = m_.adjoint() * m_ - ComplexMatrix::Identity(dim(), dim());
    return e.cwiseAbs().maxCoeff();
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ShapeError("matrix shapes differ");
    }
    if (a.size() == 0) {
        return 0.0;
    }
    return (a - b).cwiseAbs().maxCoeff();
}

ComplexMatrix temperley_lieb_generator(int i, const FibBasis &basis) {
    if (i < 1 || i > basis.strands() - 1) {
        throw DomainError("crossing index " + std::to_string(i) + " out of range 1.." +
                          std::to_string(basis.strands() - 1));
    }
    ComplexMatrix e = ComplexMatrix::Zero(basis.dim(), basis.dim());
    const auto members = basis.members();
    const auto indices = basis.encoded_indices();
    for (size_t col = 0; col < members.size(); col++) {
        const std::string &s = members[col].str();
        char left = s[i - 1], mid = s[i], right = s[i + 1];
        if (left != right) {
            continue;
        }
        // Both labels of the middle slot that keep the string admissible.
        for (char replacement : {'p', '*'}) {
            if (replacement == '*' && left == '*') {
                continue;
            }
            std::string t = s;
            t[i] = replacement;
            int row = encode(FibString(t), basis);
            e(row, indices[col]) = std::sqrt(qdim(mid) * qdim(replacement)) / qdim(left);
        }
    }
    return e;
}

DenseUnitary crossing_unitary(int i, int sign, const FibBasis &basis) {
    if (sign != 1 && sign != -1) {
        throw DomainError("crossing sign must be +1 or -1");
    }
    ComplexMatrix e = temperley_lieb_generator(i, basis);
    Complex a = bracket_a();
    if (sign < 0) {
        a = std::conj(a);
    }
    ComplexMatrix u = ComplexMatrix::Identity(basis.dim(), basis.dim());
    for (int idx : basis.encoded_indices()) {
        u(idx, idx) = a;
    }
    u += (1.0 / a) * e;
    return DenseUnitary(std::move(u));
}

DenseUnitary braid_unitary(const BraidWord &braid, const FibBasis &basis) {
    if (braid.strands() != basis.strands()) {
        throw ShapeError("braid has " + std::to_string(braid.strands()) + " strands, basis has " +
                         std::to_string(basis.strands()));
    }
    const int m = basis.strands();
    std::vector<DenseUnitary> generators;
    generators.reserve(2 * (m - 1));
    for (int g = 1; g < m; g++) {
        generators.push_back(crossing_unitary(g, +1, basis));
        generators.push_back(generators.back().adjoint());
    }
    ComplexMatrix u = ComplexMatrix::Identity(basis.dim(), basis.dim());
    for (int g : braid.word()) {
        const auto &c = generators[2 * (std::abs(g) - 1) + (g < 0 ? 1 : 0)];
        u = c.matrix() * u;
    }
    return DenseUnitary(std::move(u));
}

Complex weighted_trace(const DenseUnitary &u, const FibBasis &basis) {
    if (u.dim() != basis.dim()) {
        throw ShapeError("unitary dimension " + std::to_string(u.dim()) + " does not match basis dimension " +
                         std::to_string(basis.dim()));
    }
    Complex p_trace = 0.0, s_trace = 0.0;
    for (int k = 0; k < basis.p_count(); k++) {
        p_trace += u(k, k);
    }
    for (int k = 0; k < basis.s_count(); k++) {
        s_trace += u(basis.half_dim() + k, basis.half_dim() + k);
    }
    return kPhi * p_trace + s_trace;
}

bool respects_encoding(const DenseUnitary &u, const FibBasis &basis, double tol) {
    if (u.dim() != basis.dim()) {
        return false;
    }
    const int h = basis.half_dim();
    for (int r = 0; r < u.dim(); r++) {
        for (int c = 0; c < u.dim(); c++) {
            Complex v = u(r, c);
            if ((r < h) != (c < h) && std::abs(v) > tol) {
                return false;
            }
            if (basis.is_padding(r) || basis.is_padding(c)) {
                // Padding entries are exact, not approximately, the identity.
                if (v != Complex(r == c ? 1.0 : 0.0, 0.0)) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::string basis_listing(const FibBasis &basis) {
    std::string out;
    for (const auto &s : basis.members()) {
        out += s.str() + " " + std::to_string(encode(s, basis)) + " " + (s.subspace() == Subspace::P ? "P" : "S") +
               "\n";
    }
    return out;
}

std::string matrix_to_json(const DenseUnitary &u) {
    nlohmann::json rows = nlohmann::json::array();
    for (int r = 0; r < u.dim(); r++) {
        nlohmann::json row = nlohmann::json::array();
        for (int c = 0; c < u.dim(); c++) {
            row.push_back({u(r, c).real(), u(r, c).imag()});
        }
        rows.push_back(std::move(row));
    }
    nlohmann::json j = {{"dim", u.dim()}, {"entries", std::move(rows)}};
    return j.dump();
}

}  // namespace jonesdqc1
