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

#ifndef JONESDQC1_ERRORS_HPP
#define JONESDQC1_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jonesdqc1 {

/// Braid text that could not be turned into a BraidWord.
class ParseError : public std::invalid_argument {
   public:
    enum class Kind { syntax, out_of_range };

    ParseError(Kind kind, std::size_t position, const std::string &message)
        : std::invalid_argument(message), kind_(kind), position_(position) {}

    Kind kind() const noexcept { return kind_; }
    /// Zero-based character offset of the offending token.
    std::size_t position() const noexcept { return position_; }

   private:
    Kind kind_;
    std::size_t position_;
};

/// An argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// Matrix or state dimensions that do not fit together.
class ShapeError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Work that would exceed a hard size limit (e.g. the 2^c state sum).
class ResourceLimitError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class InsufficientDataError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A knot class had fewer members than the requested representatives.
class ShortfallError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace jonesdqc1

#endif
