// Copyright 2026 The gcalc Authors
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

#ifndef GCALC_ERRORS_HPP
#define GCALC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gcalc {

/// Base class of every error raised by the library. `code()` is a stable
/// machine-readable identifier; the CLI forwards it in its JSON error output.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

struct NotSymmetric : Error {
  explicit NotSymmetric(const std::string& m) : Error("not_symmetric", m) {}
};

struct NotPositiveDefinite : Error {
  explicit NotPositiveDefinite(const std::string& m)
      : Error("not_positive_definite", m) {}
};

struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& m)
      : Error("dimension_mismatch", m) {}
};

/// Carries the estimated reciprocal condition number of the offending matrix.
class SingularMatrix : public Error {
 public:
  SingularMatrix(const std::string& m, double rcond)
      : Error("singular_matrix", m), rcond_(rcond) {}
  double rcond() const noexcept { return rcond_; }

 private:
  double rcond_;
};

struct NotPure : Error {
  explicit NotPure(const std::string& m) : Error("not_pure", m) {}
};

struct NotUnitary : Error {
  explicit NotUnitary(const std::string& m) : Error("not_unitary", m) {}
};

struct NotSelfInverse : Error {
  explicit NotSelfInverse(const std::string& m)
      : Error("not_self_inverse", m) {}
};

struct ParameterOutOfRange : Error {
  explicit ParameterOutOfRange(const std::string& m)
      : Error("parameter_out_of_range", m) {}
};

struct NonFiniteParameter : Error {
  explicit NonFiniteParameter(const std::string& m)
      : Error("non_finite_parameter", m) {}
};

struct IndexOutOfRange : Error {
  explicit IndexOutOfRange(const std::string& m)
      : Error("index_out_of_range", m) {}
};

struct DuplicateIndex : Error {
  explicit DuplicateIndex(const std::string& m)
      : Error("duplicate_index", m) {}
};

struct DuplicateLabel : Error {
  explicit DuplicateLabel(const std::string& m)
      : Error("duplicate_label", m) {}
};

struct UnknownLabel : Error {
  explicit UnknownLabel(const std::string& m) : Error("unknown_label", m) {}
};

struct SameNode : Error {
  explicit SameNode(const std::string& m) : Error("same_node", m) {}
};

struct LastNode : Error {
  explicit LastNode(const std::string& m) : Error("last_node", m) {}
};

struct InvalidPartition : Error {
  explicit InvalidPartition(const std::string& m)
      : Error("invalid_partition", m) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& m) : Error("parse_error", m) {}
};

}  // namespace gcalc

#endif
