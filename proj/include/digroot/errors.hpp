// Copyright 2026 The digroot Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DIGROOT_ERRORS_HPP
#define DIGROOT_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace digroot {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (bad index, k out of range,
/// mismatched sizes, empty input where one is required).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A structural precondition does not hold for the input, e.g. the digraph
/// is not in the subdivision class the procedure is defined for.
class HypothesisViolation : public Error {
 public:
  using Error::Error;
};

/// A claimed root (or an intermediate result derived from it) contradicts a
/// proven property. Carries the name of the violated step.
class InconsistentRoot : public Error {
 public:
  InconsistentRoot(std::string step, const std::string& what)
      : Error(step + ": " + what), step_(std::move(step)) {}

  const std::string& step() const noexcept { return step_; }

 private:
  std::string step_;
};

/// Free-path propagation stopped before reaching every vertex.
class IncompleteCover : public Error {
 public:
  explicit IncompleteCover(std::vector<std::size_t> residue)
      : Error("free-path cover left " + std::to_string(residue.size()) +
              " vertices unreached"),
        residue_(std::move(residue)) {}

  const std::vector<std::size_t>& residue() const noexcept { return residue_; }

 private:
  std::vector<std::size_t> residue_;
};

}  // namespace digroot

#endif  // DIGROOT_ERRORS_HPP
