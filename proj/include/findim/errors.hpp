// Copyright 2026 The findim Authors
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

#ifndef FINDIM_ERRORS_HPP
#define FINDIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace findim {

// Base class of every findim failure. `code()` is a stable identifier that
// the CLI maps onto machine-readable diagnostics; the message always names
// the first violating witness where one exists.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

class AsymmetricMatrix : public Error {
 public:
  AsymmetricMatrix(int i, int j)
      : Error("AsymmetricMatrix",
              "distance matrix is not symmetric at (" + std::to_string(i) +
                  ", " + std::to_string(j) + ")"),
        i(i), j(j) {}
  int i, j;
};

class NegativeOrZeroOffDiagonal : public Error {
 public:
  NegativeOrZeroOffDiagonal(int i, int j, double value)
      : Error("NegativeOrZeroOffDiagonal",
              "off-diagonal entry (" + std::to_string(i) + ", " +
                  std::to_string(j) + ") = " + std::to_string(value) +
                  " must be positive (diagonal must be zero)"),
        i(i), j(j) {}
  int i, j;
};

class TriangleViolation : public Error {
 public:
  TriangleViolation(int i, int j, int k)
      : Error("TriangleViolation",
              "triangle inequality fails: d(" + std::to_string(i) + "," +
                  std::to_string(k) + ") > d(" + std::to_string(i) + "," +
                  std::to_string(j) + ") + d(" + std::to_string(j) + "," +
                  std::to_string(k) + ")"),
        i(i), j(j), k(k) {}
  int i, j, k;
};

class SinglePoint : public Error {
 public:
  explicit SinglePoint(const std::string& op)
      : Error("SinglePoint", op + " requires at least two points") {}
};

class EtaBelowNabla : public Error {
 public:
  EtaBelowNabla(double eta, double nabla)
      : Error("EtaBelowNabla",
              "no 2-covering of diameter " + std::to_string(eta) +
                  " exists; the 2-covering diameter is " +
                  std::to_string(nabla)) {}
};

class InstanceTooLarge : public Error {
 public:
  InstanceTooLarge(const std::string& op, long size, long cap)
      : Error("InstanceTooLarge",
              op + ": instance size " + std::to_string(size) +
                  " exceeds the cap " + std::to_string(cap)) {}
};

class Disconnected : public Error {
 public:
  explicit Disconnected(const std::string& component)
      : Error("Disconnected",
              "graph is not connected; one component is {" + component + "}") {}
};

class NonUnitLengths : public Error {
 public:
  explicit NonUnitLengths(const std::string& op)
      : Error("NonUnitLengths",
              op + " is only defined for unit edge lengths (g == 1)") {}
};

class InvalidFamilyParameters : public Error {
 public:
  explicit InvalidFamilyParameters(const std::string& what)
      : Error("InvalidFamilyParameters", what) {}
};

class IntervalTooTight : public Error {
 public:
  IntervalTooTight(const std::string& lo, const std::string& hi)
      : Error("IntervalTooTight",
              "no admissible dimension value in [" + lo + ", " + hi + "]") {}
};

class FamilyInvalid : public Error {
 public:
  FamilyInvalid(const std::string& x, const std::string& y,
                const std::string& reason)
      : Error("FamilyInvalid",
              "geodesic family invalid at pair {" + x + ", " + y + "}: " +
                  reason) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error("ParseError", what) {}
};

// Violation of a condition the library itself guarantees; seeing this is a bug.
class InternalError : public Error {
 public:
  explicit InternalError(const std::string& what)
      : Error("InternalError", what) {}
};

}  // namespace findim

#endif  // FINDIM_ERRORS_HPP
