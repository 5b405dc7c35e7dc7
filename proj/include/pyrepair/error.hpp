// Copyright 2026 The pyrepair Authors
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

#ifndef PYREPAIR_ERROR_HPP_
#define PYREPAIR_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace pyrepair {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or incomplete assignment / dataset directory.
class LoadError : public Error {
 public:
  using Error::Error;
};

/// The configured interpreter (or another external tool) could not be run.
class EnvironmentError : public Error {
 public:
  using Error::Error;
};

/// The completion backend gave up. `status` is the last HTTP status seen,
/// or 0 when the failure happened below HTTP (connect, timeout, ...).
class BackendError : public Error {
 public:
  BackendError(const std::string& what, int status)
      : Error(what), status_(status) {}
  int status() const noexcept { return status_; }

 private:
  int status_;
};

class FixtureMissError : public Error {
 public:
  explicit FixtureMissError(const std::string& digest)
      : Error("fixture miss: no completions recorded for prompt digest " +
              digest),
        digest_(digest) {}
  const std::string& digest() const noexcept { return digest_; }

 private:
  std::string digest_;
};

}  // namespace pyrepair

#endif  // PYREPAIR_ERROR_HPP_
