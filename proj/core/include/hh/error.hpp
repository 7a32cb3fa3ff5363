// Copyright 2026 The hhcalc Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace hh {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input or a violated precondition/law.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A computation needed data beyond a configured cap (degree, word or path).
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// A theorem's hypothesis does not hold for the given input.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

}  // namespace hh
