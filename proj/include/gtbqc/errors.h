// Copyright 2026 The gtbqc Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace gtbqc {

/// Invalid argument to a library operation (bad index, non-unitary input, ...).
class ValueError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Structured-text input that fails to parse or validate.
class ParseError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Inconsistent protocol configuration, e.g. a gate set that fails its
/// commutation criterion or a witness-table miss.
class ConfigError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A protocol run that cannot complete (attempt cap exceeded, transport
/// violation).
class ProtocolAbort : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// An exhaustive search that found no solution. The message names the
/// offending inputs.
class NoSolutionError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A statistical check asked for fewer samples than its threshold needs.
class InsufficientSamplesError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace gtbqc
