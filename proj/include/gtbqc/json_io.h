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

#include <span>
#include <string>

#include "gtbqc/linalg.h"
#include "json.hpp"

namespace gtbqc {

using Json = nlohmann::json;

/// Complex numbers are serialized as [re, im].
Json complex_to_json(Complex c);
Complex complex_from_json(const Json &j);

/// Row-major nested arrays of [re, im] pairs.
Json matrix_to_json(const MatX &m);
MatX matrix_from_json(const Json &j);
/// Parses and checks unitarity; ParseError on any failure.
Unitary2 unitary2_from_json(const Json &j);

Json amplitudes_to_json(std::span<const Complex> amplitudes);

/// Reads and parses a JSON document; throws std::ios_base::failure on I/O
/// errors and ParseError on malformed text.
Json read_json_file(const std::string &path);

}  // namespace gtbqc
