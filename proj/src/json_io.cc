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


#include "gtbqc/json_io.h"

#include <fstream>
#include <sstream>

#include "gtbqc/errors.h"

namespace gtbqc {

Json complex_to_json(Complex c) {
    return Json::array({c.real(), c.imag()});
}

Complex complex_from_json(const Json &j) {
    if (j.is_number()) {
        return Complex(j.get<double>(), 0);
    }
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw ParseError("complex number must be [re, im], got " + j.dump());
    }
    return Complex(j[0].get<double>(), j[1].get<double>());
}

Json matrix_to_json(const MatX &m) {
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); r++) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < m.cols(); c++) {
            row.push_back(complex_to_json(m(r, c)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

MatX matrix_from_json(const Json &j) {
    if (!j.is_array() || j.empty() || !j[0].is_array()) {
        throw ParseError("matrix must be a nonempty array of rows");
    }
    auto rows = (Eigen::Index)j.size();
    auto cols = (Eigen::Index)j[0].size();
    MatX m(rows, cols);
    for (Eigen::Index r = 0; r < rows; r++) {
        if (!j[r].is_array() || (Eigen::Index)j[r].size() != cols) {
            throw ParseError("matrix rows differ in length");
        }
        for (Eigen::Index c = 0; c < cols; c++) {
            m(r, c) = complex_from_json(j[r][c]);
        }
    }
    return m;
}

Unitary2 unitary2_from_json(const Json &j) {
    MatX m = matrix_from_json(j);
    if (m.rows() != 2 || m.cols() != 2) {
        throw ParseError("expected a 2x2 matrix");
    }
    try {
        return Unitary2(Mat2(m));
    } catch (const ValueError &e) {
        throw ParseError(e.what());
    }
}

Json amplitudes_to_json(std::span<const Complex> amplitudes) {
    Json out = Json::array();
    for (auto a : amplitudes) {
        out.push_back(complex_to_json(a));
    }
    return out;
}

Json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::ios_base::failure("cannot open " + path);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return Json::parse(buf.str());
    } catch (const Json::parse_error &e) {
        throw ParseError(path + ": " + e.what());
    }
}

}  // namespace gtbqc
