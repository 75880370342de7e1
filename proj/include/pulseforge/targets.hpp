// Copyright 2026 The PulseForge Authors
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

#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "pulseforge/errors.hpp"
#include "pulseforge/matrix.hpp"

namespace pulseforge {

/// Unitarity slack accepted when loading a user-supplied matrix.
inline constexpr double kLoadUnitarityTolerance = 1e-9;

struct TargetGate {
  std::string name;
  std::size_t qubits = 0;
  ComplexMatrix matrix;
  std::vector<std::string> tags;
};

/// Permutation matrix of a controlled NOT on n qubits. Qubit 0 is the most
/// significant bit of the basis index, so for n = 2, control 0, target 1 this
/// is the familiar |00>,|01>,|11>,|10> matrix.
inline ComplexMatrix cnot_matrix(std::size_t qubits, std::size_t control,
                                 std::size_t target) {
  if (qubits < 2) throw InvalidArgument("cnot_matrix: needs at least 2 qubits");
  if (control >= qubits || target >= qubits) {
    throw InvalidArgument("cnot_matrix: qubit index out of range");
  }
  if (control == target) {
    throw InvalidArgument("cnot_matrix: control and target must differ");
  }
  const std::size_t dim = std::size_t{1} << qubits;
  const std::size_t cbit = std::size_t{1} << (qubits - 1 - control);
  const std::size_t tbit = std::size_t{1} << (qubits - 1 - target);
  ComplexMatrix m(dim);
  for (std::size_t b = 0; b < dim; ++b) {
    const std::size_t out = (b & cbit) ? (b ^ tbit) : b;
    m(out, b) = 1.0;
  }
  return m;
}

/// CNOT_AB * CNOT_AC on three qubits, the fixed core of order-finding for
/// N = 15: |1bc> -> |1 (1-b) (1-c)>, identity when A = 0.
inline ComplexMatrix shor15_core_matrix() {
  ComplexMatrix m(8);
  constexpr std::size_t kImage[8] = {0, 1, 2, 3, 7, 6, 5, 4};
  for (std::size_t c = 0; c < 8; ++c) m(kImage[c], c) = 1.0;
  return m;
}

inline TargetGate cnot_target() {
  return {"cnot", 2, cnot_matrix(2, 0, 1), {"builtin", "control=A", "target=B"}};
}

inline TargetGate shor15_target() {
  return {"shor15", 3, shor15_core_matrix(), {"builtin", "CNOT_AB*CNOT_AC"}};
}

/// Validates dimension and unitarity; throws on violation.
inline void validate_target(const TargetGate& gate) {
  if (!is_power_of_two(gate.matrix.dim()) || gate.matrix.dim() < 2) {
    throw DimensionError("target '" + gate.name + "': dimension " +
                         std::to_string(gate.matrix.dim()) +
                         " is not a power of two >= 2");
  }
  if ((std::size_t{1} << gate.qubits) != gate.matrix.dim()) {
    throw DimensionError("target '" + gate.name + "': qubits = " +
                         std::to_string(gate.qubits) + " but matrix is " +
                         std::to_string(gate.matrix.dim()) + "x" +
                         std::to_string(gate.matrix.dim()));
  }
  const double dev = gate.matrix.unitarity_deviation();
  if (!(dev <= kLoadUnitarityTolerance)) {
    std::ostringstream os;
    os.precision(6);
    os << "target '" << gate.name << "' is not unitary: ||U^dagger U - I|| = "
       << dev;
    throw UnitarityError(os.str(), dev);
  }
}

/// JSON target: {"name": str, "qubits": n, "matrix": [[[re, im], ...], ...]}.
inline TargetGate target_from_json(const nlohmann::json& j) {
  TargetGate gate;
  try {
    gate.name = j.at("name").get<std::string>();
    gate.qubits = j.at("qubits").get<std::size_t>();
    const auto& rows = j.at("matrix");
    if (!rows.is_array() || rows.empty()) {
      throw ParseError("target 'matrix' must be a non-empty array of rows");
    }
    const std::size_t dim = rows.size();
    gate.matrix = ComplexMatrix(dim);
    for (std::size_t r = 0; r < dim; ++r) {
      const auto& row = rows.at(r);
      if (!row.is_array() || row.size() != dim) {
        throw DimensionError("target matrix row " + std::to_string(r) +
                             " has the wrong length (matrix must be square)");
      }
      for (std::size_t c = 0; c < dim; ++c) {
        const auto& e = row.at(c);
        if (e.is_number()) {
          gate.matrix(r, c) = e.get<double>();
        } else if (e.is_array() && e.size() == 2) {
          gate.matrix(r, c) = Complex(e.at(0).get<double>(), e.at(1).get<double>());
        } else {
          throw ParseError("target matrix entry (" + std::to_string(r) + "," +
                           std::to_string(c) + ") must be [re, im]");
        }
      }
    }
    if (j.contains("tags")) gate.tags = j.at("tags").get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("target JSON: ") + e.what());
  }
  validate_target(gate);
  return gate;
}

inline nlohmann::json matrix_to_json(const ComplexMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < m.dim(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.dim(); ++c)
      row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

inline nlohmann::json target_to_json(const TargetGate& gate) {
  nlohmann::json j;
  j["name"] = gate.name;
  j["qubits"] = gate.qubits;
  j["matrix"] = matrix_to_json(gate.matrix);
  if (!gate.tags.empty()) j["tags"] = gate.tags;
  return j;
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("error reading '" + path + "'");
  return ss.str();
}

inline TargetGate load_target(const std::string& path) {
  const std::string text = read_text_file(path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
  return target_from_json(j);
}

/// Resolves "cnot", "shor15" or "file:PATH".
inline TargetGate resolve_target(std::string_view descriptor) {
  if (descriptor == "cnot") return cnot_target();
  if (descriptor == "shor15") return shor15_target();
  if (descriptor.starts_with("file:")) {
    return load_target(std::string(descriptor.substr(5)));
  }
  throw InvalidArgument("unknown target '" + std::string(descriptor) +
                        "' (expected cnot, shor15 or file:PATH)");
}

}  // namespace pulseforge
