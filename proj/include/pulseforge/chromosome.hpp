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

// Bit-level genotype. Each pulse carries a 9-bit angle gene and one 2-bit
// axis code per qubit (0=I, 1=X, 2=Y, 3=Z). Angle genes map linearly onto
// [0, 360] degrees (gene * 360 / 511), are rounded to whole degrees and
// wrapped so that 360 reads as 0.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "pulseforge/errors.hpp"
#include "pulseforge/notation.hpp"
#include "pulseforge/pauli.hpp"
#include "pulseforge/random.hpp"
#include "pulseforge/rotation.hpp"

namespace pulseforge {

inline constexpr unsigned kAngleBits = 9;
inline constexpr unsigned kAxisCodeBits = 2;
inline constexpr std::uint32_t kAngleLevels = 1u << kAngleBits;  // 512
inline constexpr std::uint32_t kMaxAngleGene = kAngleLevels - 1;  // 511
inline constexpr double kMinAngleDeg = 0.0;
inline constexpr double kMaxAngleDeg = 360.0;

struct SearchSpace {
  std::size_t qubits = 1;
  std::size_t length = 1;  // pulses per chromosome

  void validate() const {
    if (qubits == 0) throw InvalidArgument("search space needs >= 1 qubit");
    if (length == 0) throw InvalidArgument("search space needs >= 1 pulse");
    if (qubits > kMaxNotationQubits) {
      throw InvalidArgument("search space supports at most 26 qubits");
    }
  }

  std::size_t angle_bit_count() const { return kAngleBits * length; }
  std::size_t axis_bit_count() const { return kAxisCodeBits * qubits * length; }

  friend bool operator==(const SearchSpace&, const SearchSpace&) = default;
};

struct Chromosome {
  std::vector<std::uint16_t> angle_genes;             // N genes, each < 512
  std::vector<std::vector<std::uint8_t>> axis_genes;  // N words of n codes < 4

  std::size_t length() const noexcept { return angle_genes.size(); }
  std::size_t qubits() const noexcept {
    return axis_genes.empty() ? 0 : axis_genes.front().size();
  }

  bool matches(const SearchSpace& space) const noexcept {
    if (angle_genes.size() != space.length || axis_genes.size() != space.length)
      return false;
    for (const auto& w : axis_genes)
      if (w.size() != space.qubits) return false;
    return true;
  }

  void validate() const {
    if (axis_genes.size() != angle_genes.size()) {
      throw InvalidArgument("chromosome: angle and axis gene counts differ");
    }
    for (auto g : angle_genes)
      if (g > kMaxAngleGene) throw InvalidArgument("chromosome: angle gene >= 512");
    for (const auto& w : axis_genes) {
      if (w.size() != qubits() || w.empty()) {
        throw InvalidArgument("chromosome: axis words have inconsistent width");
      }
      for (auto c : w)
        if (c > 3) throw InvalidArgument("chromosome: axis code >= 4");
    }
  }

  friend bool operator==(const Chromosome&, const Chromosome&) = default;
};

/// Whole-degree angle for a 9-bit gene: round(gene * 360 / 511) mod 360.
inline std::uint32_t decode_angle(std::uint32_t gene) {
  if (gene > kMaxAngleGene) {
    throw InvalidArgument("angle gene " + std::to_string(gene) +
                          " does not fit in 9 bits");
  }
  // gene * 360 / 511 is never exactly k + 1/2 (511 is odd), so integer
  // round-half-up is plain rounding.
  const std::uint32_t scaled = (2 * gene * 360 + kMaxAngleGene) / (2 * kMaxAngleGene);
  return scaled % 360;
}

/// Unrounded linear map gene -> degrees, r * (max - min) / (2^L - 1).
inline double gene_to_degrees(std::uint32_t gene) {
  return static_cast<double>(gene) * (kMaxAngleDeg - kMinAngleDeg) /
         static_cast<double>(kMaxAngleGene);
}

/// Nearest gene for an angle in degrees (wrapped into [0, 360) first).
inline std::uint16_t encode_angle(double degrees) {
  const double a = normalize_degrees(degrees);
  const double g = std::round(a * kMaxAngleGene / kMaxAngleDeg);
  return static_cast<std::uint16_t>(g > kMaxAngleGene ? kMaxAngleGene : g);
}

inline PauliWord decode_word(const std::vector<std::uint8_t>& codes) {
  return PauliWord::from_codes(codes);
}

inline std::vector<std::uint8_t> encode_word(const PauliWord& word) {
  std::vector<std::uint8_t> codes;
  codes.reserve(word.qubits());
  for (auto l : word.letters()) codes.push_back(static_cast<std::uint8_t>(l));
  return codes;
}

inline PulseSequence decode_chromosome(const Chromosome& c) {
  PulseSequence seq(c.qubits() == 0 ? 1 : c.qubits());
  for (std::size_t k = 0; k < c.length(); ++k) {
    seq.push_back(Rotation(decode_word(c.axis_genes[k]),
                           static_cast<double>(decode_angle(c.angle_genes[k]))));
  }
  return seq;
}

/// Chromosome whose decoding reproduces `seq` with angles snapped to the grid.
inline Chromosome encode_sequence(const PulseSequence& seq) {
  Chromosome c;
  for (const auto& r : seq) {
    c.angle_genes.push_back(encode_angle(r.angle_deg()));
    c.axis_genes.push_back(encode_word(r.word()));
  }
  return c;
}

/// Uniform independent genes. Draw order: all angle genes, then the axis
/// codes pulse by pulse, qubit by qubit.
inline Chromosome random_chromosome(Rng& rng, const SearchSpace& space) {
  space.validate();
  Chromosome c;
  c.angle_genes.resize(space.length);
  c.axis_genes.assign(space.length, std::vector<std::uint8_t>(space.qubits));
  for (auto& g : c.angle_genes) g = static_cast<std::uint16_t>(rng.below(kAngleLevels));
  for (auto& w : c.axis_genes)
    for (auto& code : w) code = static_cast<std::uint8_t>(rng.below(4));
  return c;
}

/// Angle genes as one MSB-first bit string of 9N bits.
inline std::vector<std::uint8_t> angle_bits(const Chromosome& c) {
  std::vector<std::uint8_t> bits;
  bits.reserve(c.length() * kAngleBits);
  for (auto g : c.angle_genes)
    for (int b = kAngleBits - 1; b >= 0; --b) bits.push_back((g >> b) & 1u);
  return bits;
}

inline void set_angle_bits(Chromosome& c, const std::vector<std::uint8_t>& bits) {
  if (bits.size() != c.length() * kAngleBits) {
    throw InvalidArgument("angle bit string has the wrong length");
  }
  for (std::size_t k = 0; k < c.length(); ++k) {
    std::uint16_t g = 0;
    for (unsigned b = 0; b < kAngleBits; ++b)
      g = static_cast<std::uint16_t>((g << 1) | bits[k * kAngleBits + b]);
    c.angle_genes[k] = g;
  }
}

/// Axis codes as one MSB-first bit string of 2nN bits (pulse-major).
inline std::vector<std::uint8_t> axis_bits(const Chromosome& c) {
  std::vector<std::uint8_t> bits;
  bits.reserve(c.length() * c.qubits() * kAxisCodeBits);
  for (const auto& w : c.axis_genes)
    for (auto code : w) {
      bits.push_back((code >> 1) & 1u);
      bits.push_back(code & 1u);
    }
  return bits;
}

inline void set_axis_bits(Chromosome& c, const std::vector<std::uint8_t>& bits) {
  if (bits.size() != c.length() * c.qubits() * kAxisCodeBits) {
    throw InvalidArgument("axis bit string has the wrong length");
  }
  std::size_t i = 0;
  for (auto& w : c.axis_genes)
    for (auto& code : w) {
      code = static_cast<std::uint8_t>((bits[i] << 1) | bits[i + 1]);
      i += 2;
    }
}

/// One line per pulse: "<word> <angle_gene> <decoded_angle>".
inline std::string dump_chromosome(const Chromosome& c) {
  std::string out;
  for (std::size_t k = 0; k < c.length(); ++k) {
    out += format_word(decode_word(c.axis_genes[k])) + " " +
           std::to_string(c.angle_genes[k]) + " " +
           std::to_string(decode_angle(c.angle_genes[k])) + "\n";
  }
  return out;
}

}  // namespace pulseforge
