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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string_view>
#include <vector>

#include "pulseforge/errors.hpp"
#include "pulseforge/matrix.hpp"

namespace pulseforge {

/// Single-qubit Pauli factor. The numeric values are the 2-bit axis codes
/// used by the chromosome encoding.
enum class PauliLetter : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

/// Which matrix stands for sigma_z.
///   flipped:  diag(-1, 1)  (spin-down is |0>)
///   standard: diag(1, -1)
enum class SigmaZVariant : std::uint8_t { flipped = 0, standard = 1 };

/// Tensor product of Pauli letters; letter k acts on qubit k, and qubit 0 is
/// the most significant bit of the basis-state index (the leftmost label).
class PauliWord {
 public:
  PauliWord() = default;
  explicit PauliWord(std::vector<PauliLetter> letters)
      : letters_(std::move(letters)) {}
  PauliWord(std::initializer_list<PauliLetter> letters) : letters_(letters) {}

  /// All-identity word on n qubits.
  static PauliWord identity(std::size_t qubits) {
    return PauliWord(std::vector<PauliLetter>(qubits, PauliLetter::I));
  }

  /// Word from 2-bit axis codes (0=I, 1=X, 2=Y, 3=Z).
  static PauliWord from_codes(const std::vector<std::uint8_t>& codes) {
    std::vector<PauliLetter> letters;
    letters.reserve(codes.size());
    for (auto c : codes) {
      if (c > 3) throw InvalidArgument("Pauli axis code must be < 4");
      letters.push_back(static_cast<PauliLetter>(c));
    }
    return PauliWord(std::move(letters));
  }

  std::size_t qubits() const noexcept { return letters_.size(); }
  const std::vector<PauliLetter>& letters() const noexcept { return letters_; }
  PauliLetter operator[](std::size_t k) const { return letters_.at(k); }

  bool is_identity() const noexcept {
    for (auto l : letters_)
      if (l != PauliLetter::I) return false;
    return true;
  }

  /// Number of non-identity letters.
  std::size_t weight() const noexcept {
    std::size_t w = 0;
    for (auto l : letters_) w += (l != PauliLetter::I);
    return w;
  }

  friend bool operator==(const PauliWord&, const PauliWord&) = default;
  friend auto operator<=>(const PauliWord&, const PauliWord&) = default;

 private:
  std::vector<PauliLetter> letters_;
};

inline ComplexMatrix pauli_letter_matrix(PauliLetter letter,
                                         SigmaZVariant variant) {
  using namespace std::complex_literals;
  switch (letter) {
    case PauliLetter::I:
      return ComplexMatrix::identity(2);
    case PauliLetter::X:
      return ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}};
    case PauliLetter::Y:
      return ComplexMatrix{{0.0, -1i}, {1i, 0.0}};
    case PauliLetter::Z:
      return variant == SigmaZVariant::flipped
                 ? ComplexMatrix::diagonal({-1.0, 1.0})
                 : ComplexMatrix::diagonal({1.0, -1.0});
  }
  throw InvalidArgument("unknown Pauli letter");
}

/// n-fold Kronecker product of the word's letters, qubit 0 outermost.
inline ComplexMatrix pauli_word_matrix(const PauliWord& word,
                                       SigmaZVariant variant) {
  if (word.qubits() == 0) {
    throw InvalidArgument("Pauli word has zero qubits");
  }
  ComplexMatrix m = pauli_letter_matrix(word[0], variant);
  for (std::size_t k = 1; k < word.qubits(); ++k) {
    m = kron(m, pauli_letter_matrix(word[k], variant));
  }
  return m;
}

}  // namespace pulseforge
