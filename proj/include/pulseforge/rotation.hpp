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

#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

#include "pulseforge/errors.hpp"
#include "pulseforge/matrix.hpp"
#include "pulseforge/pauli.hpp"

namespace pulseforge {

/// Sign in front of i in cos(a/2) I -/+ i sin(a/2) S.
enum class ExponentSign : std::uint8_t { minus = 0, plus = 1 };

/// Whether the first rotation of a sequence is the leftmost matrix factor
/// (as_listed) or the rightmost one (reversed, i.e. applied to the state first).
enum class ProductOrder : std::uint8_t { as_listed = 0, reversed = 1 };

/// Resolution of the three sign/ordering choices that the rotation formula
/// leaves open. There are exactly eight; index() enumerates them in the
/// tie-break order minus < plus, flipped < standard, as_listed < reversed.
struct Convention {
  ExponentSign exponent_sign = ExponentSign::minus;
  SigmaZVariant sigma_z = SigmaZVariant::standard;
  ProductOrder product_order = ProductOrder::as_listed;

  static constexpr std::size_t kCount = 8;

  constexpr std::size_t index() const noexcept {
    return static_cast<std::size_t>(exponent_sign) * 4 +
           static_cast<std::size_t>(sigma_z) * 2 +
           static_cast<std::size_t>(product_order);
  }

  static Convention from_index(std::size_t index) {
    if (index >= kCount) {
      throw InvalidArgument("convention index must be in [0, 7], got " +
                            std::to_string(index));
    }
    return Convention{static_cast<ExponentSign>(index / 4),
                      static_cast<SigmaZVariant>((index / 2) % 2),
                      static_cast<ProductOrder>(index % 2)};
  }

  /// Default used by searches outside of replication work.
  static constexpr Convention library_default() noexcept { return {}; }

  /// Default for replicating the reference sequences (sigma_z = diag(-1, 1)).
  static constexpr Convention replication_default() noexcept {
    return {ExponentSign::minus, SigmaZVariant::flipped, ProductOrder::as_listed};
  }

  std::string to_string() const {
    std::string s = exponent_sign == ExponentSign::minus ? "minus" : "plus";
    s += sigma_z == SigmaZVariant::flipped ? "/flipped" : "/standard";
    s += product_order == ProductOrder::as_listed ? "/as_listed" : "/reversed";
    return s;
  }

  friend constexpr bool operator==(const Convention&, const Convention&) = default;
};

inline std::array<Convention, Convention::kCount> all_conventions() {
  std::array<Convention, Convention::kCount> out{};
  for (std::size_t i = 0; i < Convention::kCount; ++i)
    out[i] = Convention::from_index(i);
  return out;
}

/// Wraps any real angle in degrees into [0, 360).
inline double normalize_degrees(double deg) {
  if (!std::isfinite(deg)) throw InvalidArgument("angle is not finite");
  double r = std::fmod(deg, 360.0);
  if (r < 0.0) r += 360.0;
  if (r >= 360.0) r = 0.0;
  return r;
}

/// One pulse: rotation generated by a Pauli word. The angle is kept in
/// degrees and wrapped into [0, 360), so 360 is stored as 0.
class Rotation {
 public:
  Rotation() = default;
  Rotation(PauliWord word, double angle_deg)
      : word_(std::move(word)), angle_deg_(normalize_degrees(angle_deg)) {}

  const PauliWord& word() const noexcept { return word_; }
  double angle_deg() const noexcept { return angle_deg_; }
  std::size_t qubits() const noexcept { return word_.qubits(); }

  friend bool operator==(const Rotation&, const Rotation&) = default;

 private:
  PauliWord word_;
  double angle_deg_ = 0.0;
};

/// cos(a/2) I -/+ i sin(a/2) S for the generator S of `word`, with the angle
/// in degrees taken as given (not wrapped; 360 yields -I).
inline ComplexMatrix rotation_matrix(const PauliWord& word, double angle_deg,
                                     Convention conv) {
  const ComplexMatrix generator = pauli_word_matrix(word, conv.sigma_z);
  const double half = angle_deg * std::numbers::pi / 360.0;
  const double sign = conv.exponent_sign == ExponentSign::minus ? -1.0 : 1.0;
  ComplexMatrix out = generator * Complex(0.0, sign * std::sin(half));
  const double c = std::cos(half);
  for (std::size_t i = 0; i < out.dim(); ++i) out(i, i) += c;
  return out;
}

inline ComplexMatrix rotation_matrix(const Rotation& rot, Convention conv) {
  return rotation_matrix(rot.word(), rot.angle_deg(), conv);
}

/// Ordered list of pulses on a fixed number of qubits.
class PulseSequence {
 public:
  explicit PulseSequence(std::size_t qubits = 1) : qubits_(qubits) {
    if (qubits_ == 0) throw InvalidArgument("pulse sequence needs >= 1 qubit");
  }

  PulseSequence(std::size_t qubits, std::vector<Rotation> rotations)
      : PulseSequence(qubits) {
    for (auto& r : rotations) push_back(std::move(r));
  }

  void push_back(Rotation rot) {
    if (rot.qubits() != qubits_) {
      throw DimensionError("rotation acts on " + std::to_string(rot.qubits()) +
                           " qubits but the sequence has " +
                           std::to_string(qubits_));
    }
    rotations_.push_back(std::move(rot));
  }

  std::size_t qubits() const noexcept { return qubits_; }
  std::size_t dim() const noexcept { return std::size_t{1} << qubits_; }
  std::size_t size() const noexcept { return rotations_.size(); }
  bool empty() const noexcept { return rotations_.empty(); }
  const std::vector<Rotation>& rotations() const noexcept { return rotations_; }
  const Rotation& operator[](std::size_t k) const { return rotations_.at(k); }
  auto begin() const noexcept { return rotations_.begin(); }
  auto end() const noexcept { return rotations_.end(); }

  friend bool operator==(const PulseSequence&, const PulseSequence&) = default;

 private:
  std::size_t qubits_;
  std::vector<Rotation> rotations_;
};

/// Ordered product of the sequence's rotation matrices; identity when empty.
inline ComplexMatrix sequence_product(const PulseSequence& seq,
                                      Convention conv) {
  ComplexMatrix u = ComplexMatrix::identity(seq.dim());
  const auto& rots = seq.rotations();
  if (conv.product_order == ProductOrder::as_listed) {
    for (const auto& r : rots) u = u * rotation_matrix(r, conv);
  } else {
    for (auto it = rots.rbegin(); it != rots.rend(); ++it)
      u = u * rotation_matrix(*it, conv);
  }
  return u;
}

/// Same as above for a loose list of rotations; all must act on `qubits`.
inline ComplexMatrix sequence_product(std::size_t qubits,
                                      const std::vector<Rotation>& rots,
                                      Convention conv) {
  return sequence_product(PulseSequence(qubits, rots), conv);
}

}  // namespace pulseforge
