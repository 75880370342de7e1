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

#include <algorithm>
#include <cmath>
#include <string>
#include <string_view>

#include "pulseforge/errors.hpp"
#include "pulseforge/matrix.hpp"

namespace pulseforge {

/// How far a sequence product is from the target.
///   frobenius:       ||result - target||_F, zero only for exact equality.
///   phase_invariant: 1 - |tr(target^dagger result)| / dim, zero iff the two
///                    agree up to a global phase. Bounded by [0, 1] for
///                    unitary arguments.
enum class FitnessMode : std::uint8_t { frobenius, phase_invariant };

inline std::string_view to_string(FitnessMode mode) noexcept {
  return mode == FitnessMode::frobenius ? "frobenius" : "phase_invariant";
}

inline FitnessMode parse_fitness_mode(std::string_view s) {
  if (s == "frobenius") return FitnessMode::frobenius;
  if (s == "phase" || s == "phase_invariant") return FitnessMode::phase_invariant;
  throw InvalidArgument("unknown fitness mode '" + std::string(s) + "'");
}

/// tr(target^dagger result) without forming the adjoint.
inline Complex trace_overlap(const ComplexMatrix& result,
                             const ComplexMatrix& target) {
  if (result.dim() != target.dim()) {
    throw DimensionError("fitness: result is " + std::to_string(result.dim()) +
                         "x" + std::to_string(result.dim()) + ", target is " +
                         std::to_string(target.dim()) + "x" +
                         std::to_string(target.dim()));
  }
  Complex t = 0.0;
  const std::size_t d = result.dim();
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) t += std::conj(target(r, c)) * result(r, c);
  return t;
}

inline double fitness(const ComplexMatrix& result, const ComplexMatrix& target,
                      FitnessMode mode) {
  if (result.dim() != target.dim() || result.empty()) {
    throw DimensionError("fitness: dimension mismatch (" +
                         std::to_string(result.dim()) + " vs " +
                         std::to_string(target.dim()) + ")");
  }
  if (mode == FitnessMode::frobenius) {
    return (result - target).frobenius_norm();
  }
  const double overlap = std::abs(trace_overlap(result, target)) /
                         static_cast<double>(result.dim());
  // |overlap| can exceed 1 by a few ulps.
  return std::max(0.0, 1.0 - overlap);
}

/// Global phase phi* = arg tr(target^dagger result) that best aligns the two.
inline double optimal_phase(const ComplexMatrix& result,
                            const ComplexMatrix& target) {
  const Complex t = trace_overlap(result, target);
  return std::abs(t) == 0.0 ? 0.0 : std::arg(t);
}

/// max |e^{-i phi*} result - target| after optimal phase alignment.
inline double aligned_residual(const ComplexMatrix& result,
                               const ComplexMatrix& target) {
  const double phi = optimal_phase(result, target);
  return (result * std::polar(1.0, -phi) - target).max_abs();
}

}  // namespace pulseforge
