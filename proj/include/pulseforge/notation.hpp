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

// Text notation for pulses, e.g. "xzAB" = sigma_x on qubit A, sigma_z on B.
// Lowercase axis letters come first, then uppercase qubit letters (A = qubit
// 0, B = qubit 1, ...). A single axis letter with several qubit letters
// applies that axis to every listed qubit ("xCA" = sigma_x on C and A).
// "id" is the all-identity word.

#include <cctype>
#include <charconv>
#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "pulseforge/errors.hpp"
#include "pulseforge/pauli.hpp"
#include "pulseforge/rotation.hpp"

namespace pulseforge {

inline constexpr std::size_t kMaxNotationQubits = 26;

inline PauliWord parse_word(std::string_view text, std::size_t qubits) {
  if (qubits == 0) throw InvalidArgument("word needs at least one qubit");
  if (qubits > kMaxNotationQubits) {
    throw InvalidArgument("pulse notation supports at most 26 qubits");
  }
  if (text == "id") return PauliWord::identity(qubits);

  std::size_t split = 0;
  while (split < text.size() && std::islower(static_cast<unsigned char>(text[split])))
    ++split;
  const std::string_view axes = text.substr(0, split);
  const std::string_view targets = text.substr(split);
  if (axes.empty() || targets.empty()) {
    throw ParseError("malformed pulse word '" + std::string(text) + "'");
  }
  if (axes.size() != targets.size() && axes.size() != 1) {
    throw ParseError("pulse word '" + std::string(text) +
                     "': axis letters must match the qubit letters one to one "
                     "or be a single letter");
  }

  std::vector<PauliLetter> letters(qubits, PauliLetter::I);
  std::vector<bool> seen(qubits, false);
  for (std::size_t k = 0; k < targets.size(); ++k) {
    const char q = targets[k];
    if (q < 'A' || static_cast<std::size_t>(q - 'A') >= qubits) {
      throw ParseError("pulse word '" + std::string(text) + "': qubit '" +
                       std::string(1, q) + "' outside A.." +
                       std::string(1, static_cast<char>('A' + qubits - 1)));
    }
    const std::size_t idx = static_cast<std::size_t>(q - 'A');
    if (seen[idx]) {
      throw ParseError("pulse word '" + std::string(text) + "': qubit '" +
                       std::string(1, q) + "' listed twice");
    }
    seen[idx] = true;
    switch (axes.size() == 1 ? axes[0] : axes[k]) {
      case 'x': letters[idx] = PauliLetter::X; break;
      case 'y': letters[idx] = PauliLetter::Y; break;
      case 'z': letters[idx] = PauliLetter::Z; break;
      default:
        throw ParseError("pulse word '" + std::string(text) +
                         "': axis must be x, y or z");
    }
  }
  return PauliWord(std::move(letters));
}

/// Canonical form: axes in qubit order, e.g. X on A and Z on B -> "xzAB".
inline std::string format_word(const PauliWord& word) {
  std::string axes, targets;
  for (std::size_t k = 0; k < word.qubits(); ++k) {
    const PauliLetter l = word[k];
    if (l == PauliLetter::I) continue;
    axes += l == PauliLetter::X ? 'x' : l == PauliLetter::Y ? 'y' : 'z';
    targets += static_cast<char>('A' + k);
  }
  return axes.empty() ? std::string("id") : axes + targets;
}

inline std::string format_angle(double deg) {
  std::ostringstream os;
  os.precision(17);
  os << deg;
  return os.str();
}

inline std::string format_rotation(const Rotation& r) {
  return "R " + format_word(r.word()) + " " + format_angle(r.angle_deg());
}

/// Sequence file: one pulse per line, "R <word> <angle-degrees>". Blank lines
/// and text after '#' are ignored. Angles may be any finite real.
inline PulseSequence parse_sequence(std::string_view text, std::size_t qubits) {
  PulseSequence seq(qubits);
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string tag, word, angle, extra;
    if (!(fields >> tag)) continue;
    auto fail = [&](const std::string& why) {
      return ParseError("sequence line " + std::to_string(lineno) + ": " + why);
    };
    if (tag != "R") throw fail("expected 'R', got '" + tag + "'");
    if (!(fields >> word >> angle)) throw fail("expected 'R <word> <angle>'");
    if (fields >> extra) throw fail("trailing text '" + extra + "'");
    double deg = 0.0;
    const auto* end = angle.data() + angle.size();
    auto [ptr, ec] = std::from_chars(angle.data(), end, deg);
    if (ec != std::errc{} || ptr != end || !std::isfinite(deg)) {
      throw fail("bad angle '" + angle + "'");
    }
    try {
      seq.push_back(Rotation(parse_word(word, qubits), deg));
    } catch (const ParseError& e) {
      throw fail(e.what());
    }
  }
  return seq;
}

inline std::string format_sequence(const PulseSequence& seq) {
  std::string out;
  for (const auto& r : seq) out += format_rotation(r) + "\n";
  return out;
}

}  // namespace pulseforge
