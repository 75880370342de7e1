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

// JSON views of configs, results and reports. Field layout is documented in
// docs/formats.md.

#include <cstdio>
#include <string>

#include <nlohmann/json.hpp>

#include "pulseforge/chromosome.hpp"
#include "pulseforge/ga.hpp"
#include "pulseforge/notation.hpp"
#include "pulseforge/targets.hpp"
#include "pulseforge/verifier.hpp"

namespace pulseforge {

inline constexpr const char* kVersion = "0.1.0";

inline nlohmann::json to_json(const Convention& c) {
  return {{"index", c.index()},
          {"exponent_sign", c.exponent_sign == ExponentSign::minus ? "minus" : "plus"},
          {"sigma_z", c.sigma_z == SigmaZVariant::flipped ? "flipped" : "standard"},
          {"product_order",
           c.product_order == ProductOrder::as_listed ? "as_listed" : "reversed"}};
}

inline nlohmann::json to_json(const PulseSequence& seq) {
  nlohmann::json pulses = nlohmann::json::array();
  for (const auto& r : seq) pulses.push_back({format_word(r.word()), r.angle_deg()});
  return {{"qubits", seq.qubits()}, {"pulses", pulses}};
}

inline PulseSequence sequence_from_json(const nlohmann::json& j) {
  try {
    const std::size_t n = j.at("qubits").get<std::size_t>();
    PulseSequence seq(n);
    for (const auto& p : j.at("pulses"))
      seq.push_back(Rotation(parse_word(p.at(0).get<std::string>(), n),
                             p.at(1).get<double>()));
    return seq;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("sequence JSON: ") + e.what());
  }
}

inline nlohmann::json to_json(const Chromosome& c) {
  return {{"angle_genes", c.angle_genes}, {"axis_genes", c.axis_genes}};
}

inline nlohmann::json to_json(const GAConfig& cfg) {
  return {{"population_size", cfg.population_size},
          {"max_generations", cfg.max_generations},
          {"crossover_rate", cfg.crossover_rate},
          {"mutation_rate", cfg.mutation_rate},
          {"mutation_mode", to_string(cfg.mutation_mode)},
          {"tolerance", cfg.tolerance},
          {"seed", cfg.seed},
          {"qubits", cfg.space.qubits},
          {"length", cfg.space.length},
          {"convention", cfg.convention ? nlohmann::json(cfg.convention->index())
                                        : nlohmann::json("sweep")},
          {"fitness_mode", to_string(cfg.fitness_mode)},
          {"elitism", cfg.elitism}};
}

inline GAConfig config_from_json(const nlohmann::json& j) {
  GAConfig cfg;
  try {
    cfg.population_size = j.at("population_size").get<std::size_t>();
    cfg.max_generations = j.at("max_generations").get<std::size_t>();
    cfg.crossover_rate = j.at("crossover_rate").get<double>();
    cfg.mutation_rate = j.at("mutation_rate").get<double>();
    cfg.mutation_mode = parse_mutation_mode(j.at("mutation_mode").get<std::string>());
    cfg.tolerance = j.at("tolerance").get<double>();
    cfg.seed = j.at("seed").get<std::uint64_t>();
    cfg.space.qubits = j.at("qubits").get<std::size_t>();
    cfg.space.length = j.at("length").get<std::size_t>();
    const auto& conv = j.at("convention");
    if (conv.is_string()) {
      if (conv.get<std::string>() != "sweep") {
        throw ParseError("config: convention must be an index or \"sweep\"");
      }
      cfg.convention.reset();
    } else {
      cfg.convention = Convention::from_index(conv.get<std::size_t>());
    }
    cfg.fitness_mode = parse_fitness_mode(j.at("fitness_mode").get<std::string>());
    cfg.elitism = j.at("elitism").get<std::size_t>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("config JSON: ") + e.what());
  }
  return cfg;
}

inline nlohmann::json to_json(const SearchResult& r) {
  return {{"best_chromosome", to_json(r.best_chromosome)},
          {"best_chromosome_dump", dump_chromosome(r.best_chromosome)},
          {"best_sequence", to_json(r.best_sequence)},
          {"best_fitness", r.best_fitness},
          {"best_convention", to_json(r.best_convention)},
          {"generations_used", r.generations_used},
          {"evaluations", r.evaluations},
          {"seed", r.seed},
          {"converged", r.converged}};
}

inline nlohmann::json to_json(const VerificationReport& r) {
  return {{"sequence", to_json(r.sequence)},
          {"target", r.target_name},
          {"convention", to_json(r.convention)},
          {"mode", to_string(r.mode)},
          {"tolerance", r.tolerance},
          {"fitness_phase_invariant", r.fitness_phase_invariant},
          {"fitness_frobenius", r.fitness_frobenius},
          {"optimal_phase", r.optimal_phase},
          {"aligned_residual", r.aligned_residual},
          {"pass", r.pass}};
}

inline nlohmann::json to_json(const ReplicationReport& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"group", row.group},
                    {"row", row.row},
                    {"target", row.target_name},
                    {"sequence", to_json(row.sequence)},
                    {"convention", to_json(row.convention)},
                    {"fitness_phase_invariant", row.fitness_phase_invariant},
                    {"fitness_frobenius", row.fitness_frobenius},
                    {"tolerance", row.tolerance},
                    {"pass", row.pass},
                    {"pass_rounding_tier", row.pass_rounding_tier},
                    {"relabeled_diagnostic",
                     {{"qubit_order", format_permutation(row.relabeled.permutation)},
                      {"convention", to_json(row.relabeled.convention)},
                      {"fitness_phase_invariant", row.relabeled.fitness}}}});
  }
  nlohmann::json groups = nlohmann::json::array();
  for (const auto& g : r.groups) {
    groups.push_back({{"group", g.group},
                      {"common_convention", to_json(g.common_convention)},
                      {"worst_fitness", g.worst_fitness},
                      {"tolerance", g.tolerance},
                      {"pass", g.pass}});
  }
  return {{"rows", rows}, {"groups", groups}, {"xca_reading", r.xca_reading},
          {"pass", r.all_pass}};
}

/// Generation log: one "generation best mean" line per generation, after a
/// '#' header line carrying the config.
inline std::string format_generation_log(const SearchResult& r, const GAConfig& cfg) {
  std::string out = "# pulseforge search seed=" + std::to_string(cfg.seed) +
                    " config=" + to_json(cfg).dump() + "\n";
  out += "# generation best_fitness mean_fitness\n";
  char buf[96];
  for (const auto& g : r.log) {
    std::snprintf(buf, sizeof buf, "%zu %.17g %.17g\n", g.generation,
                  g.best_fitness, g.mean_fitness);
    out += buf;
  }
  return out;
}

}  // namespace pulseforge
