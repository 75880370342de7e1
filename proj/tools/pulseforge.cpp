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

// pulseforge: search for, verify and replicate pulse sequences.
//
// Exit codes: 0 success (converged / pass), 1 verification failed,
// 2 search budget exhausted, 64 usage error, 65 invalid configuration or
// input values, 66 unreadable or malformed input file.

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "pulseforge/pulseforge.hpp"

namespace pf = pulseforge;
using nlohmann::json;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitBudget = 2;
constexpr int kExitUsage = 64;
constexpr int kExitConfig = 65;
constexpr int kExitFile = 66;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw pf::IoError("cannot write '" + path + "'");
  out << text;
  if (!out) throw pf::IoError("error writing '" + path + "'");
}

json read_json_file(const std::string& path) {
  const std::string text = pf::read_text_file(path);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw pf::ParseError("'" + path + "': " + e.what());
  }
}

std::string iso_now() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

/// Parsed "--convention INDEX|sweep"; nullopt means sweep.
std::optional<pf::Convention> parse_convention(const std::string& s) {
  if (s == "sweep") return std::nullopt;
  std::size_t pos = 0;
  unsigned long idx = 0;
  try {
    idx = std::stoul(s, &pos);
  } catch (const std::exception&) {
    throw UsageError("--convention must be 0-7 or 'sweep', got '" + s + "'");
  }
  if (pos != s.size()) throw UsageError("--convention must be 0-7 or 'sweep'");
  return pf::Convention::from_index(idx);
}

unsigned threads_from_env() {
  const char* v = std::getenv("PULSEFORGE_THREADS");
  if (v == nullptr || *v == '\0') return 0;
  try {
    return static_cast<unsigned>(std::stoul(v));
  } catch (const std::exception&) {
    throw pf::InvalidArgument(std::string("PULSEFORGE_THREADS must be a count, got '") +
                              v + "'");
  }
}

json manifest_header(const std::string& command) {
  return {{"tool", "pulseforge"}, {"version", pf::kVersion}, {"command", command}};
}

json target_descriptor(const std::string& descriptor, const pf::TargetGate& gate) {
  return {{"descriptor", descriptor}, {"gate", pf::target_to_json(gate)}};
}

std::string default_log_path(const std::string& output) {
  std::filesystem::path p(output);
  p.replace_extension(".log");
  return p.string();
}

struct SearchArgs {
  std::string target;
  std::optional<std::size_t> qubits;
  std::size_t length = 3;
  pf::GAConfig cfg;
  std::string mode = "phase";
  std::string convention = "2";
  std::string mutation = "standard";
  std::string output = "search_result.json";
  std::string log;
  std::string manifest;
  bool record_time = false;
};

int run_search_command(SearchArgs& a) {
  pf::GAConfig cfg = a.cfg;
  std::string descriptor = a.target;
  pf::TargetGate gate;
  if (!a.manifest.empty()) {
    const json m = read_json_file(a.manifest);
    try {
      if (m.at("command").get<std::string>() != "search") {
        throw pf::ParseError("manifest '" + a.manifest + "' is not a search manifest");
      }
      cfg = pf::config_from_json(m.at("config"));
      descriptor = m.at("target").at("descriptor").get<std::string>();
      gate = pf::target_from_json(m.at("target").at("gate"));
    } catch (const json::exception& e) {
      throw pf::ParseError("manifest '" + a.manifest + "': " + e.what());
    }
  } else {
    if (descriptor.empty()) throw UsageError("search: --target is required");
    gate = pf::resolve_target(descriptor);
    cfg.space.qubits = a.qubits.value_or(gate.qubits);
    cfg.space.length = a.length;
    cfg.fitness_mode = pf::parse_fitness_mode(a.mode);
    cfg.convention = parse_convention(a.convention);
    cfg.mutation_mode = pf::parse_mutation_mode(a.mutation);
  }
  if (cfg.space.qubits != gate.qubits) {
    throw pf::InvalidArgument("--qubits " + std::to_string(cfg.space.qubits) +
                              " does not match target '" + gate.name + "' (" +
                              std::to_string(gate.qubits) + " qubits)");
  }
  cfg.threads = threads_from_env();

  json manifest = manifest_header("search");
  manifest["config"] = pf::to_json(cfg);
  manifest["target"] = target_descriptor(descriptor, gate);
  const std::string started = iso_now();
  const pf::SearchResult result = pf::run_search(cfg, gate);
  manifest["outcome"] = pf::to_json(result);
  if (a.record_time) manifest["timestamps"] = {{"start", started}, {"end", iso_now()}};

  const std::string log_path = a.log.empty() ? default_log_path(a.output) : a.log;
  write_text_file(a.output, manifest.dump(2) + "\n");
  write_text_file(log_path, pf::format_generation_log(result, cfg));

  std::cout << (result.converged ? "converged" : "budget exhausted")
            << ": best fitness " << result.best_fitness << " after "
            << result.generations_used << " generations ("
            << result.evaluations << " evaluations)\n"
            << pf::format_sequence(result.best_sequence);
  return result.converged ? 0 : kExitBudget;
}

struct VerifyArgs {
  std::string target;
  std::string sequence;
  double tol = pf::kStrictTier;
  std::string convention = "sweep";
  std::string mode = "phase";
  std::string output = "verify_report.json";
  std::string manifest;
  bool record_time = false;
};

int run_verify_command(VerifyArgs& a) {
  std::string descriptor = a.target;
  pf::TargetGate gate;
  std::optional<pf::PulseSequence> seq;
  double tol = a.tol;
  std::string convention = a.convention;
  std::string mode = a.mode;
  if (!a.manifest.empty()) {
    const json m = read_json_file(a.manifest);
    try {
      if (m.at("command").get<std::string>() != "verify") {
        throw pf::ParseError("manifest '" + a.manifest + "' is not a verify manifest");
      }
      const auto& c = m.at("config");
      tol = c.at("tolerance").get<double>();
      convention = c.at("convention").is_string()
                       ? c.at("convention").get<std::string>()
                       : std::to_string(c.at("convention").get<std::size_t>());
      mode = c.at("mode").get<std::string>();
      descriptor = m.at("target").at("descriptor").get<std::string>();
      gate = pf::target_from_json(m.at("target").at("gate"));
      seq = pf::sequence_from_json(m.at("input_sequence"));
    } catch (const json::exception& e) {
      throw pf::ParseError("manifest '" + a.manifest + "': " + e.what());
    }
  } else {
    if (descriptor.empty()) throw UsageError("verify: --target is required");
    if (a.sequence.empty()) throw UsageError("verify: --sequence is required");
    gate = pf::resolve_target(descriptor);
    seq = pf::parse_sequence(pf::read_text_file(a.sequence), gate.qubits);
  }

  const auto fixed = parse_convention(convention);
  const pf::FitnessMode fmode = pf::parse_fitness_mode(mode);
  const std::string started = iso_now();
  const pf::Convention conv =
      fixed ? *fixed : pf::convention_sweep(*seq, gate).convention;
  const auto report = pf::verify_sequence(*seq, gate, tol, conv, fmode);

  json manifest = manifest_header("verify");
  manifest["config"] = {{"tolerance", tol},
                        {"convention", fixed ? json(fixed->index()) : json("sweep")},
                        {"mode", pf::to_string(fmode)}};
  manifest["target"] = target_descriptor(descriptor, gate);
  manifest["input_sequence"] = pf::to_json(*seq);
  manifest["outcome"] = pf::to_json(report);
  if (a.record_time) manifest["timestamps"] = {{"start", started}, {"end", iso_now()}};
  write_text_file(a.output, manifest.dump(2) + "\n");

  std::cout << (report.pass ? "pass" : "fail") << ": phase-invariant fitness "
            << report.fitness_phase_invariant << ", frobenius "
            << report.fitness_frobenius << " under convention "
            << report.convention.index() << " (" << report.convention.to_string()
            << ")\n";
  return report.pass ? 0 : kExitFail;
}

struct ReplicateArgs {
  std::string output = "replicate_report.json";
  std::string xca_reading = pf::kDefaultXcaReading;
};

int run_replicate_command(const ReplicateArgs& a) {
  const auto report = pf::replicate_reference_sequences(a.xca_reading);
  json out = manifest_header("replicate");
  out["report"] = pf::to_json(report);
  write_text_file(a.output, out.dump(2) + "\n");
  for (const auto& row : report.rows) {
    std::cout << row.group << " row " << row.row << ": "
              << (row.pass ? "pass" : "FAIL") << "  fitness "
              << row.fitness_phase_invariant << " (tol " << row.tolerance
              << ") convention " << row.convention.index() << " ["
              << row.convention.to_string() << "]  relabeled "
              << pf::format_permutation(row.relabeled.permutation) << ": "
              << row.relabeled.fitness << "\n";
  }
  for (const auto& t : report.groups) {
    std::cout << t.group << ": " << (t.pass ? "pass" : "FAIL")
              << "  worst row " << t.worst_fitness << " under common convention "
              << t.common_convention.index() << "\n";
  }
  return report.all_pass ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pulseforge: genetic search and verification of pulse sequences"};
  app.require_subcommand(1);
  app.set_version_flag("--version", pf::kVersion);

  SearchArgs sa;
  auto* search = app.add_subcommand("search", "run a genetic search for a target gate");
  search->add_option("--target", sa.target, "cnot, shor15 or file:PATH");
  search->add_option("--qubits", sa.qubits, "qubit count (defaults to the target's)");
  search->add_option("--length", sa.length, "pulses per sequence")->check(CLI::PositiveNumber);
  search->add_option("--pop", sa.cfg.population_size, "population size (even)");
  search->add_option("--gens", sa.cfg.max_generations, "generation budget");
  search->add_option("--mut-rate", sa.cfg.mutation_rate, "mutation rate");
  search->add_option("--cross-rate", sa.cfg.crossover_rate, "crossover rate");
  search->add_option("--tol", sa.cfg.tolerance, "fitness threshold for convergence");
  search->add_option("--seed", sa.cfg.seed, "random seed");
  search->add_option("--elitism", sa.cfg.elitism, "elite individuals carried over");
  search->add_option("--mode", sa.mode, "phase or frobenius")
      ->check(CLI::IsMember({"phase", "phase_invariant", "frobenius"}));
  search->add_option("--convention", sa.convention, "convention index 0-7 or 'sweep'");
  search->add_option("--mutation", sa.mutation, "standard or modular")
      ->check(CLI::IsMember({"standard", "modular"}));
  search->add_option("--output", sa.output, "result JSON path");
  search->add_option("--log", sa.log, "generation log path");
  search->add_option("--from-manifest", sa.manifest, "re-run from a result JSON");
  search->add_flag("--record-time", sa.record_time, "embed start/end timestamps");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "verify a pulse sequence file");
  verify->add_option("--target", va.target, "cnot, shor15 or file:PATH");
  verify->add_option("--sequence", va.sequence, "sequence file ('R <word> <angle>' lines)");
  verify->add_option("--tol", va.tol, "phase-invariant pass threshold");
  verify->add_option("--convention", va.convention, "convention index 0-7 or 'sweep'");
  verify->add_option("--mode", va.mode, "fitness deciding pass: phase or frobenius")
      ->check(CLI::IsMember({"phase", "phase_invariant", "frobenius"}));
  verify->add_option("--output", va.output, "report JSON path");
  verify->add_option("--from-manifest", va.manifest, "re-run from a report JSON");
  verify->add_flag("--record-time", va.record_time, "embed start/end timestamps");

  ReplicateArgs ra;
  auto* replicate = app.add_subcommand("replicate", "verify the reference sequences");
  replicate->add_option("--output", ra.output, "report JSON path");
  replicate->add_option("--xca-reading", ra.xca_reading,
                        "pulse word for the ambiguous xCA subscript");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (search->parsed()) return run_search_command(sa);
    if (verify->parsed()) return run_verify_command(va);
    if (replicate->parsed()) return run_replicate_command(ra);
  } catch (const UsageError& e) {
    std::cerr << "pulseforge: " << e.what() << "\n";
    return kExitUsage;
  } catch (const pf::IoError& e) {
    std::cerr << "pulseforge: " << e.what() << "\n";
    return kExitFile;
  } catch (const pf::ParseError& e) {
    std::cerr << "pulseforge: " << e.what() << "\n";
    return kExitFile;
  } catch (const pf::Error& e) {
    std::cerr << "pulseforge: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitUsage;
}
