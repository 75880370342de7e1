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
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "pulseforge/chromosome.hpp"
#include "pulseforge/errors.hpp"
#include "pulseforge/fitness.hpp"
#include "pulseforge/random.hpp"
#include "pulseforge/rotation.hpp"
#include "pulseforge/targets.hpp"

namespace pulseforge {

/// standard: every bit flips independently with probability mutation_rate.
/// modular:  per gene, two random values from the gene's range are reduced
///           modulo round(1 / mutation_rate); if the residues coincide, every
///           bit of the gene flips.
enum class MutationMode : std::uint8_t { standard, modular };

inline std::string_view to_string(MutationMode m) noexcept {
  return m == MutationMode::standard ? "standard" : "modular";
}

inline MutationMode parse_mutation_mode(std::string_view s) {
  if (s == "standard") return MutationMode::standard;
  if (s == "modular") return MutationMode::modular;
  throw InvalidArgument("unknown mutation mode '" + std::string(s) + "'");
}

/// Guard in the inverted roulette weight 1 / (delta + fitness).
inline constexpr double kSelectionDelta = 1e-9;

struct GAConfig {
  std::size_t population_size = 200;
  std::size_t max_generations = 5000;
  double crossover_rate = 0.9;
  double mutation_rate = 0.02;
  MutationMode mutation_mode = MutationMode::standard;
  double tolerance = 1e-3;
  std::uint64_t seed = 1;
  SearchSpace space{};
  /// Fixed convention, or nullopt to score each individual by its best
  /// convention (eight evaluations per individual).
  std::optional<Convention> convention = Convention::library_default();
  FitnessMode fitness_mode = FitnessMode::phase_invariant;
  std::size_t elitism = 1;
  /// Evaluation threads; 0 = hardware concurrency. Does not affect results.
  unsigned threads = 1;

  void validate() const {
    space.validate();
    if (population_size < 2 || population_size % 2 != 0) {
      throw InvalidArgument("population_size must be even and >= 2");
    }
    auto prob = [](double p, const char* name) {
      if (!(p >= 0.0 && p <= 1.0)) {
        throw InvalidArgument(std::string(name) + " must be in [0, 1]");
      }
    };
    prob(crossover_rate, "crossover_rate");
    prob(mutation_rate, "mutation_rate");
    if (!(tolerance >= 0.0)) throw InvalidArgument("tolerance must be >= 0");
    if (elitism >= population_size) {
      throw InvalidArgument("elitism must be smaller than population_size");
    }
  }
};

struct GenerationStats {
  std::size_t generation = 0;
  double best_fitness = 0.0;
  double mean_fitness = 0.0;
};

struct SearchResult {
  Chromosome best_chromosome;
  PulseSequence best_sequence;
  double best_fitness = 0.0;
  Convention best_convention;
  std::size_t generations_used = 0;
  std::size_t evaluations = 0;
  std::uint64_t seed = 0;
  bool converged = false;
  std::vector<GenerationStats> log;
};

/// Scores decoded chromosomes against one target. Pauli word matrices are
/// cached; the arithmetic is otherwise the same as sequence_product, so
/// scores agree with it bit for bit.
class PopulationEvaluator {
 public:
  PopulationEvaluator(const TargetGate& target, const GAConfig& cfg)
      : target_(target.matrix),
        qubits_(cfg.space.qubits),
        mode_(cfg.fitness_mode),
        convention_(cfg.convention) {
    if (target_.dim() != (std::size_t{1} << qubits_)) {
      throw DimensionError("search space has " + std::to_string(qubits_) +
                           " qubits but target '" + target.name + "' is " +
                           std::to_string(target_.dim()) + "x" +
                           std::to_string(target_.dim()));
    }
    if (qubits_ <= kCachedQubitLimit) {
      const std::size_t words = std::size_t{1} << (2 * qubits_);
      for (auto variant : {SigmaZVariant::flipped, SigmaZVariant::standard}) {
        auto& cache = cache_[static_cast<std::size_t>(variant)];
        cache.reserve(words);
        for (std::size_t w = 0; w < words; ++w)
          cache.push_back(pauli_word_matrix(word_for_index(w), variant));
      }
    }
  }

  /// Fitness and the convention that produced it.
  std::pair<double, Convention> score(const Chromosome& c) const {
    if (convention_) return {score(c, *convention_), *convention_};
    double best = std::numeric_limits<double>::infinity();
    Convention arg;
    for (const auto& conv : all_conventions()) {
      const double f = score(c, conv);
      if (f < best) {
        best = f;
        arg = conv;
      }
    }
    return {best, arg};
  }

  double score(const Chromosome& c, Convention conv) const {
    ComplexMatrix u = ComplexMatrix::identity(target_.dim());
    const std::size_t n = c.length();
    for (std::size_t step = 0; step < n; ++step) {
      const std::size_t k =
          conv.product_order == ProductOrder::as_listed ? step : n - 1 - step;
      u = u * rotation(c.axis_genes[k], decode_angle(c.angle_genes[k]), conv);
    }
    return fitness(u, target_, mode_);
  }

  std::size_t evaluations_per_individual() const noexcept {
    return convention_ ? 1 : Convention::kCount;
  }

 private:
  static constexpr std::size_t kCachedQubitLimit = 4;

  PauliWord word_for_index(std::size_t w) const {
    std::vector<std::uint8_t> codes(qubits_);
    for (std::size_t q = 0; q < qubits_; ++q)
      codes[q] = static_cast<std::uint8_t>((w >> (2 * (qubits_ - 1 - q))) & 3u);
    return PauliWord::from_codes(codes);
  }

  ComplexMatrix rotation(const std::vector<std::uint8_t>& codes,
                         std::uint32_t angle_deg, Convention conv) const {
    const auto& cache = cache_[static_cast<std::size_t>(conv.sigma_z)];
    if (cache.empty()) {
      return rotation_matrix(PauliWord::from_codes(codes),
                             static_cast<double>(angle_deg), conv);
    }
    std::size_t w = 0;
    for (auto code : codes) w = (w << 2) | code;
    const double half = static_cast<double>(angle_deg) * std::numbers::pi / 360.0;
    const double sign = conv.exponent_sign == ExponentSign::minus ? -1.0 : 1.0;
    ComplexMatrix out = cache[w] * Complex(0.0, sign * std::sin(half));
    const double cs = std::cos(half);
    for (std::size_t i = 0; i < out.dim(); ++i) out(i, i) += cs;
    return out;
  }

  ComplexMatrix target_;
  std::size_t qubits_;
  FitnessMode mode_;
  std::optional<Convention> convention_;
  std::vector<ComplexMatrix> cache_[2];
};

inline unsigned resolve_thread_count(unsigned requested, std::size_t work) {
  unsigned t = requested == 0 ? std::max(1u, std::thread::hardware_concurrency())
                              : requested;
  return static_cast<unsigned>(std::min<std::size_t>(t, std::max<std::size_t>(work, 1)));
}

/// Scores pop[i] into slot i. Entries are independent, so the result does
/// not depend on the thread count.
inline std::vector<double> evaluate_population(
    const std::vector<Chromosome>& pop, const PopulationEvaluator& eval,
    unsigned threads = 1, std::vector<Convention>* conventions = nullptr) {
  std::vector<double> fits(pop.size());
  std::vector<Convention> convs(pop.size());
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      auto [f, c] = eval.score(pop[i]);
      fits[i] = f;
      convs[i] = c;
    }
  };
  const unsigned t = resolve_thread_count(threads, pop.size());
  if (t <= 1) {
    work(0, pop.size());
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (pop.size() + t - 1) / t;
    for (unsigned k = 0; k < t; ++k) {
      const std::size_t b = k * chunk, e = std::min(pop.size(), b + chunk);
      if (b < e) pool.emplace_back(work, b, e);
    }
  }
  if (conventions) *conventions = std::move(convs);
  return fits;
}

inline std::vector<double> evaluate_population(const std::vector<Chromosome>& pop,
                                               const TargetGate& target,
                                               const GAConfig& cfg) {
  for (const auto& c : pop) {
    if (!c.matches(cfg.space)) {
      throw DimensionError("chromosome shape does not match the search space");
    }
  }
  return evaluate_population(pop, PopulationEvaluator(target, cfg), cfg.threads);
}

/// Roulette selection on w_i = 1 / (delta + fitness_i); lower fitness wins
/// more often. Returns size/2 index pairs.
inline std::vector<std::pair<std::size_t, std::size_t>> select_parents(
    const std::vector<double>& fits, Rng& rng) {
  if (fits.empty()) throw InvalidArgument("select_parents: empty population");
  std::vector<double> cumulative(fits.size());
  double total = 0.0;
  for (std::size_t i = 0; i < fits.size(); ++i) {
    total += 1.0 / (kSelectionDelta + std::max(0.0, fits[i]));
    cumulative[i] = total;
  }
  auto spin = [&]() -> std::size_t {
    const double u = rng.uniform01() * total;
    const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    return it == cumulative.end() ? fits.size() - 1
                                  : static_cast<std::size_t>(it - cumulative.begin());
  };
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(std::max<std::size_t>(fits.size() / 2, 1));
  for (std::size_t k = 0; k < std::max<std::size_t>(fits.size() / 2, 1); ++k) {
    const std::size_t a = spin();
    const std::size_t b = spin();
    pairs.emplace_back(a, b);
  }
  return pairs;
}

/// Exchanges the tails a[cut..] and b[cut..] in place.
inline void single_point_crossover(std::vector<std::uint8_t>& a,
                                   std::vector<std::uint8_t>& b, std::size_t cut) {
  if (a.size() != b.size()) throw InvalidArgument("crossover: length mismatch");
  if (cut > a.size()) throw InvalidArgument("crossover: cut point past the end");
  std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(cut), a.end(),
                   b.begin() + static_cast<std::ptrdiff_t>(cut));
}

/// Deterministic crossover: the angle bit strings are cut at angle_cut and
/// the axis bit strings at axis_cut (a cut equal to the length exchanges
/// nothing).
inline std::pair<Chromosome, Chromosome> crossover_at(const Chromosome& p1,
                                                      const Chromosome& p2,
                                                      std::size_t angle_cut,
                                                      std::size_t axis_cut) {
  if (p1.length() != p2.length() || p1.qubits() != p2.qubits()) {
    throw InvalidArgument("crossover: parent shapes differ");
  }
  Chromosome o1 = p1, o2 = p2;
  auto a1 = angle_bits(p1), a2 = angle_bits(p2);
  single_point_crossover(a1, a2, angle_cut);
  set_angle_bits(o1, a1);
  set_angle_bits(o2, a2);
  auto x1 = axis_bits(p1), x2 = axis_bits(p2);
  single_point_crossover(x1, x2, axis_cut);
  set_axis_bits(o1, x1);
  set_axis_bits(o2, x2);
  return {std::move(o1), std::move(o2)};
}

/// Independent single-point crossovers of the angle and axis strings, each
/// firing with probability `rate` at a cut in [1, bits - 1].
inline std::pair<Chromosome, Chromosome> crossover(const Chromosome& p1,
                                                   const Chromosome& p2,
                                                   double rate, Rng& rng) {
  if (p1.length() != p2.length() || p1.qubits() != p2.qubits()) {
    throw InvalidArgument("crossover: parent shapes differ");
  }
  const std::size_t angle_len = p1.length() * kAngleBits;
  const std::size_t axis_len = p1.length() * p1.qubits() * kAxisCodeBits;
  auto draw_cut = [&](std::size_t len) -> std::size_t {
    if (!rng.bernoulli(rate) || len < 2) return len;
    return 1 + static_cast<std::size_t>(rng.below(len - 1));
  };
  const std::size_t angle_cut = draw_cut(angle_len);
  const std::size_t axis_cut = draw_cut(axis_len);
  return crossover_at(p1, p2, angle_cut, axis_cut);
}

/// Modulus used by modular-mode mutation; 0 means mutation never fires.
inline std::uint64_t modular_mutation_modulus(double rate) {
  if (rate <= 0.0) return 0;
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::llround(1.0 / rate)));
}

inline Chromosome mutate(Chromosome c, double rate, MutationMode mode, Rng& rng) {
  if (!(rate >= 0.0 && rate <= 1.0)) {
    throw InvalidArgument("mutation_rate must be in [0, 1]");
  }
  if (mode == MutationMode::standard) {
    for (auto& g : c.angle_genes)
      for (unsigned b = kAngleBits; b-- > 0;)
        if (rng.bernoulli(rate)) g ^= static_cast<std::uint16_t>(1u << b);
    for (auto& w : c.axis_genes)
      for (auto& code : w)
        for (unsigned b = kAxisCodeBits; b-- > 0;)
          if (rng.bernoulli(rate)) code ^= static_cast<std::uint8_t>(1u << b);
    return c;
  }

  const std::uint64_t modulus = modular_mutation_modulus(rate);
  if (modulus == 0) return c;
  auto coincide = [&](std::uint64_t range) {
    const std::uint64_t a = rng.below(range);
    const std::uint64_t b = rng.below(range);
    return a % modulus == b % modulus;
  };
  for (auto& g : c.angle_genes)
    if (coincide(kAngleLevels)) g ^= static_cast<std::uint16_t>(kMaxAngleGene);
  // An axis gene is the whole word of one pulse (2n bits).
  const std::uint64_t word_range = std::uint64_t{1} << (kAxisCodeBits * c.qubits());
  for (auto& w : c.axis_genes)
    if (coincide(word_range))
      for (auto& code : w) code ^= 3u;
  return c;
}

inline Chromosome mutate(Chromosome c, const GAConfig& cfg, Rng& rng) {
  return mutate(std::move(c), cfg.mutation_rate, cfg.mutation_mode, rng);
}

namespace detail {

/// Indices sorted by (fitness, index).
inline std::vector<std::size_t> ranking(const std::vector<double>& fits) {
  std::vector<std::size_t> idx(fits.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return fits[a] < fits[b]; });
  return idx;
}

inline GenerationStats stats(std::size_t gen, const std::vector<double>& fits,
                             std::size_t best) {
  double sum = 0.0;
  for (double f : fits) sum += f;
  return {gen, fits[best], sum / static_cast<double>(fits.size())};
}

}  // namespace detail

/// Generational loop: evaluate, stop when the best fitness is within
/// tolerance, otherwise select, cross over, mutate and carry the elite over
/// unchanged. Deterministic for a given (cfg, target).
inline SearchResult run_search(const GAConfig& cfg, const TargetGate& target) {
  cfg.validate();
  const PopulationEvaluator eval(target, cfg);
  Rng rng(cfg.seed);

  std::vector<Chromosome> pop;
  pop.reserve(cfg.population_size);
  for (std::size_t i = 0; i < cfg.population_size; ++i)
    pop.push_back(random_chromosome(rng, cfg.space));

  std::vector<Convention> convs;
  std::vector<double> fits = evaluate_population(pop, eval, cfg.threads, &convs);
  std::size_t evaluations = pop.size() * eval.evaluations_per_individual();
  auto order = detail::ranking(fits);

  SearchResult result;
  result.seed = cfg.seed;
  result.log.push_back(detail::stats(0, fits, order.front()));

  std::size_t gen = 0;
  while (fits[order.front()] > cfg.tolerance && gen < cfg.max_generations) {
    ++gen;
    const auto pairs = select_parents(fits, rng);
    std::vector<Chromosome> next;
    next.reserve(cfg.population_size);
    for (std::size_t e = 0; e < cfg.elitism; ++e) next.push_back(pop[order[e]]);
    for (const auto& [a, b] : pairs) {
      auto [o1, o2] = crossover(pop[a], pop[b], cfg.crossover_rate, rng);
      o1 = mutate(std::move(o1), cfg, rng);
      o2 = mutate(std::move(o2), cfg, rng);
      if (next.size() < cfg.population_size) next.push_back(std::move(o1));
      if (next.size() < cfg.population_size) next.push_back(std::move(o2));
    }

    std::vector<double> next_fits(cfg.population_size);
    std::vector<Convention> next_convs(cfg.population_size);
    for (std::size_t e = 0; e < cfg.elitism; ++e) {
      next_fits[e] = fits[order[e]];
      next_convs[e] = convs[order[e]];
    }
    const std::vector<Chromosome> fresh(next.begin() + static_cast<std::ptrdiff_t>(cfg.elitism),
                                        next.end());
    std::vector<Convention> fresh_convs;
    const auto fresh_fits = evaluate_population(fresh, eval, cfg.threads, &fresh_convs);
    evaluations += fresh.size() * eval.evaluations_per_individual();
    std::copy(fresh_fits.begin(), fresh_fits.end(),
              next_fits.begin() + static_cast<std::ptrdiff_t>(cfg.elitism));
    std::copy(fresh_convs.begin(), fresh_convs.end(),
              next_convs.begin() + static_cast<std::ptrdiff_t>(cfg.elitism));

    pop = std::move(next);
    fits = std::move(next_fits);
    convs = std::move(next_convs);
    order = detail::ranking(fits);
    result.log.push_back(detail::stats(gen, fits, order.front()));
  }

  const std::size_t best = order.front();
  result.best_chromosome = pop[best];
  result.best_sequence = decode_chromosome(pop[best]);
  result.best_convention = convs[best];
  result.best_fitness = fitness(sequence_product(result.best_sequence, convs[best]),
                                target.matrix, cfg.fitness_mode);
  result.generations_used = gen;
  result.evaluations = evaluations;
  result.converged = result.best_fitness <= cfg.tolerance;
  return result;
}

}  // namespace pulseforge
