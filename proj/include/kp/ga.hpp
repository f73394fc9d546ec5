#pragma once

#include <optional>
#include <span>
#include <utility>

#include "kp/core.hpp"
#include "kp/rng.hpp"

namespace kp {

enum class CrossoverType : std::uint8_t { OnePoint, Greedy };
enum class SelectionMode : std::uint8_t { Normal, Stagnant };

/// One candidate solution: the selection bits (original item order) plus the
/// crossover type this individual currently prefers.
struct Chromosome {
    Bits bits;
    CrossoverType xtype = CrossoverType::OnePoint;
};

/// Engine tunables. Defaults are the standard configuration: population 200,
/// 1000 generations or 300 s, biased initialization at 0.7, penalty constant
/// 100, mutation ramping in steps of 1/(10N) up to 10/N.
struct GaConfig {
    int population_size = 200;
    int max_generations = 1000;
    double time_limit_s = 300.0; ///< <= 0 disables the wall clock entirely.
    double init_include_prob = 0.7;
    double penalty_c = 100.0;
    std::optional<double> mutation_step; ///< default 1 / (10 * population)
    std::optional<double> mutation_cap;  ///< default 10 / population
    double random_selection_prob = 0.5;
    int stagnation_window = 20;
    std::uint64_t seed = 0;
    bool record_trace = false;

    double resolved_mutation_step() const {
        return mutation_step ? *mutation_step
                             : 1.0 / (10.0 * population_size);
    }
    double resolved_mutation_cap() const {
        return mutation_cap ? *mutation_cap : 10.0 / population_size;
    }

    /// Throws ContractError on out-of-range values. The population must be
    /// even: offspring replace parents pairwise.
    void validate() const;
};

/// Per-generation engine snapshot, one row of the run trace.
struct TracePoint {
    int generation = 0;
    std::int64_t best_value = 0;
    double best_fitness = 0.0; ///< max fitness in the population
    double mutation_rate = 0.0;
    SelectionMode mode = SelectionMode::Normal;
};

struct RunReport {
    std::int64_t best_value = 0;
    Bits best_bits;
    std::optional<bool> solved; ///< set iff an oracle optimum was supplied
    int generations_used = 0;
    double wall_time_s = 0.0;
    double min_fitness_seen = 0.0;
    std::vector<TracePoint> trace; ///< empty unless GaConfig::record_trace
};

/// Fitness floor keeping every individual selectable by the roulette wheel.
inline constexpr double kMinFitness = 1e-9;

/// Penalty fitness of an infeasible candidate: best_ref / generation +
/// slack / c, clamped to kMinFitness. slack = W - selection weight, negative
/// here. The generation divisor anneals the reward for infeasibility away as
/// the run progresses.
double infeasible_fitness(double best_ref, int generation, double c,
                          std::int64_t slack);

/// Roulette wheel over positive fitness values: one uniform draw against the
/// cumulative sum.
std::size_t roulette_select(std::span<const double> fitness, Rng& rng);

/// Parent selection with the stagnation switch: Normal mode is pure roulette;
/// Stagnant mode goes uniform with probability random_prob, roulette
/// otherwise.
std::size_t select_index(std::span<const double> fitness, SelectionMode mode,
                         double random_prob, Rng& rng);

/// Stagnant once the global best has been flat for `window` generations.
SelectionMode stagnation_mode(int generations_since_improvement, int window);

/// Tail exchange at position cut, 1 <= cut <= n-1.
std::pair<Bits, Bits> one_point_cross(const Bits& a, const Bits& b,
                                      std::size_t cut);

/// Constructive crossover: packs the union of both parents' items in
/// profit/weight order, taking each while it fits. The result is feasible for
/// arbitrary (even infeasible) parents.
Bits greedy_merge(const Bits& a, const Bits& b, const Instance& instance);

struct CrossResult {
    Bits first;
    Bits second;
    CrossoverType used = CrossoverType::OnePoint;
};

/// Crossover with type resolution: parents agreeing on a type use it,
/// otherwise a coin decides. OnePoint exchanges tails at a random cut.
/// Greedy builds the first offspring with greedy_merge and the second by
/// one-point on the same parents, keeping replacement 1:1. With n == 1 the
/// offspring are plain copies (no cut position exists).
CrossResult crossover(const Chromosome& a, const Chromosome& b,
                      const Instance& instance, Rng& rng);

/// Offspring type update: a strict fitness improvement over the better
/// parent propagates the used type to both offspring; otherwise each type is
/// redrawn uniformly.
std::pair<CrossoverType, CrossoverType>
adapt_xtypes(CrossoverType used, double parent_best_fitness,
             double offspring_best_fitness, Rng& rng);

/// Independent per-bit flips with the given probability.
Bits mutate(Bits bits, double rate, Rng& rng);

/// Saw-tooth schedule: reset to 0 on improvement, otherwise one step up,
/// capped.
double next_mutation_rate(double rate, bool improved, double step, double cap);

/// The genetic algorithm engine. One engine owns one run over one instance;
/// the instance is shared immutably, so runs with different seeds may
/// execute concurrently on separate engines.
class Engine {
  public:
    struct Individual {
        Chromosome chrom;
        Evaluation eval;
        double fitness = 0.0;
    };

    /// Binds the engine to an instance. The instance must outlive the engine.
    Engine(const Instance& instance, GaConfig config);

    /// Builds generation 1: each bit set with init_include_prob, crossover
    /// types uniform. If no individual came out feasible, the half-greedy
    /// selection replaces the lowest-fitness one so a global best exists
    /// from the start.
    void init_population();

    /// Advances one generation: select N/2 parent pairs, cross, adapt types,
    /// mutate, evaluate, replace wholesale, re-inject the elite if it was
    /// lost, update the global best and the mutation/stagnation schedules.
    void step();

    /// Runs until max_generations, the time limit, or (when supplied) the
    /// oracle optimum is reached. With the time limit disabled the outcome is
    /// a pure function of (instance, config). Call once per engine.
    RunReport run(std::optional<std::int64_t> oracle_optimum = std::nullopt);

    /// Fitness of an arbitrary candidate under the current engine state:
    /// feasible selections score their value, infeasible ones the annealed
    /// penalty. Always positive.
    double fitness_of(const Bits& bits);

    int generation() const { return generation_; }
    double mutation_rate() const { return mutation_rate_; }
    SelectionMode selection_mode() const { return mode_; }
    std::int64_t best_value() const { return best_value_; }
    const Chromosome& best_chromosome() const;
    /// The reference value f(gBest) used by the penalty term; seeded with the
    /// half-greedy value until a better feasible individual appears.
    double penalty_reference() const;
    std::span<const Individual> population() const { return population_; }
    double min_fitness_seen() const { return min_fitness_seen_; }
    const Instance& instance() const { return *instance_; }
    const GaConfig& config() const { return config_; }

  private:
    double fitness_from_eval(const Evaluation& eval);
    Individual make_individual(Bits bits, CrossoverType xtype);
    void record_trace_point();

    const Instance* instance_;
    GaConfig config_;
    double mutation_step_;
    double mutation_cap_;
    Rng rng_;

    std::vector<Individual> population_;
    int generation_ = 1;
    std::optional<Chromosome> best_;
    std::int64_t best_value_ = 0;
    double greedy_ref_value_ = 0.0;
    Bits greedy_bits_;
    double mutation_rate_ = 0.0;
    int since_improvement_ = 0;
    SelectionMode mode_ = SelectionMode::Normal;
    double min_fitness_seen_ = 0.0;
    bool initialized_ = false;
    bool ran_ = false;
    std::vector<TracePoint> trace_;
};

} // namespace kp
