#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>

#include "holoforms/random_forms.hpp"
#include "holoforms/report.hpp"

namespace holoforms {

/// One seeded trial: returns a counterexample on failure, nullopt on success.
using TrialFn = std::function<std::optional<Fields>(int trial, RandomSource& rng)>;

struct TrialOutcome {
  int failures = 0;
  /// Counterexample of the lowest failing trial index, with a "trial" field.
  std::optional<Fields> counterexample;
};

/// Worker count: HOLOFORMS_THREADS when set to a positive integer, else the
/// hardware concurrency (at least 1).
int thread_budget();

/// Runs trials 0..count-1, each with RandomSource::for_trial(seed, i), over up
/// to thread_budget() workers. The outcome does not depend on scheduling. An
/// exception thrown by a trial is rethrown after all workers finish, choosing
/// the lowest trial index.
TrialOutcome run_trials(int count, std::uint64_t seed, const TrialFn& fn);

/// Wall-clock stopwatch in milliseconds.
class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace holoforms
