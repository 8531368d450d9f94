#include "holoforms/trials.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace holoforms {

int thread_budget() {
  if (const char* env = std::getenv("HOLOFORMS_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(std::min(v, 256L));
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

TrialOutcome run_trials(int count, std::uint64_t seed, const TrialFn& fn) {
  std::vector<std::optional<Fields>> results(std::max(count, 0));
  std::vector<std::exception_ptr> errors(std::max(count, 0));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < count; i = next++) {
      try {
        auto rng = RandomSource::for_trial(seed, static_cast<std::uint64_t>(i));
        results[i] = fn(i, rng);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int workers = std::min(thread_budget(), std::max(count, 1));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  TrialOutcome out;
  for (int i = 0; i < count; ++i) {
    if (!results[i]) continue;
    ++out.failures;
    if (!out.counterexample) {
      Fields f{{"trial", std::to_string(i)}};
      f.insert(f.end(), results[i]->begin(), results[i]->end());
      out.counterexample = std::move(f);
    }
  }
  return out;
}

}  // namespace holoforms
