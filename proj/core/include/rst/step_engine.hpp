#pragma once

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <mutex>
#include <thread>
#include <vector>

#include "rst/types.hpp"

namespace rst {

// Per-run counters. `steps` counts global barriers (the kernel-launch proxy),
// `work` counts per-element update invocations plus any explicitly charged
// work (e.g. for a sort stage).
struct StepReport {
  std::int64_t steps = 0;
  std::int64_t work = 0;
  double wall_ms = 0.0;
};

// Step-synchronous data-parallel executor. One parallel_for_step call is one
// step: the per-element update may run on several workers, and a global
// barrier separates steps. The determinism contract: within a step, updates
// may touch shared slots only through commutative-idempotent combines
// (CombineBuffer), write-once flags of a single value, or slots no other
// element writes; under that contract the result equals any sequential
// execution order, for every worker count.
class StepEngine {
 public:
  explicit StepEngine(int workers = 1);
  ~StepEngine();
  StepEngine(const StepEngine&) = delete;
  StepEngine& operator=(const StepEngine&) = delete;

  int workers() const { return workers_; }
  std::int64_t steps() const { return steps_; }
  std::int64_t work() const { return work_; }

  template <typename Body>
  void parallel_for_step(std::int64_t domain, Body&& body) {
    ++steps_;
    work_ += domain;
    if (domain <= 0) return;
    if (workers_ <= 1 || domain < kParallelGrain) {
      for (std::int64_t i = 0; i < domain; ++i) body(i);
      return;
    }
    dispatch(domain, [&body](std::int64_t lo, std::int64_t hi) {
      for (std::int64_t i = lo; i < hi; ++i) body(i);
    });
  }

  // Charges barriers (and optionally work) for stages modeled rather than
  // executed element-wise, e.g. the device sort a host std::sort stands in for.
  void charge(std::int64_t extra_steps, std::int64_t extra_work = 0) {
    steps_ += extra_steps;
    work_ += extra_work;
  }

  // Snapshot of the counters with wall time since construction.
  StepReport report() const;

 private:
  static constexpr std::int64_t kParallelGrain = 1024;

  using ChunkFn = std::function<void(std::int64_t, std::int64_t)>;
  void dispatch(std::int64_t domain, const ChunkFn& chunk);
  void worker_loop(int index);

  int workers_;
  std::int64_t steps_ = 0;
  std::int64_t work_ = 0;
  std::chrono::steady_clock::time_point start_;

  // Lazily started persistent pool; only used when workers_ > 1.
  std::vector<std::thread> pool_;
  std::mutex mu_;
  std::condition_variable cv_job_;
  std::condition_variable cv_done_;
  const ChunkFn* job_ = nullptr;
  std::int64_t job_domain_ = 0;
  std::uint64_t generation_ = 0;
  int active_ = 0;
  bool stopping_ = false;
};

// Fixed array of 64-bit slots accepting commutative-idempotent combines from
// concurrent per-element updates. Values written in one step become readable
// after the step's barrier.
class CombineBuffer {
 public:
  CombineBuffer() = default;
  explicit CombineBuffer(std::size_t n, std::int64_t init = 0) { assign(n, init); }

  void assign(std::size_t n, std::int64_t init);
  void fill(std::int64_t v);
  std::size_t size() const { return size_; }

  std::int64_t load(std::size_t i) const {
    return slots_[i].load(std::memory_order_relaxed);
  }
  std::int64_t operator[](std::size_t i) const { return load(i); }

  // Plain store; only valid when no other element writes slot i in the step.
  void store(std::size_t i, std::int64_t v) {
    slots_[i].store(v, std::memory_order_relaxed);
  }

  void combine_min(std::size_t i, std::int64_t v) {
    auto& s = slots_[i];
    std::int64_t cur = s.load(std::memory_order_relaxed);
    while (v < cur && !s.compare_exchange_weak(cur, v, std::memory_order_relaxed)) {
    }
  }

  void combine_max(std::size_t i, std::int64_t v) {
    auto& s = slots_[i];
    std::int64_t cur = s.load(std::memory_order_relaxed);
    while (v > cur && !s.compare_exchange_weak(cur, v, std::memory_order_relaxed)) {
    }
  }

 private:
  std::unique_ptr<std::atomic<std::int64_t>[]> slots_;
  std::size_t size_ = 0;
};

// Packs a (value, id) pair into one combinable key so that min-combining keys
// selects the lexicographically smallest pair. Both parts must be in
// [0, 2^31) and [0, 2^32) respectively.
constexpr std::int64_t pack_key(std::int64_t value, std::int64_t id) {
  return (value << 32) | id;
}
constexpr std::int64_t key_value(std::int64_t key) { return key >> 32; }
constexpr std::int64_t key_id(std::int64_t key) { return key & 0xffffffffLL; }

inline constexpr std::int64_t kKeyInf = std::numeric_limits<std::int64_t>::max();

}  // namespace rst
