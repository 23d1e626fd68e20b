#include "rst/step_engine.hpp"

namespace rst {

StepEngine::StepEngine(int workers)
    : workers_(workers < 1 ? 1 : workers), start_(std::chrono::steady_clock::now()) {}

StepEngine::~StepEngine() {
  if (pool_.empty()) return;
  {
    std::lock_guard<std::mutex> lk(mu_);
    stopping_ = true;
  }
  cv_job_.notify_all();
  for (auto& t : pool_) t.join();
}

StepReport StepEngine::report() const {
  StepReport r;
  r.steps = steps_;
  r.work = work_;
  r.wall_ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - start_)
                  .count();
  return r;
}

void StepEngine::dispatch(std::int64_t domain, const ChunkFn& chunk) {
  if (pool_.empty()) {
    pool_.reserve(workers_);
    for (int i = 0; i < workers_; ++i)
      pool_.emplace_back([this, i] { worker_loop(i); });
  }
  std::unique_lock<std::mutex> lk(mu_);
  job_ = &chunk;
  job_domain_ = domain;
  active_ = workers_;
  ++generation_;
  cv_job_.notify_all();
  cv_done_.wait(lk, [this] { return active_ == 0; });
  job_ = nullptr;
}

void StepEngine::worker_loop(int index) {
  std::uint64_t seen = 0;
  while (true) {
    const ChunkFn* job;
    std::int64_t domain;
    {
      std::unique_lock<std::mutex> lk(mu_);
      cv_job_.wait(lk, [&] { return stopping_ || generation_ != seen; });
      if (stopping_) return;
      seen = generation_;
      job = job_;
      domain = job_domain_;
    }
    const std::int64_t lo = domain * index / workers_;
    const std::int64_t hi = domain * (index + 1) / workers_;
    if (lo < hi) (*job)(lo, hi);
    {
      std::lock_guard<std::mutex> lk(mu_);
      if (--active_ == 0) cv_done_.notify_one();
    }
  }
}

void CombineBuffer::assign(std::size_t n, std::int64_t init) {
  if (n != size_) {
    slots_ = std::make_unique<std::atomic<std::int64_t>[]>(n);
    size_ = n;
  }
  fill(init);
}

void CombineBuffer::fill(std::int64_t v) {
  for (std::size_t i = 0; i < size_; ++i)
    slots_[i].store(v, std::memory_order_relaxed);
}

}  // namespace rst
