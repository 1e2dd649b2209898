#include "compofuse/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <cstdlib>
#include <mutex>
#include <thread>
#include <vector>

namespace compofuse {

namespace {

int env_thread_cap() {
  if (const char* s = std::getenv("COMPOFUSE_THREADS")) {
    int v = std::atoi(s);
    if (v > 0) return v;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return std::clamp<int>(static_cast<int>(hc == 0 ? 1 : hc), 1, 8);
}

std::atomic<int> g_cap{0};  // 0 = not initialized yet

// Tiny persistent pool. Jobs are range chunks; each chunk belongs to exactly
// one worker so per-element accumulation order is fixed.
class Pool {
 public:
  static Pool& instance() {
    static Pool pool;
    return pool;
  }

  void run(int workers, const std::function<void(int64_t, int64_t)>& fn, int64_t begin,
           int64_t end) {
    ensure(workers - 1);
    std::vector<std::pair<int64_t, int64_t>> chunks;
    int64_t total = end - begin;
    int64_t base = total / workers, rem = total % workers;
    int64_t cur = begin;
    for (int t = 0; t < workers; ++t) {
      int64_t len = base + (t < rem ? 1 : 0);
      chunks.emplace_back(cur, cur + len);
      cur += len;
    }
    std::unique_lock lock(mu_);
    job_ = &fn;
    chunks_ = &chunks;
    next_chunk_.store(1, std::memory_order_relaxed);  // chunk 0 runs inline
    pending_ = workers - 1;
    ++generation_;
    lock.unlock();
    cv_.notify_all();

    if (chunks[0].first < chunks[0].second) fn(chunks[0].first, chunks[0].second);

    std::unique_lock wait_lock(mu_);
    done_cv_.wait(wait_lock, [&] { return pending_ == 0; });
    job_ = nullptr;
    chunks_ = nullptr;
  }

 private:
  Pool() = default;
  ~Pool() {
    {
      std::lock_guard lock(mu_);
      stop_ = true;
      ++generation_;
    }
    cv_.notify_all();
    for (auto& t : threads_) t.join();
  }

  void ensure(int helpers) {
    std::lock_guard lock(mu_);
    while (static_cast<int>(threads_.size()) < helpers) {
      threads_.emplace_back([this] { worker_loop(); });
    }
  }

  void worker_loop() {
    uint64_t seen = 0;
    while (true) {
      std::unique_lock lock(mu_);
      cv_.wait(lock, [&] { return stop_ || generation_ != seen; });
      if (stop_) return;
      seen = generation_;
      auto* job = job_;
      auto* chunks = chunks_;
      lock.unlock();
      if (!job) continue;
      while (true) {
        int idx = next_chunk_.fetch_add(1, std::memory_order_relaxed);
        if (idx >= static_cast<int>(chunks->size())) break;
        auto [b, e] = (*chunks)[idx];
        if (b < e) (*job)(b, e);
      }
      std::lock_guard done_lock(mu_);
      if (--pending_ == 0) done_cv_.notify_all();
    }
  }

  std::mutex mu_;
  std::condition_variable cv_, done_cv_;
  std::vector<std::thread> threads_;
  const std::function<void(int64_t, int64_t)>* job_ = nullptr;
  std::vector<std::pair<int64_t, int64_t>>* chunks_ = nullptr;
  std::atomic<int> next_chunk_{0};
  int pending_ = 0;
  uint64_t generation_ = 0;
  bool stop_ = false;
};

}  // namespace

int max_threads() {
  int v = g_cap.load(std::memory_order_relaxed);
  if (v == 0) {
    v = env_thread_cap();
    g_cap.store(v, std::memory_order_relaxed);
  }
  return v;
}

void set_max_threads(int n) { g_cap.store(n < 1 ? 1 : n, std::memory_order_relaxed); }

void parallel_ranges(int64_t begin, int64_t end,
                     const std::function<void(int64_t, int64_t)>& fn) {
  int64_t total = end - begin;
  if (total <= 0) return;
  int workers = static_cast<int>(std::min<int64_t>(max_threads(), total));
  if (workers <= 1) {
    fn(begin, end);
    return;
  }
  Pool::instance().run(workers, fn, begin, end);
}

void parallel_for(int64_t begin, int64_t end, const std::function<void(int64_t)>& fn) {
  parallel_ranges(begin, end, [&fn](int64_t b, int64_t e) {
    for (int64_t i = b; i < e; ++i) fn(i);
  });
}

}  // namespace compofuse
