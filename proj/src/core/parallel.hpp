// Copyright 2026 The ptheta authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PTHETA_CORE_PARALLEL_HPP
#define PTHETA_CORE_PARALLEL_HPP

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace ptheta {

/// Runs fn(i) for i in [lo, hi] across `workers` threads (1 = inline).
/// Work items are independent; the first exception wins and rethrows after
/// all threads join. Results must be written to pre-sized slots by index so
/// the outcome is identical at any worker count.
inline void parallel_for_indices(long lo, long hi, int workers,
                                 const std::function<void(long)>& fn) {
  if (hi < lo) return;
  long count = hi - lo + 1;
  if (workers <= 0)
    workers = static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  if (workers == 1 || count == 1) {
    for (long i = lo; i <= hi; ++i) fn(i);
    return;
  }

  std::atomic<long> next(lo);
  std::exception_ptr err;
  std::mutex err_mu;
  auto worker = [&] {
    while (true) {
      long i = next.fetch_add(1);
      if (i > hi) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> g(err_mu);
        if (!err) err = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  long nthreads = workers < count ? workers : count;
  pool.reserve(static_cast<size_t>(nthreads));
  for (long t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace ptheta

#endif  // PTHETA_CORE_PARALLEL_HPP
