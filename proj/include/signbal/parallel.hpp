// Copyright 2026 The signbal Authors
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

#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace signbal {

/// Worker count used when callers do not pass one: hardware concurrency,
/// capped by the BALANCE_THREADS environment variable when it is set.
unsigned default_thread_count() noexcept;

/// Splits [0, count) into blocks handed out dynamically to `threads`
/// workers. Each worker owns a `State` built by `make_state`; `body(state,
/// index)` is called for every index and the states are combined in worker
/// order with `merge(into, from)`. Results of associative, commutative
/// merges are independent of scheduling.
template <class State, class MakeState, class Body, class Merge>
State parallel_reduce(std::size_t count, unsigned threads, MakeState make_state,
                      Body body, Merge merge) {
  threads = std::max(1u, threads);
  if (threads == 1 || count < 2) {
    State state = make_state();
    for (std::size_t i = 0; i < count; ++i) body(state, i);
    return state;
  }
  const std::size_t block =
      std::max<std::size_t>(1, count / (static_cast<std::size_t>(threads) * 16));
  std::atomic<std::size_t> next{0};
  std::vector<State> states;
  states.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) states.push_back(make_state());

  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&, t] {
        try {
          while (true) {
            const std::size_t begin = next.fetch_add(block);
            if (begin >= count) break;
            const std::size_t end = std::min(count, begin + block);
            for (std::size_t i = begin; i < end; ++i) body(states[t], i);
          }
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next.store(count);
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  State result = std::move(states.front());
  for (unsigned t = 1; t < threads; ++t) merge(result, states[t]);
  return result;
}

}  // namespace signbal
