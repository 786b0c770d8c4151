// Copyright 2026 The entbound Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ENTBOUND_PARALLEL_HPP
#define ENTBOUND_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace entbound {

/// Worker count requested via ENTBOUND_THREADS. Unset, empty, "0", or
/// unparsable values mean "use the hardware concurrency".
std::size_t thread_limit_from_env();

/// Runs body(0), ..., body(count-1) across a thread pool with dynamic
/// index assignment. Results must be written to per-index slots by the
/// body itself; the schedule never influences outputs. The first exception
/// thrown by any body is rethrown on the caller thread after all workers
/// finish. max_threads == 0 defers to thread_limit_from_env().
void parallel_run(std::size_t count,
                  const std::function<void(std::size_t)>& body,
                  std::size_t max_threads = 0);

}  // namespace entbound

#endif  // ENTBOUND_PARALLEL_HPP
