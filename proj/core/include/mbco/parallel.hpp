// Copyright 2026 The mbco Authors
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

#ifndef MBCO_PARALLEL_HPP
#define MBCO_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace mbco {

/// Runs body(i) for i in [0, count) on up to `threads` workers (0 = hardware
/// concurrency). Items are handed out dynamically. If any item throws, the
/// exception from the lowest failing index is rethrown after all workers stop.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& body);

int resolve_thread_count(int requested);

}  // namespace mbco

#endif  // MBCO_PARALLEL_HPP
