// Copyright 2026 The gammageo Authors
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

#ifndef GAMMAGEO_PARALLEL_HPP_
#define GAMMAGEO_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace gammageo {

// Worker count from GAMMAGEO_THREADS, else hardware concurrency; at least 1.
int worker_count();

// Runs body(i) for i in [0, n) on up to `workers` threads (0: worker_count()).
// Callers write results by index, so output order never depends on
// scheduling. If a body throws, remaining work is skipped and one of the
// exceptions is rethrown after all workers stop.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body, int workers = 0);

}  // namespace gammageo

#endif  // GAMMAGEO_PARALLEL_HPP_
