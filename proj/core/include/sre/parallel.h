// Copyright 2026 The sre-lab Authors
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

#ifndef SRE_PARALLEL_H_
#define SRE_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace sre {

// Worker count: hardware concurrency, capped by SRE_LAB_THREADS when set.
int WorkerThreads();

// Runs fn(0..n-1) on up to WorkerThreads() threads. Each index is handled
// exactly once; the first exception thrown is rethrown on the caller.
void ParallelFor(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace sre

#endif  // SRE_PARALLEL_H_
