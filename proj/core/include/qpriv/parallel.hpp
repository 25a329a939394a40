// Copyright 2026 The qpriv Authors.
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

#ifndef QPRIV_PARALLEL_HPP_
#define QPRIV_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace qpriv {

// Worker count: QPRIV_THREADS when set to a positive integer, otherwise the
// hardware concurrency (at least 1).
int WorkerCount();

// Runs body(i) for i in [0, n) on WorkerCount() threads. Iterations must be
// independent; the first exception thrown by any iteration is rethrown.
void ParallelFor(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace qpriv

#endif  // QPRIV_PARALLEL_HPP_
