// Copyright 2026 The teq Authors
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
#ifndef TEQ_PARALLEL_HPP_
#define TEQ_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace teq {

// Worker count from TEQ_JOBS when set, else the hardware concurrency.
unsigned default_jobs();

// Calls body(i) for every i in [0, count) on up to `jobs` threads. The
// first exception thrown by a body is rethrown after all workers stop.
void parallel_for(std::size_t count, unsigned jobs,
                  const std::function<void(std::size_t)>& body);

}  // namespace teq

#endif  // TEQ_PARALLEL_HPP_
