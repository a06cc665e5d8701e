// Copyright 2026 The shadowkit Authors
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

#ifndef SHADOWKIT_SRC_PARALLEL_H
#define SHADOWKIT_SRC_PARALLEL_H

#include <cstddef>
#include <exception>

namespace shadowkit::internal {

/// Runs body(i) for i in [0, count), on OpenMP threads when `parallel` is set.
/// Each index must write only its own output slot. The first exception thrown by
/// any iteration is rethrown on the calling thread after the loop.
template <typename Body>
void for_each_index(size_t count, bool parallel, Body &&body) {
    std::exception_ptr failure;
    auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
    for (long long i = 0; i < n; i++) {
        try {
            body(static_cast<size_t>(i));
        } catch (...) {
#pragma omp critical(shadowkit_for_each_index)
            {
                if (!failure) {
                    failure = std::current_exception();
                }
            }
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

}  // namespace shadowkit::internal

#endif
