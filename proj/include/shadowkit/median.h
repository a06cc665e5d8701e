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

#ifndef SHADOWKIT_MEDIAN_H
#define SHADOWKIT_MEDIAN_H

#include <cstddef>
#include <span>
#include <vector>

namespace shadowkit {

/// Median of a list; the mean of the two middle values for even sizes.
/// Throws on an empty list.
double median(std::vector<double> values);

/// Splits values into K consecutive chunks of floor(N / K) (remainder discarded),
/// averages each chunk and returns the median of the chunk means.
/// Throws when K == 0 or N < K.
double median_of_means(std::span<const double> values, size_t k);

/// The K chunk means used by median_of_means.
std::vector<double> chunk_means(std::span<const double> values, size_t k);

}  // namespace shadowkit

#endif
