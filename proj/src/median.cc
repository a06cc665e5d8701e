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

#include "shadowkit/median.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace shadowkit {

double median(std::vector<double> values) {
    if (values.empty()) {
        throw std::invalid_argument("median: empty list");
    }
    size_t mid = values.size() / 2;
    std::nth_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid), values.end());
    double hi = values[mid];
    if (values.size() % 2 == 1) {
        return hi;
    }
    double lo = *std::max_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid));
    return 0.5 * (lo + hi);
}

std::vector<double> chunk_means(std::span<const double> values, size_t k) {
    if (k == 0) {
        throw std::invalid_argument("median_of_means: K must be at least 1");
    }
    if (values.size() < k) {
        throw std::invalid_argument(
            "median_of_means: " + std::to_string(values.size()) + " values cannot fill " + std::to_string(k) + " batches");
    }
    size_t per = values.size() / k;
    std::vector<double> means(k);
    for (size_t b = 0; b < k; b++) {
        double s = 0;
        for (size_t i = b * per; i < (b + 1) * per; i++) {
            s += values[i];
        }
        means[b] = s / static_cast<double>(per);
    }
    return means;
}

double median_of_means(std::span<const double> values, size_t k) {
    return median(chunk_means(values, k));
}

}  // namespace shadowkit
