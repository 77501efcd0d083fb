/*
 * Copyright 2026 The riskcomb authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef RISKCOMB_RNG_HPP
#define RISKCOMB_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace riskcomb {

/// mt19937_64 with hand-rolled draws, so identical seeds give identical
/// streams regardless of the standard library's distribution internals.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double standard() {  // uniform on [0, 1)
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * standard(); }

  std::size_t index(std::size_t n) {  // uniform on {0, .., n-1}
    return static_cast<std::size_t>(gen_() % n);
  }

  std::vector<double> vector(std::size_t n, double lo, double hi) {
    std::vector<double> out(n);
    for (auto& v : out) v = uniform(lo, hi);
    return out;
  }

  /// Probability vector with strictly positive entries summing to 1.
  std::vector<double> simplex(std::size_t n) {
    std::vector<double> out(n);
    double total = 0.0;
    for (auto& v : out) {
      v = 0.05 + standard();
      total += v;
    }
    double head = 0.0;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      out[k] /= total;
      head += out[k];
    }
    out[n - 1] = 1.0 - head;
    return out;
  }

  std::vector<std::size_t> permutation(std::size_t n) {
    std::vector<std::size_t> out(n);
    for (std::size_t k = 0; k < n; ++k) out[k] = k;
    for (std::size_t k = n; k > 1; --k) {
      std::swap(out[k - 1], out[index(k)]);
    }
    return out;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace riskcomb

#endif  // RISKCOMB_RNG_HPP
