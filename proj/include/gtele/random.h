// Copyright 2026 The gtele Authors
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

#ifndef GTELE_RANDOM_H
#define GTELE_RANDOM_H

#include <cstdint>
#include <random>

#include "gtele/statevec.h"

namespace gtele {

/// Seeded generator with a fixed, portable output stream.
///
/// The engine is std::mt19937_64, whose output sequence is pinned by the C++
/// standard. Real variates are derived by hand instead of through
/// <random> distributions, whose algorithms are implementation-defined:
///   uniform() = (next() >> 11) * 2^-53, in [0, 1)
///   normal()  = Box-Muller on two uniforms, cosine branch only
class Rng {
   public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    uint64_t next() { return engine_(); }
    double uniform();
    double normal();

   private:
    std::mt19937_64 engine_;
};

/// SplitMix64 finalizer; used to derive independent sub-seeds from a seed.
uint64_t mix_seed(uint64_t seed);

/// Haar-random pure state: i.i.d. complex Gaussian amplitudes, normalized.
Ket random_ket(size_t qubits, Rng &rng);

/// A product of `qubits` independent random single-qubit states.
Ket random_product_ket(size_t qubits, Rng &rng);

}  // namespace gtele

#endif
