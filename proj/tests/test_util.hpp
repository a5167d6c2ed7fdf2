// Copyright 2026 The Tritime Authors
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

#pragma once

#include <cmath>

#include "tritime/geometry.hpp"
#include "tritime/random.hpp"

namespace tritime::fixtures {

/// Uniform direction scaled to `speed`.
inline Velocity3 random_velocity(Rng& rng, double speed) {
  double x, y, z, r;
  do {
    x = rng.normal();
    y = rng.normal();
    z = rng.normal();
    r = std::sqrt(x * x + y * y + z * z);
  } while (r < 1e-9);
  return {speed * x / r, speed * y / r, speed * z / r};
}

}  // namespace tritime::fixtures
