// Copyright 2026 The TIG Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TIG_GENETIC_STEP_CONTROLLER_H_
#define TIG_GENETIC_STEP_CONTROLLER_H_

namespace tig::genetic {

// |f_min - f_prev| at or below this counts as no improvement.
inline constexpr double kStagnationTolerance = 1e-9;

// Adaptive perturbation step. Doubles on stagnation, snaps back to the
// initial step (and records the new best) on any other change.
struct StepController {
  double delta = 0.0;
  double delta_init = 0.0;
  double f_prev = 0.0;

  static StepController Start(double delta_init, double seed_fitness) {
    return {delta_init, delta_init, seed_fitness};
  }
};

StepController AdaptStep(const StepController& controller, double f_min);

}  // namespace tig::genetic

#endif  // TIG_GENETIC_STEP_CONTROLLER_H_
