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

#include "tig/genetic/step_controller.h"

#include <cmath>

namespace tig::genetic {

StepController AdaptStep(const StepController& controller, double f_min) {
  StepController next = controller;
  if (std::abs(f_min - controller.f_prev) <= kStagnationTolerance) {
    next.delta = 2.0 * controller.delta;
  } else {
    next.delta = controller.delta_init;
    next.f_prev = f_min;
  }
  return next;
}

}  // namespace tig::genetic
