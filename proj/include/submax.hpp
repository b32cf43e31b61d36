// Copyright 2026 The Authors.
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

// Umbrella header for the submax library.

#pragma once

#include "submax/element_set.hpp"
#include "submax/rng.hpp"
#include "submax/oracles.hpp"
#include "submax/coverage.hpp"
#include "submax/solvers.hpp"
#include "submax/multilinear.hpp"
#include "submax/multiobjective.hpp"
#include "submax/kronecker.hpp"
#include "submax/generators.hpp"
#include "submax/serialize.hpp"
#include "submax/bench/config.hpp"
#include "submax/bench/runner.hpp"
#include "submax/bench/plot.hpp"
#include "submax/bench/acceptance.hpp"
