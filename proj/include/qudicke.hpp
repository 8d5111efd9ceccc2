// Copyright 2026 The qudicke Authors
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
/// Umbrella header.
#pragma once

#include "qudicke/circuit.hpp"
#include "qudicke/cli.hpp"
#include "qudicke/combinatorics.hpp"
#include "qudicke/core.hpp"
#include "qudicke/dicke.hpp"
#include "qudicke/exchange.hpp"
#include "qudicke/gates.hpp"
#include "qudicke/level_sets.hpp"
#include "qudicke/mps.hpp"
#include "qudicke/probability.hpp"
#include "qudicke/qpe.hpp"
#include "qudicke/register.hpp"
#include "qudicke/run.hpp"
#include "qudicke/sequential.hpp"
#include "qudicke/state.hpp"
#include "qudicke/suites.hpp"
