// Copyright 2026 The PulseForge Authors
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

#include "pulseforge/chromosome.hpp"
#include "pulseforge/errors.hpp"
#include "pulseforge/fitness.hpp"
#include "pulseforge/ga.hpp"
#include "pulseforge/io.hpp"
#include "pulseforge/matrix.hpp"
#include "pulseforge/notation.hpp"
#include "pulseforge/pauli.hpp"
#include "pulseforge/random.hpp"
#include "pulseforge/rotation.hpp"
#include "pulseforge/targets.hpp"
#include "pulseforge/verifier.hpp"
