// Copyright 2026 The toystab Authors
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

#ifndef TOYSTAB_TOYSTAB_HPP
#define TOYSTAB_TOYSTAB_HPP

#include "toystab/circuit.hpp"
#include "toystab/demos.hpp"
#include "toystab/graph.hpp"
#include "toystab/measurement.hpp"
#include "toystab/observable.hpp"
#include "toystab/ontic.hpp"
#include "toystab/oracle_check.hpp"
#include "toystab/rng.hpp"
#include "toystab/stabilizer.hpp"
#include "toystab/transform.hpp"

#endif  // TOYSTAB_TOYSTAB_HPP
