/* Copyright 2026 The decomp Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include "decomp/bounds.hpp"
#include "decomp/budget.hpp"
#include "decomp/codes.hpp"
#include "decomp/combinatorics.hpp"
#include "decomp/error.hpp"
#include "decomp/field.hpp"
#include "decomp/matrix.hpp"
#include "decomp/matrix_io.hpp"
#include "decomp/rng.hpp"
#include "decomp/scheme.hpp"
#include "decomp/scheme_io.hpp"
#include "decomp/simulator.hpp"
#include "decomp/syndrome_table.hpp"
