// Copyright 2026 The fflow Authors
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

#pragma once

// Everything except the dense oracle (fflow/dense.hpp, needs Eigen) and I/O (fflow/io.hpp).
#include "fflow/circuit.hpp"
#include "fflow/encodings.hpp"
#include "fflow/flow_sets.hpp"
#include "fflow/lattice.hpp"
#include "fflow/majorana.hpp"
#include "fflow/pauli.hpp"
#include "fflow/synthesis.hpp"
#include "fflow/tableau.hpp"
#include "fflow/trotter.hpp"
