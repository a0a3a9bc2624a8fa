// Copyright 2026 The sparing Authors
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

#include "sparing/error.hpp"
#include "sparing/families.hpp"
#include "sparing/formulas.hpp"
#include "sparing/graph.hpp"
#include "sparing/graph_io.hpp"
#include "sparing/labeling_io.hpp"
#include "sparing/random_graphs.hpp"
#include "sparing/report.hpp"
#include "sparing/setlabel.hpp"
#include "sparing/solver.hpp"
#include "sparing/vertex_set.hpp"
