// Copyright 2026 The polysubreg Authors
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

#ifndef SUBREG_SUBREG_HPP_
#define SUBREG_SUBREG_HPP_

#include "subreg/analyze.hpp"
#include "subreg/bcq.hpp"
#include "subreg/catalog.hpp"
#include "subreg/constraint_system.hpp"
#include "subreg/estimate.hpp"
#include "subreg/eta.hpp"
#include "subreg/generate.hpp"
#include "subreg/instance_io.hpp"
#include "subreg/lemma21.hpp"
#include "subreg/lp.hpp"
#include "subreg/polyhedron.hpp"
#include "subreg/projection.hpp"
#include "subreg/report.hpp"
#include "subreg/strong.hpp"
#include "subreg/tau.hpp"
#include "subreg/vrep.hpp"

#endif  // SUBREG_SUBREG_HPP_
