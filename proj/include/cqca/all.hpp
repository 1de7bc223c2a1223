// Copyright 2026 The CQCA Lab Authors
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

#include "cqca/cqca.hpp"
#include "cqca/f2_rank.hpp"
#include "cqca/finite_chain.hpp"
#include "cqca/laurent.hpp"
#include "cqca/matrix_io.hpp"
#include "cqca/oracle.hpp"
#include "cqca/phase_space.hpp"
#include "cqca/render.hpp"
#include "cqca/stabilizer.hpp"
