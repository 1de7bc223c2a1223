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

// Walks through the glider automaton: its local rule, a moving glider, the
// entanglement it builds from the all-spins-up state, and a small diagram.

#include <iostream>

#include "cqca/all.hpp"

int main() {
    using namespace cqca;

    ValidatedCqca g = glider();
    std::cout << "glider " << g.matrix() << " class " << g.class_tag() << "\n";
    std::cout << "X -> " << apply(g, parse_observable("X@0")) << "\n";
    std::cout << "Z -> " << apply(g, parse_observable("Z@0")) << "\n";

    PhaseVector v = parse_observable("ZYX@-1");
    for (int k = 0; k < 4; k++) {
        std::cout << "step " << k << ": " << v << "\n";
        v = apply(g, v);
    }

    for (const auto &row : entanglement_trajectory(g, all_spins_up(), 5, 4)) {
        std::cout << "t=" << row.step << " E_bi=" << row.e_bi << " E_tri(L=4)=" << *row.e_tri << "\n";
    }

    std::cout << emit_ascii(build_diagram(g, parse_observable("X@0"), 6)) << "\n";
    return 0;
}
