#pragma once

#include "snarks/recipes.hpp"

namespace snarks {

// The two inequivalent Petersen-by-Petersen products. The pair classes of
// independent Petersen edges are told apart by whether some endpoints are
// adjacent; the all-distance-2 class gives the odd 2-factored product, and
// the generator names the results by that verdict rather than by a drawing.
inline Graph blanusa2() {
    // a distinguished-triple pair, deliberately wired differently from the
    // P18 recipe so the isomorphism between the two is a real check
    DotProduct dp = dot_product({petersen(), Edge(2, 3), petersen(), Edge(0, 1), Edge(7, 9), JoinPattern::B, true, false});
    if (!is_odd_two_factored(dp.graph).odd)
        throw std::logic_error("internal: the distance-2 product lost odd 2-factoredness");
    return dp.graph;
}

inline Graph blanusa1() {
    // f,g independent with adjacent endpoints (1~2), the other pair class
    DotProduct dp = dot_product({petersen(), Edge(0, 1), petersen(), Edge(0, 1), Edge(2, 3), JoinPattern::A, false, false});
    if (is_odd_two_factored(dp.graph).odd)
        throw std::logic_error("internal: the adjacent-endpoint product came out odd 2-factored");
    return dp.graph;
}

// Catalog of named graphs exposed to the CLI and tests.
inline Graph named(std::string_view name) {
    if (name == "P10" || name == "petersen") return petersen();
    if (name == "J5") return flower(5).graph;
    if (name == "J7") return flower(7).graph;
    if (name == "J9") return flower(9).graph;
    if (name == "P18") return build_recipe("P18").graph;
    if (name == "P26") return build_recipe("P26").graph;
    if (name == "P34") return build_recipe("P34").graph;
    if (name == "Blanusa1" || name == "blanusa1") return blanusa1();
    if (name == "Blanusa2" || name == "blanusa2") return blanusa2();
    throw std::invalid_argument("unknown graph name '" + std::string(name) +
                                "' (expected P10, J5, J7, J9, P18, P26, P34, Blanusa1 or Blanusa2)");
}

inline std::vector<std::string> catalog_names() {
    return {"P10", "J5", "J7", "J9", "P18", "P26", "P34", "Blanusa1", "Blanusa2"};
}

}  // namespace snarks
