#pragma once

#include <array>

#include "dehn/diagram.hpp"

namespace dehn {

// Where a diagram is opened for the pasting: a face (index into the faces()
// enumeration) and a position on its boundary walk. The boundary entry
// selects the arc edge whose curve gets rerouted through the neck.
struct SurgerySite {
    int face = 0;
    int position = 0;
};

// The fixed local fragment spliced in by connected_sum. Two fingers rerouted
// across the neck clasp each other twice, and the new double curve they drag
// along crosses the rerouted curves' sisters in two small lenses. This adds
// one sister pair, six double points and two triple points.
struct PipingTemplate {
    int new_pairs = 0;
    int new_triplets = 0;
    int new_points = 0;
    std::array<Sign, 6> signs{};
};

const PipingTemplate& piping_template();

// Orientation reversal: every curve word reversed, every crossing sign
// flipped. An involution; preserves validity and first homology.
JohanssonDiagram mirror(const JohanssonDiagram& d);

// Diagram-level connected sum. d2 is mirrored internally (the pasting glues
// the second sphere with reversed orientation); site2 therefore refers to
// the face enumeration of mirror(d2). The output has p1 + p2 + 2 triple
// points, all input triplets unchanged, and first homology equal to the
// direct sum of the inputs'.
JohanssonDiagram connected_sum(const JohanssonDiagram& d1, const JohanssonDiagram& d2,
                               SurgerySite s1 = {}, SurgerySite s2 = {});

} // namespace dehn
