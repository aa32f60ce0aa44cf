#pragma once

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "dehn/diagram.hpp"
#include "dehn/io.hpp"

namespace dehn::test {

inline HakenPresentation make_presentation(int pairs,
                                           std::initializer_list<std::array<CurveId, 3>> triplets) {
    HakenPresentation h;
    h.pairing = SisterPairing::standard(pairs);
    for (const auto& letters : triplets) {
        h.triplets.push_back(Triplet{letters, {-1, -1, -1}});
    }
    return h;
}

// Both triplets (a,a,a): the one-double-curve diagram presentation of L(3,1).
inline HakenPresentation star_presentation() {
    return make_presentation(1, {{0, 0, 0}, {0, 0, 0}});
}

inline std::string fixture_path(const std::string& name) {
    return std::string(DEHN_FIXTURE_DIR) + "/" + name;
}

inline std::string read_fixture(const std::string& name) {
    std::ifstream in(fixture_path(name), std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline JohanssonDiagram load_fixture(const std::string& name) {
    return parse_diagram(read_fixture(name)).diagram;
}

inline const std::vector<std::string>& fixture_names() {
    static const std::vector<std::string> names = {
        "s3_johansson.jdiag", "s3_shima_1.jdiag", "s3_shima_2.jdiag",
        "s2xs1.jdiag", "l31_star.jdiag"};
    return names;
}

} // namespace dehn::test
