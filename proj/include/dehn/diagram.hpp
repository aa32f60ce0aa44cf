#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace dehn {

using CurveId = int;

enum class Sign : std::uint8_t { plus, minus };

inline Sign flip(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }
inline char sign_char(Sign s) { return s == Sign::plus ? '+' : '-'; }

// Total pairing tau on curves 0..n-1. Each curve has exactly one sister;
// tau is an involution without fixed points on well-formed input.
struct SisterPairing {
    std::vector<CurveId> tau;

    int curve_count() const { return static_cast<int>(tau.size()); }
    CurveId sister(CurveId c) const { return tau[static_cast<size_t>(c)]; }
    bool in_range(CurveId c) const { return c >= 0 && c < curve_count(); }
    bool is_primary(CurveId c) const { return c < sister(c); }

    // Number of sister pairs; meaningful only for a well-formed pairing.
    int pair_count() const { return curve_count() / 2; }

    // Pair index of c, counting pairs in order of their smaller curve id.
    int pair_of(CurveId c) const;

    // Curves 2i and 2i+1 form pair i.
    static SisterPairing standard(int pairs);
};

// One triple point. The three letters give the relator a.c.g; the induced
// double points are crossings of {a,tau g} (role 1), {tau a, c} (role 2)
// and {g, tau c} (role 3). Point ids are absent (-1) at presentation level.
struct Triplet {
    std::array<CurveId, 3> letters{0, 0, 0};
    std::array<int, 3> points{-1, -1, -1};

    bool has_points() const { return points[0] >= 0 || points[1] >= 0 || points[2] >= 0; }
};

// Unordered pair of curves, stored sorted. first == second marks a
// self-crossing.
using CurvePair = std::array<CurveId, 2>;

inline CurvePair make_pair_sorted(CurveId a, CurveId b) {
    return a <= b ? CurvePair{a, b} : CurvePair{b, a};
}

CurvePair role_pair(const Triplet& t, const SisterPairing& pairing, int role);

struct HakenPresentation {
    SisterPairing pairing;
    std::vector<Triplet> triplets;

    int triple_point_count() const { return static_cast<int>(triplets.size()); }
};

struct Passage {
    CurveId curve = -1;
    int index = -1;
};

struct WordEntry {
    int point = -1;
    int slot = -1;

    friend bool operator==(const WordEntry&, const WordEntry&) = default;
};

struct DoublePoint {
    std::array<Passage, 2> slots;
    Sign sign = Sign::plus;
};

// Full embedded diagram: the presentation plus one cyclic word per curve,
// a double point table with crossing signs, and triplet point assignments.
struct JohanssonDiagram {
    HakenPresentation pres;
    std::vector<std::vector<WordEntry>> words;
    std::vector<DoublePoint> points;

    int triple_point_count() const { return pres.triple_point_count(); }
};

enum class TripletType { I1, I2, II1, II2, III };

std::string to_string(TripletType type);

// Type by the number of distinct double curves meeting at the triple point:
// one pair -> I (I.1 iff a self-crossing occurs), two pairs -> II
// (II.1 iff a self-crossing occurs), three pairs -> III.
TripletType classify_triplet(const Triplet& t, const SisterPairing& pairing);

enum class Severity { error, warning };

struct Finding {
    std::string constraint;
    Severity severity = Severity::error;
    std::string detail;
    std::vector<long long> ids;
};

struct ValidationReport {
    std::vector<Finding> findings;

    bool pass() const;
    bool has(const std::string& constraint) const;
};

// Checks tau involution / fixed-point freeness, the even intersection
// property for every pair of distinct curves, sister symmetry of passage
// counts, connectedness of the curve graph, and nonemptiness of the
// triplet set when curves are present. Violations are findings, not errors.
ValidationReport validate_presentation(const HakenPresentation& h);

// All presentation checks plus structural cross-references (each point
// carried by exactly two word entries with slots 0 and 1, triplets
// partitioning the point table, role/pattern agreement) and the sphere
// condition F = 3p + 2 under face tracing.
ValidationReport validate_diagram(const JohanssonDiagram& d);

struct CrossingEdge {
    CurveId a = 0; // a < b
    CurveId b = 0;
    int triplet = 0;
    int role = 0;
};

struct CrossingLoop {
    CurveId curve = 0;
    int triplet = 0;
    int role = 0;
};

// Vertices are curves; one edge per crossing of two distinct curves, one
// loop per self-crossing. Loops do not count toward connectivity.
struct CrossingGraph {
    int curves = 0;
    std::vector<CrossingEdge> edges;
    std::vector<CrossingLoop> loops;

    bool connected() const;
};

CrossingGraph curve_crossing_graph(const HakenPresentation& h);

// Crossing multiplicity per unordered curve pair induced by the triplets.
std::map<CurvePair, int> crossing_counts(const HakenPresentation& h);

// Induced number of passages of each curve (appearances of the curve or its
// sister among triplet letters).
std::vector<int> induced_passage_counts(const HakenPresentation& h);

// Arc edges of the diagram: edge (c, i) runs from passage i to passage i+1
// (cyclically) along curve c.
struct EdgeIndex {
    std::vector<int> offset;
    int total = 0;

    explicit EdgeIndex(const JohanssonDiagram& d);
    int id(CurveId c, int pos) const { return offset[static_cast<size_t>(c)] + pos; }
    std::pair<CurveId, int> curve_pos(int edge) const;
};

struct Dart {
    int edge = 0;
    bool forward = true;

    friend bool operator==(const Dart&, const Dart&) = default;
};

// Rotation-system face traversal. Every arc side is visited exactly once;
// the sign of each double point fixes the cyclic order of its four arc ends.
// Throws precondition_error on structurally inconsistent input.
std::vector<std::vector<Dart>> faces(const JohanssonDiagram& d);

// Drops words, points and signs; triplet letters survive with point ids
// cleared.
HakenPresentation forget_embedding(const JohanssonDiagram& d);

int double_curve_count(const HakenPresentation& h);

// k <= (2 + 3p)/4; holds for every connected presentation.
bool bound_check(const HakenPresentation& h);

// Structural sanity shared by faces() and validate_diagram(); returns
// findings with constraint id "structure" when cross-references are broken.
std::vector<Finding> word_structure_findings(const JohanssonDiagram& d);
std::vector<Finding> triplet_partition_findings(const JohanssonDiagram& d);
std::vector<Finding> structural_findings(const JohanssonDiagram& d);

} // namespace dehn
