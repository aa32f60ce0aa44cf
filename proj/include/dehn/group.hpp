#pragma once

#include <array>
#include <string>
#include <vector>

#include "dehn/diagram.hpp"

namespace dehn {

// Presentation with one generator per sister pair; a sister curve is written
// as the inverse of its pair's generator, which absorbs the curve.sister
// trivializing relations. Letters are +-(gen+1).
struct GroupPresentation {
    int generators = 0;
    std::vector<std::array<int, 3>> relators;
};

// Exponent-sum matrix: one row per relator, one column per generator.
struct RelationMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<long long>> m;

    long long at(int r, int c) const { return m[static_cast<size_t>(r)][static_cast<size_t>(c)]; }
};

// free_rank plus invariant factors d1 | d2 | ..., each > 1.
struct AbelianGroup {
    int free_rank = 0;
    std::vector<long long> torsion;

    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

std::array<int, 3> relator_of_triplet(const Triplet& t, const SisterPairing& pairing);

// Requires a presentation that passes validate_presentation; throws
// precondition_error otherwise.
GroupPresentation presentation_from(const HakenPresentation& h);

RelationMatrix abelianize(const GroupPresentation& g);

struct SnfResult {
    std::vector<long long> factors; // nonzero diagonal, divisibility chain
    int rank = 0;
};

// Exact Smith normal form with smallest-pivot selection and overflow-checked
// arithmetic.
SnfResult smith_normal_form(RelationMatrix m);

AbelianGroup h1(const HakenPresentation& h);

// "0", "Z", "Z^2", "Z_3", "Z_3+Z_3" style symbolic names (invariant factor
// decomposition only; the circled plus is spelled in UTF-8).
std::string recognize(const AbelianGroup& a);

struct CosetResult {
    bool closed = false;
    long long order = 0;
    int cosets_used = 0;
};

// Todd-Coxeter enumeration of cosets of the trivial subgroup. If the table
// closes within max_cosets rows the exact group order is returned; otherwise
// the result is inconclusive (closed == false). Never fails to terminate.
CosetResult coset_enumeration(const GroupPresentation& g, int max_cosets = 10000);

} // namespace dehn
