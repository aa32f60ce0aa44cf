#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dehn/diagram.hpp"
#include "dehn/group.hpp"

namespace dehn {

// Enumeration request. p must be even; max_pairs defaults to the double-curve
// bound (2+3p)/4 and may be lowered but not raised above it without override.
struct CensusQuery {
    int triple_points = 0;
    int max_pairs = -1;                // -1: use the bound
    bool allow_over_bound = false;     // explicit override for max_pairs above the bound
    std::optional<int> exact_pairs;    // restrict to one k
    bool ablate_parity = false;        // drop the even intersection constraint
    int threads = 1;
    long long limit = 10'000'000;      // resource cap on emitted presentations
};

// A presentation in canonical form: curves are 2i/2i+1 per pair, each triplet
// is the least tuple of its six symmetric forms, the triplet list is sorted,
// and no pair relabeling or sister swap yields a smaller list.
struct CanonicalPresentation {
    HakenPresentation pres;

    std::strong_ordering operator<=>(const CanonicalPresentation& o) const;
    bool operator==(const CanonicalPresentation& o) const;
};

// Least tuple among the three rotations of (a,c,g) and of the reversal
// (tau g, tau c, tau a); all six induce the same crossings.
Triplet canonical_triplet(const Triplet& t, const SisterPairing& pairing);

CanonicalPresentation canonical_form(const HakenPresentation& h);

// All valid canonical presentations with exactly q.triple_points triplets and
// at most max_pairs sister pairs, sorted, duplicate-free. Throws
// resource_limit_error when q.limit is exceeded.
std::vector<CanonicalPresentation> enumerate_presentations(const CensusQuery& q);

struct CensusRow {
    int pairs = 0;
    long long count = 0;
};

struct CensusHistogramEntry {
    std::string name;
    long long count = 0;
};

struct CensusResult {
    int triple_points = 0;
    int max_pairs = 0;
    std::vector<CensusRow> counts;
    std::vector<CensusHistogramEntry> histogram;

    // Theorem verdicts over this run.
    bool no_z3_z3 = true;          // no class with H1 = Z_3 + Z_3
    bool small_k_cyclic = true;    // k <= 2 classes all have cyclic H1 of order <= 6 (or Z)
    bool candidate_list_ok = true; // histogram within {0, Z, Z_q<=6, Z^2, Z+Z_2}
    bool bound_ok = true;          // k <= (2+3p)/4 throughout

    std::vector<CanonicalPresentation> presentations;
    std::vector<AbelianGroup> homology; // parallel to presentations
};

CensusResult census_h1(const CensusQuery& q);

// True iff no valid presentation with the given pair and triplet counts
// contains a type I triple point. Disabling parity is the ablation probe:
// counterexamples appear and the function returns false.
bool verify_lemma_no_type_I(int triple_points = 4, int pairs = 3, bool enforce_parity = true);

} // namespace dehn
