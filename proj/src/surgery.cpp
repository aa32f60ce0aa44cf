#include "dehn/surgery.hpp"

#include <algorithm>

#include "dehn/errors.hpp"

namespace dehn {

namespace {

// Recompute every double point's passage backrefs from the words.
void rebuild_backrefs(JohanssonDiagram& d) {
    for (CurveId c = 0; c < d.pres.pairing.curve_count(); ++c) {
        const auto& word = d.words[static_cast<size_t>(c)];
        for (size_t i = 0; i < word.size(); ++i) {
            const WordEntry& e = word[i];
            d.points[static_cast<size_t>(e.point)].slots[static_cast<size_t>(e.slot)] =
                Passage{c, static_cast<int>(i)};
        }
    }
}

// Resolves a site to the arc edge (curve, word position) it selects.
std::pair<CurveId, int> resolve_site(const JohanssonDiagram& d, const SurgerySite& s,
                                     const char* which) {
    const auto face_cycles = faces(d);
    if (s.face < 0 || s.face >= static_cast<int>(face_cycles.size())) {
        throw precondition_error(std::string(which) + ": face index out of range");
    }
    const auto& cycle = face_cycles[static_cast<size_t>(s.face)];
    if (s.position < 0 || s.position >= static_cast<int>(cycle.size())) {
        throw precondition_error(std::string(which) + ": boundary position out of range");
    }
    const EdgeIndex edges(d);
    return edges.curve_pos(cycle[static_cast<size_t>(s.position)].edge);
}

} // namespace

const PipingTemplate& piping_template() {
    static const PipingTemplate t{
        1, 2, 6,
        {Sign::plus, Sign::minus, Sign::plus, Sign::minus, Sign::plus, Sign::minus}};
    return t;
}

JohanssonDiagram mirror(const JohanssonDiagram& d) {
    JohanssonDiagram out = d;
    for (auto& word : out.words) {
        std::reverse(word.begin(), word.end());
    }
    for (auto& p : out.points) {
        p.sign = flip(p.sign);
    }
    rebuild_backrefs(out);
    return out;
}

JohanssonDiagram connected_sum(const JohanssonDiagram& d1, const JohanssonDiagram& d2,
                               SurgerySite s1, SurgerySite s2) {
    if (!validate_diagram(d1).pass()) {
        throw precondition_error("connected_sum: first diagram fails validation");
    }
    if (!validate_diagram(d2).pass()) {
        throw precondition_error("connected_sum: second diagram fails validation");
    }

    const JohanssonDiagram m2 = mirror(d2);

    const auto [x, j1] = resolve_site(d1, s1, "site1");
    const auto [v_local, j2] = resolve_site(m2, s2, "site2");

    const int n1 = d1.pres.pairing.curve_count();
    const int n2 = m2.pres.pairing.curve_count();
    const int p1 = d1.triple_point_count();
    const int p2 = m2.triple_point_count();

    JohanssonDiagram out;

    // Curves: d1's, then m2's shifted by n1, then the new pair.
    const CurveId v = n1 + v_local;
    const CurveId tx = d1.pres.pairing.sister(x);
    const CurveId tv = n1 + m2.pres.pairing.sister(v_local);
    const CurveId gamma = n1 + n2;
    const CurveId tgamma = n1 + n2 + 1;

    out.pres.pairing.tau.resize(static_cast<size_t>(n1 + n2 + 2));
    for (CurveId c = 0; c < n1; ++c) {
        out.pres.pairing.tau[static_cast<size_t>(c)] = d1.pres.pairing.sister(c);
    }
    for (CurveId c = 0; c < n2; ++c) {
        out.pres.pairing.tau[static_cast<size_t>(n1 + c)] = n1 + m2.pres.pairing.sister(c);
    }
    out.pres.pairing.tau[static_cast<size_t>(gamma)] = tgamma;
    out.pres.pairing.tau[static_cast<size_t>(tgamma)] = gamma;

    // Points: d1's, m2's shifted by 3*p1, then the six template points.
    const int point_shift = 3 * p1;
    out.points = d1.points;
    for (DoublePoint p : m2.points) {
        p.slots[0].curve += n1;
        p.slots[1].curve += n1;
        out.points.push_back(p);
    }
    const int base = 3 * (p1 + p2);
    const int cA = base, cB = base + 1;     // clasp: {x, v}
    const int lA = base + 2, lB = base + 3; // lens: {tau x, gamma}
    const int mA = base + 4, mB = base + 5; // lens: {tau v, tau gamma}
    const PipingTemplate& tmpl = piping_template();
    for (int i = 0; i < tmpl.new_points; ++i) {
        DoublePoint p;
        p.sign = tmpl.signs[static_cast<size_t>(i)];
        out.points.push_back(p);
    }

    // Triplets: inputs unchanged, plus two copies of (x, gamma, tau v).
    out.pres.triplets = d1.pres.triplets;
    for (Triplet t : m2.pres.triplets) {
        for (auto& l : t.letters) l += n1;
        for (auto& p : t.points) p += point_shift;
        out.pres.triplets.push_back(t);
    }
    out.pres.triplets.push_back(Triplet{{x, gamma, tv}, {cA, lA, mA}});
    out.pres.triplets.push_back(Triplet{{x, gamma, tv}, {cB, lB, mB}});

    // Words: copy, shift m2's point ids, then splice the fragment in. The
    // rerouted curves x and v both meet the clasp points in the order A, B;
    // each lens sits just after position 0 of the sister curve it straddles.
    out.words = d1.words;
    for (const auto& word : m2.words) {
        auto& w = out.words.emplace_back(word);
        for (WordEntry& e : w) e.point += point_shift;
    }
    auto splice_after = [](std::vector<WordEntry>& word, int pos, WordEntry first,
                           WordEntry second) {
        word.insert(word.begin() + pos + 1, {first, second});
    };
    splice_after(out.words[static_cast<size_t>(x)], j1, {cA, 0}, {cB, 0});
    splice_after(out.words[static_cast<size_t>(v)], j2, {cA, 1}, {cB, 1});
    splice_after(out.words[static_cast<size_t>(tx)], 0, {lA, 0}, {lB, 0});
    splice_after(out.words[static_cast<size_t>(tv)], 0, {mA, 0}, {mB, 0});
    out.words.push_back({{lA, 1}, {lB, 1}});
    out.words.push_back({{mA, 1}, {mB, 1}});

    rebuild_backrefs(out);

    if (out.triple_point_count() != p1 + p2 + tmpl.new_triplets ||
        !validate_diagram(out).pass()) {
        throw internal_error("connected_sum: spliced fragment is inconsistent");
    }
    return out;
}

} // namespace dehn
