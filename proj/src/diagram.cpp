#include "dehn/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "dehn/errors.hpp"

namespace dehn {

namespace {

std::string curve_name(CurveId c) {
    return "curve " + std::to_string(c);
}

} // namespace

int SisterPairing::pair_of(CurveId c) const {
    const CurveId lo = std::min(c, sister(c));
    int idx = 0;
    for (CurveId d = 0; d < lo; ++d) {
        if (is_primary(d)) ++idx;
    }
    return idx;
}

SisterPairing SisterPairing::standard(int pairs) {
    SisterPairing p;
    p.tau.resize(static_cast<size_t>(2 * pairs));
    for (int i = 0; i < pairs; ++i) {
        p.tau[static_cast<size_t>(2 * i)] = 2 * i + 1;
        p.tau[static_cast<size_t>(2 * i + 1)] = 2 * i;
    }
    return p;
}

CurvePair role_pair(const Triplet& t, const SisterPairing& pairing, int role) {
    const CurveId a = t.letters[0];
    const CurveId c = t.letters[1];
    const CurveId g = t.letters[2];
    switch (role) {
    case 0: return make_pair_sorted(a, pairing.sister(g));
    case 1: return make_pair_sorted(pairing.sister(a), c);
    default: return make_pair_sorted(g, pairing.sister(c));
    }
}

std::string to_string(TripletType type) {
    switch (type) {
    case TripletType::I1: return "I.1";
    case TripletType::I2: return "I.2";
    case TripletType::II1: return "II.1";
    case TripletType::II2: return "II.2";
    default: return "III";
    }
}

TripletType classify_triplet(const Triplet& t, const SisterPairing& pairing) {
    std::vector<CurveId> pair_reps;
    for (CurveId l : t.letters) {
        pair_reps.push_back(std::min(l, pairing.sister(l)));
    }
    std::sort(pair_reps.begin(), pair_reps.end());
    pair_reps.erase(std::unique(pair_reps.begin(), pair_reps.end()), pair_reps.end());
    const int distinct = static_cast<int>(pair_reps.size());

    bool self = false;
    for (int r = 0; r < 3; ++r) {
        const CurvePair p = role_pair(t, pairing, r);
        if (p[0] == p[1]) self = true;
    }

    if (distinct == 1) return self ? TripletType::I1 : TripletType::I2;
    if (distinct == 2) return self ? TripletType::II1 : TripletType::II2;
    return TripletType::III;
}

bool ValidationReport::pass() const {
    for (const Finding& f : findings) {
        if (f.severity == Severity::error) return false;
    }
    return true;
}

bool ValidationReport::has(const std::string& constraint) const {
    for (const Finding& f : findings) {
        if (f.constraint == constraint) return true;
    }
    return false;
}

std::map<CurvePair, int> crossing_counts(const HakenPresentation& h) {
    std::map<CurvePair, int> counts;
    for (const Triplet& t : h.triplets) {
        for (int r = 0; r < 3; ++r) {
            ++counts[role_pair(t, h.pairing, r)];
        }
    }
    return counts;
}

std::vector<int> induced_passage_counts(const HakenPresentation& h) {
    std::vector<int> counts(static_cast<size_t>(h.pairing.curve_count()), 0);
    for (const Triplet& t : h.triplets) {
        for (int r = 0; r < 3; ++r) {
            const CurvePair p = role_pair(t, h.pairing, r);
            ++counts[static_cast<size_t>(p[0])];
            ++counts[static_cast<size_t>(p[1])];
        }
    }
    return counts;
}

CrossingGraph curve_crossing_graph(const HakenPresentation& h) {
    CrossingGraph g;
    g.curves = h.pairing.curve_count();
    for (size_t ti = 0; ti < h.triplets.size(); ++ti) {
        for (int r = 0; r < 3; ++r) {
            const CurvePair p = role_pair(h.triplets[ti], h.pairing, r);
            if (p[0] == p[1]) {
                g.loops.push_back({p[0], static_cast<int>(ti), r});
            } else {
                g.edges.push_back({p[0], p[1], static_cast<int>(ti), r});
            }
        }
    }
    return g;
}

bool CrossingGraph::connected() const {
    if (curves == 0) return true;
    std::vector<std::vector<int>> adj(static_cast<size_t>(curves));
    for (const CrossingEdge& e : edges) {
        adj[static_cast<size_t>(e.a)].push_back(e.b);
        adj[static_cast<size_t>(e.b)].push_back(e.a);
    }
    std::vector<char> seen(static_cast<size_t>(curves), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        const int c = stack.back();
        stack.pop_back();
        for (int n : adj[static_cast<size_t>(c)]) {
            if (!seen[static_cast<size_t>(n)]) {
                seen[static_cast<size_t>(n)] = 1;
                stack.push_back(n);
            }
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](char s) { return s != 0; });
}

namespace {

// Pairing-level sanity; when this fails, crossing-derived checks are skipped.
bool pairing_well_formed(const SisterPairing& p, std::vector<Finding>& out) {
    bool ok = true;
    const int n = p.curve_count();
    for (CurveId c = 0; c < n; ++c) {
        const CurveId s = p.tau[static_cast<size_t>(c)];
        if (s < 0 || s >= n) {
            out.push_back({"tau-involution", Severity::error,
                           curve_name(c) + " has out-of-range sister", {c}});
            ok = false;
            continue;
        }
        if (s == c) {
            out.push_back({"tau-fixed-point", Severity::error,
                           "tau fixes " + curve_name(c), {c}});
            ok = false;
        } else if (p.tau[static_cast<size_t>(s)] != c) {
            out.push_back({"tau-involution", Severity::error,
                           "tau(tau(" + std::to_string(c) + ")) != " + std::to_string(c), {c}});
            ok = false;
        }
    }
    return ok;
}

bool letters_in_range(const HakenPresentation& h, std::vector<Finding>& out) {
    bool ok = true;
    for (size_t ti = 0; ti < h.triplets.size(); ++ti) {
        for (CurveId l : h.triplets[ti].letters) {
            if (!h.pairing.in_range(l)) {
                out.push_back({"triplet-letters", Severity::error,
                               "triplet " + std::to_string(ti) + " references unknown curve",
                               {static_cast<long long>(ti)}});
                ok = false;
                break;
            }
        }
    }
    return ok;
}

} // namespace

ValidationReport validate_presentation(const HakenPresentation& h) {
    ValidationReport report;
    const bool tau_ok = pairing_well_formed(h.pairing, report.findings);
    const bool letters_ok = letters_in_range(h, report.findings);
    if (!tau_ok || !letters_ok) return report;

    if (h.pairing.curve_count() > 0 && h.triplets.empty()) {
        report.findings.push_back({"empty-triplets", Severity::error,
                                   "nonempty curve set with no triplets", {}});
    }

    for (const auto& [pair, count] : crossing_counts(h)) {
        if (pair[0] != pair[1] && count % 2 != 0) {
            report.findings.push_back(
                {"parity", Severity::error,
                 "curves " + std::to_string(pair[0]) + " and " + std::to_string(pair[1]) +
                     " cross " + std::to_string(count) + " times",
                 {pair[0], pair[1]}});
        }
    }

    const std::vector<int> passages = induced_passage_counts(h);
    for (CurveId c = 0; c < h.pairing.curve_count(); ++c) {
        const CurveId s = h.pairing.sister(c);
        if (c < s && passages[static_cast<size_t>(c)] != passages[static_cast<size_t>(s)]) {
            report.findings.push_back({"sister-symmetry", Severity::error,
                                       curve_name(c) + " and its sister traverse different"
                                       " numbers of double points",
                                       {c, s}});
        }
    }

    if (!curve_crossing_graph(h).connected()) {
        report.findings.push_back({"connectivity", Severity::error,
                                   "curve graph is disconnected", {}});
    }

    if (report.pass() && !bound_check(h)) {
        report.findings.push_back({"double-curve-bound", Severity::error,
                                   "more than (2+3p)/4 double curves", {}});
    }

    return report;
}

std::vector<Finding> word_structure_findings(const JohanssonDiagram& d) {
    std::vector<Finding> out;
    const int curves = d.pres.pairing.curve_count();
    const int npoints = static_cast<int>(d.points.size());

    if (static_cast<int>(d.words.size()) != curves) {
        out.push_back({"structure", Severity::error, "word table size mismatch", {}});
        return out;
    }

    // Every point must be referenced exactly twice, once per slot, and the
    // point's passage backrefs must match the referencing word positions.
    std::vector<std::array<int, 2>> refs(static_cast<size_t>(npoints), {0, 0});
    bool ok = true;
    for (CurveId c = 0; c < curves; ++c) {
        const auto& word = d.words[static_cast<size_t>(c)];
        for (size_t i = 0; i < word.size(); ++i) {
            const WordEntry& e = word[i];
            if (e.point < 0 || e.point >= npoints || e.slot < 0 || e.slot > 1) {
                out.push_back({"structure", Severity::error,
                               "word of curve " + std::to_string(c) +
                                   " references invalid point or slot",
                               {c, static_cast<long long>(i)}});
                ok = false;
                continue;
            }
            ++refs[static_cast<size_t>(e.point)][static_cast<size_t>(e.slot)];
            const Passage& back = d.points[static_cast<size_t>(e.point)].slots[static_cast<size_t>(e.slot)];
            if (back.curve != c || back.index != static_cast<int>(i)) {
                out.push_back({"structure", Severity::error,
                               "point " + std::to_string(e.point) + " slot " +
                                   std::to_string(e.slot) + " backref mismatch",
                               {e.point}});
                ok = false;
            }
        }
    }
    for (int p = 0; p < npoints; ++p) {
        if (refs[static_cast<size_t>(p)][0] != 1 || refs[static_cast<size_t>(p)][1] != 1) {
            out.push_back({"structure", Severity::error,
                           "point " + std::to_string(p) +
                               " is not carried by exactly one passage per slot",
                           {p}});
            ok = false;
        }
    }
    (void)ok;
    return out;
}

// Triplets must partition the point table.
std::vector<Finding> triplet_partition_findings(const JohanssonDiagram& d) {
    std::vector<Finding> out;
    const int npoints = static_cast<int>(d.points.size());
    std::vector<int> owner(static_cast<size_t>(npoints), -1);
    for (size_t ti = 0; ti < d.pres.triplets.size(); ++ti) {
        for (int r = 0; r < 3; ++r) {
            const int p = d.pres.triplets[ti].points[static_cast<size_t>(r)];
            if (p < 0 || p >= npoints) {
                out.push_back({"triplet-partition", Severity::error,
                               "triplet " + std::to_string(ti) + " has unassigned point",
                               {static_cast<long long>(ti)}});
                continue;
            }
            if (owner[static_cast<size_t>(p)] >= 0) {
                out.push_back({"triplet-partition", Severity::error,
                               "point " + std::to_string(p) + " assigned to two triplets",
                               {p}});
            }
            owner[static_cast<size_t>(p)] = static_cast<int>(ti);
        }
    }
    for (int p = 0; p < npoints; ++p) {
        if (owner[static_cast<size_t>(p)] < 0) {
            out.push_back({"triplet-partition", Severity::error,
                           "point " + std::to_string(p) + " belongs to no triplet", {p}});
        }
    }
    return out;
}

std::vector<Finding> structural_findings(const JohanssonDiagram& d) {
    std::vector<Finding> out = word_structure_findings(d);
    if (!out.empty()) return out;
    return triplet_partition_findings(d);
}

ValidationReport validate_diagram(const JohanssonDiagram& d) {
    ValidationReport report = validate_presentation(d.pres);
    if (!report.pass()) return report;

    std::vector<Finding> structure = structural_findings(d);
    const bool structure_ok = structure.empty();
    for (Finding& f : structure) report.findings.push_back(std::move(f));
    if (!structure_ok) return report;

    const int p = d.triple_point_count();
    if (static_cast<int>(d.points.size()) != 3 * p) {
        report.findings.push_back({"point-count", Severity::error,
                                   "expected " + std::to_string(3 * p) + " double points, got " +
                                       std::to_string(d.points.size()),
                                   {}});
    }

    const std::vector<int> expected = induced_passage_counts(d.pres);
    for (CurveId c = 0; c < d.pres.pairing.curve_count(); ++c) {
        const int actual = static_cast<int>(d.words[static_cast<size_t>(c)].size());
        if (actual != expected[static_cast<size_t>(c)]) {
            report.findings.push_back({"word-length", Severity::error,
                                       "word of curve " + std::to_string(c) + " has " +
                                           std::to_string(actual) + " passages, triplets induce " +
                                           std::to_string(expected[static_cast<size_t>(c)]),
                                       {c}});
        }
        if (p > 0 && actual == 0) {
            report.findings.push_back({"word-length", Severity::error,
                                       "curve " + std::to_string(c) + " has an empty word", {c}});
        }
    }

    // Each assigned point must be a crossing of the curves its role demands.
    for (size_t ti = 0; ti < d.pres.triplets.size(); ++ti) {
        const Triplet& t = d.pres.triplets[ti];
        for (int r = 0; r < 3; ++r) {
            const DoublePoint& dp = d.points[static_cast<size_t>(t.points[static_cast<size_t>(r)])];
            const CurvePair want = role_pair(t, d.pres.pairing, r);
            const CurvePair got = make_pair_sorted(dp.slots[0].curve, dp.slots[1].curve);
            if (want != got) {
                report.findings.push_back(
                    {"triplet-pattern", Severity::error,
                     "triplet " + std::to_string(ti) + " role " + std::to_string(r + 1) +
                         " expects a crossing of {" + std::to_string(want[0]) + "," +
                         std::to_string(want[1]) + "}",
                     {static_cast<long long>(ti), t.points[static_cast<size_t>(r)]}});
            }
        }
    }

    if (!report.pass()) return report;

    const int face_count = static_cast<int>(faces(d).size());
    if (face_count != 3 * p + 2) {
        report.findings.push_back({"euler", Severity::error,
                                   "face tracing yields " + std::to_string(face_count) +
                                       " faces, sphere requires " + std::to_string(3 * p + 2),
                                   {}});
    }
    return report;
}

EdgeIndex::EdgeIndex(const JohanssonDiagram& d) {
    offset.reserve(d.words.size());
    for (const auto& word : d.words) {
        offset.push_back(total);
        total += static_cast<int>(word.size());
    }
}

std::pair<CurveId, int> EdgeIndex::curve_pos(int edge) const {
    int c = static_cast<int>(offset.size()) - 1;
    while (c > 0 && offset[static_cast<size_t>(c)] > edge) --c;
    return {c, edge - offset[static_cast<size_t>(c)]};
}

namespace {

enum : int { kIn = 0, kOut = 1 };

struct ArcEnd {
    int slot;
    int kind;
};

// Cyclic order of the four arc ends around a double point. A plus crossing
// lists (0-in, 1-in, 0-out, 1-out); minus is the mirror image.
std::array<ArcEnd, 4> rotation(Sign s) {
    if (s == Sign::plus) {
        return {ArcEnd{0, kIn}, ArcEnd{1, kIn}, ArcEnd{0, kOut}, ArcEnd{1, kOut}};
    }
    return {ArcEnd{0, kIn}, ArcEnd{1, kOut}, ArcEnd{0, kOut}, ArcEnd{1, kIn}};
}

} // namespace

std::vector<std::vector<Dart>> faces(const JohanssonDiagram& d) {
    if (!word_structure_findings(d).empty()) {
        throw precondition_error("faces: diagram is structurally inconsistent");
    }

    const EdgeIndex edges(d);
    const int ndarts = 2 * edges.total;

    auto dart_id = [](int edge, bool fwd) { return 2 * edge + (fwd ? 0 : 1); };

    auto word_len = [&](CurveId c) {
        return static_cast<int>(d.words[static_cast<size_t>(c)].size());
    };

    // Dart (edge, forward) runs passage i -> i+1 and arrives at the head
    // passage along its "in" end; backward darts arrive along "out".
    auto next_dart = [&](int id) {
        const int edge = id / 2;
        const bool fwd = (id % 2) == 0;
        const auto [c, i] = edges.curve_pos(edge);
        const int len = word_len(c);
        const int head = fwd ? (i + 1) % len : i;
        const WordEntry arrival = d.words[static_cast<size_t>(c)][static_cast<size_t>(head)];
        const int kind = fwd ? kIn : kOut;

        const std::array<ArcEnd, 4> rot = rotation(d.points[static_cast<size_t>(arrival.point)].sign);
        int at = -1;
        for (int k = 0; k < 4; ++k) {
            if (rot[static_cast<size_t>(k)].slot == arrival.slot &&
                rot[static_cast<size_t>(k)].kind == kind) {
                at = k;
                break;
            }
        }
        const ArcEnd exit = rot[static_cast<size_t>((at + 1) % 4)];
        const Passage leave =
            d.points[static_cast<size_t>(arrival.point)].slots[static_cast<size_t>(exit.slot)];
        const int llen = word_len(leave.curve);
        if (exit.kind == kOut) {
            return dart_id(edges.id(leave.curve, leave.index), true);
        }
        return dart_id(edges.id(leave.curve, (leave.index - 1 + llen) % llen), false);
    };

    std::vector<char> seen(static_cast<size_t>(ndarts), 0);
    std::vector<std::vector<Dart>> result;
    for (int start = 0; start < ndarts; ++start) {
        if (seen[static_cast<size_t>(start)]) continue;
        std::vector<Dart> cycle;
        int cur = start;
        while (!seen[static_cast<size_t>(cur)]) {
            seen[static_cast<size_t>(cur)] = 1;
            cycle.push_back({cur / 2, cur % 2 == 0});
            cur = next_dart(cur);
        }
        result.push_back(std::move(cycle));
    }
    return result;
}

HakenPresentation forget_embedding(const JohanssonDiagram& d) {
    HakenPresentation h = d.pres;
    for (Triplet& t : h.triplets) {
        t.points = {-1, -1, -1};
    }
    return h;
}

int double_curve_count(const HakenPresentation& h) {
    return h.pairing.pair_count();
}

bool bound_check(const HakenPresentation& h) {
    return 4 * double_curve_count(h) <= 2 + 3 * h.triple_point_count();
}

} // namespace dehn
