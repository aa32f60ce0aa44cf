// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dehn/census.hpp"
#include "dehn/diagram.hpp"
#include "dehn/errors.hpp"
#include "dehn/group.hpp"
#include "dehn/io.hpp"
#include "dehn/surgery.hpp"
#include "oracles.hpp"

using namespace dehn;

namespace {

using clock_type = std::chrono::steady_clock;

struct Criterion {
    std::string name;
    double limit_seconds;
    std::function<bool(std::string&)> run;
};

std::string fixture_path(const std::string& name) {
    return std::string(DEHN_FIXTURE_DIR) + "/" + name;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

const std::vector<std::string>& fixture_names() {
    static const std::vector<std::string> names = {
        "s3_johansson.jdiag", "s3_shima_1.jdiag", "s3_shima_2.jdiag",
        "s2xs1.jdiag", "l31_star.jdiag"};
    return names;
}

std::vector<JohanssonDiagram> load_fixtures() {
    std::vector<JohanssonDiagram> out;
    for (const std::string& name : fixture_names()) {
        out.push_back(parse_diagram(read_file(fixture_path(name))).diagram);
    }
    return out;
}

bool in_set(const std::string& name, const std::set<std::string>& allowed) {
    return allowed.contains(name);
}

const std::set<std::string> kCyclicSmall = {"0", "Z",
                                            "Z_2", "Z_3", "Z_4", "Z_5", "Z_6"};
const std::set<std::string> kCandidates = {"0",   "Z",   "Z_2", "Z_3",      "Z_4",
                                           "Z_5", "Z_6", "Z^2", "Z⊕Z_2"};

bool criterion_fixture_homology(std::string& detail) {
    const std::vector<std::string> expected = {"0", "0", "0", "Z", "Z_3"};
    const auto fixtures = load_fixtures();
    std::ostringstream got;
    bool ok = true;
    for (size_t i = 0; i < fixtures.size(); ++i) {
        if (!validate_diagram(fixtures[i]).pass()) ok = false;
        const std::string name = recognize(h1(fixtures[i].pres));
        if (name != expected[i]) ok = false;
        got << (i ? ", " : "") << name;
    }
    detail = "h1 = " + got.str();
    return ok;
}

bool criterion_sum_count(std::string& detail) {
    const auto fixtures = load_fixtures();
    int checked = 0;
    for (const auto& a : fixtures) {
        for (const auto& b : fixtures) {
            const JohanssonDiagram sum = connected_sum(a, b);
            if (!validate_diagram(sum).pass()) {
                detail = "sum output failed validation";
                return false;
            }
            if (sum.triple_point_count() != 6) {
                detail = "unexpected triple point count";
                return false;
            }
            ++checked;
        }
    }
    detail = std::to_string(checked) + " ordered pairs, all valid with 6 triple points";
    return checked == 25;
}

bool criterion_double_star(std::string& detail) {
    const JohanssonDiagram star =
        parse_diagram(read_file(fixture_path("l31_star.jdiag"))).diagram;
    const JohanssonDiagram sum = connected_sum(star, star);
    const std::string name = recognize(h1(sum.pres));
    detail = std::to_string(sum.triple_point_count()) + " triple points, h1 = " + name;
    return sum.triple_point_count() == 6 && name == "Z_3⊕Z_3";
}

// Two distinct sites per diagram: the first face's first edge, and the last
// face's last boundary entry.
std::vector<SurgerySite> two_sites(const JohanssonDiagram& d) {
    const auto cycles = faces(d);
    const int last = static_cast<int>(cycles.size()) - 1;
    return {{0, 0}, {last, static_cast<int>(cycles[static_cast<size_t>(last)].size()) - 1}};
}

bool criterion_h1_additivity(std::string& detail) {
    const auto fixtures = load_fixtures();
    int checked = 0;
    for (const auto& a : fixtures) {
        for (const auto& b : fixtures) {
            const AbelianGroup want = test::direct_sum(h1(a.pres), h1(b.pres));
            const auto sites1 = two_sites(a);
            const auto sites2 = two_sites(mirror(b));
            for (size_t s = 0; s < 2; ++s) {
                const JohanssonDiagram sum = connected_sum(a, b, sites1[s], sites2[s]);
                if (!(h1(sum.pres) == want)) {
                    detail = "additivity failed";
                    return false;
                }
                ++checked;
            }
        }
    }
    detail = std::to_string(checked) + " pair/site combinations additive";
    return checked == 50;
}

bool criterion_census_no_z3z3(std::string& detail) {
    long long classes = 0;
    for (int p : {2, 4}) {
        CensusQuery q;
        q.triple_points = p;
        const CensusResult r = census_h1(q);
        for (const auto& row : r.counts) classes += row.count;
        if (!r.no_z3_z3) {
            detail = "found a Z_3+Z_3 class at p=" + std::to_string(p);
            return false;
        }
        for (const auto& e : r.histogram) {
            if (e.name == "Z_3⊕Z_3") {
                detail = "histogram contains Z_3+Z_3";
                return false;
            }
        }
    }
    detail = std::to_string(classes) + " classes over p in {2,4}, none with h1 = Z_3+Z_3";
    return true;
}

bool criterion_two_curve_groups(std::string& detail) {
    std::set<std::string> seen;
    for (int p : {2, 4}) {
        CensusQuery q;
        q.triple_points = p;
        q.max_pairs = 2;
        const CensusResult r = census_h1(q);
        for (const auto& e : r.histogram) {
            seen.insert(e.name);
            if (!in_set(e.name, kCyclicSmall)) {
                detail = "unexpected class " + e.name;
                return false;
            }
        }
    }
    std::ostringstream list;
    for (const auto& s : seen) list << s << ' ';
    detail = "k<=2 classes: " + list.str();
    return true;
}

bool criterion_no_type_one(std::string& detail) {
    const bool with_parity = verify_lemma_no_type_I(4, 3, true);
    const bool ablated = verify_lemma_no_type_I(4, 3, false);
    detail = std::string("parity on: ") + (with_parity ? "none" : "found") +
             ", parity off: " + (ablated ? "none" : "counterexamples");
    return with_parity && !ablated;
}

bool criterion_candidate_list(std::string& detail) {
    std::ostringstream list;
    for (int p : {2, 4}) {
        CensusQuery q;
        q.triple_points = p;
        const CensusResult r = census_h1(q);
        for (const auto& e : r.histogram) {
            if (!in_set(e.name, kCandidates)) {
                detail = "class " + e.name + " outside the candidate list";
                return false;
            }
            list << e.name << ' ';
        }
    }
    detail = "all classes within the candidate list: " + list.str();
    return true;
}

bool criterion_bound_and_euler(std::string& detail) {
    for (int p : {2, 4}) {
        CensusQuery q;
        q.triple_points = p;
        for (const auto& cp : enumerate_presentations(q)) {
            if (!bound_check(cp.pres)) {
                detail = "double curve bound violated in census";
                return false;
            }
        }
    }
    const auto fixtures = load_fixtures();
    std::vector<JohanssonDiagram> diagrams = fixtures;
    for (const auto& a : fixtures) {
        for (const auto& b : fixtures) diagrams.push_back(connected_sum(a, b));
    }
    for (const JohanssonDiagram& d : diagrams) {
        if (static_cast<int>(faces(d).size()) != 3 * d.triple_point_count() + 2) {
            detail = "face count differs from 3p+2";
            return false;
        }
    }
    detail = "bound holds across the census; F = 3p+2 on " +
             std::to_string(diagrams.size()) + " diagrams";
    return true;
}

bool criterion_oracles(std::string& detail) {
    CensusQuery q;
    q.triple_points = 2;
    const auto fast = enumerate_presentations(q);
    const auto naive = test::naive_census_p2(2);
    if (fast.size() != naive.size() ||
        !std::equal(fast.begin(), fast.end(), naive.begin())) {
        detail = "enumerator disagrees with the naive oracle";
        return false;
    }

    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> dim(1, 4);
    std::uniform_int_distribution<long long> entry(-3, 3);
    for (int trial = 0; trial < 1000; ++trial) {
        RelationMatrix m;
        m.rows = dim(rng);
        m.cols = dim(rng);
        m.m.assign(static_cast<size_t>(m.rows),
                   std::vector<long long>(static_cast<size_t>(m.cols), 0));
        for (auto& row : m.m) {
            for (auto& v : row) v = entry(rng);
        }
        const SnfResult got = smith_normal_form(m);
        const auto [factors, rank] = test::minor_gcd_factors(m);
        if (got.rank != rank || got.factors != factors) {
            detail = "smith normal form disagrees with the minor-gcd oracle";
            return false;
        }
    }
    detail = "census stream equals the naive oracle (" + std::to_string(fast.size()) +
             " classes); SNF matches minor gcds on 1000 matrices";
    return true;
}

bool criterion_determinism_and_formats(std::string& detail) {
    CensusQuery q;
    q.triple_points = 4;
    q.threads = 1;
    const std::string once = census_result_json(census_h1(q));
    const std::string twice = census_result_json(census_h1(q));
    q.threads = 4;
    const std::string parallel = census_result_json(census_h1(q));
    if (once != twice || once != parallel) {
        detail = "census serialization not byte-identical";
        return false;
    }

    for (const std::string& name : fixture_names()) {
        const std::string text = read_file(fixture_path(name));
        const DiagramDocument doc = parse_diagram(text);
        const std::string out = serialize_diagram(doc);
        const DiagramDocument again = parse_diagram(out);
        if (serialize_diagram(again) != out) {
            detail = "round trip failed for " + name;
            return false;
        }
    }

    const std::string base = read_file(fixture_path("l31_star.jdiag"));
    std::mt19937 rng(99);
    std::uniform_int_distribution<size_t> pos(0, base.size() - 1);
    std::uniform_int_distribution<int> kind(0, 3);
    std::uniform_int_distribution<int> chr(32, 126);
    for (int trial = 0; trial < 100; ++trial) {
        std::string text = base;
        switch (kind(rng)) {
        case 0: text[pos(rng)] = static_cast<char>(chr(rng)); break;
        case 1: text.erase(pos(rng), 1); break;
        case 2: text.insert(pos(rng), 1, static_cast<char>(chr(rng))); break;
        default: text = text.substr(0, pos(rng)); break;
        }
        try {
            (void)parse_diagram(text);
        } catch (const parse_error&) {
            // structured rejection is the expected path
        }
    }
    detail = "byte-identical census across runs and threads; round trips hold; "
             "100 fuzzed inputs handled";
    return true;
}

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"fixture homology (0, 0, 0, Z, Z_3)", 1.0, criterion_fixture_homology},
        {"connected sums of all fixture pairs are valid with 6 triple points", 1.0,
         criterion_sum_count},
        {"double lens-space sum: 6 triple points and h1 = Z_3+Z_3", 1.0,
         criterion_double_star},
        {"h1 additivity over 25 pairs and 2 sites each", 5.0, criterion_h1_additivity},
        {"census p in {2,4}: no class with h1 = Z_3+Z_3", 300.0, criterion_census_no_z3z3},
        {"census k<=2: only cyclic classes of order <= 6 (or Z)", 300.0,
         criterion_two_curve_groups},
        {"three pairs, four triplets: no type I; parity ablation finds some", 300.0,
         criterion_no_type_one},
        {"census p<=4 within the candidate class list", 300.0, criterion_candidate_list},
        {"double curve bound and F = 3p+2 everywhere", 60.0, criterion_bound_and_euler},
        {"naive census oracle and minor-gcd SNF oracle agree", 60.0, criterion_oracles},
        {"determinism, round trips, fuzzed parser", 60.0,
         criterion_determinism_and_formats},
    };

    int passed = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        const auto start = clock_type::now();
        std::string detail;
        bool ok = false;
        try {
            ok = criteria[i].run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double seconds =
            std::chrono::duration<double>(clock_type::now() - start).count();
        if (seconds > criteria[i].limit_seconds) {
            ok = false;
            detail += " [over time budget]";
        }
        std::printf("[%2zu] %s %s (%.3fs) %s\n", i + 1, ok ? "PASS" : "FAIL",
                    criteria[i].name.c_str(), seconds, detail.c_str());
        if (ok) ++passed;
    }
    std::printf("ACCEPTANCE: %d/%zu criteria passed\n", passed, criteria.size());
    return passed == static_cast<int>(criteria.size()) ? 0 : 1;
}
