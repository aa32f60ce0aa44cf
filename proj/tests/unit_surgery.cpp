#include <doctest.h>

#include "dehn/errors.hpp"
#include "dehn/group.hpp"
#include "dehn/surgery.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace dehn;

TEST_CASE("mirror is an involution that preserves validity and homology") {
    for (const std::string& name : test::fixture_names()) {
        CAPTURE(name);
        const JohanssonDiagram d = test::load_fixture(name);
        const JohanssonDiagram m = mirror(d);
        CHECK(validate_diagram(m).pass());
        CHECK(h1(m.pres) == h1(d.pres));

        const JohanssonDiagram mm = mirror(m);
        CHECK(mm.words == d.words);
        for (size_t i = 0; i < d.points.size(); ++i) {
            CHECK(mm.points[i].sign == d.points[i].sign);
        }
    }
}

TEST_CASE("piping fragment shape") {
    const PipingTemplate& t = piping_template();
    CHECK(t.new_pairs == 1);
    CHECK(t.new_triplets == 2);
    CHECK(t.new_points == 6);
}

TEST_CASE("connected sum of the double star") {
    const JohanssonDiagram star = test::load_fixture("l31_star.jdiag");
    const JohanssonDiagram sum = connected_sum(star, star);
    CHECK(sum.triple_point_count() == 6);
    CHECK(validate_diagram(sum).pass());
    CHECK(recognize(h1(sum.pres)) == "Z_3⊕Z_3");
    CHECK(faces(sum).size() == 3 * 6 + 2);
}

TEST_CASE("input triplets survive and new triplets stay on the fragment") {
    const JohanssonDiagram a = test::load_fixture("l31_star.jdiag");
    const JohanssonDiagram b = test::load_fixture("s2xs1.jdiag");
    const JohanssonDiagram sum = connected_sum(a, b);

    const int n1 = a.pres.pairing.curve_count();
    const int n2 = b.pres.pairing.curve_count();
    REQUIRE(sum.pres.triplets.size() == 6);
    for (size_t i = 0; i < 2; ++i) {
        CHECK(sum.pres.triplets[i].letters == a.pres.triplets[i].letters);
    }
    const JohanssonDiagram m2 = mirror(b);
    for (size_t i = 0; i < 2; ++i) {
        std::array<CurveId, 3> shifted = m2.pres.triplets[i].letters;
        for (CurveId& c : shifted) c += n1;
        CHECK(sum.pres.triplets[2 + i].letters == shifted);
    }
    // The two new triplets are equal and use the fresh pair as middle letter.
    const CurveId gamma = n1 + n2;
    CHECK(sum.pres.triplets[4].letters == sum.pres.triplets[5].letters);
    CHECK(sum.pres.triplets[4].letters[1] == gamma);

    CHECK(double_curve_count(sum.pres) ==
          double_curve_count(a.pres) + double_curve_count(b.pres) + piping_template().new_pairs);
}

TEST_CASE("triple point count and homology additivity across all fixture pairs") {
    std::vector<JohanssonDiagram> fixtures;
    for (const std::string& name : test::fixture_names()) {
        fixtures.push_back(test::load_fixture(name));
    }
    for (const JohanssonDiagram& a : fixtures) {
        for (const JohanssonDiagram& b : fixtures) {
            const JohanssonDiagram sum = connected_sum(a, b);
            CHECK(sum.triple_point_count() ==
                  a.triple_point_count() + b.triple_point_count() + 2);
            CHECK(h1(sum.pres) == test::direct_sum(h1(a.pres), h1(b.pres)));
        }
    }
}

TEST_CASE("site choice does not change the homology or the count") {
    const JohanssonDiagram a = test::load_fixture("l31_star.jdiag");
    const JohanssonDiagram b = test::load_fixture("s2xs1.jdiag");
    const AbelianGroup expected = test::direct_sum(h1(a.pres), h1(b.pres));

    auto valid_sites = [](const JohanssonDiagram& d) {
        std::vector<SurgerySite> out;
        const auto cycles = faces(d);
        for (int f = 0; f < static_cast<int>(cycles.size()); f += 3) {
            out.push_back({f, static_cast<int>(cycles[static_cast<size_t>(f)].size()) - 1});
            out.push_back({f, 0});
        }
        return out;
    };
    for (const SurgerySite& s1 : valid_sites(a)) {
        for (const SurgerySite& s2 : valid_sites(mirror(b))) {
            const JohanssonDiagram sum = connected_sum(a, b, s1, s2);
            CHECK(sum.triple_point_count() == 6);
            CHECK(h1(sum.pres) == expected);
        }
    }
}

TEST_CASE("sum output survives another round of surgery") {
    const JohanssonDiagram star = test::load_fixture("l31_star.jdiag");
    const JohanssonDiagram twice = connected_sum(star, star);
    const JohanssonDiagram thrice = connected_sum(twice, star);
    CHECK(thrice.triple_point_count() == 10);
    CHECK(validate_diagram(thrice).pass());
    CHECK(recognize(h1(thrice.pres)) == "Z_3⊕Z_3⊕Z_3");
}

TEST_CASE("invalid inputs and sites are rejected") {
    const JohanssonDiagram star = test::load_fixture("l31_star.jdiag");
    CHECK_THROWS_AS((void)connected_sum(star, star, SurgerySite{99, 0}, SurgerySite{0, 0}),
                    precondition_error);
    CHECK_THROWS_AS((void)connected_sum(star, star, SurgerySite{0, 0}, SurgerySite{0, 99}),
                    precondition_error);

    JohanssonDiagram broken = star;
    broken.points[0].sign = flip(broken.points[0].sign);
    if (!validate_diagram(broken).pass()) {
        CHECK_THROWS_AS((void)connected_sum(broken, star), precondition_error);
    }
}
