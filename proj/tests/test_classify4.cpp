#include "doctest.h"
#include "support.hpp"

#include "symtorus/classify4.hpp"
#include "symtorus/fixtures.hpp"

#include <set>

using namespace symtorus;
using namespace testsupport;

TEST_CASE("the four fixtures land in four distinct cases") {
    const auto k = classify(ActionDescriptor4{fixture_kodaira()});
    const auto c = classify(ActionDescriptor4{fixture_cp2()});
    const auto s = classify(ActionDescriptor4{fixture_s2xt2()});
    const auto q = classify(ActionDescriptor4{fixture_s2quot()});
    CHECK(k.tag == FourCaseTag::FreeLagrangian);
    CHECK(c.tag == FourCaseTag::Toric);
    CHECK(s.tag == FourCaseTag::MixedS2T2);
    CHECK(q.tag == FourCaseTag::OrbifoldBundle);
    const std::set<FourCaseTag> tags{k.tag, c.tag, s.tag, q.tag};
    CHECK(tags.size() == 4);
    CHECK(to_string(k.tag) == "FreeLagrangian");
}

TEST_CASE("case payloads") {
    const auto k = classify(ActionDescriptor4{fixture_kodaira()});
    CHECK(k.chern.size() == 1);
    CHECK(k.tau.size() == 2);
    CHECK_FALSE(k.delta);
    const auto c = classify(ActionDescriptor4{fixture_cp2()});
    REQUIRE(c.delta);
    CHECK(c.delta->vertices().size() == 3);
    const auto m = case_of_mixed_example();
    CHECK(m.tag == FourCaseTag::MixedS2T2);
    REQUIRE(m.delta);
    CHECK(m.delta->dimension() == 1);
    CHECK(m.period_basis.size() == 1);
    const auto q = classify(ActionDescriptor4{fixture_s2quot()});
    REQUIRE(q.signature);
    CHECK(*q.signature == FuchsianSignature(0, {2, 2}));
    CHECK(classify(ActionDescriptor4{fixture_t4()}).tag == FourCaseTag::OrbifoldBundle);
}

TEST_CASE("records outside the four-case shape are rejected") {
    auto k = fixture_kodaira();
    k.omega_t = RatMatrix{{0, 1}, {-1, 0}};
    CHECK_THROWS_AS(classify(ActionDescriptor4{k}), ClassificationError);

    auto nd = fixture_cp2();
    nd.delta = Polytope::normalize(2, {{0, 0}, {2, 1}, {1, 2}});
    try {
        classify(ActionDescriptor4{nd});
        FAIL("expected a classification error");
    } catch (const ClassificationError& e) {
        CHECK_FALSE(e.problems().empty());
    }

    auto bad = fixture_s2quot();
    bad.area = -1;
    CHECK_THROWS_AS(classify(ActionDescriptor4{bad}), ClassificationError);
}
