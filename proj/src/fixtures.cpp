#include "symtorus/fixtures.hpp"

namespace symtorus {

namespace {

TorusElement te(const Rational& a, const Rational& b) { return TorusElement(RatVector{a, b}); }

RatMatrix standard_area_form() { return RatMatrix{{0, 1}, {-1, 0}}; }

}  // namespace

CoisotropicInvariants fixture_kodaira() {
    const Torus t(2);
    CoisotropicInvariants inv{t,
                              RatMatrix(2, 2),
                              Subtorus::trivial(t),
                              Polytope::normalize(2, {{0, 0}}),
                              {{1, 0}, {0, 1}},
                              {ChernEntry{0, 1, {1, 0}}},
                              {te(0, 0), te(0, 0)}};
    return inv;
}

CoisotropicInvariants fixture_cp2(const Rational& lambda) {
    const Torus t(2);
    return CoisotropicInvariants{t,
                                 RatMatrix(2, 2),
                                 Subtorus::full(t),
                                 Polytope::normalize(2, {{0, 0}, {lambda, 0}, {0, lambda}}),
                                 {},
                                 {},
                                 {}};
}

CoisotropicInvariants fixture_s2xt2() {
    const Torus t(2);
    return CoisotropicInvariants{t,
                                 RatMatrix(2, 2),
                                 Subtorus(t, {{0, 1}}),
                                 Polytope::normalize(1, {{-1}, {1}}),
                                 {{1}},
                                 {},
                                 {te(0, 0)}};
}

SymplecticOrbitInvariants fixture_s2quot() {
    const Torus t(2);
    const FuchsianSignature sig(0, {2, 2});
    const Rational half(1, 2);
    return SymplecticOrbitInvariants{t, standard_area_form(), sig, 1,
                                     MonodromyHom{sig, t, {}, {}, {te(half, 0), te(half, 0)}}};
}

SymplecticOrbitInvariants fixture_s2quot_swapped() {
    auto inv = fixture_s2quot();
    std::swap(inv.monodromy.gamma[0], inv.monodromy.gamma[1]);
    return inv;
}

SymplecticOrbitInvariants fixture_t4() {
    const Torus t(2);
    const FuchsianSignature sig(1, {});
    return SymplecticOrbitInvariants{t, standard_area_form(), sig, 1,
                                     MonodromyHom{sig, t, {te(0, 0)}, {te(0, 0)}, {}}};
}

SymplecticOrbitInvariants fixture_s2xt2free() {
    const Torus t(2);
    const FuchsianSignature sig(0, {});
    return SymplecticOrbitInvariants{t, standard_area_form(), sig, 2, MonodromyHom{sig, t, {}, {}, {}}};
}

std::vector<std::string> fixture_names() {
    return {"kodaira", "cp2", "s2xt2", "s2quot", "s2quot-swapped", "t4", "s2xt2free"};
}

std::optional<Record> fixture(std::string_view name) {
    if (name == "kodaira") return fixture_kodaira();
    if (name == "cp2") return fixture_cp2();
    if (name == "s2xt2") return fixture_s2xt2();
    if (name == "s2quot") return fixture_s2quot();
    if (name == "s2quot-swapped") return fixture_s2quot_swapped();
    if (name == "t4") return fixture_t4();
    if (name == "s2xt2free") return fixture_s2xt2free();
    return std::nullopt;
}

}  // namespace symtorus
