#include "symtorus/classify4.hpp"

#include "symtorus/fixtures.hpp"

namespace symtorus {

namespace {

std::string join(const std::vector<std::string>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : "; ") + x;
    return s;
}

FourCase classify_lagrangian(const CoisotropicInvariants& inv) {
    std::vector<std::string> problems;
    if (inv.torus.dim != 2) problems.push_back("torus must be 2-dimensional");
    if (!inv.omega_t.is_zero())
        problems.push_back("omega_t must vanish: 2-dimensional coisotropic orbits in dimension 4 are Lagrangian");
    if (!problems.empty()) throw ClassificationError(problems);
    if (auto v = validate(inv); !v.empty()) throw ClassificationError(v);

    FourCase out;
    switch (inv.t_h.dim()) {
    case 2:
        if (inv.delta.dimension() != 2 || !is_delzant(inv.delta).delzant)
            throw ClassificationError({"toric case requires a 2-dimensional Delzant polytope"});
        out.tag = FourCaseTag::Toric;
        out.delta = inv.delta;
        break;
    case 1:
        if (inv.delta.dimension() != 1 || inv.delta.vertices().size() != 2)
            throw ClassificationError({"dim T_h = 1 requires delta to be an interval"});
        if (inv.period_basis.size() != 1)
            throw ClassificationError({"dim T_h = 1 requires a rank-1 period lattice"});
        out.tag = FourCaseTag::MixedS2T2;
        out.delta = inv.delta;
        out.period_basis = inv.period_basis;
        break;
    default:
        if (inv.period_basis.size() != 2)
            throw ClassificationError({"free Lagrangian case requires a rank-2 period lattice"});
        out.tag = FourCaseTag::FreeLagrangian;
        out.period_basis = inv.period_basis;
        out.chern = inv.chern;
        out.tau = inv.tau;
        break;
    }
    return out;
}

FourCase classify_symplectic(const SymplecticOrbitInvariants& inv) {
    if (inv.torus.dim != 2) throw ClassificationError({"torus must be 2-dimensional"});
    if (auto v = validate(inv); !v.empty()) throw ClassificationError(v);
    FourCase out;
    out.tag = FourCaseTag::OrbifoldBundle;
    out.signature = inv.signature;
    out.monodromy = inv.monodromy;
    return out;
}

}  // namespace

std::string to_string(FourCaseTag tag) {
    switch (tag) {
    case FourCaseTag::Toric: return "Toric";
    case FourCaseTag::MixedS2T2: return "MixedS2T2";
    case FourCaseTag::FreeLagrangian: return "FreeLagrangian";
    case FourCaseTag::OrbifoldBundle: return "OrbifoldBundle";
    }
    return "?";
}

ClassificationError::ClassificationError(std::vector<std::string> problems)
    : std::runtime_error("inconsistent record: " + join(problems)), problems_(std::move(problems)) {}

FourCase classify(const ActionDescriptor4& d) {
    if (d.lagrangian()) return classify_lagrangian(std::get<CoisotropicInvariants>(d.record));
    return classify_symplectic(std::get<SymplecticOrbitInvariants>(d.record));
}

FourCase case_of_mixed_example() { return classify(ActionDescriptor4{fixture_s2xt2()}); }

}  // namespace symtorus
