#include "symtorus/classify4.hpp"
#include "symtorus/coisotropic.hpp"
#include "symtorus/fixtures.hpp"
#include "symtorus/io.hpp"
#include "symtorus/numeric.hpp"
#include "symtorus/orbifold.hpp"
#include "symtorus/symplectic_orbit.hpp"

#include "CLI11.hpp"

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace symtorus;
using io::Json;

enum Exit : int { kOk = 0, kInputError = 1, kFailed = 2, kUndetermined = 3 };

struct InputError : std::runtime_error {
    std::string location;
    InputError(std::string loc, const std::string& what) : std::runtime_error(what), location(std::move(loc)) {}
};

Json report(const std::string& command) { return Json{{"schema", io::kSchemaVersion}, {"command", command}}; }

int emit(const Json& j, int code) {
    std::cout << j.dump(2) << '\n';
    return code;
}

io::RecordFile load(const std::string& arg) {
    if (std::filesystem::is_regular_file(arg)) {
        std::ifstream in(arg);
        if (!in) throw InputError(arg, "cannot open file");
        std::stringstream buf;
        buf << in.rdbuf();
        try {
            return io::parse_record_text(buf.str());
        } catch (const io::SchemaError& e) {
            throw InputError(arg + "#" + e.where(), e.detail());
        }
    }
    if (auto rec = fixture(arg)) {
        return std::visit([](auto&& r) -> io::RecordFile { return r; }, *rec);
    }
    throw InputError(arg, "no such file or built-in fixture");
}

using Bare = std::variant<CoisotropicInvariants, SymplecticOrbitInvariants>;

Bare unwrap(const io::RecordFile& r) {
    if (const auto* d = std::get_if<ActionDescriptor4>(&r)) return d->record;
    if (const auto* c = std::get_if<CoisotropicInvariants>(&r)) return *c;
    return std::get<SymplecticOrbitInvariants>(r);
}

const char* kind_of(const Bare& b) { return b.index() == 0 ? "coisotropic" : "symplectic_orbit"; }

std::vector<std::string> violations_of(const Bare& b) {
    return std::visit([](const auto& r) { return validate(r); }, b);
}

int cmd_fixture(const std::string& name) {
    auto rec = fixture(name);
    if (!rec) {
        Json j = report("fixture");
        j["error"] = "unknown fixture '" + name + "'";
        Json names = Json::array();
        for (const auto& n : fixture_names()) names.push_back(n);
        j["known"] = names;
        return emit(j, kInputError);
    }
    return emit(std::visit([](const auto& r) { return io::to_json(r); }, *rec), kOk);
}

int cmd_check(const std::string& file) {
    const Bare rec = unwrap(load(file));
    Json j = report("check");
    j["kind"] = kind_of(rec);
    const auto v = violations_of(rec);
    j["valid"] = v.empty();
    j["violations"] = v;
    if (const auto* c = std::get_if<CoisotropicInvariants>(&rec)) {
        const auto cert = is_delzant(c->delta);
        Json d{{"delzant", cert.delzant}};
        if (cert.failing_vertex) d["failing_vertex"] = io::vector_json(*cert.failing_vertex);
        if (cert.index) d["index"] = cert.index->get_str();
        if (!cert.reason.empty()) d["reason"] = cert.reason;
        j["delta"] = d;
    } else {
        j["warnings"] = warnings(std::get<SymplecticOrbitInvariants>(rec));
    }
    return emit(j, v.empty() ? kOk : kFailed);
}

int verdict_exit(VerdictTag t) {
    switch (t) {
    case VerdictTag::Equivalent: return kOk;
    case VerdictTag::Inequivalent: return kFailed;
    case VerdictTag::Undetermined: return kUndetermined;
    }
    return kUndetermined;
}

int cmd_compare(const std::string& fa, const std::string& fb, std::size_t node_cap) {
    const Bare a = unwrap(load(fa));
    const Bare b = unwrap(load(fb));
    for (const auto& [name, rec] : {std::pair{fa, &a}, std::pair{fb, &b}})
        if (auto v = violations_of(*rec); !v.empty()) {
            Json j = report("compare");
            j["error"] = "record '" + name + "' is not valid";
            j["violations"] = v;
            return emit(j, kInputError);
        }
    EquivalenceVerdict verdict;
    if (a.index() != b.index()) {
        verdict = EquivalenceVerdict::inequivalent("record_kind", "coisotropic versus symplectic principal orbits");
    } else if (a.index() == 0) {
        verdict = compare(std::get<0>(a), std::get<0>(b));
    } else {
        verdict = compare(std::get<1>(a), std::get<1>(b), node_cap);
    }
    Json j = report("compare");
    j.update(io::verdict_json(verdict));
    return emit(j, verdict_exit(verdict.tag));
}

int cmd_classify4(const std::string& file) {
    const io::RecordFile r = load(file);
    const ActionDescriptor4 d = std::holds_alternative<ActionDescriptor4>(r) ? std::get<ActionDescriptor4>(r)
                                                                               : ActionDescriptor4{unwrap(r)};
    Json j = report("classify4");
    try {
        j.update(io::four_case_json(classify(d)));
    } catch (const ClassificationError& e) {
        j["violations"] = e.problems();
        return emit(j, kFailed);
    }
    if (const auto* s = std::get_if<SymplecticOrbitInvariants>(&d.record)) j["warnings"] = warnings(*s);
    return emit(j, kOk);
}

int cmd_model(const std::string& file) {
    const Bare rec = unwrap(load(file));
    Json j = report("model");
    if (auto v = violations_of(rec); !v.empty()) {
        j["violations"] = v;
        return emit(j, kFailed);
    }
    const Json m = std::visit([](const auto& r) { return io::model_json(model_descriptor(r)); }, rec);
    j.update(m);
    if (const auto* c = std::get_if<CoisotropicInvariants>(&rec)) {
        const HDescription h = build_h(*c);
        j["h_closed"] = h.closed();
        if (!h.closed()) j["h_closure_failures"] = h.closure_failures;
    }
    return emit(j, kOk);
}

FuchsianSignature signature_arg(std::size_t g, const std::vector<std::size_t>& orders) {
    try {
        return FuchsianSignature(g, orders);
    } catch (const std::invalid_argument& e) {
        throw InputError("-o", e.what());
    }
}

int cmd_orbifold_homology(std::size_t g, const std::vector<std::size_t>& orders) {
    const FuchsianSignature sig = signature_arg(g, orders);
    const AbelianInvariants h = orbifold_homology(sig);
    Json j = report("orbifold homology");
    j["signature"] = io::signature_json(sig);
    j["free_rank"] = h.free_rank;
    Json tors = Json::array();
    for (const auto& t : h.torsion) tors.push_back(t.get_str());
    j["torsion"] = tors;
    j["group"] = h.to_string();
    return emit(j, kOk);
}

int cmd_orbifold_bad(std::size_t g, const std::vector<std::size_t>& orders) {
    const FuchsianSignature sig = signature_arg(g, orders);
    Json j = report("orbifold bad");
    j["signature"] = io::signature_json(sig);
    j["bad"] = is_bad_signature(sig);
    j["euler_characteristic"] = io::rational_json(orbifold_euler(sig));
    return emit(j, kOk);
}

int cmd_verify_group(const std::string& file, std::size_t trials, std::uint64_t seed) {
    const Bare rec = unwrap(load(file));
    const auto* inv = std::get_if<CoisotropicInvariants>(&rec);
    if (!inv) throw InputError(file, "group-axioms needs a coisotropic record");
    if (auto v = validate(*inv); !v.empty()) {
        Json j = report("verify group-axioms");
        j["violations"] = v;
        return emit(j, kFailed);
    }
    const GroupAxiomReport r = check_group_axioms(*inv, trials, seed);
    Json j = report("verify group-axioms");
    j["seed"] = seed;
    j["trials"] = r.trials;
    j["associativity_failures"] = r.associativity_failures;
    j["identity_failures"] = r.identity_failures;
    j["inverse_failures"] = r.inverse_failures;
    j["passed"] = r.passed();
    return emit(j, r.passed() ? kOk : kFailed);
}

int cmd_verify_hamiltonian(std::size_t grid, std::uint64_t seed) {
    constexpr double kStep = 1e-5;
    constexpr double kResidualTol = 1e-6;
    constexpr double kHullTol = 1e-12;
    if (grid == 0) throw InputError("--grid", "grid must be positive");
    const auto sweep = numeric::hamilton_sweep(grid, seed, kStep);
    const auto hull = numeric::momentum_hull_estimate(2, 1.0, grid, seed);
    double vertex_error = 0;
    for (std::size_t k = 0; k < hull.vertices.size(); ++k)
        for (std::size_t i = 0; i < hull.vertices[k].size(); ++i)
            vertex_error = std::max(vertex_error, std::abs(hull.vertices[k][i] - (k == i + 1 ? 1.0 : 0.0)));
    const bool ok = sweep.max_residual < kResidualTol && vertex_error < kHullTol && hull.max_violation < kHullTol;
    Json j = report("verify hamiltonian");
    j["approximate"] = true;
    j["seed"] = seed;
    j["s2"] = Json{{"points", sweep.points}, {"step", kStep}, {"max_residual", sweep.max_residual}};
    j["cp2"] = Json{{"lambda", 1.0},
                    {"samples", hull.samples},
                    {"vertex_error", vertex_error},
                    {"max_hull_violation", hull.max_violation},
                    {"min_margin", hull.min_margin}};
    j["passed"] = ok;
    return emit(j, ok ? kOk : kFailed);
}

int cmd_verify_orbifold(std::size_t max_g, std::size_t max_m, std::size_t max_o) {
    const FreeRankSweep s = free_rank_sweep(max_g, max_m, max_o);
    Json j = report("verify orbifold");
    j["max_genus"] = max_g;
    j["max_cones"] = max_m;
    j["max_order"] = max_o;
    j["signatures"] = s.signatures;
    j["failures"] = s.failures;
    j["passed"] = s.failures.empty();
    return emit(j, s.failures.empty() ? kOk : kFailed);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact invariants of symplectic torus actions"};
    app.require_subcommand(1);

    std::string name, file, file2;
    std::uint64_t seed = 0;
    std::size_t trials = 1000, grid = 1000, node_cap = kDefaultNodeCap;
    std::size_t genus = 0, max_g = 4, max_m = 4, max_o = 6;
    std::vector<std::size_t> orders;

    auto* fixture_cmd = app.add_subcommand("fixture", "Print a built-in invariant record");
    fixture_cmd->add_option("NAME", name, "kodaira, cp2, s2xt2, s2quot, s2quot-swapped, t4, s2xt2free")->required();

    auto* check_cmd = app.add_subcommand("check", "Validate a record");
    check_cmd->add_option("FILE", file, "record file or fixture name")->required();

    auto* compare_cmd = app.add_subcommand("compare", "Decide equivalence of two records");
    compare_cmd->add_option("FILE1", file, "record file or fixture name")->required();
    compare_cmd->add_option("FILE2", file2, "record file or fixture name")->required();
    compare_cmd->add_option("--node-cap", node_cap, "orbit search node limit")->capture_default_str();

    auto* classify_cmd = app.add_subcommand("classify4", "Four-case classification of a 2-torus action on a 4-manifold");
    classify_cmd->add_option("FILE", file, "record file or fixture name")->required();

    auto* model_cmd = app.add_subcommand("model", "Describe the model manifold built from a record");
    model_cmd->add_option("FILE", file, "record file or fixture name")->required();

    auto* orbifold_cmd = app.add_subcommand("orbifold", "Fuchsian signature utilities");
    orbifold_cmd->require_subcommand(1);
    auto* homology_cmd = orbifold_cmd->add_subcommand("homology", "First orbifold homology group");
    auto* bad_cmd = orbifold_cmd->add_subcommand("bad", "Whether the signature is bad");
    for (auto* c : {homology_cmd, bad_cmd}) {
        c->add_option("-g,--genus", genus, "genus")->required();
        c->add_option("-o,--orders", orders, "cone point orders, comma separated")->delimiter(',');
    }

    auto* verify_cmd = app.add_subcommand("verify", "Seeded property checks");
    verify_cmd->require_subcommand(1);
    auto* group_cmd = verify_cmd->add_subcommand("group-axioms", "Group law of the twisted group");
    group_cmd->add_option("FILE", file, "coisotropic record file or fixture name")->required();
    group_cmd->add_option("--trials", trials, "random triples")->capture_default_str();
    group_cmd->add_option("--seed", seed, "random seed")->capture_default_str();
    auto* ham_cmd = verify_cmd->add_subcommand("hamiltonian", "Floating-point Hamilton equation and hull checks");
    ham_cmd->add_option("--grid", grid, "number of grid points")->capture_default_str();
    ham_cmd->add_option("--seed", seed, "random seed")->capture_default_str();
    auto* orb_cmd = verify_cmd->add_subcommand("orbifold", "Homology free rank sweep");
    orb_cmd->add_option("--max-genus", max_g)->capture_default_str();
    orb_cmd->add_option("--max-cones", max_m)->capture_default_str();
    orb_cmd->add_option("--max-order", max_o)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kInputError;
    }

    try {
        if (*fixture_cmd) return cmd_fixture(name);
        if (*check_cmd) return cmd_check(file);
        if (*compare_cmd) return cmd_compare(file, file2, node_cap);
        if (*classify_cmd) return cmd_classify4(file);
        if (*model_cmd) return cmd_model(file);
        if (*homology_cmd) return cmd_orbifold_homology(genus, orders);
        if (*bad_cmd) return cmd_orbifold_bad(genus, orders);
        if (*group_cmd) return cmd_verify_group(file, trials, seed);
        if (*ham_cmd) return cmd_verify_hamiltonian(grid, seed);
        if (*orb_cmd) return cmd_verify_orbifold(max_g, max_m, max_o);
    } catch (const InputError& e) {
        Json j{{"schema", io::kSchemaVersion}, {"error", e.what()}, {"location", e.location}};
        std::cerr << "error: " << e.location << ": " << e.what() << '\n';
        return emit(j, kInputError);
    } catch (const std::invalid_argument& e) {
        Json j{{"schema", io::kSchemaVersion}, {"error", e.what()}};
        std::cerr << "error: " << e.what() << '\n';
        return emit(j, kInputError);
    }
    return kInputError;
}
