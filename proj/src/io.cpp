#include "symtorus/io.hpp"

#include <initializer_list>
#include <set>

namespace symtorus::io {

namespace {

std::string at(const std::string& where, const std::string& key) { return where + "/" + key; }
std::string at(const std::string& where, std::size_t i) { return where + "/" + std::to_string(i); }

void expect_fields(const Json& j, const std::string& where, std::initializer_list<const char*> required,
                   std::initializer_list<const char*> optional = {}) {
    if (!j.is_object()) throw SchemaError(where.empty() ? "/" : where, "expected an object");
    std::set<std::string> allowed;
    for (const char* k : required) {
        allowed.insert(k);
        if (!j.contains(k)) throw SchemaError(where.empty() ? "/" : where, std::string("missing field '") + k + "'");
    }
    for (const char* k : optional) allowed.insert(k);
    for (const auto& [key, value] : j.items())
        if (!allowed.contains(key)) throw SchemaError(at(where, key), "unknown field");
}

const Json& array_at(const Json& j, const std::string& where) {
    if (!j.is_array()) throw SchemaError(where, "expected an array");
    return j;
}

Rational rational_from(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(Integer(j.dump()));
    if (!j.is_string()) throw SchemaError(where, "expected a rational \"p/q\" string");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw SchemaError(where, e.what());
    }
}

Integer integer_from(const Json& j, const std::string& where) {
    const Rational q = rational_from(j, where);
    if (q.get_den() != 1) throw SchemaError(where, "expected an integer");
    return q.get_num();
}

std::size_t count_from(const Json& j, const std::string& where) {
    if (!j.is_number_unsigned()) throw SchemaError(where, "expected a non-negative integer");
    return j.get<std::size_t>();
}

RatVector rvec_from(const Json& j, const std::string& where, std::optional<std::size_t> len = std::nullopt) {
    array_at(j, where);
    if (len && j.size() != *len)
        throw SchemaError(where, "expected " + std::to_string(*len) + " entries, got " + std::to_string(j.size()));
    RatVector v;
    for (std::size_t i = 0; i < j.size(); ++i) v.push_back(rational_from(j[i], at(where, i)));
    return v;
}

IntVector ivec_from(const Json& j, const std::string& where, std::size_t len) {
    array_at(j, where);
    if (j.size() != len)
        throw SchemaError(where, "expected " + std::to_string(len) + " entries, got " + std::to_string(j.size()));
    IntVector v;
    for (std::size_t i = 0; i < j.size(); ++i) v.push_back(integer_from(j[i], at(where, i)));
    return v;
}

RatMatrix rmat_from(const Json& j, const std::string& where, std::size_t rows, std::size_t cols) {
    array_at(j, where);
    if (j.size() != rows) throw SchemaError(where, "expected " + std::to_string(rows) + " rows");
    RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const RatVector r = rvec_from(j[i], at(where, i), cols);
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = r[c];
    }
    return m;
}

TorusElement element_from(const Json& j, const std::string& where, std::size_t k) {
    return TorusElement(rvec_from(j, where, k));
}

std::vector<TorusElement> elements_from(const Json& j, const std::string& where, std::size_t k) {
    array_at(j, where);
    std::vector<TorusElement> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(element_from(j[i], at(where, i), k));
    return out;
}

Torus torus_from(const Json& j, const std::string& where) {
    const std::size_t k = count_from(j, where);
    if (k == 0) throw SchemaError(where, "torus dimension must be at least 1");
    return Torus(k);
}

Polytope polytope_from(const Json& j, const std::string& where) {
    array_at(j, where);
    if (j.empty()) throw SchemaError(where, "polytope needs at least one vertex");
    const std::size_t dim = array_at(j[0], at(where, 0)).size();
    std::vector<RatPoint> pts;
    for (std::size_t i = 0; i < j.size(); ++i) pts.push_back(rvec_from(j[i], at(where, i), dim));
    try {
        return Polytope::normalize(dim, pts);
    } catch (const std::invalid_argument& e) {
        throw SchemaError(where, e.what());
    }
}

FuchsianSignature signature_from(const Json& j, const std::string& where) {
    expect_fields(j, where, {"genus", "orders"});
    const std::size_t g = count_from(j["genus"], at(where, "genus"));
    std::vector<std::size_t> orders;
    const auto& os = array_at(j["orders"], at(where, "orders"));
    for (std::size_t i = 0; i < os.size(); ++i) orders.push_back(count_from(os[i], at(at(where, "orders"), i)));
    try {
        return FuchsianSignature(g, orders);
    } catch (const std::invalid_argument& e) {
        throw SchemaError(at(where, "orders"), e.what());
    }
}

void expect_header(const Json& j, const std::string& where, const char* kind) {
    const int schema = j["schema"].is_number_integer() ? j["schema"].get<int>() : -1;
    if (schema != kSchemaVersion) throw SchemaError(at(where, "schema"), "unsupported schema version");
    if (j["kind"] != kind) throw SchemaError(at(where, "kind"), std::string("expected \"") + kind + "\"");
}

CoisotropicInvariants coisotropic_from(const Json& j, const std::string& where) {
    expect_fields(j, where,
                  {"schema", "kind", "torus_dim", "omega_t", "hamiltonian_subtorus", "delta", "period_basis",
                   "chern", "tau"});
    expect_header(j, where, "coisotropic");
    const Torus t = torus_from(j["torus_dim"], at(where, "torus_dim"));
    const std::size_t k = t.dim;

    std::vector<IntVector> th;
    const auto& thj = array_at(j["hamiltonian_subtorus"], at(where, "hamiltonian_subtorus"));
    for (std::size_t i = 0; i < thj.size(); ++i)
        th.push_back(ivec_from(thj[i], at(at(where, "hamiltonian_subtorus"), i), k));

    CoisotropicInvariants inv{t, rmat_from(j["omega_t"], at(where, "omega_t"), k, k), Subtorus(t, th),
                              polytope_from(j["delta"], at(where, "delta")), {}, {}, {}};

    const auto& pb = array_at(j["period_basis"], at(where, "period_basis"));
    for (std::size_t i = 0; i < pb.size(); ++i)
        inv.period_basis.push_back(rvec_from(pb[i], at(at(where, "period_basis"), i)));

    const auto& cj = array_at(j["chern"], at(where, "chern"));
    for (std::size_t n = 0; n < cj.size(); ++n) {
        const std::string w = at(at(where, "chern"), n);
        expect_fields(cj[n], w, {"i", "j", "value"});
        inv.chern.push_back(ChernEntry{count_from(cj[n]["i"], at(w, "i")), count_from(cj[n]["j"], at(w, "j")),
                                       rvec_from(cj[n]["value"], at(w, "value"), k)});
    }
    inv.tau = elements_from(j["tau"], at(where, "tau"), k);
    return inv;
}

SymplecticOrbitInvariants symplectic_from(const Json& j, const std::string& where) {
    expect_fields(j, where, {"schema", "kind", "torus_dim", "omega_t", "signature", "area", "monodromy"});
    expect_header(j, where, "symplectic_orbit");
    const Torus t = torus_from(j["torus_dim"], at(where, "torus_dim"));
    const std::size_t k = t.dim;
    const FuchsianSignature sig = signature_from(j["signature"], at(where, "signature"));
    const std::string mw = at(where, "monodromy");
    const Json& mj = j["monodromy"];
    expect_fields(mj, mw, {"alpha", "beta", "gamma"});
    MonodromyHom mono{sig, t, elements_from(mj["alpha"], at(mw, "alpha"), k),
                      elements_from(mj["beta"], at(mw, "beta"), k), elements_from(mj["gamma"], at(mw, "gamma"), k)};
    return SymplecticOrbitInvariants{t, rmat_from(j["omega_t"], at(where, "omega_t"), k, k), sig,
                                     rational_from(j["area"], at(where, "area")), std::move(mono)};
}

Json elements_json(const std::vector<TorusElement>& ts) {
    Json a = Json::array();
    for (const auto& t : ts) a.push_back(torus_element_json(t));
    return a;
}

Json rat_matrix_json(const RatMatrix& m) {
    Json a = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(vector_json(m.row(i)));
    return a;
}

Json chern_json(const std::vector<ChernEntry>& chern) {
    Json a = Json::array();
    for (const auto& e : chern) a.push_back(Json{{"i", e.i}, {"j", e.j}, {"value", vector_json(e.value)}});
    return a;
}

Json vectors_json(const std::vector<RatVector>& vs) {
    Json a = Json::array();
    for (const auto& v : vs) a.push_back(vector_json(v));
    return a;
}

}  // namespace

Json rational_json(const Rational& q) { return format_rational(q); }

Json vector_json(const RatVector& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(rational_json(x));
    return a;
}

Json matrix_json(const IntMatrix& m) {
    Json a = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json r = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m(i, j).get_str());
        a.push_back(std::move(r));
    }
    return a;
}

Json torus_element_json(const TorusElement& t) { return vector_json(t.coords()); }

Json polytope_json(const Polytope& p) { return vectors_json(p.vertices()); }

Json signature_json(const FuchsianSignature& s) {
    return Json{{"genus", s.genus()}, {"orders", s.orders()}};
}

Json to_json(const CoisotropicInvariants& inv) {
    return Json{{"schema", kSchemaVersion},
                {"kind", "coisotropic"},
                {"torus_dim", inv.torus.dim},
                {"omega_t", rat_matrix_json(inv.omega_t)},
                {"hamiltonian_subtorus", matrix_json(inv.t_h.lattice().basis())},
                {"delta", polytope_json(inv.delta)},
                {"period_basis", vectors_json(inv.period_basis)},
                {"chern", chern_json(inv.chern)},
                {"tau", elements_json(inv.tau)}};
}

Json to_json(const SymplecticOrbitInvariants& inv) {
    return Json{{"schema", kSchemaVersion},
                {"kind", "symplectic_orbit"},
                {"torus_dim", inv.torus.dim},
                {"omega_t", rat_matrix_json(inv.omega_t)},
                {"signature", signature_json(inv.signature)},
                {"area", rational_json(inv.area)},
                {"monodromy",
                 Json{{"alpha", elements_json(inv.monodromy.alpha)},
                      {"beta", elements_json(inv.monodromy.beta)},
                      {"gamma", elements_json(inv.monodromy.gamma)}}}};
}

Json to_json(const ActionDescriptor4& d) {
    Json inner = std::visit([](const auto& r) { return to_json(r); }, d.record);
    return Json{{"schema", kSchemaVersion},
                {"kind", "action4"},
                {"arm", d.lagrangian() ? "lagrangian" : "symplectic"},
                {"record", std::move(inner)}};
}

Json to_json(const RecordFile& r) {
    return std::visit([](const auto& x) { return to_json(x); }, r);
}

RecordFile parse_record(const Json& j) {
    if (!j.is_object()) throw SchemaError("/", "expected an object");
    if (!j.contains("kind") || !j["kind"].is_string()) throw SchemaError("/kind", "missing or not a string");
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "coisotropic") return coisotropic_from(j, "");
    if (kind == "symplectic_orbit") return symplectic_from(j, "");
    if (kind == "action4") {
        expect_fields(j, "", {"schema", "kind", "arm", "record"});
        expect_header(j, "", "action4");
        const Json& arm = j["arm"];
        if (arm == "lagrangian") return ActionDescriptor4{coisotropic_from(j["record"], "/record")};
        if (arm == "symplectic") return ActionDescriptor4{symplectic_from(j["record"], "/record")};
        throw SchemaError("/arm", "expected \"lagrangian\" or \"symplectic\"");
    }
    throw SchemaError("/kind", "unknown record kind '" + kind + "'");
}

RecordFile parse_record_text(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw SchemaError("/", std::string("malformed JSON: ") + e.what());
    }
    return parse_record(j);
}

Json verdict_json(const EquivalenceVerdict& v) {
    Json j{{"verdict", to_string(v.tag)}};
    if (v.witness) j["witness"] = matrix_json(*v.witness);
    if (!v.separator.empty()) j["separator"] = v.separator;
    if (!v.detail.empty()) j["detail"] = v.detail;
    return j;
}

Json model_json(const ModelDescriptor& d) {
    return Json{{"model", "G x_H M_h"},
                {"total_dim", d.total_dim},
                {"fiber", polytope_json(d.fiber)},
                {"hamiltonian_subtorus", matrix_json(d.hamiltonian_subtorus.lattice().basis())},
                {"free_complement_dim", d.free_complement_dim},
                {"base", Json{{"n_dim", d.n_dim},
                              {"period_basis", vectors_json(d.base_period_basis)},
                              {"chern", chern_json(d.base_chern)}}}};
}

Json model_json(const OrbifoldBundleDescriptor& d) {
    Json gens = d.reduced_generators;
    Json rels = d.reduced_relators;
    return Json{{"model", "orbifold bundle"},
                {"total_dim", d.total_dim},
                {"signature", signature_json(d.signature)},
                {"good", d.good},
                {"euler_characteristic", rational_json(d.euler_characteristic)},
                {"fundamental_group",
                 Json{{"generators", d.presentation.generators},
                      {"relators", d.presentation.relators},
                      {"reduced_generators", std::move(gens)},
                      {"reduced_relators", std::move(rels)}}},
                {"monodromy",
                 Json{{"alpha", elements_json(d.monodromy.alpha)},
                      {"beta", elements_json(d.monodromy.beta)},
                      {"gamma", elements_json(d.monodromy.gamma)}}}};
}

Json four_case_json(const FourCase& c) {
    Json j{{"case", to_string(c.tag)}};
    if (c.delta) j["delta"] = polytope_json(*c.delta);
    if (c.tag == FourCaseTag::MixedS2T2 || c.tag == FourCaseTag::FreeLagrangian)
        j["period_basis"] = vectors_json(c.period_basis);
    if (c.tag == FourCaseTag::FreeLagrangian) {
        j["chern"] = chern_json(c.chern);
        j["tau"] = elements_json(c.tau);
    }
    if (c.signature) j["signature"] = signature_json(*c.signature);
    if (c.monodromy) j["monodromy_gamma"] = elements_json(c.monodromy->gamma);
    return j;
}

}  // namespace symtorus::io
