#pragma once

// JSON record files (schema version 1). Exact scalars are "p/q" strings; matrices are arrays
// of rows. Unknown fields are rejected.

#include "symtorus/classify4.hpp"
#include "symtorus/coisotropic.hpp"
#include "symtorus/symplectic_orbit.hpp"

#include "json.hpp"

#include <stdexcept>
#include <string>
#include <variant>

namespace symtorus::io {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Input that does not match the schema; `where` is a JSON-pointer-like location.
class SchemaError : public std::runtime_error {
public:
    SchemaError(std::string where, const std::string& what)
        : std::runtime_error(where + ": " + what), where_(std::move(where)), detail_(what) {}
    const std::string& where() const { return where_; }
    const std::string& detail() const { return detail_; }

private:
    std::string where_;
    std::string detail_;
};

using RecordFile = std::variant<CoisotropicInvariants, SymplecticOrbitInvariants, ActionDescriptor4>;

Json to_json(const CoisotropicInvariants& inv);
Json to_json(const SymplecticOrbitInvariants& inv);
Json to_json(const ActionDescriptor4& d);
Json to_json(const RecordFile& r);

RecordFile parse_record(const Json& j);
RecordFile parse_record_text(const std::string& text);

Json rational_json(const Rational& q);
Json vector_json(const RatVector& v);
Json matrix_json(const IntMatrix& m);
Json torus_element_json(const TorusElement& t);
Json polytope_json(const Polytope& p);
Json signature_json(const FuchsianSignature& s);
Json verdict_json(const EquivalenceVerdict& v);
Json model_json(const ModelDescriptor& d);
Json model_json(const OrbifoldBundleDescriptor& d);
Json four_case_json(const FourCase& c);

}  // namespace symtorus::io
