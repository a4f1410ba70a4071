#pragma once

#include "symtorus/linalg.hpp"

#include <optional>
#include <string>

namespace symtorus {

enum class VerdictTag { Equivalent, Inequivalent, Undetermined };

std::string to_string(VerdictTag tag);

struct EquivalenceVerdict {
    VerdictTag tag = VerdictTag::Undetermined;
    std::optional<IntMatrix> witness;  ///< set for Equivalent verdicts that carry a matrix witness
    std::string separator;             ///< name of the differing invariant for Inequivalent
    std::string detail;

    static EquivalenceVerdict equivalent(std::optional<IntMatrix> witness = std::nullopt, std::string detail = {}) {
        return {VerdictTag::Equivalent, std::move(witness), {}, std::move(detail)};
    }
    static EquivalenceVerdict inequivalent(std::string separator, std::string detail = {}) {
        return {VerdictTag::Inequivalent, std::nullopt, std::move(separator), std::move(detail)};
    }
    static EquivalenceVerdict undetermined(std::string detail) {
        return {VerdictTag::Undetermined, std::nullopt, {}, std::move(detail)};
    }
};

}  // namespace symtorus
