#include "symtorus/verdict.hpp"

namespace symtorus {

std::string to_string(VerdictTag tag) {
    switch (tag) {
        case VerdictTag::Equivalent: return "equivalent";
        case VerdictTag::Inequivalent: return "inequivalent";
        case VerdictTag::Undetermined: return "undetermined";
    }
    return "undetermined";
}

}  // namespace symtorus
