#pragma once

#include "beurling/expsum.hpp"

#include <string>

namespace beurling {

enum class CheckStatus { verified, failed, inconclusive, budget_exceeded };
const char *to_string(CheckStatus status);
CheckStatus status_from_sign(Sign sign, Sign wanted);
// Worse of the two: failed over inconclusive/budget-exceeded over verified.
CheckStatus combine(CheckStatus a, CheckStatus b);

struct CheckEntry {
    std::string name;
    CheckStatus status = CheckStatus::verified;
    std::string value;  // exact
    std::string margin; // exact, positive when the check holds strictly
};

} // namespace beurling
