#include "beurling/status.hpp"

#include <algorithm>

namespace beurling {

const char *to_string(CheckStatus status)
{
    switch (status) {
    case CheckStatus::verified:
        return "verified";
    case CheckStatus::failed:
        return "failed";
    case CheckStatus::inconclusive:
        return "inconclusive";
    case CheckStatus::budget_exceeded:
        return "budget-exceeded";
    }
    return "failed";
}

CheckStatus status_from_sign(Sign sign, Sign wanted)
{
    if (sign == Sign::inconclusive) {
        return CheckStatus::inconclusive;
    }
    return sign == wanted ? CheckStatus::verified : CheckStatus::failed;
}

CheckStatus combine(CheckStatus a, CheckStatus b)
{
    const auto rank = [](CheckStatus s) {
        switch (s) {
        case CheckStatus::verified:
            return 0;
        case CheckStatus::inconclusive:
        case CheckStatus::budget_exceeded:
            return 1;
        case CheckStatus::failed:
            return 2;
        }
        return 2;
    };
    return rank(b) > rank(a) ? b : a;
}

} // namespace beurling
