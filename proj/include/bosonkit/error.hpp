#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bosonkit {

enum class errc {
    unsupported,          // r < s, or a parameter family the routine does not cover
    out_of_range,         // index outside its admissible range
    malformed,            // structure of an input violates its invariant
    non_integer_result,   // an exact sum that must be integral was not
    precision_exhausted,  // requested error bound not reachable
    divergent,            // series does not converge
    domain,               // argument outside the function's domain
    unsupported_moment,   // n = 0 moment of a measure whose mass is not 1
    unsupported_family,   // no known weight function for (r, s)
    inconclusive,         // heuristic could not decide
};

constexpr std::string_view to_string(errc code) noexcept
{
    switch (code) {
    case errc::unsupported: return "UNSUPPORTED";
    case errc::out_of_range: return "OUT_OF_RANGE";
    case errc::malformed: return "MALFORMED";
    case errc::non_integer_result: return "NON_INTEGER_RESULT";
    case errc::precision_exhausted: return "PRECISION_EXHAUSTED";
    case errc::divergent: return "DIVERGENT";
    case errc::domain: return "DOMAIN";
    case errc::unsupported_moment: return "UNSUPPORTED_MOMENT";
    case errc::unsupported_family: return "UNSUPPORTED_FAMILY";
    case errc::inconclusive: return "INCONCLUSIVE";
    }
    return "UNKNOWN";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
    {
    }

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

} // namespace bosonkit
