#pragma once

#include "ment/angles.hpp"

#include <compare>
#include <string>
#include <vector>

namespace ment {

// Run-length code (a_1, a_2, ...). An empty period means the string is
// finite; `infinite_tail` appends one final block of infinite length, which
// is how dyadic angles end.
struct RunString {
    std::vector<long> preperiod;
    std::vector<long> period;
    bool infinite_tail = false;

    bool finite() const { return period.empty() && !infinite_tail; }
    std::size_t size() const { return preperiod.size(); }
    friend bool operator==(const RunString&, const RunString&) = default;
};

RunString finite_runs(std::vector<long> entries);
RunString periodic_runs(std::vector<long> pre, std::vector<long> per);

// Requires θ != 0.
RunString runlength(const Angle& t);
// Representative in (0,1/2] whose expansion starts with a block of zeros.
Angle angle_of(const RunString& s);
// Angle of the periodic string S̄ for finite S.
Angle periodic_angle(const std::vector<long>& s);

std::strong_ordering alt_lex_compare(const RunString& s, const RunString& t);
bool double_lt(const RunString& s, const RunString& t);
bool is_extremal(const RunString& s);
bool is_dominant(const RunString& s);
std::vector<RunString> dominant_approximations(const RunString& s, std::size_t count);

// Dyadic of shortest expansion in the open interval (lo, hi).
Angle pseudocenter(const Angle& lo, const Angle& hi);
// Number of bits in the finite expansion of a dyadic angle (0 for 0).
std::size_t dyadic_length(const Angle& t);

RunString parse_runstring(const std::string& text);
std::string to_string(const RunString& s);

} // namespace ment
