#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace ment {

using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;

// Malformed text input (CLI exit code 2).
struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Input that parses but violates an operation's precondition (exit code 3).
struct PreconditionError : std::domain_error {
    using std::domain_error::domain_error;
};

// A point of R/Z stored as a reduced rational in [0,1).
class Angle {
public:
    Angle() = default;
    Angle(long long num, long long den);
    explicit Angle(const Rational& r);

    const Rational& value() const { return v_; }
    Int num() const { return boost::multiprecision::numerator(v_); }
    Int den() const { return boost::multiprecision::denominator(v_); }
    bool is_zero() const { return v_ == 0; }

    friend bool operator==(const Angle& x, const Angle& y) { return x.v_ == y.v_; }
    friend std::strong_ordering operator<=>(const Angle& x, const Angle& y) {
        if (x.v_ < y.v_) return std::strong_ordering::less;
        if (y.v_ < x.v_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    Rational v_{0};
};

// r mod 1, in [0,1).
Rational frac(const Rational& r);

// D(θ) = 2θ mod 1.
Angle double_angle(const Angle& t);
Angle iterate_double(const Angle& t, std::size_t n);
// ℓ(θ) = 2θ for θ < 1/2, 2 - 2θ otherwise.
Rational ell(const Angle& t);
// Full tent map min(2x, 2 - 2x) on [0,1].
Rational tent(const Rational& x);
// 1 - θ mod 1.
Angle reflect(const Angle& t);
// θ + 1/2 mod 1.
Angle antipode(const Angle& t);

// Forward orbit under D up to the first repeat; `cycle_start` receives the
// index at which the periodic part begins.
std::vector<Angle> doubling_orbit(const Angle& t, std::size_t* cycle_start = nullptr);

struct BinaryExpansion {
    std::string preperiod;
    std::string period;
    friend bool operator==(const BinaryExpansion&, const BinaryExpansion&) = default;
};

BinaryExpansion expansion(const Angle& t);
// Accepts non-canonical words too (an all-ones period evaluates to 1 ≡ 0).
Angle from_expansion(const std::string& preperiod, const std::string& period);
inline Angle from_expansion(const BinaryExpansion& e) { return from_expansion(e.preperiod, e.period); }
// Multiplicative order of 2 modulo an odd m (1 for m = 1).
std::size_t order_of_two(const Int& m);

Angle parse_angle(const std::string& text);
std::string to_fraction(const Angle& t);
std::string to_binary(const Angle& t);

// Chord of the unit circle; endpoints sorted ascending.
struct Leaf {
    Angle a, b;
    Leaf() = default;
    Leaf(const Angle& x, const Angle& y);
    bool degenerate() const { return a == b; }
    friend bool operator==(const Leaf&, const Leaf&) = default;
};

Rational leaf_length(const Leaf& l);
Leaf double_leaf(const Leaf& l);
bool chords_cross(const Leaf& l1, const Leaf& l2);
// True iff l1 separates l2 from `root`; throws PreconditionError if the chords cross.
bool leaf_separates(const Leaf& l1, const Leaf& l2, const Angle& root);

// Open arc running counterclockwise from `from` to `to`; from == to is empty.
struct Arc {
    Angle from, to;
    bool empty() const { return from == to; }
    bool contains(const Angle& x) const;
    bool contains_zero() const { return to < from; }
    Rational length() const;
    friend bool operator==(const Arc&, const Arc&) = default;
};

Arc arc_shift_half(const Arc& a);
std::string to_string(const Arc& a);

} // namespace ment
