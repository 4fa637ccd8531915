#include "ment/angles.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>

namespace ment {

Rational frac(const Rational& r) {
    Int n = boost::multiprecision::numerator(r);
    Int d = boost::multiprecision::denominator(r);
    Int m = n % d;
    if (m < 0) m += d;
    return Rational(m, d);
}

Angle::Angle(long long num, long long den) {
    if (den == 0) throw ParseError("zero denominator");
    v_ = frac(Rational(num, den));
}

Angle::Angle(const Rational& r) : v_(frac(r)) {}

Angle double_angle(const Angle& t) { return Angle(2 * t.value()); }

Angle iterate_double(const Angle& t, std::size_t n) {
    Angle x = t;
    for (std::size_t i = 0; i < n; ++i) x = double_angle(x);
    return x;
}

Rational ell(const Angle& t) {
    const Rational& v = t.value();
    return v < Rational(1, 2) ? 2 * v : 2 - 2 * v;
}

Rational tent(const Rational& x) {
    Rational a = 2 * x, b = 2 - 2 * x;
    return a < b ? a : b;
}

Angle reflect(const Angle& t) { return Angle(1 - t.value()); }

Angle antipode(const Angle& t) { return Angle(t.value() + Rational(1, 2)); }

std::vector<Angle> doubling_orbit(const Angle& t, std::size_t* cycle_start) {
    // The denominator is fixed along the orbit, so only numerators are tracked.
    const Int& den = t.den();
    std::map<Int, std::size_t> seen;
    std::vector<Angle> out;
    Int num = t.num();
    while (true) {
        auto [it, fresh] = seen.emplace(num, out.size());
        if (!fresh) {
            if (cycle_start) *cycle_start = it->second;
            return out;
        }
        out.push_back(Angle(Rational(num, den)));
        num <<= 1;
        if (num >= den) num -= den;
    }
}

std::size_t order_of_two(const Int& m) {
    if (m == 1) return 1;
    if (m < (Int(1) << 62)) {
        auto mm = static_cast<std::uint64_t>(m);
        std::uint64_t r = 2 % mm;
        std::size_t k = 1;
        while (r != 1) {
            r = (r * 2) % mm;
            ++k;
        }
        return k;
    }
    Int r = 2 % m;
    std::size_t k = 1;
    while (r != 1) {
        r = (r * 2) % m;
        ++k;
    }
    return k;
}

BinaryExpansion expansion(const Angle& t) {
    Int num = t.num(), den = t.den();
    std::size_t v = 0;
    Int odd = den;
    while ((odd & 1) == 0) {
        odd >>= 1;
        ++v;
    }
    std::size_t per = odd == 1 ? 1 : order_of_two(odd);
    BinaryExpansion e;
    e.preperiod.reserve(v);
    e.period.reserve(per);
    if (den < (Int(1) << 62)) {
        auto d = static_cast<std::uint64_t>(den);
        auto r = static_cast<std::uint64_t>(num);
        for (std::size_t i = 0; i < v + per; ++i) {
            r <<= 1;
            char bit = '0';
            if (r >= d) {
                r -= d;
                bit = '1';
            }
            (i < v ? e.preperiod : e.period).push_back(bit);
        }
        return e;
    }
    Int r = num;
    for (std::size_t i = 0; i < v + per; ++i) {
        r <<= 1;
        char bit = '0';
        if (r >= den) {
            r -= den;
            bit = '1';
        }
        (i < v ? e.preperiod : e.period).push_back(bit);
    }
    return e;
}

namespace {

Int word_value(const std::string& w) {
    std::vector<unsigned char> bits(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) bits[i] = w[i] == '1' ? 1 : 0;
    Int x = 0;
    if (!bits.empty()) boost::multiprecision::import_bits(x, bits.begin(), bits.end(), 1);
    return x;
}

} // namespace

Angle from_expansion(const std::string& preperiod, const std::string& period) {
    Int two_pre = Int(1) << preperiod.size();
    Rational v(word_value(preperiod), two_pre);
    if (!period.empty()) {
        Int mod = (Int(1) << period.size()) - 1;
        v += Rational(word_value(period), mod * two_pre);
    }
    return Angle(v);
}

namespace {

Int parse_uint(const std::string& s, const std::string& whole) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
        throw ParseError("malformed angle '" + whole + "'");
    return Int(s);
}

bool is_bits(const std::string& s) {
    return std::all_of(s.begin(), s.end(), [](char c) { return c == '0' || c == '1'; });
}

} // namespace

Angle parse_angle(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.rfind("0.", 0) == 0) {
        std::string body = s.substr(2);
        std::string pre = body, per;
        auto open = body.find('(');
        if (open != std::string::npos) {
            if (body.back() != ')' || body.find('(', open + 1) != std::string::npos)
                throw ParseError("malformed binary angle '" + text + "'");
            pre = body.substr(0, open);
            per = body.substr(open + 1, body.size() - open - 2);
            if (per.empty()) throw ParseError("empty period in '" + text + "'");
        }
        if (!is_bits(pre) || !is_bits(per) || body.find(')') != (open == std::string::npos ? std::string::npos : body.size() - 1))
            throw ParseError("malformed binary angle '" + text + "'");
        return from_expansion(pre, per);
    }
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        Int n = parse_uint(s, text);
        if (n != 0) throw ParseError("angle '" + text + "' outside [0,1)");
        return Angle();
    }
    Int p = parse_uint(s.substr(0, slash), text);
    Int q = parse_uint(s.substr(slash + 1), text);
    if (q == 0) throw ParseError("zero denominator in '" + text + "'");
    if (p >= q) throw ParseError("angle '" + text + "' outside [0,1)");
    return Angle(Rational(p, q));
}

std::string to_fraction(const Angle& t) {
    if (t.is_zero()) return "0";
    return t.num().str() + "/" + t.den().str();
}

std::string to_binary(const Angle& t) {
    BinaryExpansion e = expansion(t);
    return "0." + e.preperiod + "(" + e.period + ")";
}

Leaf::Leaf(const Angle& x, const Angle& y) : a(std::min(x, y)), b(std::max(x, y)) {}

Rational leaf_length(const Leaf& l) {
    Rational d = l.b.value() - l.a.value();
    return d <= Rational(1, 2) ? d : 1 - d;
}

Leaf double_leaf(const Leaf& l) { return Leaf(double_angle(l.a), double_angle(l.b)); }

bool chords_cross(const Leaf& l1, const Leaf& l2) {
    if (l1.degenerate() || l2.degenerate()) return false;
    if (l1.a == l2.a || l1.a == l2.b || l1.b == l2.a || l1.b == l2.b) return false;
    auto inside = [&](const Angle& x) { return l1.a < x && x < l1.b; };
    return inside(l2.a) != inside(l2.b);
}

bool leaf_separates(const Leaf& l1, const Leaf& l2, const Angle& root) {
    if (chords_cross(l1, l2)) throw PreconditionError("unlinked leaves: chords cross");
    if (l1.degenerate() || root == l1.a || root == l1.b) return false;
    auto inside = [&](const Angle& x) { return l1.a < x && x < l1.b; };
    for (const Angle& x : {l2.a, l2.b}) {
        if (x == l1.a || x == l1.b) continue;
        return inside(x) != inside(root);
    }
    return false;
}

bool Arc::contains(const Angle& x) const {
    if (from == to) return false;
    if (from < to) return from < x && x < to;
    return x > from || x < to;
}

Rational Arc::length() const { return frac(to.value() - from.value()); }

Arc arc_shift_half(const Arc& a) { return Arc{antipode(a.from), antipode(a.to)}; }

std::string to_string(const Arc& a) { return "(" + to_fraction(a.from) + "," + to_fraction(a.to) + ")"; }

} // namespace ment
