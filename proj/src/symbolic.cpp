#include "ment/symbolic.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <sstream>

namespace ment {

namespace {

constexpr long kInf = std::numeric_limits<long>::max();
constexpr long kEnd = -1;

// Entry k (0-based); kInf for the infinite tail block, kEnd past the end.
long at(const RunString& s, std::size_t k) {
    if (k < s.preperiod.size()) return s.preperiod[k];
    if (!s.period.empty()) return s.period[(k - s.preperiod.size()) % s.period.size()];
    if (s.infinite_tail && k == s.preperiod.size()) return kInf;
    return kEnd;
}

std::size_t horizon(const RunString& s, const RunString& t) {
    std::size_t ps = std::max<std::size_t>(1, s.period.size());
    std::size_t pt = std::max<std::size_t>(1, t.period.size());
    return std::max(s.preperiod.size(), t.preperiod.size()) + std::lcm(ps, pt) + 1;
}

// Verdict at a differing 0-based position k: odd 1-based positions reverse.
std::strong_ordering decide(std::size_t k, long a, long b) {
    bool odd = (k % 2) == 0;
    bool less = odd ? a > b : a < b;
    return less ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::vector<long> primitive_root(const std::vector<long>& w) {
    std::size_t n = w.size();
    for (std::size_t d = 1; d < n; ++d) {
        if (n % d) continue;
        bool ok = true;
        for (std::size_t i = d; i < n && ok; ++i) ok = w[i] == w[i - d];
        if (ok) return std::vector<long>(w.begin(), w.begin() + static_cast<long>(d));
    }
    return w;
}

std::vector<long> power(const std::vector<long>& s, std::size_t n) {
    std::vector<long> out;
    for (std::size_t i = 0; i < n; ++i) out.insert(out.end(), s.begin(), s.end());
    return out;
}

std::string bits_of_runs(const std::vector<long>& runs, char first) {
    std::string out;
    char b = first;
    for (long r : runs) {
        out.append(static_cast<std::size_t>(r), b);
        b = b == '0' ? '1' : '0';
    }
    return out;
}

} // namespace

RunString finite_runs(std::vector<long> entries) {
    RunString s;
    s.preperiod = std::move(entries);
    return s;
}

RunString periodic_runs(std::vector<long> pre, std::vector<long> per) {
    RunString s;
    s.preperiod = std::move(pre);
    s.period = std::move(per);
    return s;
}

RunString runlength(const Angle& t) {
    if (t.is_zero()) throw PreconditionError("runlength: zero angle has no runs");
    BinaryExpansion e = expansion(t);
    RunString out;
    auto runs_of = [](const std::string& bits, std::size_t from, std::size_t to) {
        std::vector<long> r;
        for (std::size_t i = from; i < to; ++i) {
            if (i == from || bits[i] != bits[i - 1]) r.push_back(0);
            ++r.back();
        }
        return r;
    };
    if (e.period == "0") {
        out.preperiod = runs_of(e.preperiod, 0, e.preperiod.size());
        out.infinite_tail = true;
        return out;
    }
    std::string bits = e.preperiod + e.period + e.period + e.period;
    std::size_t pre = e.preperiod.size(), per = e.period.size();
    // First block boundary strictly inside the periodic part.
    std::size_t b = pre + 1;
    while (bits[b] == bits[b - 1]) ++b;
    out.preperiod = runs_of(bits, 0, b);
    // b - 1 is periodic too, so b + per is again a block boundary.
    out.period = primitive_root(runs_of(bits, b, b + per));
    while (!out.preperiod.empty() && out.preperiod.back() == out.period.back()) {
        std::rotate(out.period.rbegin(), out.period.rbegin() + 1, out.period.rend());
        out.preperiod.pop_back();
    }
    return out;
}

Angle angle_of(const RunString& s) {
    std::string pre = bits_of_runs(s.preperiod, '0');
    char next = (s.preperiod.size() % 2 == 0) ? '0' : '1';
    if (s.infinite_tail) return from_expansion(pre, std::string(1, next));
    if (s.period.empty()) return from_expansion(pre, "");
    std::string per = bits_of_runs(s.period, next);
    if (s.period.size() % 2) per += bits_of_runs(s.period, next == '0' ? '1' : '0');
    return from_expansion(pre, per);
}

Angle periodic_angle(const std::vector<long>& s) { return angle_of(periodic_runs({}, s)); }

std::strong_ordering alt_lex_compare(const RunString& s, const RunString& t) {
    std::size_t n = horizon(s, t);
    for (std::size_t k = 0; k < n; ++k) {
        long a = at(s, k), b = at(t, k);
        if (a == kEnd && b == kEnd) return std::strong_ordering::equal;
        if (a == kEnd || b == kEnd)
            throw PreconditionError("alt_lex_compare: finite strings of unequal length");
        if (a != b) return decide(k, a, b);
    }
    return std::strong_ordering::equal;
}

bool double_lt(const RunString& s, const RunString& t) {
    std::size_t n = horizon(s, t);
    for (std::size_t k = 0; k < n; ++k) {
        long a = at(s, k), b = at(t, k);
        if (a == kEnd || b == kEnd) return false;
        if (a != b) return decide(k, a, b) == std::strong_ordering::less;
    }
    return false;
}

bool is_extremal(const RunString& s) {
    if (!s.finite() || s.preperiod.empty()) throw PreconditionError("is_extremal: needs a finite nonempty string");
    const auto& w = s.preperiod;
    for (std::size_t k = 1; k < w.size(); ++k) {
        std::vector<long> rot(w.begin() + static_cast<long>(k), w.end());
        rot.insert(rot.end(), w.begin(), w.begin() + static_cast<long>(k));
        if (alt_lex_compare(s, finite_runs(rot)) != std::strong_ordering::less) return false;
    }
    return true;
}

bool is_dominant(const RunString& s) {
    if (!s.finite() || s.preperiod.empty()) throw PreconditionError("is_dominant: needs a finite nonempty string");
    const auto& w = s.preperiod;
    if (w.size() % 2) return false;
    for (std::size_t k = 1; k < w.size(); ++k) {
        RunString y = finite_runs(std::vector<long>(w.begin() + static_cast<long>(k), w.end()));
        if (!double_lt(s, y)) return false;
    }
    return true;
}

std::vector<RunString> dominant_approximations(const RunString& s, std::size_t count) {
    if (!s.finite() || s.preperiod.empty() || s.preperiod.size() % 2 || !is_extremal(s))
        throw PreconditionError("dominant_approximations: input must be extremal of even length");
    const auto& w = s.preperiod;

    // Small dominant strings T with S << T, shortest first.
    std::vector<std::vector<long>> helpers;
    for (std::size_t len = 2; len <= 4; len += 2) {
        std::vector<long> v(len, 1);
        while (true) {
            if (is_dominant(finite_runs(v)) && double_lt(s, finite_runs(v))) helpers.push_back(v);
            std::size_t i = 0;
            while (i < len && v[i] == 3) v[i++] = 1;
            if (i == len) break;
            ++v[i];
        }
    }

    std::vector<RunString> out;
    for (std::size_t n = 1; out.size() < count && n <= count + 8; ++n) {
        std::vector<std::vector<long>> candidates;
        candidates.push_back(power(w, n));
        candidates.back().insert(candidates.back().end(), {1, 1});
        for (const auto& t : helpers)
            for (std::size_t m = 1; m <= 2; ++m) {
                auto c = power(w, n);
                auto tm = power(t, m);
                c.insert(c.end(), tm.begin(), tm.end());
                candidates.push_back(c);
            }
        for (std::size_t m = 2; m <= 3; ++m) {
            auto c = power(w, n);
            c.insert(c.end(), 2 * m, 1L);
            candidates.push_back(c);
        }
        for (const auto& c : candidates) {
            RunString r = finite_runs(c);
            if (is_dominant(r)) {
                out.push_back(r);
                break;
            }
        }
    }
    if (out.size() < count)
        throw PreconditionError("dominant_approximations: no dominant strings of the forms S^n 11, S^n T^m, S^n 1^2m for " +
                                to_string(s));
    return out;
}

std::size_t dyadic_length(const Angle& t) {
    Int d = t.den();
    std::size_t L = 0;
    while (d > 1) {
        if ((d & 1) != 0) throw PreconditionError("dyadic_length: not a dyadic angle");
        d >>= 1;
        ++L;
    }
    return L;
}

Angle pseudocenter(const Angle& lo, const Angle& hi) {
    if (!(lo < hi)) throw PreconditionError("pseudocenter: empty interval (" + to_fraction(lo) + ", " + to_fraction(hi) + ")");
    for (std::size_t L = 1;; ++L) {
        Int scale = Int(1) << L;
        Rational scaled = lo.value() * scale;
        Int k = boost::multiprecision::numerator(scaled) / boost::multiprecision::denominator(scaled) + 1;
        Rational x(k, scale);
        if (x < hi.value()) return Angle(x);
    }
}

RunString parse_runstring(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    bool periodic = !s.empty() && s.back() == '*';
    if (periodic) s.pop_back();
    if (s.size() < 2 || s.front() != '(' || s.back() != ')') throw ParseError("malformed run string '" + text + "'");
    s = s.substr(1, s.size() - 2);
    auto bar = s.find('|');
    auto parse_list = [&](const std::string& body, bool allow_inf, bool* saw_inf) {
        std::vector<long> v;
        if (body.empty()) return v;
        std::stringstream ss(body);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (allow_inf && item == "inf") {
                if (saw_inf) *saw_inf = true;
                continue;
            }
            if (saw_inf && *saw_inf) throw ParseError("'inf' must be the last entry in '" + text + "'");
            if (item.empty() || item.size() > 12 ||
                !std::all_of(item.begin(), item.end(), [](unsigned char c) { return std::isdigit(c); }))
                throw ParseError("malformed run string '" + text + "'");
            long x = std::stol(item);
            if (x < 1) throw ParseError("run lengths must be positive in '" + text + "'");
            v.push_back(x);
        }
        return v;
    };
    RunString r;
    if (periodic) {
        if (bar != std::string::npos) {
            r.preperiod = parse_list(s.substr(0, bar), false, nullptr);
            r.period = parse_list(s.substr(bar + 1), false, nullptr);
        } else {
            r.period = parse_list(s, false, nullptr);
        }
        if (r.period.empty()) throw ParseError("empty period in '" + text + "'");
    } else {
        if (bar != std::string::npos) throw ParseError("'|' requires a periodic string in '" + text + "'");
        bool inf = false;
        r.preperiod = parse_list(s, true, &inf);
        r.infinite_tail = inf;
        if (r.preperiod.empty() && !inf) throw ParseError("empty run string '" + text + "'");
    }
    return r;
}

std::string to_string(const RunString& s) {
    auto join = [](const std::vector<long>& v) {
        std::string out;
        for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
        return out;
    };
    if (!s.period.empty()) {
        if (s.preperiod.empty()) return "(" + join(s.period) + ")*";
        return "(" + join(s.preperiod) + "|" + join(s.period) + ")*";
    }
    std::string body = join(s.preperiod);
    if (s.infinite_tail) body += std::string(body.empty() ? "" : ",") + "inf";
    return "(" + body + ")";
}

} // namespace ment
