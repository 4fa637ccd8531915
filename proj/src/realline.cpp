#include "ment/realline.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>

namespace ment {

SetKind parse_set_kind(const std::string& s) {
    if (s == "S" || s == "spine") return SetKind::Spine;
    if (s == "H" || s == "htree") return SetKind::Htree;
    if (s == "R" || s == "real") return SetKind::Real;
    if (s == "P" || s == "param") return SetKind::Param;
    throw ParseError("unknown set kind '" + s + "' (expected S, H, R or P)");
}

std::string to_string(SetKind k) {
    switch (k) {
    case SetKind::Spine: return "S";
    case SetKind::Htree: return "H";
    case SetKind::Real: return "R";
    case SetKind::Param: return "P";
    }
    return "?";
}

bool member(SetKind kind, const Angle& t, const Angle& tc) {
    if (kind != SetKind::Real && Rational(1, 2) < tc.value())
        throw PreconditionError("member: characteristic angle must lie in [0, 1/2]");
    std::size_t cycle = 0;
    std::vector<Angle> orbit = doubling_orbit(t, &cycle);
    switch (kind) {
    case SetKind::Spine: {
        Rational lc = ell(tc);
        // n >= 1: every orbit point after the first, plus the first if it recurs.
        for (std::size_t i = (cycle == 0 ? 0 : 1); i < orbit.size(); ++i)
            if (ell(orbit[i]) > lc) return false;
        return true;
    }
    case SetKind::Htree: {
        Rational Lc = ell(double_angle(tc));
        return std::all_of(orbit.begin(), orbit.end(), [&](const Angle& x) { return ell(x) >= Lc; });
    }
    case SetKind::Real: {
        Rational l = ell(t);
        return std::all_of(orbit.begin(), orbit.end(), [&](const Angle& x) { return ell(x) <= l; });
    }
    case SetKind::Param:
        return (t <= tc || t >= reflect(tc)) && member(SetKind::Real, t);
    }
    return false;
}

namespace {

std::string complement(const std::string& w) {
    std::string out = w;
    for (char& c : out) c = c == '0' ? '1' : '0';
    return out;
}

} // namespace

Window next_window(const Angle& lo, const Angle& hi) {
    if (!(lo < hi) || Rational(1, 2) < hi.value())
        throw PreconditionError("next_window: need 0 <= lo < hi <= 1/2");
    Angle pc = pseudocenter(lo, hi);
    std::string bits = expansion(pc).preperiod;
    std::string s = bits.substr(0, bits.size() - 1);
    if (s.empty() || s.find('1') == std::string::npos) s = "0";
    Angle root = from_expansion("", s);
    Angle twin = from_expansion("", s + complement(s));
    Window w;
    w.lo = std::min(root, twin);
    w.hi = std::max(root, twin);
    w.sigma0 = expansion(root).period;
    w.period = w.sigma0.size();
    w.pseudocenter = pc;
    if (w.lo < lo || hi < w.hi)
        throw PreconditionError("next_window: degenerate branch, window (" + to_fraction(w.lo) + ", " +
                                to_fraction(w.hi) + ") leaves the interval");
    return w;
}

std::vector<Window> enumerate_windows(std::size_t depth) {
    std::vector<Window> out;
    std::vector<std::pair<Angle, Angle>> gaps{{Angle(), Angle(1, 2)}};
    for (std::size_t d = 0; d < depth && !gaps.empty(); ++d) {
        std::vector<std::pair<Angle, Angle>> next;
        for (const auto& [a, b] : gaps) {
            Window w = next_window(a, b);
            out.push_back(w);
            // Gaps closed off by a shared endpoint (period doubling) are dropped.
            if (a < w.lo) next.emplace_back(a, w.lo);
            if (w.hi < b) next.emplace_back(w.hi, b);
        }
        gaps = std::move(next);
    }
    std::sort(out.begin(), out.end(), [](const Window& x, const Window& y) { return x.lo < y.lo; });
    return out;
}

Tuning tuning_of(const Window& w) { return Tuning{w.sigma0, complement(w.sigma0)}; }

Tuning basilica_tuning() { return Tuning{"01", "10"}; }

Angle tune(const Tuning& w, const Angle& t) {
    if (w.sigma0.size() != w.sigma1.size() || w.sigma0.empty())
        throw PreconditionError("tune: substitution words must be nonempty and of equal length");
    BinaryExpansion e = expansion(t);
    auto sub = [&](const std::string& bits) {
        std::string out;
        for (char c : bits) out += c == '0' ? w.sigma0 : w.sigma1;
        return out;
    };
    return from_expansion(sub(e.preperiod), sub(e.period));
}

Angle tuning_alpha(const Tuning& w) { return from_expansion("", w.sigma0); }

Angle tuning_omega(const Tuning& w) { return from_expansion(w.sigma0, w.sigma1); }

Angle feigenbaum_iterate(std::size_t n) {
    Angle t(1, 2);
    Tuning b = basilica_tuning();
    for (std::size_t i = 0; i < n; ++i) t = tune(b, t);
    return Rational(1, 2) < t.value() ? reflect(t) : t;
}

std::size_t agreement_bits(const Angle& x, const Angle& y, std::size_t cap) {
    Rational a = x.value(), b = y.value();
    std::size_t k = 0;
    while (k < cap) {
        a *= 2;
        b *= 2;
        bool ba = a >= 1, bb = b >= 1;
        if (ba != bb) break;
        if (ba) {
            a -= 1;
            b -= 1;
        }
        ++k;
        if (a == b) return cap;
    }
    return k;
}

Angle feigenbaum_angle(std::size_t tolerance_bits, std::size_t* iterations) {
    if (tolerance_bits < 1) throw PreconditionError("feigenbaum_angle: tolerance_bits must be >= 1");
    Angle prev = feigenbaum_iterate(0);
    for (std::size_t n = 1;; ++n) {
        Angle cur = feigenbaum_iterate(n);
        if (agreement_bits(prev, cur, tolerance_bits) >= tolerance_bits) {
            if (iterations) *iterations = n;
            return cur;
        }
        prev = cur;
    }
}

Angle embed_F(const Angle& t, const RunString& s) {
    if (!s.finite() || s.preperiod.empty() || !is_dominant(s))
        throw PreconditionError("embed_F: S must be a dominant string");
    if (t.is_zero()) throw PreconditionError("embed_F: θ must lie in (0,1)");
    std::string bits = "0";
    char b = '1';
    long n = 0;
    for (long r : s.preperiod) {
        bits.append(static_cast<std::size_t>(r), b);
        b = b == '1' ? '0' : '1';
        n += r;
    }
    Rational sv = from_expansion(bits, "").value();
    Rational scale(1, Int(1) << (n + 1));
    if (t.value() < Rational(1, 2)) return Angle(sv + (1 - t.value()) * scale);
    return Angle(1 - sv - t.value() * scale);
}

Angle dominant_parameter(const RunString& s) {
    if (!s.finite() || s.preperiod.empty()) throw PreconditionError("dominant_parameter: needs a finite string");
    return Angle((1 - periodic_angle(s.preperiod).value()) / 2);
}

ParamDimensionEstimate param_dimension_estimate(const Angle& tc, std::size_t depth) {
    if (depth < 2) throw PreconditionError("param_dimension_estimate: depth must be >= 2");
    if (tc.is_zero() || Rational(1, 2) < tc.value() || !member(SetKind::Real, tc))
        throw PreconditionError("param_dimension_estimate: θ_c must be a real parameter angle in (0, 1/2]");
    std::map<std::size_t, std::size_t> count;
    for (const Window& w : enumerate_windows(depth))
        if (w.hi <= tc && w.period <= depth) ++count[w.period];
    ParamDimensionEstimate out;
    for (const auto& [p, c] : count) out.counts.emplace_back(p, c);

    // Least-squares slope of log2(n W_n) over the last six complete periods.
    std::vector<double> xs, ys;
    for (std::size_t n = std::max<std::size_t>(2, depth > 5 ? depth - 5 : 2); n <= depth; ++n) {
        auto it = count.find(n);
        if (it == count.end()) continue;
        xs.push_back(static_cast<double>(n));
        ys.push_back(std::log2(static_cast<double>(n * it->second)));
    }
    if (xs.size() < 3) return out;
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= static_cast<double>(xs.size());
    my /= static_cast<double>(xs.size());
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    out.estimate = std::clamp(sxy / sxx, 0.0, 1.0);
    return out;
}

} // namespace ment
