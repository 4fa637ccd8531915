#include "ment/veins.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>

namespace ment {

namespace {

// Coding of x -> x + p/q started at p/q; `closed_right` puts the cut point 1-p/q in the 0 block.
std::string rotation_code(long p, long q, bool closed_right) {
    std::string bits;
    for (long k = 1; k <= q; ++k) {
        long r = (k * p) % q; // x = r/q, cut = (q-p)/q
        bool zero = closed_right ? (r > 0 && r <= q - p) : (r < q - p);
        bits.push_back(zero ? '0' : '1');
    }
    return bits;
}

using u64 = std::uint64_t;
using u128 = unsigned __int128;

const Int kFast = Int(1) << 62;

// Orbit arithmetic on x = num/den with den fixed: machine words when den < 2^62, else big integers.
template <class T, class W>
struct Orbit {
    T num, den;
    W wide(const T& v) const { return static_cast<W>(v); }
    int compare(const Angle& r) const {
        W lhs = wide(num) * static_cast<W>(static_cast<T>(r.den()));
        W rhs = static_cast<W>(static_cast<T>(r.num())) * wide(den);
        return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
    }
    // Compares x with a/b for small a, b.
    int compare(unsigned a, unsigned b) const {
        W lhs = wide(num) * b, rhs = wide(den) * a;
        return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
    }
    void step() { num = static_cast<T>((wide(num) * 2) % wide(den)); }
    Angle angle() const { return Angle(Rational(Int(num), Int(den))); }
};

template <class T, class W>
Angle surgery_impl(const OrbitPortrait& P, Orbit<T, W> x) {
    std::map<T, std::size_t> seen;
    std::string bits;
    while (true) {
        if (x.compare(1, 3) == 0) return from_expansion(bits, P.sigma0 + "1");
        if (x.compare(2, 3) == 0) return from_expansion(bits, P.sigma1 + "0");
        auto [it, fresh] = seen.emplace(x.num, bits.size());
        if (!fresh) return from_expansion(bits.substr(0, it->second), bits.substr(it->second));
        if (x.compare(1, 3) < 0) bits += '0';
        else if (x.compare(1, 2) < 0) bits += P.sigma0;
        else if (x.compare(2, 3) < 0) bits += P.sigma1;
        else bits += '1';
        x.step();
    }
}

template <class T, class W>
Angle surgery_inverse_impl(const OrbitPortrait& P, const Angle& phi, Orbit<T, W> x) {
    std::map<T, std::size_t> seen;
    std::string bits;
    for (std::size_t step = 0;; ++step) {
        if (x.compare(P.theta0) == 0) return from_expansion(bits, "01");
        if (x.compare(P.theta1) == 0) return from_expansion(bits, "10");
        auto [it, fresh] = seen.emplace(x.num, bits.size());
        if (!fresh) return from_expansion(bits.substr(0, it->second), bits.substr(it->second));
        std::size_t advance = 1;
        if (x.compare(P.Theta1) < 0) bits.push_back('0');
        else if (x.compare(P.Theta0) > 0) bits.push_back('1');
        else if (x.compare(P.theta0) > 0 && x.compare(P.tau) < 0) {
            bits.push_back('0');
            advance = static_cast<std::size_t>(P.q - 1);
        } else if (x.compare(P.tau) >= 0 && x.compare(P.theta1) < 0) {
            bits.push_back('1');
            advance = static_cast<std::size_t>(P.q - 1);
        } else {
            throw PreconditionError("surgery_inverse: orbit of " + to_fraction(phi) + " leaves the domain at step " +
                                    std::to_string(step) + " (" + to_fraction(x.angle()) + ")");
        }
        for (std::size_t i = 0; i < advance; ++i) x.step();
    }
}

} // namespace

OrbitPortrait orbit_portrait(long p, long q) {
    if (q < 2 || p <= 0 || p >= q || std::gcd(p, q) != 1)
        throw PreconditionError("orbit_portrait: need 0 < p < q with gcd(p, q) = 1");
    OrbitPortrait P;
    P.p = p;
    P.q = q;
    std::string c0 = rotation_code(p, q, true), c1 = rotation_code(p, q, false);
    P.theta0 = from_expansion("", c0);
    P.theta1 = from_expansion("", c1);
    P.sigma0 = c0.substr(0, q - 1);
    P.sigma1 = c1.substr(0, q - 1);
    P.tau = from_expansion(P.sigma1, "");
    P.Theta0 = from_expansion("", "1" + P.sigma0);
    P.Theta1 = from_expansion("", "0" + P.sigma1);
    P.angles = doubling_orbit(P.theta0);
    std::sort(P.angles.begin(), P.angles.end());

    std::vector<Arc> gaps;
    for (long i = 0; i < q; ++i) gaps.push_back(Arc{P.angles[i], P.angles[(i + 1) % q]});
    P.deltas.assign(q, Arc{});
    for (const Arc& g : gaps) {
        if (g.contains(P.tau)) P.deltas[1] = g;
        if (g.contains(Angle())) P.deltas[0] = g;
    }
    for (long i = 2; i < q; ++i)
        P.deltas[i] = Arc{double_angle(P.deltas[i - 1].from), double_angle(P.deltas[i - 1].to)};
    for (const Arc& d : P.deltas) P.hat_deltas.push_back(arc_shift_half(d));
    P.forbidden.assign(P.hat_deltas.begin() + 1, P.hat_deltas.begin() + (q - 1));
    return P;
}

Angle surgery(const OrbitPortrait& P, const Angle& t) {
    if (t.den() < kFast) return surgery_impl(P, Orbit<u64, u128>{static_cast<u64>(t.num()), static_cast<u64>(t.den())});
    return surgery_impl(P, Orbit<Int, Int>{t.num(), t.den()});
}

Angle surgery_inverse(const OrbitPortrait& P, const Angle& phi) {
    bool fast = phi.den() < kFast;
    for (const Angle* r : {&P.theta0, &P.theta1, &P.Theta0, &P.Theta1, &P.tau}) fast = fast && r->den() < kFast;
    if (fast)
        return surgery_inverse_impl(P, phi, Orbit<u64, u128>{static_cast<u64>(phi.num()), static_cast<u64>(phi.den())});
    return surgery_inverse_impl(P, phi, Orbit<Int, Int>{phi.num(), phi.den()});
}

Leaf vein_leaf(const OrbitPortrait& P, const Angle& real_angle) {
    return Leaf(surgery(P, real_angle), surgery(P, reflect(real_angle)));
}

Leaf vein_leaf_from_angle(const OrbitPortrait& P, const Angle& vein_angle) {
    Angle r = surgery_inverse(P, vein_angle);
    if (Rational(1, 2) < r.value()) r = reflect(r);
    return vein_leaf(P, r);
}

std::vector<Arc> vein_forbidden_arcs(const OrbitPortrait& P, const Leaf& leaf) {
    std::vector<Arc> out = P.forbidden;
    std::size_t n = static_cast<std::size_t>(P.q - 1);
    Angle a = iterate_double(leaf.a, n), b = iterate_double(leaf.b, n);
    Arc j{a, b};
    if (!j.contains(Angle())) j = Arc{b, a};
    out.push_back(j);
    return out;
}

bool vein_member_H(const OrbitPortrait& P, const Angle& t, const Leaf& leaf) {
    std::vector<Arc> arcs = vein_forbidden_arcs(P, leaf);
    for (const Angle& x : doubling_orbit(t))
        for (const Arc& a : arcs)
            if (a.contains(x)) return false;
    return true;
}

bool is_minor_leaf(const Leaf& m) {
    if (m.degenerate()) return true;
    std::vector<Leaf> images;
    std::set<std::pair<Rational, Rational>> seen;
    for (Leaf l = m; seen.emplace(l.a.value(), l.b.value()).second; l = double_leaf(l)) images.push_back(l);
    for (std::size_t i = 0; i < images.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (chords_cross(images[i], images[j])) return false;
    Rational len = leaf_length(m);
    for (std::size_t i = 1; i < images.size(); ++i)
        if (leaf_length(images[i]) < len) return false;
    // Short arc of m runs from x to y = x + len (unreduced).
    Rational x = m.a.value(), y = m.b.value();
    if (Rational(1, 2) < y - x) {
        x = m.b.value();
        y = m.a.value() + 1;
    }
    Leaf m1(Angle(x / 2), Angle(y / 2 + Rational(1, 2)));
    Leaf m2(Angle(x / 2 + Rational(1, 2)), Angle(y / 2));
    for (const Leaf& l : images)
        if (chords_cross(l, m1) || chords_cross(l, m2)) return false;
    return true;
}

} // namespace ment
