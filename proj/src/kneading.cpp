#include "ment/kneading.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>

namespace ment {

namespace {

struct Symbol {
    int s;
    bool boundary;
};

Symbol classify(const OrbitPortrait& P, const Angle& x, const Leaf& leaf) {
    if (std::binary_search(P.angles.begin(), P.angles.end(), x)) return {kAlpha, false};
    const Rational half(1, 2);
    for (const Angle& end : {leaf.a, leaf.b})
        if (x == Angle(end.value() / 2) || x == Angle(end.value() / 2 + half)) return {kCritical, false};
    for (long i = 1; i < P.q; ++i)
        if (P.deltas[i].contains(x)) return {static_cast<int>(i + 1), false};
    Angle t2(P.tau.value() / 2), t2h(P.tau.value() / 2 + half);
    if (Arc{t2h, t2}.contains(x)) return {0, false};
    // Right limits at the two split points.
    if (x == t2) return {1, true};
    if (x == t2h) return {0, true};
    return {1, false};
}

// (ε, χ̂_0, χ_2) per symbol.
std::array<int, 3> sign_table(int s, int q) {
    if (s == 0 || s == kCritical) return {1, 0, 0};
    if (s == 1) return {-1, 1, 0};
    if (s == kAlpha) return {1, 1, 1};
    if (s == q) return {-1, 1, 0};
    return {1, 1, 1};
}

} // namespace

std::string symbol_name(int s) {
    if (s == kAlpha) return "alpha";
    if (s == kCritical) return "C";
    return "I" + std::to_string(s);
}

KneadingData kneading_data(const OrbitPortrait& P, const Leaf& leaf, bool allow_periodic) {
    KneadingData k;
    k.q = static_cast<int>(P.q);
    std::map<Rational, std::size_t> seen;
    Angle x = leaf.a;
    while (true) {
        auto it = seen.find(x.value());
        if (it != seen.end()) {
            k.preperiod = it->second;
            k.period = k.itinerary.size() - it->second;
            break;
        }
        seen.emplace(x.value(), k.itinerary.size());
        Symbol s = classify(P, x, leaf);
        k.itinerary.push_back(s.s);
        k.boundary_hit = k.boundary_hit || s.boundary;
        if (s.s == kCritical) k.periodic_critical = true;
        if (s.s == kAlpha) {
            k.preperiod = k.itinerary.size() - 1;
            k.period = 1;
            break;
        }
        x = double_angle(x);
    }
    if (k.periodic_critical && !allow_periodic)
        throw PreconditionError("kneading_data: critical point of " + to_fraction(leaf.a) +
                                " is periodic; use the automaton or the window root");
    k.eta.push_back(1);
    for (int s : k.itinerary) {
        auto v = sign_table(s, k.q);
        k.epsilon.push_back(v[0]);
        k.chi0hat.push_back(v[1]);
        k.chi2.push_back(v[2]);
        k.eta.push_back(k.eta.back() * v[0]);
    }
    return k;
}

double kneading_determinant(const KneadingData& k, double t) {
    std::size_t n = k.itinerary.size(), m = k.preperiod;
    double sigma = static_cast<double>(k.eta[n] * k.eta[m]);
    auto theta = [&](const std::vector<int>& chi) {
        double pre = 0, per = 0, tj = 1;
        for (std::size_t j = 0; j < n; ++j) {
            double term = k.eta[j] * chi[j] * tj;
            (j < m ? pre : per) += term;
            tj *= t;
        }
        return pre + per / (1 - sigma * std::pow(t, static_cast<double>(k.period)));
    };
    return 1 + t - 2 * t * (1 + t) * theta(k.chi0hat) + 4 * t * t * theta(k.chi2);
}

KneadingRoot kneading_root(const KneadingData& k, double tol, double scan_step) {
    if (k.periodic_critical)
        throw PreconditionError("kneading_root: periodic critical point, Δ(t) is not defined by the itinerary");
    if (!(scan_step > 0) || !(tol > 0)) throw PreconditionError("kneading_root: tol and scan step must be positive");
    double t = 1e-9, prev = kneading_determinant(k, t);
    while (t < 1 - scan_step) {
        double t2 = t + scan_step, v = kneading_determinant(k, t2);
        if ((v > 0) != (prev > 0)) {
            double a = t, b = t2;
            for (int i = 0; i < 200 && b - a > tol; ++i) {
                double c = (a + b) / 2;
                if ((kneading_determinant(k, c) > 0) == (prev > 0)) a = c;
                else b = c;
            }
            double r = (a + b) / 2;
            return KneadingRoot{r, 1 / r, (b - a) / (2 * a * a)};
        }
        prev = v;
        t = t2;
    }
    return KneadingRoot{};
}

std::vector<Int> lap_counts(const KneadingData& k, std::size_t N) {
    if (N < 1) throw PreconditionError("lap_counts: n must be >= 1");
    const auto& seq = k.itinerary;
    std::size_t n = seq.size(), m = k.preperiod;
    if (seq.front() == kCritical) return std::vector<Int>(N, Int(1)); // θ = 0
    auto nxt = [&](std::size_t i) { return i + 1 < n ? i + 1 : m; };
    std::vector<Int> out;

    if (k.q == 2) {
        // Unimodal left-lap recursion with critical set {0}.
        std::vector<bool> left(n);
        for (std::size_t i = 0; i < n; ++i) left[i] = seq[i] != 0 && seq[i] != kCritical;
        std::vector<long> first_c(n, -1);
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t j = i;
            for (long s = 0; s < static_cast<long>(2 * n + 2); ++s) {
                if (seq[j] == kCritical) {
                    first_c[i] = s;
                    break;
                }
                j = nxt(j);
            }
        }
        std::vector<Int> L(n, Int(1)), next(n);
        for (std::size_t step = 1; step <= N; ++step) {
            for (std::size_t i = 0; i < n; ++i) {
                std::size_t f = nxt(i);
                if (left[i]) {
                    int d = first_c[f] >= 0 && first_c[f] < static_cast<long>(step) - 1 ? 1 : 0;
                    next[i] = 2 * L[0] - L[f] + 1 - d;
                } else {
                    next[i] = L[f];
                }
            }
            L.swap(next);
            std::size_t f0 = nxt(0);
            int d = first_c[f0] >= 0 && first_c[f0] < static_cast<long>(step) ? 1 : 0;
            out.push_back(L[0] - L[f0] + 1 - d);
        }
        return out;
    }

    // L_{n,x} = ε L_{n-1,f(x)} + 2χ̂_0 L_{n-1,c} - 2χ_2 L_{n-1,α} + (1-ε)/2, with the α column
    // L_n(α) = 2 L_{n-1}(c) - L_{n-1}(α).
    std::vector<Int> L(n), next(n);
    for (std::size_t i = 0; i < n; ++i) {
        int r = seq[i] == k.q ? 1 : (seq[i] == kAlpha ? -1 : 0);
        L[i] = k.epsilon[i] + 2 * k.chi0hat[i] + (1 - k.epsilon[i]) / 2 + r;
    }
    Int La = 2;
    std::vector<Int> ac{L[0] - La};
    for (std::size_t step = 2; step <= N + static_cast<std::size_t>(k.q); ++step) {
        for (std::size_t i = 0; i < n; ++i)
            next[i] = k.epsilon[i] * L[nxt(i)] + 2 * k.chi0hat[i] * L[0] - 2 * k.chi2[i] * La + (1 - k.epsilon[i]) / 2;
        La = 2 * L[0] - La;
        L.swap(next);
        ac.push_back(L[0] - La);
    }
    for (std::size_t i = 0; i < N; ++i) {
        Int s = 0;
        for (int j = 0; j < k.q; ++j) s += ac[i + static_cast<std::size_t>(j)];
        out.push_back(s);
    }
    return out;
}

} // namespace ment
