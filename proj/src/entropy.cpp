#include "ment/entropy.hpp"

#include "ment/realline.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

namespace ment {

Method parse_method(const std::string& s) {
    if (s == "automaton") return Method::Automaton;
    if (s == "kneading") return Method::Kneading;
    if (s == "laps") return Method::Laps;
    throw ParseError("unknown method '" + s + "' (expected automaton, kneading or laps)");
}

std::string to_string(Method m) {
    switch (m) {
    case Method::Automaton: return "automaton";
    case Method::Kneading: return "kneading";
    case Method::Laps: return "laps";
    }
    return "?";
}

EntropyResult make_result(double growth, const std::string& method, double error_bound) {
    EntropyResult r;
    r.growth = growth;
    r.entropy_nats = std::log(growth);
    r.dimension = r.entropy_nats / std::log(2.0);
    r.method = method;
    r.error_bound = error_bound;
    return r;
}

std::vector<Arc> real_forbidden_arcs(const Angle& tc) {
    Angle t = Rational(1, 2) < tc.value() ? reflect(tc) : tc;
    if (Rational(1, 4) < t.value()) {
        Angle d = double_angle(t), e = reflect(d);
        return {Arc{std::max(d, e), std::min(d, e)}};
    }
    return spine_forbidden_arcs(t);
}

std::vector<Arc> spine_forbidden_arcs(const Angle& tc) {
    Angle t = Rational(1, 2) < tc.value() ? reflect(tc) : tc;
    // θ_c = 0: everything but the fixed point 0 is cut out.
    if (t.is_zero()) return {Arc{Angle(), Angle(1, 2)}, Arc{Angle(1, 2), Angle()}};
    return {Arc{t, reflect(t)}};
}

EntropyResult dimension_of(const std::vector<Arc>& forbidden, const EntropyOptions& opt) {
    MarkovAutomaton a = build_automaton(forbidden);
    SpectralResult s = spectral_radius(a.succ, opt.tol);
    return make_result(s.radius, "automaton", s.error_bound);
}

EntropyResult dimension_of(const KneadingData& k, const EntropyOptions& opt) {
    KneadingRoot r = kneading_root(k, opt.tol, opt.scan_step);
    EntropyResult out = make_result(r.growth, "kneading", r.error_bound);
    out.boundary_hit = k.boundary_hit;
    return out;
}

std::vector<Int> word_counts(const MarkovAutomaton& a, std::size_t n) {
    std::size_t m = a.succ.size();
    std::vector<Int> v(m, Int(1)), next(m);
    std::vector<Int> out;
    for (std::size_t k = 1; k <= n; ++k) {
        if (k > 1) {
            for (std::size_t i = 0; i < m; ++i) {
                next[i] = 0;
                for (std::size_t j : a.succ[i]) next[i] += v[j];
            }
            v.swap(next);
        }
        Int s = 0;
        for (const Int& x : v) s += x;
        out.push_back(s);
    }
    return out;
}

double two_point_growth(const std::vector<Int>& seq) {
    std::size_t n = seq.size(), h = n / 2;
    if (n < 2 || seq[n - 1] <= 0 || seq[h - 1] <= 0) return 1;
    double ln = std::log(seq[n - 1].convert_to<double>()) - std::log(seq[h - 1].convert_to<double>());
    return std::exp(ln / static_cast<double>(n - h));
}

EntropyResult lap_entropy(const KneadingData& k, const EntropyOptions& opt) {
    std::vector<Int> l = lap_counts(k, opt.lap_n);
    double g = std::max(1.0, two_point_growth(l));
    std::vector<Int> shorter(l.begin(), l.end() - static_cast<long>(std::min<std::size_t>(10, l.size() / 2)));
    double g2 = std::max(1.0, two_point_growth(shorter));
    return make_result(g, "laps", std::abs(g - g2));
}

namespace {

EntropyResult automaton_vein(const OrbitPortrait& P, const Leaf& leaf, const EntropyOptions& opt) {
    return dimension_of(vein_forbidden_arcs(P, leaf), opt);
}

} // namespace

EntropyResult vein_entropy(const OrbitPortrait& P, const Leaf& leaf, Method m, const EntropyOptions& opt) {
    if (m == Method::Automaton) return automaton_vein(P, leaf, opt);
    if (!is_minor_leaf(leaf))
        throw PreconditionError("vein_entropy: (" + to_fraction(leaf.a) + ", " + to_fraction(leaf.b) +
                                ") is not a minor leaf");
    KneadingData k = kneading_data(P, leaf, true);
    if (m == Method::Laps) return lap_entropy(k, opt);
    if (k.periodic_critical) {
        EntropyResult r = automaton_vein(P, leaf, opt);
        r.fallback = "automaton";
        return r;
    }
    return dimension_of(k, opt);
}

EntropyResult real_entropy(const Angle& tc, Method m, const EntropyOptions& opt) {
    Angle t = Rational(1, 2) < tc.value() ? reflect(tc) : tc;
    if (m == Method::Automaton) return dimension_of(real_forbidden_arcs(t), opt);
    if (!member(SetKind::Real, t))
        throw PreconditionError("real_entropy: " + to_fraction(t) + " is not a real parameter angle (required by " +
                                to_string(m) + ")");
    return vein_entropy(orbit_portrait(1, 2), Leaf(t, reflect(t)), m, opt);
}

double bifurcation_measure(const Leaf& leaf1, const Leaf& leaf2, const OrbitPortrait& P, const EntropyOptions& opt) {
    if (!(leaf1 == leaf2) && !leaf_separates(leaf1, leaf2, Angle()))
        throw PreconditionError("bifurcation_measure: leaf1 must separate leaf2 from 0");
    if (leaf1 == leaf2) return 0.0;
    double h1 = vein_entropy(P, leaf1, Method::Automaton, opt).entropy_nats;
    double h2 = vein_entropy(P, leaf2, Method::Automaton, opt).entropy_nats;
    return h2 - h1;
}

std::vector<SweepRow> sweep(const std::vector<Angle>& thetas, Method m, const OrbitPortrait* P,
                            const EntropyOptions& opt, std::size_t jobs) {
    std::vector<SweepRow> rows(thetas.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < thetas.size(); i = next++) {
            SweepRow& row = rows[i];
            row.theta = thetas[i];
            try {
                if (P == nullptr || P->q == 2) {
                    row.result = real_entropy(thetas[i], m, opt);
                } else {
                    Angle t = Rational(1, 2) < thetas[i].value() ? reflect(thetas[i]) : thetas[i];
                    row.result = vein_entropy(*P, vein_leaf(*P, t), m, opt);
                }
            } catch (const std::exception& e) {
                row.error = e.what();
            }
        }
    };
    jobs = std::max<std::size_t>(1, std::min(jobs, thetas.size()));
    std::vector<std::thread> pool;
    for (std::size_t j = 1; j < jobs; ++j) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    return rows;
}

} // namespace ment
