#pragma once

#include "ment/automaton.hpp"
#include "ment/kneading.hpp"
#include "ment/spectral.hpp"
#include "ment/veins.hpp"

#include <string>
#include <vector>

namespace ment {

enum class Method { Automaton, Kneading, Laps };

Method parse_method(const std::string& s);
std::string to_string(Method m);

struct EntropyOptions {
    double tol = 1e-12;
    double scan_step = 1e-4;
    std::size_t lap_n = 60;
};

struct EntropyResult {
    double growth = 1;
    double entropy_nats = 0;
    double dimension = 0;
    std::string method;
    double error_bound = 0;
    bool boundary_hit = false;
    std::string fallback; // set when the requested engine could not be used
};

EntropyResult make_result(double growth, const std::string& method, double error_bound);

// Forbidden arc for the real Hubbard set of θ_c (reflected into [0, 1/2]):
// the arc through 0 between D(θ_c) and 1-D(θ_c) for θ_c > 1/4, else (θ_c, 1-θ_c).
std::vector<Arc> real_forbidden_arcs(const Angle& tc);
// Arc (θ_c, 1-θ_c) cutting out the spine S_c.
std::vector<Arc> spine_forbidden_arcs(const Angle& tc);

EntropyResult dimension_of(const std::vector<Arc>& forbidden, const EntropyOptions& opt = {});
EntropyResult dimension_of(const KneadingData& k, const EntropyOptions& opt = {});

// Σ of the entries of A^{n-1}·1 for the pruned automaton, k = 1 … n.
std::vector<Int> word_counts(const MarkovAutomaton& a, std::size_t n);
// Growth read off an integer sequence as (x_n / x_{n/2})^{2/n}.
double two_point_growth(const std::vector<Int>& seq);

EntropyResult lap_entropy(const KneadingData& k, const EntropyOptions& opt = {});

// Entropy at the parameter with characteristic leaf `leaf` on the p/q vein.
// Kneading on a periodic critical point falls back to the automaton.
EntropyResult vein_entropy(const OrbitPortrait& P, const Leaf& leaf, Method m, const EntropyOptions& opt = {});
EntropyResult real_entropy(const Angle& tc, Method m, const EntropyOptions& opt = {});

// h(c_2) - h(c_1); leaf1 must separate leaf2 from 0 or equal it.
double bifurcation_measure(const Leaf& leaf1, const Leaf& leaf2, const OrbitPortrait& P,
                           const EntropyOptions& opt = {});

struct SweepRow {
    Angle theta;
    EntropyResult result;
    std::string error; // empty on success
};

// Entropy at each real angle (or its image on the p/q vein when P is given),
// computed on `jobs` threads; rows come back in input order.
std::vector<SweepRow> sweep(const std::vector<Angle>& thetas, Method m, const OrbitPortrait* P,
                            const EntropyOptions& opt = {}, std::size_t jobs = 1);

} // namespace ment
