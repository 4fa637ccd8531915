#pragma once

#include "ment/veins.hpp"

#include <string>
#include <vector>

namespace ment {

// Itinerary symbols: I_0 … I_q are 0 … q; the α cycle and the critical point are tagged.
inline constexpr int kAlpha = -1;
inline constexpr int kCritical = -2;

struct KneadingData {
    int q = 2;
    std::vector<int> itinerary;      // symbols of D^k(θ^-), k = 0 … preperiod+period-1
    std::vector<int> eta;            // η_k, k = 0 … size
    std::vector<int> epsilon, chi0hat, chi2;
    std::size_t preperiod = 0, period = 1;
    bool periodic_critical = false;  // some image of θ^- is a critical ray
    bool boundary_hit = false;       // orbit met τ/2 or τ/2+1/2 and was classified by right limit
};

std::string symbol_name(int s);

// Itinerary of θ^- = leaf.a against the rays of the portrait. Periodic
// critical points are rejected unless `allow_periodic` is set (lap counts accept them).
KneadingData kneading_data(const OrbitPortrait& P, const Leaf& leaf, bool allow_periodic = false);

// Δ(t) = 1 + t - 2t(1+t)Θ_1(t) + 4t²Θ_2(t) in closed form.
double kneading_determinant(const KneadingData& k, double t);

struct KneadingRoot {
    double root = 1;     // smallest zero in (0,1), or 1 if none
    double growth = 1;
    double error_bound = 0;
};

KneadingRoot kneading_root(const KneadingData& k, double tol = 1e-12, double scan_step = 1e-4);

// ℓ(f^k) for k = 1 … n, exact.
std::vector<Int> lap_counts(const KneadingData& k, std::size_t n);

} // namespace ment
