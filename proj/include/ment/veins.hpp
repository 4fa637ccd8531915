#pragma once

#include "ment/angles.hpp"

#include <string>
#include <vector>

namespace ment {

// The D-invariant q-cycle of rotation number p/q and the data derived from it.
struct OrbitPortrait {
    long p = 1, q = 2;
    std::vector<Angle> angles;     // sorted
    Angle theta0, theta1;          // limb root rays, theta0 < theta1
    std::string sigma0, sigma1;    // first q-1 bits of theta0, theta1
    Angle Theta0, Theta1;          // preimages 0.(1Σ0), 0.(0Σ1)
    Angle tau;                     // 0.Σ1
    std::vector<Arc> deltas;       // Δ_0 … Δ_{q-1}
    std::vector<Arc> hat_deltas;   // Δ_i + 1/2
    std::vector<Arc> forbidden;    // Δ̂_1 … Δ̂_{q-2}
};

OrbitPortrait orbit_portrait(long p, long q);

// Ψ_{p/q}, coded from D^0(θ).
Angle surgery(const OrbitPortrait& P, const Angle& t);
// Φ_{p/q}; throws PreconditionError naming the step at which the orbit leaves Ω.
Angle surgery_inverse(const OrbitPortrait& P, const Angle& phi);
// Characteristic leaf (Ψ(θ), Ψ(1-θ)) of the vein image of a real angle θ.
Leaf vein_leaf(const OrbitPortrait& P, const Angle& real_angle);
// Characteristic leaf whose lower endpoint is the given vein angle.
Leaf vein_leaf_from_angle(const OrbitPortrait& P, const Angle& vein_angle);

// Forbidden arcs I_{p/q} ∪ J for the Hubbard set of the parameter with
// characteristic leaf `leaf`; J is the arc through 0 between D^{q-1} of its ends.
std::vector<Arc> vein_forbidden_arcs(const OrbitPortrait& P, const Leaf& leaf);
bool vein_member_H(const OrbitPortrait& P, const Angle& t, const Leaf& leaf);

bool is_minor_leaf(const Leaf& m);

} // namespace ment
