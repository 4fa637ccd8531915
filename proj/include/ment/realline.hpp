#pragma once

#include "ment/angles.hpp"
#include "ment/symbolic.hpp"

#include <string>
#include <vector>

namespace ment {

enum class SetKind { Spine, Htree, Real, Param };

SetKind parse_set_kind(const std::string& s);
std::string to_string(SetKind k);

// Exact membership of θ in S_c, H_c, the real parameter set, or P_c, where c
// has characteristic angle θ_c ∈ [0, 1/2] (ignored for Real).
bool member(SetKind kind, const Angle& t, const Angle& tc = Angle());

// Real hyperbolic window: the root 0.(Σ0) and the doubling point 0.(Σ0 Σ0')
// stored in ascending order.
struct Window {
    Angle lo, hi;
    std::size_t period = 0;
    Angle pseudocenter;
    std::string sigma0;
    friend bool operator==(const Window&, const Window&) = default;
};

Window next_window(const Angle& lo, const Angle& hi);
std::vector<Window> enumerate_windows(std::size_t depth);

// Binary substitution 0 -> Σ0, 1 -> Σ1.
struct Tuning {
    std::string sigma0, sigma1;
};

Tuning tuning_of(const Window& w);
Tuning basilica_tuning();
Angle tune(const Tuning& w, const Angle& t);
Angle tuning_alpha(const Tuning& w);
Angle tuning_omega(const Tuning& w);

// τ^n(1/2) for the basilica substitution, reflected into [0, 1/2].
Angle feigenbaum_iterate(std::size_t n);
// Number of leading binary digits on which two angles agree.
std::size_t agreement_bits(const Angle& x, const Angle& y, std::size_t cap = 4096);
// First iterate θ_{n+1} agreeing with θ_n on `tolerance_bits` digits.
Angle feigenbaum_angle(std::size_t tolerance_bits, std::size_t* iterations = nullptr);

Angle embed_F(const Angle& t, const RunString& s);
// Angle θ_c in [0, 1/2] of the parameter whose critical value code D(θ_c) is S̄.
Angle dominant_parameter(const RunString& s);

struct ParamDimensionEstimate {
    double estimate = 0;
    std::vector<std::pair<std::size_t, std::size_t>> counts; // (period, windows inside [0, θ_c])
};

ParamDimensionEstimate param_dimension_estimate(const Angle& tc, std::size_t depth);

} // namespace ment
