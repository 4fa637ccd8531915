#pragma once

#include "ment/angles.hpp"

#include <string>
#include <vector>

namespace ment {

// Directed graph given by successor lists; repeated entries count as multiple edges.
using Graph = std::vector<std::vector<std::size_t>>;

struct SpectralResult {
    double radius = 1;
    double error_bound = 0;
    std::string method; // "charpoly", "power" or "acyclic"
};

// Coefficients c_0 … c_n of det(xI - A), c_n = 1.
std::vector<Int> characteristic_polynomial(const std::vector<std::vector<Int>>& a);

// Perron root of the adjacency matrix; 1 when the graph has no cycle.
SpectralResult spectral_radius(const Graph& g, double tol = 1e-12, std::size_t max_iter = 100000,
                               std::size_t exact_max_dim = 12);

} // namespace ment
