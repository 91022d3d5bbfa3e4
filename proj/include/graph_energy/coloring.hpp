#pragma once

#include <cstdint>
#include <vector>

#include "graph_energy/graph.hpp"

namespace graph_energy {

struct ColoringResult {
    int chi = 0;
    /// witness[v] in 0..chi-1, proper, every color used.
    std::vector<int> witness;
    /// Size of the clique found while bounding; never exceeds chi.
    int lower_bound_clique = 0;
};

/// Search-node budget for the exact solver; exceeding it raises CapacityError.
inline constexpr std::uint64_t kColoringNodeBudget = 50'000'000;

/// Exact chromatic number by DSATUR branch and bound (n <= 64).
ColoringResult chromatic_number(const Graph& g);

/// Colors used by sequential DSATUR without backtracking (an upper bound).
int greedy_color_count(const Graph& g);

/// chi(G) <= lambda_1(G) + 1.
bool check_wilf(const Graph& g);

struct NordhausGaddum {
    int chi = 0;
    int chi_complement = 0;
    int sum = 0;
    bool attains_equality = false;
};

/// chi(G) + chi(complement G) against the bound n + 1.
NordhausGaddum nordhaus_gaddum(const Graph& g);

}  // namespace graph_energy
