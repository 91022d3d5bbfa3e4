#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "graph_energy/graph.hpp"

namespace graph_energy {

__extension__ typedef __int128 Integer;

std::string to_string(Integer value);

/// Exact characteristic polynomial det(xI - A) = sum_k coeffs[k] x^k.
struct CharPoly {
    /// coeffs[0..n], coeffs[n] == 1.
    std::vector<Integer> coeffs;
    /// n minus the multiplicity of the root 0.
    int rank = 0;
    /// |lowest nonzero coefficient| = product of |lambda| over nonzero eigenvalues.
    Integer a_r_abs = 1;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    /// Evaluate at x in double precision (Horner).
    double evaluate(double x) const;
    /// Sum of |coeffs[k]| as a double.
    double l1_norm() const;

    friend bool operator==(const CharPoly&, const CharPoly&) = default;
};

/// Largest order accepted by char_poly.
inline constexpr int kCharPolyMaxOrder = 40;

/// Faddeev-LeVerrier in checked 128-bit arithmetic; overflow raises CapacityError.
CharPoly char_poly(const Graph& g);

/// Multiply two integer polynomials given low-to-high coefficients (checked).
std::vector<Integer> poly_multiply(const std::vector<Integer>& a, const std::vector<Integer>& b);

/// Rank of the adjacency matrix over the rationals, by fraction-free
/// (Bareiss) elimination. Runs in 128-bit arithmetic and falls back to
/// arbitrary precision if an intermediate would overflow.
int rank_exact(const Graph& g);

/// Rank of an arbitrary integer matrix given row-major.
int rank_exact(std::vector<std::int64_t> entries, int rows, int cols);

/// |product of nonzero eigenvalues|; throws InputError for edgeless graphs.
Integer product_nonzero_eigenvalues_abs(const Graph& g);

struct MatchingInfo {
    int max_size = 0;
    /// Number of distinct matchings of size max_size (the empty matching counts once).
    Integer max_count = 1;
    bool has_perfect = false;
};

/// Largest order for the general matching counter.
inline constexpr int kMatchingMaxOrder = 16;

/// Exact maximum matching size and count. Trees of any order are delegated
/// to the tree recurrence; other graphs need n <= 16 (CapacityError otherwise).
MatchingInfo matching_info(const Graph& g);

/// Number of maximum matchings of a tree; InputError for non-trees.
Integer tree_max_matching_count(const Graph& g);

}  // namespace graph_energy
