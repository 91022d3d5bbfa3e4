#pragma once

#include <optional>
#include <span>
#include <vector>

#include "graph_energy/graph.hpp"
#include "graph_energy/tolerances.hpp"

namespace graph_energy {

/// Adjacency spectrum of a graph.
struct SpectrumResult {
    /// lambda_1 >= ... >= lambda_n.
    std::vector<double> eigenvalues;
    /// Sum of |lambda_i|.
    double energy = 0.0;
    /// Number of eigenvalues above the zero threshold.
    int positive_count = 0;
    /// Largest ||A v - lambda v||_2 over all eigenpairs; absent when not certified.
    std::optional<double> max_residual;

    double largest() const { return eigenvalues.empty() ? 0.0 : eigenvalues.front(); }
    double smallest() const { return eigenvalues.empty() ? 0.0 : eigenvalues.back(); }
    /// 1-based access matching lambda_i.
    double lambda(int i) const { return eigenvalues.at(static_cast<std::size_t>(i - 1)); }
};

struct SpectrumOptions {
    /// Accumulate eigenvectors and verify every residual; failure throws NumericalError.
    bool certify = true;
};

SpectrumResult eigenvalues(const Graph& g, SpectrumOptions options = {});

double energy(const Graph& g);

/// lambda_1 + ... + lambda_k, 0 <= k <= n.
double top_k_eigenvalue_sum(const Graph& g, int k);
double top_k_eigenvalue_sum(const SpectrumResult& spectrum, int k);

/// Cauchy interlacing between g and the subgraph induced by `subset`:
/// lambda_{i+n-p}(G) <= lambda_i(H) <= lambda_i(G) within kTolerances.interlacing.
bool check_interlacing(const Graph& g, std::span<const int> subset);

/// Count of eigenvalues equal to `value` within `tol`.
int multiplicity(const SpectrumResult& spectrum, double value, double tol);

}  // namespace graph_energy
