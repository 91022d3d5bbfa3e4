#include "graph_energy/spectrum.hpp"

#include <cmath>
#include <string>

#include "graph_energy/errors.hpp"
#include "graph_energy/symmetric_eigen.hpp"

namespace graph_energy {

SpectrumResult eigenvalues(const Graph& g, SpectrumOptions options) {
    SpectrumResult out;
    const int n = g.order();
    if (n == 0) return out;

    const Eigen::MatrixXd a = g.adjacency<double>();
    SymmetricEigensolver<double> solver(a, options.certify);
    const auto& lambda = solver.eigenvalues();
    out.eigenvalues.assign(lambda.data(), lambda.data() + lambda.size());

    for (double x : out.eigenvalues) {
        out.energy += std::abs(x);
        if (x > kTolerances.zero_eigenvalue) ++out.positive_count;
    }

    if (options.certify) {
        const auto& vectors = solver.eigenvectors();
        const double norm = std::max(std::abs(lambda(0)), std::abs(lambda(n - 1)));
        const double bound = kTolerances.residual * std::max(1.0, norm);
        double worst = 0.0;
        for (int k = 0; k < n; ++k) {
            const double r = (a * vectors.col(k) - lambda(k) * vectors.col(k)).norm();
            worst = std::max(worst, r);
        }
        if (!(worst <= bound))
            throw NumericalError("eigenpair residual " + std::to_string(worst) + " exceeds " +
                                 std::to_string(bound));
        out.max_residual = worst;
    }
    return out;
}

double energy(const Graph& g) { return eigenvalues(g, {.certify = false}).energy; }

double top_k_eigenvalue_sum(const SpectrumResult& spectrum, int k) {
    const int n = static_cast<int>(spectrum.eigenvalues.size());
    if (k < 0 || k > n)
        throw InputError("top_k_eigenvalue_sum: k=" + std::to_string(k) + " outside 0.." + std::to_string(n));
    double sum = 0.0;
    for (int i = 0; i < k; ++i) sum += spectrum.eigenvalues[static_cast<std::size_t>(i)];
    return sum;
}

double top_k_eigenvalue_sum(const Graph& g, int k) {
    if (k < 0 || k > g.order())
        throw InputError("top_k_eigenvalue_sum: k=" + std::to_string(k) + " outside 0.." +
                         std::to_string(g.order()));
    return top_k_eigenvalue_sum(eigenvalues(g, {.certify = false}), k);
}

bool check_interlacing(const Graph& g, std::span<const int> subset) {
    const Graph h = induced_subgraph(g, subset);
    const auto host = eigenvalues(g);
    const auto sub = eigenvalues(h);
    const int n = g.order();
    const int p = h.order();
    const double tol = kTolerances.interlacing;
    for (int i = 1; i <= p; ++i) {
        if (sub.lambda(i) > host.lambda(i) + tol) return false;
        if (sub.lambda(i) < host.lambda(i + n - p) - tol) return false;
    }
    return true;
}

int multiplicity(const SpectrumResult& spectrum, double value, double tol) {
    int count = 0;
    for (double x : spectrum.eigenvalues)
        if (std::abs(x - value) <= tol) ++count;
    return count;
}

}  // namespace graph_energy
