#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include <Eigen/Core>

#include "graph_energy/errors.hpp"

namespace graph_energy {

/// Dense symmetric eigensolver: Householder reduction to tridiagonal form
/// followed by implicit QL iterations with Wilkinson-type shifts.
///
/// Eigenvalues are returned in descending order. Eigenvectors (columns of
/// eigenvectors(), matching eigenvalues()) are only accumulated when
/// requested. Each eigenvalue gets at most `max_sweeps` QL iterations;
/// exceeding the cap throws NumericalError.
template <typename Scalar>
class SymmetricEigensolver {
public:
    using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

    static constexpr int kDefaultMaxSweeps = 50;

    SymmetricEigensolver() = default;

    template <typename Derived>
    explicit SymmetricEigensolver(const Eigen::MatrixBase<Derived>& a, bool compute_vectors = false,
                                  int max_sweeps = kDefaultMaxSweeps) {
        compute(a, compute_vectors, max_sweeps);
    }

    template <typename Derived>
    SymmetricEigensolver& compute(const Eigen::MatrixBase<Derived>& a, bool compute_vectors = false,
                                  int max_sweeps = kDefaultMaxSweeps) {
        const Eigen::Index n = a.rows();
        if (a.cols() != n) throw InputError("SymmetricEigensolver: matrix must be square");
        vectors_requested_ = compute_vectors;
        max_sweeps_ = max_sweeps;
        v_ = a.template cast<Scalar>();
        d_.resize(n);
        e_.resize(n);
        if (n == 0) return *this;
        tridiagonalize();
        ql_iterate();
        sort_descending();
        return *this;
    }

    const Vector& eigenvalues() const { return d_; }

    const Matrix& eigenvectors() const {
        if (!vectors_requested_) throw std::logic_error("eigenvectors were not requested");
        return v_;
    }

private:
    // Householder reduction; v_ ends up holding the orthogonal transform.
    void tridiagonalize() {
        const Eigen::Index n = v_.rows();
        for (Eigen::Index j = 0; j < n; ++j) d_(j) = v_(n - 1, j);

        for (Eigen::Index i = n - 1; i > 0; --i) {
            Scalar scale(0);
            Scalar h(0);
            for (Eigen::Index k = 0; k < i; ++k) scale += std::abs(d_(k));
            if (scale == Scalar(0)) {
                e_(i) = d_(i - 1);
                for (Eigen::Index j = 0; j < i; ++j) {
                    d_(j) = v_(i - 1, j);
                    v_(i, j) = Scalar(0);
                    v_(j, i) = Scalar(0);
                }
            } else {
                for (Eigen::Index k = 0; k < i; ++k) {
                    d_(k) /= scale;
                    h += d_(k) * d_(k);
                }
                Scalar f = d_(i - 1);
                Scalar g = std::sqrt(h);
                if (f > Scalar(0)) g = -g;
                e_(i) = scale * g;
                h -= f * g;
                d_(i - 1) = f - g;
                for (Eigen::Index j = 0; j < i; ++j) e_(j) = Scalar(0);

                for (Eigen::Index j = 0; j < i; ++j) {
                    f = d_(j);
                    v_(j, i) = f;
                    g = e_(j) + v_(j, j) * f;
                    for (Eigen::Index k = j + 1; k <= i - 1; ++k) {
                        g += v_(k, j) * d_(k);
                        e_(k) += v_(k, j) * f;
                    }
                    e_(j) = g;
                }
                f = Scalar(0);
                for (Eigen::Index j = 0; j < i; ++j) {
                    e_(j) /= h;
                    f += e_(j) * d_(j);
                }
                const Scalar hh = f / (h + h);
                for (Eigen::Index j = 0; j < i; ++j) e_(j) -= hh * d_(j);
                for (Eigen::Index j = 0; j < i; ++j) {
                    f = d_(j);
                    g = e_(j);
                    for (Eigen::Index k = j; k <= i - 1; ++k) v_(k, j) -= (f * e_(k) + g * d_(k));
                    d_(j) = v_(i - 1, j);
                    v_(i, j) = Scalar(0);
                }
            }
            d_(i) = h;
        }

        for (Eigen::Index i = 0; i < n - 1; ++i) {
            v_(n - 1, i) = v_(i, i);
            v_(i, i) = Scalar(1);
            const Scalar h = d_(i + 1);
            if (h != Scalar(0)) {
                for (Eigen::Index k = 0; k <= i; ++k) d_(k) = v_(k, i + 1) / h;
                for (Eigen::Index j = 0; j <= i; ++j) {
                    Scalar g(0);
                    for (Eigen::Index k = 0; k <= i; ++k) g += v_(k, i + 1) * v_(k, j);
                    for (Eigen::Index k = 0; k <= i; ++k) v_(k, j) -= g * d_(k);
                }
            }
            for (Eigen::Index k = 0; k <= i; ++k) v_(k, i + 1) = Scalar(0);
        }
        for (Eigen::Index j = 0; j < n; ++j) {
            d_(j) = v_(n - 1, j);
            v_(n - 1, j) = Scalar(0);
        }
        v_(n - 1, n - 1) = Scalar(1);
        e_(0) = Scalar(0);
    }

    void ql_iterate() {
        const Eigen::Index n = v_.rows();
        for (Eigen::Index i = 1; i < n; ++i) e_(i - 1) = e_(i);
        e_(n - 1) = Scalar(0);

        Scalar f(0);
        Scalar tst1(0);
        const Scalar eps = std::numeric_limits<Scalar>::epsilon();
        for (Eigen::Index l = 0; l < n; ++l) {
            tst1 = std::max(tst1, std::abs(d_(l)) + std::abs(e_(l)));
            Eigen::Index m = l;
            while (m < n - 1 && std::abs(e_(m)) > eps * tst1) ++m;

            if (m > l) {
                int sweeps = 0;
                do {
                    if (++sweeps > max_sweeps_)
                        throw NumericalError("QL iteration exceeded " + std::to_string(max_sweeps_) +
                                             " sweeps for eigenvalue " + std::to_string(l));
                    Scalar g = d_(l);
                    Scalar p = (d_(l + 1) - g) / (Scalar(2) * e_(l));
                    Scalar r = std::hypot(p, Scalar(1));
                    if (p < Scalar(0)) r = -r;
                    d_(l) = e_(l) / (p + r);
                    d_(l + 1) = e_(l) * (p + r);
                    const Scalar dl1 = d_(l + 1);
                    Scalar h = g - d_(l);
                    for (Eigen::Index i = l + 2; i < n; ++i) d_(i) -= h;
                    f += h;

                    p = d_(m);
                    Scalar c(1), c2(1), c3(1);
                    const Scalar el1 = e_(l + 1);
                    Scalar s(0), s2(0);
                    for (Eigen::Index i = m - 1; i >= l; --i) {
                        c3 = c2;
                        c2 = c;
                        s2 = s;
                        g = c * e_(i);
                        h = c * p;
                        r = std::hypot(p, e_(i));
                        e_(i + 1) = s * r;
                        s = e_(i) / r;
                        c = p / r;
                        p = c * d_(i) - s * g;
                        d_(i + 1) = h + s * (c * g + s * d_(i));
                        if (vectors_requested_) {
                            for (Eigen::Index k = 0; k < n; ++k) {
                                h = v_(k, i + 1);
                                v_(k, i + 1) = s * v_(k, i) + c * h;
                                v_(k, i) = c * v_(k, i) - s * h;
                            }
                        }
                    }
                    p = -s * s2 * c3 * el1 * e_(l) / dl1;
                    e_(l) = s * p;
                    d_(l) = c * p;
                } while (std::abs(e_(l)) > eps * tst1);
            }
            d_(l) += f;
            e_(l) = Scalar(0);
        }
    }

    void sort_descending() {
        const Eigen::Index n = d_.size();
        std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), Eigen::Index{0});
        std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) { return d_(a) > d_(b); });
        Vector d(n);
        for (Eigen::Index k = 0; k < n; ++k) d(k) = d_(order[static_cast<std::size_t>(k)]);
        d_ = d;
        if (vectors_requested_) {
            Matrix v(n, n);
            for (Eigen::Index k = 0; k < n; ++k) v.col(k) = v_.col(order[static_cast<std::size_t>(k)]);
            v_ = v;
        }
    }

    Matrix v_;
    Vector d_;
    Vector e_;
    bool vectors_requested_ = false;
    int max_sweeps_ = kDefaultMaxSweeps;
};

}  // namespace graph_energy
