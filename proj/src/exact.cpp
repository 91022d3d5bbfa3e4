#include "graph_energy/exact.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <cmath>

#include <boost/multiprecision/cpp_int.hpp>

#include "graph_energy/errors.hpp"

namespace graph_energy {

namespace {

struct Overflow {};

Integer add(Integer a, Integer b) {
    Integer r;
    if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
    return r;
}

Integer mul(Integer a, Integer b) {
    Integer r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
}

// Fraction-free elimination shared by the 128-bit and big-integer paths.
template <typename Int, typename Mul, typename Sub>
int bareiss_rank(std::vector<Int> m, int rows, int cols, Mul&& times, Sub&& minus) {
    auto at = [&](int i, int j) -> Int& { return m[static_cast<std::size_t>(i) * cols + j]; };
    Int prev(1);
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = rank;
        while (pivot < rows && at(pivot, c) == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank)
            for (int j = 0; j < cols; ++j) std::swap(at(pivot, j), at(rank, j));
        for (int i = rank + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j)
                at(i, j) = minus(times(at(rank, c), at(i, j)), times(at(i, c), at(rank, j))) / prev;
            at(i, c) = 0;
        }
        prev = at(rank, c);
        ++rank;
    }
    return rank;
}

}  // namespace

std::string to_string(Integer value) {
    if (value == 0) return "0";
    const bool negative = value < 0;
    // Work with negative magnitudes so the minimum value is representable.
    Integer v = negative ? value : -value;
    std::string digits;
    while (v != 0) {
        digits.push_back(static_cast<char>('0' - static_cast<int>(v % 10)));
        v /= 10;
    }
    if (negative) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

double CharPoly::evaluate(double x) const {
    double acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + static_cast<double>(*it);
    return acc;
}

double CharPoly::l1_norm() const {
    double s = 0.0;
    for (Integer c : coeffs) s += std::abs(static_cast<double>(c));
    return s;
}

CharPoly char_poly(const Graph& g) {
    const int n = g.order();
    if (n > kCharPolyMaxOrder)
        throw CapacityError("char_poly supports n <= " + std::to_string(kCharPolyMaxOrder) + ", got n=" +
                            std::to_string(n));
    CharPoly out;
    out.coeffs.assign(static_cast<std::size_t>(n) + 1, 0);
    out.coeffs[static_cast<std::size_t>(n)] = 1;

    const auto nn = static_cast<std::size_t>(n);
    std::vector<std::vector<int>> nbrs(nn);
    for (int v = 0; v < n; ++v) nbrs[static_cast<std::size_t>(v)] = g.neighbors(v);

    try {
        // M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k.
        std::vector<Integer> m(nn * nn, 0);
        std::vector<Integer> am(nn * nn, 0);
        auto times_a = [&](const std::vector<Integer>& x, std::vector<Integer>& y) {
            for (std::size_t i = 0; i < nn; ++i)
                for (std::size_t j = 0; j < nn; ++j) {
                    Integer s = 0;
                    for (int l : nbrs[i]) s = add(s, x[static_cast<std::size_t>(l) * nn + j]);
                    y[i * nn + j] = s;
                }
        };
        for (int k = 1; k <= n; ++k) {
            times_a(m, am);
            const Integer c_prev = out.coeffs[static_cast<std::size_t>(n - k + 1)];
            for (std::size_t i = 0; i < nn; ++i) am[i * nn + i] = add(am[i * nn + i], c_prev);
            std::swap(m, am);
            times_a(m, am);
            Integer trace = 0;
            for (std::size_t i = 0; i < nn; ++i) trace = add(trace, am[i * nn + i]);
            if (trace % k != 0) throw std::logic_error("Faddeev-LeVerrier trace not divisible by k");
            out.coeffs[static_cast<std::size_t>(n - k)] = -(trace / k);
        }
    } catch (const Overflow&) {
        throw CapacityError("char_poly: 128-bit overflow for n=" + std::to_string(n));
    }

    int low = 0;
    while (out.coeffs[static_cast<std::size_t>(low)] == 0) ++low;
    out.rank = n - low;
    const Integer a = out.coeffs[static_cast<std::size_t>(low)];
    out.a_r_abs = a < 0 ? -a : a;
    return out;
}

std::vector<Integer> poly_multiply(const std::vector<Integer>& a, const std::vector<Integer>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Integer> out(a.size() + b.size() - 1, 0);
    try {
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = add(out[i + j], mul(a[i], b[j]));
    } catch (const Overflow&) {
        throw CapacityError("poly_multiply: 128-bit overflow");
    }
    return out;
}

int rank_exact(std::vector<std::int64_t> entries, int rows, int cols) {
    if (rows < 0 || cols < 0 || entries.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols))
        throw InputError("rank_exact: entry count does not match shape");
    try {
        std::vector<Integer> m(entries.begin(), entries.end());
        return bareiss_rank(
            std::move(m), rows, cols, [](Integer a, Integer b) { return mul(a, b); },
            [](Integer a, Integer b) {
                Integer r;
                if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
                return r;
            });
    } catch (const Overflow&) {
        using boost::multiprecision::cpp_int;
        std::vector<cpp_int> m(entries.begin(), entries.end());
        return bareiss_rank(
            std::move(m), rows, cols, [](const cpp_int& a, const cpp_int& b) -> cpp_int { return a * b; },
            [](const cpp_int& a, const cpp_int& b) -> cpp_int { return a - b; });
    }
}

int rank_exact(const Graph& g) {
    const int n = g.order();
    std::vector<std::int64_t> entries(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) entries[static_cast<std::size_t>(i) * n + j] = g.adjacent(i, j) ? 1 : 0;
    return rank_exact(std::move(entries), n, n);
}

Integer product_nonzero_eigenvalues_abs(const Graph& g) {
    if (g.size() == 0) throw InputError("product of nonzero eigenvalues is undefined for an edgeless graph");
    return char_poly(g).a_r_abs;
}

namespace {

struct SizeCount {
    int size = 0;
    Integer count = 1;
};

SizeCount better(SizeCount a, SizeCount b) {
    if (a.size != b.size) return a.size > b.size ? a : b;
    return {a.size, add(a.count, b.count)};
}

SizeCount join(SizeCount a, SizeCount b) { return {a.size + b.size, mul(a.count, b.count)}; }

}  // namespace

Integer tree_max_matching_count(const Graph& g) {
    if (!is_tree(g)) throw InputError("tree_max_matching_count: input is not a tree");
    const int n = g.order();
    std::vector<int> parent(static_cast<std::size_t>(n), -1), order{0};
    parent[0] = 0;
    for (std::size_t head = 0; head < order.size(); ++head)
        for (int w : g.neighbors(order[head]))
            if (parent[static_cast<std::size_t>(w)] < 0) {
                parent[static_cast<std::size_t>(w)] = order[head];
                order.push_back(w);
            }

    // free_[v]: v left unmatched within its subtree; taken_[v]: v matched to a child.
    std::vector<SizeCount> free_(static_cast<std::size_t>(n)), taken_(static_cast<std::size_t>(n));
    std::vector<bool> has_taken(static_cast<std::size_t>(n), false);
    try {
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            const int v = *it;
            std::vector<int> children;
            for (int w : g.neighbors(v))
                if (w != 0 && parent[static_cast<std::size_t>(w)] == v) children.push_back(w);

            auto best_of = [&](int c) {
                const auto cu = static_cast<std::size_t>(c);
                return has_taken[cu] ? better(free_[cu], taken_[cu]) : free_[cu];
            };
            SizeCount all{};
            for (int c : children) all = join(all, best_of(c));
            free_[static_cast<std::size_t>(v)] = all;

            bool any = false;
            SizeCount best{};
            for (int c : children) {
                SizeCount option{1, 1};
                option = join(option, free_[static_cast<std::size_t>(c)]);
                for (int d : children)
                    if (d != c) option = join(option, best_of(d));
                best = any ? better(best, option) : option;
                any = true;
            }
            taken_[static_cast<std::size_t>(v)] = best;
            has_taken[static_cast<std::size_t>(v)] = any;
        }
    } catch (const Overflow&) {
        throw CapacityError("tree_max_matching_count: 128-bit overflow");
    }
    return (has_taken[0] ? better(free_[0], taken_[0]) : free_[0]).count;
}

MatchingInfo matching_info(const Graph& g) {
    const int n = g.order();
    MatchingInfo info;
    if (n == 0) {
        info.has_perfect = true;
        return info;
    }
    if (n > kMatchingMaxOrder) {
        if (!is_tree(g))
            throw CapacityError("matching_info supports n <= " + std::to_string(kMatchingMaxOrder) +
                                " for non-trees, got n=" + std::to_string(n));
        // Size via greedy leaf matching, which is optimal on trees.
        std::vector<int> deg(static_cast<std::size_t>(n));
        std::vector<bool> used(static_cast<std::size_t>(n), false);
        for (int v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
        std::vector<int> leaves;
        for (int v = 0; v < n; ++v)
            if (deg[static_cast<std::size_t>(v)] == 1) leaves.push_back(v);
        int size = 0;
        while (!leaves.empty()) {
            const int leaf = leaves.back();
            leaves.pop_back();
            if (used[static_cast<std::size_t>(leaf)]) continue;
            int mate = -1;
            for (int w : g.neighbors(leaf))
                if (!used[static_cast<std::size_t>(w)]) mate = w;
            if (mate < 0) continue;
            used[static_cast<std::size_t>(leaf)] = used[static_cast<std::size_t>(mate)] = true;
            ++size;
            for (int w : g.neighbors(mate))
                if (!used[static_cast<std::size_t>(w)] && --deg[static_cast<std::size_t>(w)] == 1) leaves.push_back(w);
        }
        info.max_size = size;
        info.max_count = tree_max_matching_count(g);
        info.has_perfect = 2 * size == n;
        return info;
    }

    // Branch on the lowest available vertex: leave it unmatched or pair it
    // with an available neighbor. Memoized over the available set.
    std::vector<SizeCount> memo(std::size_t{1} << n);
    std::vector<bool> done(std::size_t{1} << n, false);
    auto solve = [&](auto&& self, std::uint32_t avail) -> SizeCount {
        if (avail == 0) return {};
        if (done[avail]) return memo[avail];
        const int v = std::countr_zero(avail);
        const std::uint32_t rest = avail & (avail - 1);
        SizeCount best = self(self, rest);
        std::uint32_t cand = static_cast<std::uint32_t>(g.row_mask(v)) & rest;
        while (cand) {
            const int w = std::countr_zero(cand);
            cand &= cand - 1;
            SizeCount sub = self(self, rest & ~(std::uint32_t{1} << w));
            best = better(best, {sub.size + 1, sub.count});
        }
        done[avail] = true;
        return memo[avail] = best;
    };
    const SizeCount r = solve(solve, static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1));
    info.max_size = r.size;
    info.max_count = r.count;
    info.has_perfect = 2 * r.size == n;
    return info;
}

}  // namespace graph_energy
