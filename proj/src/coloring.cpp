#include "graph_energy/coloring.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "graph_energy/errors.hpp"
#include "graph_energy/spectrum.hpp"
#include "graph_energy/tolerances.hpp"

namespace graph_energy {

namespace {

int greedy_clique(const Graph& g) {
    const int n = g.order();
    int best = n > 0 ? 1 : 0;
    for (int start = 0; start < n; ++start) {
        std::uint64_t candidates = g.row_mask(start);
        int size = 1;
        while (candidates) {
            int pick = -1;
            int pick_score = -1;
            for (std::uint64_t c = candidates; c; c &= c - 1) {
                const int v = std::countr_zero(c);
                const int score = std::popcount(g.row_mask(v) & candidates);
                if (score > pick_score) {
                    pick = v;
                    pick_score = score;
                }
            }
            candidates &= g.row_mask(pick);
            ++size;
        }
        best = std::max(best, size);
    }
    return best;
}

class Dsatur {
public:
    explicit Dsatur(const Graph& g) : g_(g), n_(g.order()) {
        degree_.resize(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) degree_[static_cast<std::size_t>(v)] = g.degree(v);
    }

    // Highest saturation, then highest degree, then lowest index.
    int select(const std::vector<int>& color, const std::vector<std::uint64_t>& forbidden) const {
        int pick = -1;
        for (int v = 0; v < n_; ++v) {
            const auto vu = static_cast<std::size_t>(v);
            if (color[vu] >= 0) continue;
            if (pick < 0) {
                pick = v;
                continue;
            }
            const auto pu = static_cast<std::size_t>(pick);
            const int sv = std::popcount(forbidden[vu]);
            const int sp = std::popcount(forbidden[pu]);
            if (sv > sp || (sv == sp && degree_[vu] > degree_[pu])) pick = v;
        }
        return pick;
    }

    void assign(int v, int c, std::vector<int>& color, std::vector<std::uint64_t>& forbidden) const {
        color[static_cast<std::size_t>(v)] = c;
        for (std::uint64_t nb = g_.row_mask(v); nb; nb &= nb - 1)
            forbidden[static_cast<std::size_t>(std::countr_zero(nb))] |= std::uint64_t{1} << c;
    }

    std::vector<int> greedy() const {
        std::vector<int> color(static_cast<std::size_t>(n_), -1);
        std::vector<std::uint64_t> forbidden(static_cast<std::size_t>(n_), 0);
        for (int step = 0; step < n_; ++step) {
            const int v = select(color, forbidden);
            assign(v, std::countr_one(forbidden[static_cast<std::size_t>(v)]), color, forbidden);
        }
        return color;
    }

    ColoringResult solve() {
        ColoringResult out;
        if (n_ == 0) return out;
        out.lower_bound_clique = greedy_clique(g_);
        best_ = greedy();
        best_count_ = 1 + *std::max_element(best_.begin(), best_.end());
        lower_ = out.lower_bound_clique;
        if (best_count_ > lower_) {
            std::vector<int> color(static_cast<std::size_t>(n_), -1);
            std::vector<std::uint64_t> forbidden(static_cast<std::size_t>(n_), 0);
            branch(color, forbidden, 0, 0);
        }
        out.chi = best_count_;
        out.witness = best_;
        return out;
    }

private:
    void branch(std::vector<int>& color, std::vector<std::uint64_t>& forbidden, int colored, int used) {
        if (best_count_ == lower_) return;
        if (++nodes_ > kColoringNodeBudget)
            throw CapacityError("chromatic_number: search budget exhausted for n=" + std::to_string(n_));
        if (colored == n_) {
            best_ = color;
            best_count_ = used;
            return;
        }
        const int v = select(color, forbidden);
        const auto vu = static_cast<std::size_t>(v);
        // A fresh color is only ever the next unused one.
        const int limit = std::min(used + 1, best_count_ - 1);
        for (int c = 0; c < limit; ++c) {
            if ((forbidden[vu] >> c) & 1U) continue;
            auto saved_color = color;
            auto saved_forbidden = forbidden;
            assign(v, c, color, forbidden);
            branch(color, forbidden, colored + 1, std::max(used, c + 1));
            color = std::move(saved_color);
            forbidden = std::move(saved_forbidden);
            if (best_count_ == lower_) return;
        }
    }

    const Graph& g_;
    int n_;
    std::vector<int> degree_;
    std::vector<int> best_;
    int best_count_ = 0;
    int lower_ = 0;
    std::uint64_t nodes_ = 0;
};

}  // namespace

ColoringResult chromatic_number(const Graph& g) {
    if (g.order() > 64)
        throw CapacityError("chromatic_number supports n <= 64, got n=" + std::to_string(g.order()));
    return Dsatur(g).solve();
}

int greedy_color_count(const Graph& g) {
    if (g.order() == 0) return 0;
    const auto color = Dsatur(g).greedy();
    return 1 + *std::max_element(color.begin(), color.end());
}

bool check_wilf(const Graph& g) {
    const int chi = chromatic_number(g).chi;
    const double lambda1 = eigenvalues(g, {.certify = false}).largest();
    return chi <= lambda1 + 1.0 + kTolerances.zero_eigenvalue;
}

NordhausGaddum nordhaus_gaddum(const Graph& g) {
    NordhausGaddum out;
    out.chi = chromatic_number(g).chi;
    out.chi_complement = chromatic_number(complement(g)).chi;
    out.sum = out.chi + out.chi_complement;
    out.attains_equality = out.sum == g.order() + 1;
    return out;
}

}  // namespace graph_energy
