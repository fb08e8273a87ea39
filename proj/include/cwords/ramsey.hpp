#ifndef CWORDS_RAMSEY_HPP
#define CWORDS_RAMSEY_HPP

#include <optional>
#include <string>

#include "cwords/detect.hpp"
#include "cwords/word.hpp"

namespace cwords {

// Finite coloring of an integer interval starting at index_base.
struct Coloring {
    std::vector<long long> colors;
    int index_base = 0;
};

// Monochromatic arithmetic progression n, n+d, ..., n+(t-1)d.
struct ApWitness {
    long long n = 0;
    long long d = 0;
    int t = 0;
};

// Minimal witness under (n, then d), or nullopt if none fits.
std::optional<ApWitness> find_mono_ap(const Coloring& coloring, int t);

// Runs the mod-k prefix-sum coloring of w, finds an (r+1)-term
// monochromatic AP in it, and converts the AP to a congruential r-power
// whose block sums are all 0 mod k. nullopt when no witness fits in |w|.
std::optional<Occurrence> extract_congruential(const Word& w, int r, int k);

// v in Q^k as numerators over a common positive denominator.
struct RationalVector {
    std::vector<long long> numerators;
    long long denominator = 1;
};

// Exact integer color vectors: entry (l,m), l < m, of the color of prefix
// index i is L*(X_l - X_m) where X = parikh(w[1..i]) - i*v. Requires
// sum(v) = 1, else the deviation is unbounded and the coloring infinite.
std::vector<std::vector<long long>> gamma_coloring(const Word& w, const RationalVector& v);

// Interns arbitrary labels into small integer colors, first-seen order.
Coloring intern_colors(const std::vector<std::vector<long long>>& labels, int index_base);

// Finds an (alpha+1)-term monochromatic AP in the gamma coloring and
// returns the abelian alpha-power it spans; every block has Parikh vector
// exactly d*v. nullopt when no witness fits in |w|.
std::optional<Occurrence> extract_abelian_power(const Word& w, const RationalVector& v,
                                                int alpha);

struct BruteForceResult {
    std::optional<int> value;
    bool capped = false;  // cap or budget reached before the value was pinned
    long long nodes = 0;
};

// Smallest n such that every choice x_1..x_n with x_i in [(i-1)k+1, ik]
// contains a t-term arithmetic progression. Exhaustive over choice
// vectors with early AP pruning.
BruteForceResult omega(int t, int k, int n_cap, long long node_budget = 50'000'000);

// Smallest n such that every 2-coloring of [1,n] has a t-term AP of the
// first color or k consecutive integers of the second color.
BruteForceResult w1(int t, int k, int n_cap, long long node_budget = 50'000'000);

struct BoundCheck {
    std::string name;
    long long lhs = 0;
    long long rhs = 0;
    bool holds = false;
    bool capped = false;
    std::string detail;
};

struct BoundsReport {
    std::vector<BoundCheck> checks;
    bool any_violation = false;  // a resolved check that fails
    bool partial = false;        // some quantity hit a cap
};

struct LemmaBoundsOptions {
    int omega_cap = 25;
    long long omega_budget = 50'000'000;
    std::optional<long long> search_budget;
    int threads = 1;
};

// Compares L(k) = l(2,k)+1 against Omega(3, floor(k/2)) - 1 and
// L(k,t) = l(t,k)+1 against Omega(t+1, floor(k/2)) - 1, computing the
// search side exactly and the Omega side by brute force.
BoundsReport check_lemma_bounds(int k, int t, const LemmaBoundsOptions& options = {});

}  // namespace cwords

#endif
