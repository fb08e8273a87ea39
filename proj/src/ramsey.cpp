#include "cwords/ramsey.hpp"

#include <algorithm>
#include <map>

#include "cwords/search.hpp"

namespace cwords {

std::optional<ApWitness> find_mono_ap(const Coloring& coloring, int t) {
    if (t < 2) throw std::invalid_argument("find_mono_ap: t must be >= 2");
    const long long size = (long long)coloring.colors.size();
    const long long base = coloring.index_base;
    for (long long n = base; n < base + size; ++n) {
        long long max_d = (base + size - 1 - n) / (t - 1);
        for (long long d = 1; d <= max_d; ++d) {
            bool mono = true;
            long long c0 = coloring.colors[n - base];
            for (int i = 1; i < t; ++i) {
                if (coloring.colors[n + i * d - base] != c0) {
                    mono = false;
                    break;
                }
            }
            if (mono) return ApWitness{n, d, t};
        }
    }
    return std::nullopt;
}

std::optional<Occurrence> extract_congruential(const Word& w, int r, int k) {
    if (r < 2) throw std::invalid_argument("extract_congruential: r must be >= 2");
    if (k < 2) throw std::invalid_argument("extract_congruential: k must be >= 2");
    Coloring y;
    y.index_base = 0;
    y.colors.reserve(w.size() + 1);
    long long acc = 0;
    y.colors.push_back(0);
    for (Letter a : w) {
        acc = ((acc + a) % k + k) % k;
        y.colors.push_back(acc);
    }
    auto ap = find_mono_ap(y, r + 1);
    if (!ap) return std::nullopt;
    Occurrence occ;
    occ.start = (int)ap->n + 1;
    occ.block_len = (int)ap->d;
    occ.blocks = r;
    occ.block_sums.assign(r, 0);
    occ.kind = PatternKind::congruential;
    return occ;
}

std::vector<std::vector<long long>> gamma_coloring(const Word& w, const RationalVector& v) {
    const int k = (int)v.numerators.size();
    const long long L = v.denominator;
    if (k < 1 || L <= 0)
        throw std::invalid_argument("gamma_coloring: need a nonempty vector over a positive "
                                    "denominator");
    long long num_sum = 0;
    for (long long x : v.numerators) num_sum += x;
    if (num_sum != L)
        throw std::invalid_argument("gamma_coloring: the entries of v must sum to 1 exactly");
    for (Letter a : w)
        if (a < 0 || a >= k)
            throw std::out_of_range("gamma_coloring: letter " + std::to_string((int)a) +
                                    " outside [0," + std::to_string(k) + ")");

    // L*X_l at prefix i is L*count_l - i*num_l; colors are the pairwise
    // differences, all exact integers.
    std::vector<std::vector<long long>> colors;
    colors.reserve(w.size() + 1);
    std::vector<long long> counts(k, 0);
    for (long long i = 0; i <= (long long)w.size(); ++i) {
        if (i > 0) ++counts[w[i - 1]];
        std::vector<long long> color;
        color.reserve((std::size_t)k * (k - 1) / 2);
        for (int l = 0; l < k; ++l) {
            for (int m = l + 1; m < k; ++m) {
                long long xl = L * counts[l] - i * v.numerators[l];
                long long xm = L * counts[m] - i * v.numerators[m];
                color.push_back(xl - xm);
            }
        }
        colors.push_back(std::move(color));
    }
    return colors;
}

Coloring intern_colors(const std::vector<std::vector<long long>>& labels, int index_base) {
    Coloring out;
    out.index_base = index_base;
    out.colors.reserve(labels.size());
    std::map<std::vector<long long>, long long> ids;
    for (const auto& label : labels) {
        auto [it, inserted] = ids.emplace(label, (long long)ids.size());
        out.colors.push_back(it->second);
    }
    return out;
}

std::optional<Occurrence> extract_abelian_power(const Word& w, const RationalVector& v,
                                                int alpha) {
    if (alpha < 2) throw std::invalid_argument("extract_abelian_power: alpha must be >= 2");
    auto colors = gamma_coloring(w, v);
    auto ap = find_mono_ap(intern_colors(colors, 0), alpha + 1);
    if (!ap) return std::nullopt;
    const long long n = ap->n, d = ap->d;
    Occurrence occ;
    occ.start = (int)n + 1;
    occ.block_len = (int)d;
    occ.blocks = alpha;
    occ.block_sums.reserve(alpha);
    for (int b = 0; b < alpha; ++b) {
        long long s = 0;
        for (long long t = 0; t < d; ++t) s += w[n + b * d + t];
        occ.block_sums.push_back(s);
    }
    occ.kind = PatternKind::abelian;
    return occ;
}

namespace {

// DFS over choice vectors x_i in [(i-1)k+1, ik], pruning any t-term AP.
// The deepest AP-free depth pins Omega = depth + 1 once the tree is
// exhausted.
struct OmegaSearch {
    int t, k, n_cap;
    long long budget;
    std::vector<char> present;  // over values [1, n_cap*k]
    std::vector<int> chosen;
    int deepest = 0;
    long long nodes = 0;
    bool capped_out = false;  // budget exhausted or an AP-free choice filled n_cap

    bool completes_ap(int x) const {
        for (int prev : chosen) {
            int d = x - prev;
            bool ap = true;
            for (int j = 2; j < t; ++j) {
                int back = x - j * d;
                if (back < 1 || !present[back]) {
                    ap = false;
                    break;
                }
            }
            if (ap) return true;
        }
        return false;
    }

    void descend(int depth) {
        deepest = std::max(deepest, depth);
        if (depth == n_cap) {
            capped_out = true;  // AP-free choice of maximal allowed length
            return;
        }
        int lo = depth * k + 1, hi = (depth + 1) * k;
        for (int x = lo; x <= hi; ++x) {
            if (nodes >= budget) {
                capped_out = true;
                return;
            }
            ++nodes;
            if (t >= 3 && completes_ap(x)) continue;
            present[x] = 1;
            chosen.push_back(x);
            descend(depth + 1);
            chosen.pop_back();
            present[x] = 0;
            if (capped_out) return;
        }
    }
};

// DFS over 2-colorings of [1, n_cap]; color 0 may not form a t-term AP,
// color 1 may not fill k consecutive positions.
struct W1Search {
    int t, k, n_cap;
    long long budget;
    std::vector<char> color;  // 1-based
    int deepest = 0;
    long long nodes = 0;
    bool capped_out = false;

    bool red_ap(int pos) const {
        for (int d = 1; (long long)(t - 1) * d < pos; ++d) {
            bool ap = true;
            for (int j = 1; j < t; ++j) {
                if (color[pos - j * d] != 0) {
                    ap = false;
                    break;
                }
            }
            if (ap) return true;
        }
        return false;
    }

    bool blue_run(int pos) const {
        if (pos < k) return false;
        for (int j = 1; j < k; ++j)
            if (color[pos - j] != 1) return false;
        return true;
    }

    void descend(int depth) {
        deepest = std::max(deepest, depth);
        if (depth == n_cap) {
            capped_out = true;
            return;
        }
        int pos = depth + 1;
        for (int c = 0; c <= 1; ++c) {
            if (nodes >= budget) {
                capped_out = true;
                return;
            }
            ++nodes;
            color[pos] = (char)c;
            bool bad = (c == 0) ? red_ap(pos) : blue_run(pos);
            if (!bad) descend(depth + 1);
            if (capped_out) return;
        }
    }
};

}  // namespace

BruteForceResult omega(int t, int k, int n_cap, long long node_budget) {
    if (t < 3) throw std::invalid_argument("omega: t must be >= 3");
    if (k < 1) throw std::invalid_argument("omega: k must be >= 1");
    if (n_cap < 1) throw std::invalid_argument("omega: n_cap must be >= 1");
    OmegaSearch search{t, k, n_cap, node_budget, {}, {}, 0, 0, false};
    search.present.assign((std::size_t)n_cap * k + 1, 0);
    search.descend(0);
    BruteForceResult res;
    res.nodes = search.nodes;
    res.capped = search.capped_out;
    if (!search.capped_out) res.value = search.deepest + 1;
    return res;
}

BruteForceResult w1(int t, int k, int n_cap, long long node_budget) {
    if (t < 3) throw std::invalid_argument("w1: t must be >= 3");
    if (k < 1) throw std::invalid_argument("w1: k must be >= 1");
    if (n_cap < 1) throw std::invalid_argument("w1: n_cap must be >= 1");
    W1Search search{t, k, n_cap, node_budget, {}, 0, 0, false};
    search.color.assign((std::size_t)n_cap + 1, 0);
    search.descend(0);
    BruteForceResult res;
    res.nodes = search.nodes;
    res.capped = search.capped_out;
    if (!search.capped_out) res.value = search.deepest + 1;
    return res;
}

BoundsReport check_lemma_bounds(int k, int t, const LemmaBoundsOptions& options) {
    if (k < 2) throw std::invalid_argument("check_lemma_bounds: k must be >= 2");
    if (t < 2) throw std::invalid_argument("check_lemma_bounds: t must be >= 2");
    BoundsReport report;
    int half = k / 2;

    auto run_check = [&](const std::string& name, int power_r, int ap_t) {
        BoundCheck check;
        check.name = name;
        SearchConfig cfg;
        cfg.r = power_r;
        cfg.k = k;
        cfg.node_budget = options.search_budget;
        cfg.threads = options.threads;
        SearchResult longest = longest_avoiding(cfg);
        BruteForceResult om =
            half >= 1 ? omega(ap_t, half, options.omega_cap, options.omega_budget)
                      : BruteForceResult{};

        check.lhs = longest.l + 1;  // minimum n forcing the power
        check.capped = !longest.complete || om.capped || (half >= 1 && !om.value);
        if (half < 1) {
            check.holds = true;
            check.detail = "floor(k/2) = 0; nothing to compare";
            check.rhs = 0;
        } else if (om.value) {
            check.rhs = *om.value - 1;
            check.holds = check.lhs >= check.rhs;
            check.detail = "L = l+1 = " + std::to_string(check.lhs) +
                           (longest.complete ? "" : " (search capped; lower bound)") +
                           ", Omega(" + std::to_string(ap_t) + "," + std::to_string(half) +
                           ") = " + std::to_string(*om.value);
        } else {
            check.rhs = 0;
            check.holds = true;  // nothing resolved to compare
            check.detail = "Omega(" + std::to_string(ap_t) + "," + std::to_string(half) +
                           ") not resolved within caps";
        }
        report.checks.push_back(check);
    };

    run_check("L(" + std::to_string(k) + ") >= Omega(3," + std::to_string(half) + ") - 1", 2, 3);
    run_check("L(" + std::to_string(k) + "," + std::to_string(t) + ") >= Omega(" +
                  std::to_string(t + 1) + "," + std::to_string(half) + ") - 1",
              t, t + 1);

    for (const auto& check : report.checks) {
        if (!check.capped && !check.holds) report.any_violation = true;
        if (check.capped) report.partial = true;
    }
    return report;
}

}  // namespace cwords
