#include "cwords/detect.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <unordered_map>

namespace cwords {

std::string_view pattern_kind_name(PatternKind kind) {
    switch (kind) {
        case PatternKind::square: return "square";
        case PatternKind::abelian: return "abelian";
        case PatternKind::sum_square: return "sum-square";
        case PatternKind::congruential: return "congruential";
    }
    return "?";
}

namespace {

long long block_sum(const Word& w, int start1, int len) {
    long long s = 0;
    for (int t = 0; t < len; ++t) s += w[start1 - 1 + t];
    return s;
}

std::vector<long long> all_block_sums(const Word& w, int start1, int m, int r) {
    std::vector<long long> sums(r);
    for (int i = 0; i < r; ++i) sums[i] = block_sum(w, start1 + i * m, m);
    return sums;
}

}  // namespace

std::optional<Occurrence> find_square(const Word& w) {
    const int n = (int)w.size();
    int best_end = std::numeric_limits<int>::max();
    int best_m = 0, best_start = 0;

    // For each block length m, run[i] counts how far w[i..] agrees with
    // w[i+m..]; a square of block length m starts at i iff run[i] >= m.
    std::vector<int> run(n + 1);
    for (int m = 1; 2 * m <= n; ++m) {
        if (2 * m >= best_end) break;  // minimal end for this m is 2m
        run[n - m] = 0;
        for (int i = n - m - 1; i >= 0; --i) run[i] = (w[i] == w[i + m]) ? run[i + 1] + 1 : 0;
        for (int s0 = 0; s0 + 2 * m <= n; ++s0) {
            if (run[s0] >= m) {
                int end = s0 + 2 * m;  // 1-based end position
                if (end < best_end) {
                    best_end = end;
                    best_m = m;
                    best_start = s0 + 1;
                }
                break;  // later starts only give later ends for this m
            }
        }
    }
    if (best_m == 0) return std::nullopt;
    Occurrence occ;
    occ.start = best_start;
    occ.block_len = best_m;
    occ.blocks = 2;
    occ.block_sums = all_block_sums(w, best_start, best_m, 2);
    occ.kind = PatternKind::square;
    return occ;
}

std::optional<Occurrence> find_abelian_power(const Word& w, int r) {
    if (r < 2) throw std::invalid_argument("find_abelian_power: r must be >= 2");
    const int n = (int)w.size();
    int best_end = std::numeric_limits<int>::max();
    int best_m = 0, best_start = 0;

    // Sliding multiset comparison of r adjacent blocks. cnt[b] counts the
    // letters of block b (offset by 128); diff[b] counts letters on which
    // blocks b and b+1 disagree, so a hit is "all diffs zero".
    std::vector<std::array<int, 256>> cnt(r);
    std::vector<int> diff(r - 1);
    for (int m = 1; r * m <= n; ++m) {
        if (r * m >= best_end) break;
        for (auto& c : cnt) c.fill(0);
        std::fill(diff.begin(), diff.end(), 0);
        auto bump = [&](int b, int letter, int delta) {
            int c = letter + 128;
            if (b > 0) diff[b - 1] -= cnt[b - 1][c] != cnt[b][c];
            if (b + 1 < r) diff[b] -= cnt[b][c] != cnt[b + 1][c];
            cnt[b][c] += delta;
            if (b > 0) diff[b - 1] += cnt[b - 1][c] != cnt[b][c];
            if (b + 1 < r) diff[b] += cnt[b][c] != cnt[b + 1][c];
        };
        for (int b = 0; b < r; ++b)
            for (int t = 0; t < m; ++t) bump(b, w[b * m + t], +1);
        bool hit = false;
        int s0 = 0;
        for (;; ++s0) {
            if (std::all_of(diff.begin(), diff.end(), [](int d) { return d == 0; })) {
                hit = true;
                break;
            }
            if (s0 + r * m >= n) break;
            for (int b = 0; b < r; ++b) {
                bump(b, w[s0 + b * m], -1);
                bump(b, w[s0 + (b + 1) * m], +1);
            }
        }
        if (hit) {
            int end = s0 + r * m;
            if (end < best_end) {
                best_end = end;
                best_m = m;
                best_start = s0 + 1;
            }
        }
    }
    if (best_m == 0) return std::nullopt;
    Occurrence occ;
    occ.start = best_start;
    occ.block_len = best_m;
    occ.blocks = r;
    occ.block_sums = all_block_sums(w, best_start, best_m, r);
    occ.kind = PatternKind::abelian;
    return occ;
}

std::optional<Occurrence> find_sum_square(const Word& w) {
    const int n = (int)w.size();
    PrefixSums p = prefix_sums(w);
    for (int e = 2; e <= n; ++e) {
        for (int m = 1; 2 * m <= e; ++m) {
            // equal sums <=> P[e-2m], P[e-m], P[e] in arithmetic progression
            if (p[e - 2 * m] + p[e] == 2 * p[e - m]) {
                long long s = p[e] - p[e - m];
                Occurrence occ;
                occ.start = e - 2 * m + 1;
                occ.block_len = m;
                occ.blocks = 2;
                occ.block_sums = {s, s};
                occ.kind = PatternKind::sum_square;
                return occ;
            }
        }
    }
    return std::nullopt;
}

std::optional<Occurrence> find_congruential_power(const Word& w, int r, int k) {
    if (r < 2) throw std::invalid_argument("find_congruential_power: r must be >= 2");
    if (k < 2) throw std::invalid_argument("find_congruential_power: k must be >= 2");
    const int n = (int)w.size();
    std::vector<int> y(n + 1, 0);
    for (int i = 0; i < n; ++i) y[i + 1] = ((y[i] + w[i]) % k + k) % k;
    for (int e = 2; e <= n; ++e) {
        for (int m = 1; r * m <= e; ++m) {
            int base = e - r * m;
            int d0 = (y[base + m] - y[base] + k) % k;
            bool ok = true;
            for (int i = 2; i <= r; ++i) {
                if ((y[base + i * m] - y[base + (i - 1) * m] + k) % k != d0) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                Occurrence occ;
                occ.start = base + 1;
                occ.block_len = m;
                occ.blocks = r;
                occ.block_sums.assign(r, d0);
                occ.kind = PatternKind::congruential;
                return occ;
            }
        }
    }
    return std::nullopt;
}

std::optional<AdjacentPairOccurrence> find_adjacent_equal_nonzero_sum(const Word& w) {
    const int n = (int)w.size();
    if (n < 2) return std::nullopt;
    PrefixSums v = prefix_sums(w);

    // Equal adjacent sums s != 0 <=> V[i-1], V[j], V[j'] in arithmetic
    // progression with nonzero difference. Only the first position of each
    // prefix-sum value matters, since we minimize i.
    long long vmin = v[0], vmax = v[0];
    for (long long x : v) {
        vmin = std::min(vmin, x);
        vmax = std::max(vmax, x);
    }
    const long long span = vmax - vmin + 1;
    std::vector<int> first_dense;
    std::unordered_map<long long, int> first_sparse;
    bool dense = span <= 4 * (long long)n + 16;
    if (dense) {
        first_dense.assign(span, -1);
        for (int i = 0; i <= n; ++i) {
            int& slot = first_dense[v[i] - vmin];
            if (slot < 0) slot = i;
        }
    } else {
        for (int i = n; i >= 0; --i) first_sparse[v[i]] = i;
    }
    auto first_pos = [&](long long value) -> int {
        if (dense) {
            if (value < vmin || value > vmax) return -1;
            return first_dense[value - vmin];
        }
        auto it = first_sparse.find(value);
        return it == first_sparse.end() ? -1 : it->second;
    };

    for (int jp = 2; jp <= n; ++jp) {
        long long vjp = v[jp];
        int best_i = std::numeric_limits<int>::max();
        int best_j = 0;
        for (int j = 1; j < jp; ++j) {
            long long vj = v[j];
            if (vj == vjp) continue;  // zero common sum excluded
            int p = first_pos(2 * vj - vjp);
            if (p >= 0 && p < j && p + 1 < best_i) {
                best_i = p + 1;
                best_j = j;
            }
        }
        if (best_j != 0) {
            AdjacentPairOccurrence occ;
            occ.i = best_i;
            occ.j = best_j;
            occ.j_prime = jp;
            occ.common_sum = v[best_j] - v[best_i - 1];
            return occ;
        }
    }
    return std::nullopt;
}

CongruentialState::CongruentialState(int r, int k) : r_(r), k_(k) {
    if (r < 2) throw std::invalid_argument("CongruentialState: r must be >= 2");
    if (k < 2 || k > 64) throw std::invalid_argument("CongruentialState: k must be in [2,64]");
    y_.push_back(0);
}

std::uint8_t CongruentialState::residue_after(Letter next) const {
    int v = (y_.back() + next) % k_;
    if (v < 0) v += k_;
    return (std::uint8_t)v;
}

std::uint64_t CongruentialState::forbidden_residues() const {
    const int e = length() + 1;  // index of the residue being appended
    std::uint64_t mask = 0;
    for (int m = 1; m * r_ <= e; ++m) {
        int base = e - r_ * m;
        int d = y_[base + m] - y_[base];
        if (d < 0) d += k_;
        bool aligned = true;
        for (int i = 2; i <= r_ - 1; ++i) {
            int di = y_[base + i * m] - y_[base + (i - 1) * m];
            if (di < 0) di += k_;
            if (di != d) {
                aligned = false;
                break;
            }
        }
        if (!aligned) continue;
        int bad = y_[e - m] + d;
        if (bad >= k_) bad -= k_;
        mask |= 1ull << bad;
    }
    return mask;
}

bool CongruentialState::would_create(Letter next) const {
    return (forbidden_residues() >> residue_after(next)) & 1u;
}

bool CongruentialState::push(Letter next) {
    bool created = would_create(next);
    append(next);
    return created;
}

void CongruentialState::append(Letter next) { y_.push_back(residue_after(next)); }

void CongruentialState::pop() {
    if (y_.size() <= 1) throw std::logic_error("CongruentialState::pop on empty state");
    y_.pop_back();
}

std::pair<CongruentialState, bool> extend_check(const CongruentialState& state, Letter next,
                                                int r, int k) {
    if (r != state.r() || k != state.k())
        throw std::invalid_argument("extend_check: (r,k) do not match the state");
    CongruentialState out = state;
    bool created = out.push(next);
    return {std::move(out), created};
}

}  // namespace cwords
