#include "cwords/search.hpp"

#include <algorithm>
#include <atomic>
#include <memory>
#include <mutex>
#include <ostream>
#include <thread>
#include <unordered_map>

namespace cwords {

namespace {

// One DFS worker. Letters are tried in increasing order, so the first
// word found at any new depth is the lexicographically least of that
// length; recording on entry keeps that property.
struct DfsEngine {
    int k;
    std::optional<int> max_len;
    CongruentialState state;
    Word cur;

    int best = 0;
    Word witness;
    long long nodes = 0;      // letter placements examined
    long long budget = -1;    // < 0: unlimited
    bool hit_max_len = false; // some surviving word reached max_len
    bool stopped = false;     // node budget exhausted
    bool fix_first = false;

    std::optional<int> collect_depth;  // phase-1 prefix enumeration
    std::vector<Word>* collected = nullptr;

    std::ostream* progress = nullptr;
    long long progress_every = 0;
    long long progress_countdown = 0;

    DfsEngine(int r, int k, std::optional<int> max_len)
        : k(k), max_len(max_len), state(r, k) {
        progress_countdown = progress_every;
    }

    void enter(int depth) {
        if (depth > best) {
            best = depth;
            witness = cur;
        }
        if (collect_depth && depth == *collect_depth) {
            collected->push_back(cur);
            return;
        }
        std::uint64_t forbidden = state.forbidden_residues();
        if (max_len && depth >= *max_len) {
            // at the cap: only probe whether the word could extend
            for (int a = 0; a < k; ++a) {
                if (!((forbidden >> state.residue_after((Letter)a)) & 1)) {
                    hit_max_len = true;
                    break;
                }
            }
            return;
        }
        int limit = (depth == 0 && fix_first) ? 1 : k;
        for (int a = 0; a < limit; ++a) {
            ++nodes;
            if (budget >= 0 && nodes > budget) {
                stopped = true;
                return;
            }
            if (progress_every > 0 && --progress_countdown <= 0) {
                progress_countdown = progress_every;
                if (progress)
                    *progress << "search: depth=" << depth << " best=" << best
                              << " nodes=" << nodes << '\n';
            }
            if ((forbidden >> state.residue_after((Letter)a)) & 1) continue;
            state.append((Letter)a);
            cur.push_back((Letter)a);
            enter(depth + 1);
            cur.pop_back();
            state.pop();
            if (stopped) return;
        }
    }
};

int auto_split_depth(int k, int threads, std::optional<int> max_len) {
    long long want = 8LL * threads;
    long long leaves = 1;
    int depth = 0;
    while (leaves < want && depth < 8) {
        leaves *= k;
        ++depth;
    }
    if (max_len && depth > *max_len) depth = *max_len;
    return std::max(depth, 1);
}

// Enumerates surviving prefixes at increasing depths until there are
// enough tasks to balance the workers. Returns the chosen depth; the
// final enumerator is left in `enumerator`.
int enumerate_prefixes(const SearchConfig& cfg, std::unique_ptr<DfsEngine>& enumerator,
                       std::vector<Word>& prefixes) {
    int split = cfg.parallel_depth > 0 ? cfg.parallel_depth
                                       : auto_split_depth(cfg.k, cfg.threads, cfg.max_len);
    const long long enough = 256LL * std::max(cfg.threads, 1);
    for (;;) {
        prefixes.clear();
        enumerator = std::make_unique<DfsEngine>(cfg.r, cfg.k, cfg.max_len);
        enumerator->fix_first = cfg.fix_first_letter;
        if (cfg.node_budget) enumerator->budget = *cfg.node_budget;
        enumerator->collect_depth = split;
        enumerator->collected = &prefixes;
        enumerator->enter(0);
        if (cfg.parallel_depth > 0) break;  // fixed by the caller
        if ((long long)prefixes.size() >= enough) break;
        if (prefixes.empty() || enumerator->stopped) break;
        if (split >= 24 || (cfg.max_len && split >= *cfg.max_len)) break;
        ++split;
    }
    return split;
}

SearchResult run_single(const SearchConfig& cfg) {
    DfsEngine engine(cfg.r, cfg.k, cfg.max_len);
    engine.fix_first = cfg.fix_first_letter;
    if (cfg.node_budget) engine.budget = *cfg.node_budget;
    engine.progress = cfg.progress_stream;
    engine.progress_every = cfg.progress_every;
    engine.progress_countdown = cfg.progress_every;
    engine.enter(0);
    SearchResult res;
    res.l = engine.best;
    res.witness = std::move(engine.witness);
    res.nodes = engine.nodes;
    res.complete = !engine.stopped && !engine.hit_max_len;
    return res;
}

// Fixed-depth prefix splitting: every surviving prefix of length `split`
// becomes an independent task; merging the per-task results in prefix
// order yields the same (l, witness) as the sequential search regardless
// of scheduling. A node budget is divided evenly over the tasks, which
// keeps capped runs deterministic too.
SearchResult run_parallel(const SearchConfig& cfg) {
    std::vector<Word> prefixes;
    std::unique_ptr<DfsEngine> enumerator_holder;
    enumerate_prefixes(cfg, enumerator_holder, prefixes);
    DfsEngine& enumerator = *enumerator_holder;

    long long task_budget = -1;
    bool enum_stopped = enumerator.stopped;
    if (cfg.node_budget) {
        long long remaining = *cfg.node_budget - enumerator.nodes;
        if (remaining <= 0 || prefixes.empty()) {
            enum_stopped = enum_stopped || !prefixes.empty();
            prefixes.clear();
        } else {
            task_budget = std::max<long long>(1, remaining / (long long)prefixes.size());
        }
    }

    std::vector<std::unique_ptr<DfsEngine>> tasks(prefixes.size());
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> done{0};
    const std::size_t progress_step =
        cfg.progress_stream ? std::max<std::size_t>(prefixes.size() / 50, 1) : 0;
    std::mutex progress_mutex;
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= prefixes.size()) return;
            auto engine = std::make_unique<DfsEngine>(cfg.r, cfg.k, cfg.max_len);
            engine->budget = task_budget;
            for (Letter a : prefixes[i]) engine->state.append(a);
            engine->cur = prefixes[i];
            engine->enter((int)prefixes[i].size());
            tasks[i] = std::move(engine);
            std::size_t finished = done.fetch_add(1) + 1;
            if (progress_step && finished % progress_step == 0) {
                std::lock_guard<std::mutex> lock(progress_mutex);
                *cfg.progress_stream << "search: tasks " << finished << "/" << prefixes.size()
                                     << '\n';
            }
        }
    };
    std::vector<std::thread> pool;
    int nthreads = std::max(cfg.threads, 1);
    pool.reserve(nthreads);
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    SearchResult res;
    res.l = enumerator.best;
    res.witness = std::move(enumerator.witness);
    res.nodes = enumerator.nodes;
    bool stopped = enum_stopped;
    bool hit_max_len = enumerator.hit_max_len;
    for (const auto& task : tasks) {
        if (task->best > res.l) {
            res.l = task->best;
            res.witness = task->witness;
        }
        res.nodes += task->nodes;
        stopped = stopped || task->stopped;
        hit_max_len = hit_max_len || task->hit_max_len;
    }
    res.complete = !stopped && !hit_max_len;
    return res;
}

}  // namespace

SearchResult longest_avoiding(const SearchConfig& cfg) {
    if (cfg.r < 2) throw std::invalid_argument("longest_avoiding: r must be >= 2");
    if (cfg.k < 2 || cfg.k > 64)
        throw std::invalid_argument("longest_avoiding: k must be in [2,64]");
    if ((cfg.max_len && *cfg.max_len < 0) || (cfg.node_budget && *cfg.node_budget <= 0))
        throw std::invalid_argument("longest_avoiding: caps must be positive");
    if (cfg.threads > 1) return run_parallel(cfg);
    return run_single(cfg);
}

PatternSpec PatternSpec::parse(const std::string& text) {
    auto split = [](const std::string& s) {
        std::vector<std::string> parts;
        std::size_t pos = 0;
        while (true) {
            std::size_t colon = s.find(':', pos);
            parts.push_back(s.substr(pos, colon == std::string::npos ? colon : colon - pos));
            if (colon == std::string::npos) break;
            pos = colon + 1;
        }
        return parts;
    };
    auto to_int = [&text](const std::string& s) {
        try {
            std::size_t used = 0;
            int v = std::stoi(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            return v;
        } catch (const std::exception&) {
            throw std::invalid_argument("bad pattern parameter '" + s + "' in '" + text + "'");
        }
    };
    std::vector<std::string> parts = split(text);
    PatternSpec spec;
    const std::string& head = parts[0];
    if (head == "square" && parts.size() == 1) {
        spec.type = Type::square;
    } else if (head == "abelian" && parts.size() == 2) {
        spec.type = Type::abelian;
        spec.r = to_int(parts[1]);
        if (spec.r < 2) throw std::invalid_argument("abelian power needs r >= 2");
    } else if (head == "sum-square" && parts.size() == 1) {
        spec.type = Type::sum_square;
    } else if (head == "congruential" && parts.size() == 3) {
        spec.type = Type::congruential;
        spec.r = to_int(parts[1]);
        spec.k = to_int(parts[2]);
        if (spec.r < 2 || spec.k < 2)
            throw std::invalid_argument("congruential power needs r >= 2 and k >= 2");
    } else if (head == "adjacent-equal-sum" && parts.size() == 1) {
        spec.type = Type::adjacent_equal_sum;
    } else {
        throw std::invalid_argument(
            "unknown pattern '" + text +
            "' (expected square, abelian:R, sum-square, congruential:R:K, adjacent-equal-sum)");
    }
    return spec;
}

std::string PatternSpec::to_string() const {
    switch (type) {
        case Type::square: return "square";
        case Type::abelian: return "abelian:" + std::to_string(r);
        case Type::sum_square: return "sum-square";
        case Type::congruential:
            return "congruential:" + std::to_string(r) + ":" + std::to_string(k);
        case Type::adjacent_equal_sum: return "adjacent-equal-sum";
    }
    return "?";
}

namespace {

// Incremental suffix checkers for the custom search. Each owns whatever
// state it needs; would_create(a) asks whether appending a completes an
// occurrence ending at the new position.
struct SuffixChecker {
    virtual ~SuffixChecker() = default;
    virtual bool would_create(Letter next) const = 0;
    virtual void push(Letter next) = 0;
    virtual void pop() = 0;
};

struct SquareChecker final : SuffixChecker {
    Word w;
    bool would_create(Letter next) const override {
        int e = (int)w.size() + 1;
        auto get = [&](int i) { return i == e - 1 ? next : w[i]; };
        for (int m = 1; 2 * m <= e; ++m) {
            bool equal = true;
            for (int t = 0; t < m; ++t) {
                if (get(e - 2 * m + t) != get(e - m + t)) {
                    equal = false;
                    break;
                }
            }
            if (equal) return true;
        }
        return false;
    }
    void push(Letter next) override { w.push_back(next); }
    void pop() override { w.pop_back(); }
};

struct AbelianChecker final : SuffixChecker {
    int r;
    Word w;
    explicit AbelianChecker(int r) : r(r) {}
    bool would_create(Letter next) const override {
        int e = (int)w.size() + 1;
        auto get = [&](int i) { return i == e - 1 ? next : w[i]; };
        std::vector<Word> blocks((std::size_t)r);
        for (int m = 1; r * m <= e; ++m) {
            int base = e - r * m;
            for (int b = 0; b < r; ++b) {
                blocks[b].assign((std::size_t)m, 0);
                for (int t = 0; t < m; ++t) blocks[b][t] = get(base + b * m + t);
                std::sort(blocks[b].begin(), blocks[b].end());
            }
            bool equal = true;
            for (int b = 1; b < r; ++b) {
                if (blocks[b] != blocks[0]) {
                    equal = false;
                    break;
                }
            }
            if (equal) return true;
        }
        return false;
    }
    void push(Letter next) override { w.push_back(next); }
    void pop() override { w.pop_back(); }
};

struct SumSquareChecker final : SuffixChecker {
    PrefixSums p{0};
    bool would_create(Letter next) const override {
        int e = (int)p.size();  // prefix index of the appended position
        long long pe = p.back() + next;
        for (int m = 1; 2 * m <= e; ++m) {
            if (p[e - 2 * m] + pe == 2 * p[e - m]) return true;
        }
        return false;
    }
    void push(Letter next) override { p.push_back(p.back() + next); }
    void pop() override { p.pop_back(); }
};

struct CongruentialChecker final : SuffixChecker {
    CongruentialState state;
    CongruentialChecker(int r, int k) : state(r, k) {}
    bool would_create(Letter next) const override { return state.would_create(next); }
    void push(Letter next) override { state.append(next); }
    void pop() override { state.pop(); }
};

struct AdjacentEqualSumChecker final : SuffixChecker {
    PrefixSums v{0};
    std::unordered_map<long long, int> first_pos{{0, 0}};
    bool would_create(Letter next) const override {
        long long ve = v.back() + next;
        int n = (int)v.size() - 1;
        for (int j = 1; j <= n; ++j) {
            if (v[j] == ve) continue;
            auto it = first_pos.find(2 * v[j] - ve);
            if (it != first_pos.end() && it->second < j) return true;
        }
        return false;
    }
    void push(Letter next) override {
        long long value = v.back() + next;
        v.push_back(value);
        first_pos.emplace(value, (int)v.size() - 1);  // keeps the earliest
    }
    void pop() override {
        long long value = v.back();
        int idx = (int)v.size() - 1;
        auto it = first_pos.find(value);
        if (it != first_pos.end() && it->second == idx) first_pos.erase(it);
        v.pop_back();
    }
};

std::unique_ptr<SuffixChecker> make_checker(const PatternSpec& spec) {
    switch (spec.type) {
        case PatternSpec::Type::square: return std::make_unique<SquareChecker>();
        case PatternSpec::Type::abelian: return std::make_unique<AbelianChecker>(spec.r);
        case PatternSpec::Type::sum_square: return std::make_unique<SumSquareChecker>();
        case PatternSpec::Type::congruential:
            return std::make_unique<CongruentialChecker>(spec.r, spec.k);
        case PatternSpec::Type::adjacent_equal_sum:
            return std::make_unique<AdjacentEqualSumChecker>();
    }
    throw std::logic_error("make_checker: unhandled pattern");
}

// Congruential powers are unavoidable over any alphabet; squares and
// short abelian powers are unavoidable on small alphabets. Everything
// else may admit infinite avoiding words, so caps are required.
bool known_bounded(const PatternSpec& spec, std::size_t alphabet_size) {
    if (alphabet_size <= 1) return true;
    switch (spec.type) {
        case PatternSpec::Type::congruential: return true;
        case PatternSpec::Type::square: return alphabet_size <= 2;
        case PatternSpec::Type::abelian:
            return (spec.r == 2 && alphabet_size <= 3) || (spec.r == 3 && alphabet_size <= 2);
        default: return false;
    }
}

struct CustomDfs {
    const std::vector<Letter>& alphabet;
    SuffixChecker& checker;
    std::optional<int> max_len;
    long long budget = -1;

    Word cur{};
    int best = 0;
    Word witness{};
    long long nodes = 0;
    bool hit_max_len = false;
    bool stopped = false;

    void enter(int depth) {
        if (depth > best) {
            best = depth;
            witness = cur;
        }
        if (max_len && depth >= *max_len) {
            for (Letter a : alphabet) {
                if (!checker.would_create(a)) {
                    hit_max_len = true;
                    break;
                }
            }
            return;
        }
        for (Letter a : alphabet) {
            ++nodes;
            if (budget >= 0 && nodes > budget) {
                stopped = true;
                return;
            }
            if (checker.would_create(a)) continue;
            checker.push(a);
            cur.push_back(a);
            enter(depth + 1);
            cur.pop_back();
            checker.pop();
            if (stopped) return;
        }
    }
};

}  // namespace

SearchResult longest_avoiding_custom(const CustomSearchConfig& cfg) {
    if (cfg.alphabet.empty())
        throw std::invalid_argument("longest_avoiding_custom: alphabet must be nonempty");
    for (std::size_t i = 0; i < cfg.alphabet.size(); ++i)
        for (std::size_t j = i + 1; j < cfg.alphabet.size(); ++j)
            if (cfg.alphabet[i] == cfg.alphabet[j])
                throw std::invalid_argument("longest_avoiding_custom: duplicate alphabet letter");
    if (!cfg.max_len && !cfg.node_budget && !known_bounded(cfg.pattern, cfg.alphabet.size()))
        throw std::invalid_argument(
            "longest_avoiding_custom: pattern " + cfg.pattern.to_string() + " over " +
            std::to_string(cfg.alphabet.size()) +
            " letters is not known to be bounded; set max_len or node_budget");

    auto checker = make_checker(cfg.pattern);
    CustomDfs dfs{cfg.alphabet, *checker, cfg.max_len};
    if (cfg.node_budget) dfs.budget = *cfg.node_budget;
    dfs.enter(0);

    SearchResult res;
    res.l = dfs.best;
    res.witness = std::move(dfs.witness);
    res.nodes = dfs.nodes;
    res.complete = !dfs.stopped && !dfs.hit_max_len;
    return res;
}

const std::map<std::pair<int, int>, GoldenRow>& golden_table() {
    static const std::map<std::pair<int, int>, GoldenRow> table = {
        {{2, 2}, {3, "010"}},
        {{2, 3}, {7, "0102010"}},
        {{2, 4}, {16, "0130102013101201"}},
        {{2, 5}, {33, "010214243213143040102142432131430"}},
        {{2, 6}, {35, "01024021240241402401024021240241402"}},
        {{2, 7}, {47, "01021614636032312426404301021614636032312426404"}},
        {{3, 2}, {9, "001101100"}},
        {{3, 3},
         {67, "0010210112021200102022121011202120010201012101120212001021002210112"}},
        {{4, 2},
         {88,
          "0011000110001001110010001100011000100111001000110001100010011100100011000110001001110011"}},
    };
    return table;
}

std::string_view row_status_name(RowStatus status) {
    switch (status) {
        case RowStatus::exact: return "exact";
        case RowStatus::lower_bound: return "lower-bound";
        case RowStatus::mismatch: return "mismatch";
        case RowStatus::unverified: return "unverified";
        case RowStatus::no_golden: return "no-golden";
    }
    return "?";
}

std::vector<TableRow> reproduce_table(const std::vector<std::pair<int, int>>& rows,
                                      std::optional<long long> budget_per_row, int threads) {
    std::vector<TableRow> out;
    out.reserve(rows.size());
    for (auto [r, k] : rows) {
        TableRow row;
        row.r = r;
        row.k = k;
        SearchConfig cfg;
        cfg.r = r;
        cfg.k = k;
        cfg.node_budget = budget_per_row;
        cfg.threads = threads;
        row.result = longest_avoiding(cfg);
        auto it = golden_table().find({r, k});
        if (it == golden_table().end()) {
            row.status = RowStatus::no_golden;
        } else {
            row.golden = it->second;
            std::string witness = render_word(row.result.witness, Style::compact);
            bool same = row.result.l == it->second.l && witness == it->second.witness;
            if (row.result.complete)
                row.status = same ? RowStatus::exact : RowStatus::mismatch;
            else if (same)
                row.status = RowStatus::lower_bound;
            else
                row.status = row.result.l < it->second.l ? RowStatus::unverified
                                                         : RowStatus::mismatch;
        }
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace cwords
