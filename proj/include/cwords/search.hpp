#ifndef CWORDS_SEARCH_HPP
#define CWORDS_SEARCH_HPP

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "cwords/detect.hpp"
#include "cwords/word.hpp"

namespace cwords {

struct SearchConfig {
    int r = 2;
    int k = 2;
    std::optional<int> max_len;
    std::optional<long long> node_budget;
    int threads = 1;
    int parallel_depth = 0;  // 0 = pick automatically when threads > 1
    // Restricts the root to letter 0. Shrinks pure-length runs but is
    // unsound for witness recovery, since letter permutations do not
    // preserve congruential powers in general. Off by default.
    bool fix_first_letter = false;
    // periodic progress to a diagnostic stream (single-threaded runs only)
    std::ostream* progress_stream = nullptr;
    long long progress_every = 0;
};

struct SearchResult {
    int l = 0;
    Word witness;
    long long nodes = 0;
    bool complete = false;  // whole tree exhausted; certifies maximality
};

// Depth-first search in lexicographic letter order over Sigma_k for the
// longest word avoiding congruential r-powers mod k. The witness is the
// lexicographically least word of the reported length.
SearchResult longest_avoiding(const SearchConfig& cfg);

// Pattern predicate grammar shared with the CLI:
//   square | abelian:R | sum-square | congruential:R:K | adjacent-equal-sum
struct PatternSpec {
    enum class Type { square, abelian, sum_square, congruential, adjacent_equal_sum };
    Type type = Type::square;
    int r = 2;
    int k = 2;

    static PatternSpec parse(const std::string& text);
    std::string to_string() const;
};

struct CustomSearchConfig {
    std::vector<Letter> alphabet;  // tried in the given order
    PatternSpec pattern;
    std::optional<int> max_len;
    std::optional<long long> node_budget;
};

// Generic longest-avoiding search. Caps are mandatory unless the pattern
// is known to admit only finitely many avoiding words over the alphabet.
SearchResult longest_avoiding_custom(const CustomSearchConfig& cfg);

struct GoldenRow {
    int l;
    const char* witness;
};

// published l(r,k) and x_{r,k} values
const std::map<std::pair<int, int>, GoldenRow>& golden_table();

enum class RowStatus {
    exact,        // complete run matching the published value
    lower_bound,  // capped run that still reached the published witness
    mismatch,
    unverified,  // capped run below the published length
    no_golden
};
std::string_view row_status_name(RowStatus status);

struct TableRow {
    int r = 0;
    int k = 0;
    SearchResult result;
    std::optional<GoldenRow> golden;
    RowStatus status = RowStatus::no_golden;
};

std::vector<TableRow> reproduce_table(const std::vector<std::pair<int, int>>& rows,
                                      std::optional<long long> budget_per_row, int threads = 1);

}  // namespace cwords

#endif
