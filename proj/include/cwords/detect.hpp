#ifndef CWORDS_DETECT_HPP
#define CWORDS_DETECT_HPP

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>

#include "cwords/word.hpp"

namespace cwords {

enum class PatternKind { square, abelian, sum_square, congruential };

std::string_view pattern_kind_name(PatternKind kind);

// A located pattern instance. Positions are 1-based; the factor occupies
// w[start .. start + blocks*block_len - 1]. For congruential occurrences
// block_sums holds residues in [0,k); otherwise exact integer sums.
struct Occurrence {
    int start = 0;
    int block_len = 0;
    int blocks = 0;
    std::vector<long long> block_sums;
    PatternKind kind = PatternKind::square;

    int end() const { return start + blocks * block_len - 1; }
};

// Adjacent factor pair x = w[i..j], x' = w[j+1..j_prime] with equal
// nonzero sums; block lengths may differ.
struct AdjacentPairOccurrence {
    int i = 0;
    int j = 0;
    int j_prime = 0;
    long long common_sum = 0;
};

// Each detector reports the occurrence minimizing (end position, then
// block length), or nullopt when the word avoids the pattern.
std::optional<Occurrence> find_square(const Word& w);
std::optional<Occurrence> find_abelian_power(const Word& w, int r);
std::optional<Occurrence> find_sum_square(const Word& w);
std::optional<Occurrence> find_congruential_power(const Word& w, int r, int k);

// Minimizes (j_prime, i, j).
std::optional<AdjacentPairOccurrence> find_adjacent_equal_nonzero_sum(const Word& w);

// Incremental congruential r-power detection for the search module.
// Holds the mod-k prefix sums of the word built so far; push/pop give a
// cloneable depth-first search state. Appending letter a creates a power
// ending at the new position iff the residue after a is in
// forbidden_residues(), a bitmask recomputed in O(n/r) amortized time.
class CongruentialState {
  public:
    CongruentialState(int r, int k);

    int r() const { return r_; }
    int k() const { return k_; }
    int length() const { return static_cast<int>(y_.size()) - 1; }

    std::uint8_t residue_after(Letter next) const;
    std::uint64_t forbidden_residues() const;
    bool would_create(Letter next) const;

    // appends and reports whether a power ending at the new position appeared
    bool push(Letter next);
    void append(Letter next);  // push without the check
    void pop();

  private:
    int r_;
    int k_;
    std::vector<std::uint8_t> y_;
};

// Pure-function form: returns the extended state and the created-power
// flag. (r, k) must match the state's parameters.
std::pair<CongruentialState, bool> extend_check(const CongruentialState& state, Letter next,
                                                int r, int k);

}  // namespace cwords

#endif
