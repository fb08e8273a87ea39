#ifndef CWORDS_WORD_HPP
#define CWORDS_WORD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cwords {

// Letters are signed 8-bit values. The alphabets used here never leave
// [-1, 7], but csv input accepts the full range.
using Letter = std::int8_t;
using Word = std::vector<Letter>;

// counts[j] = occurrences of letter j
using ParikhVector = std::vector<long long>;

// sums[i] = sum of the first i letters; sums[0] = 0
using PrefixSums = std::vector<long long>;

enum class Style { compact, csv };

struct ParseError : std::runtime_error {
    ParseError(std::size_t offset, const std::string& what)
        : std::runtime_error("parse error at offset " + std::to_string(offset) + ": " + what),
          offset(offset) {}
    std::size_t offset;
};

ParikhVector parikh(const Word& w, int alphabet_size);
PrefixSums prefix_sums(const Word& w);

// Two text styles: compact digit strings ("0102010") and csv signed
// decimals ("0,1,-1,1"). parse_word auto-detects by the presence of a
// comma or minus sign. A one-letter csv word with value >= 10 is
// rendered with a trailing comma so it round-trips.
Word parse_word(std::string_view text);
std::string render_word(const Word& w, Style style);

}  // namespace cwords

#endif
