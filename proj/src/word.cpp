#include "cwords/word.hpp"

#include <charconv>

namespace cwords {

ParikhVector parikh(const Word& w, int alphabet_size) {
    if (alphabet_size <= 0)
        throw std::invalid_argument("parikh: alphabet size must be positive");
    ParikhVector counts(alphabet_size, 0);
    for (std::size_t i = 0; i < w.size(); ++i) {
        int a = w[i];
        if (a < 0 || a >= alphabet_size)
            throw std::out_of_range("parikh: letter " + std::to_string(a) + " at position " +
                                    std::to_string(i + 1) + " outside [0," +
                                    std::to_string(alphabet_size) + ")");
        ++counts[static_cast<std::size_t>(a)];
    }
    return counts;
}

PrefixSums prefix_sums(const Word& w) {
    PrefixSums sums(w.size() + 1, 0);
    for (std::size_t i = 0; i < w.size(); ++i) sums[i + 1] = sums[i] + w[i];
    return sums;
}

namespace {

Word parse_compact(std::string_view text) {
    Word w;
    w.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        char ch = text[i];
        if (ch < '0' || ch > '9')
            throw ParseError(i, std::string("expected digit, got '") + ch + "'");
        w.push_back(static_cast<Letter>(ch - '0'));
    }
    return w;
}

Word parse_csv(std::string_view text) {
    Word w;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        std::size_t end = (comma == std::string_view::npos) ? text.size() : comma;
        std::size_t tok_begin = pos, tok_end = end;
        while (tok_begin < tok_end && text[tok_begin] == ' ') ++tok_begin;
        while (tok_end > tok_begin && text[tok_end - 1] == ' ') --tok_end;
        // a trailing comma closes the last token; "1,2," is [1,2]
        if (tok_begin == tok_end) {
            if (comma == std::string_view::npos || comma + 1 != text.size() || w.empty())
                throw ParseError(pos, "empty token");
            break;
        }
        int value = 0;
        auto [ptr, ec] =
            std::from_chars(text.data() + tok_begin, text.data() + tok_end, value);
        if (ec != std::errc{} || ptr != text.data() + tok_end)
            throw ParseError(tok_begin, "malformed integer '" +
                                            std::string(text.substr(tok_begin, tok_end - tok_begin)) +
                                            "'");
        if (value < -128 || value > 127)
            throw ParseError(tok_begin, "letter " + std::to_string(value) + " outside [-128,127]");
        w.push_back(static_cast<Letter>(value));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
        if (pos == text.size()) break;  // trailing comma
    }
    return w;
}

}  // namespace

Word parse_word(std::string_view text) {
    bool csv = text.find(',') != std::string_view::npos ||
               text.find('-') != std::string_view::npos;
    return csv ? parse_csv(text) : parse_compact(text);
}

std::string render_word(const Word& w, Style style) {
    std::string out;
    if (style == Style::compact) {
        out.reserve(w.size());
        for (Letter a : w) {
            if (a < 0 || a > 9)
                throw std::invalid_argument("render_word: letter " + std::to_string(a) +
                                            " not representable in compact style");
            out.push_back(static_cast<char>('0' + a));
        }
        return out;
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(static_cast<int>(w[i]));
    }
    // disambiguate a lone letter >= 10 from a compact digit string
    if (w.size() == 1 && w[0] >= 10) out.push_back(',');
    return out;
}

}  // namespace cwords
