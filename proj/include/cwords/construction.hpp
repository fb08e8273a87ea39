#ifndef CWORDS_CONSTRUCTION_HPP
#define CWORDS_CONSTRUCTION_HPP

#include <utility>

#include "cwords/word.hpp"

namespace cwords {

bool is_prime(long long n);
long long pow_mod(long long base, long long exp, long long mod);
long long element_order(long long x, long long p);
bool is_qr(long long a, long long p);
long long find_generator(long long p);

// Parameters of the prime construction: the word of length p^2 - p - 1
// avoiding congruential 2-powers mod p is the first-difference sequence of
// e(k) = c^k + a k^2 (mod p), where c = g^2 for the smallest generator g
// and a is the smallest residue class of the right quadratic character.
struct PrimeWordParams {
    long long p = 0;
    long long g = 0;  // smallest generator mod p
    long long c = 0;  // g^2, of order (p-1)/2
    long long a = 0;  // quadratic residue if p = 5,7 (mod 8), non-residue if p = 1,3 (mod 8)
    long long word_len = 0;
};

// p must be an odd prime in [3, 127] (letters are 8-bit). The returned
// word is checked against find_congruential_power(., 2, p) before being
// handed out.
std::pair<PrimeWordParams, Word> construct_prime_word(long long p);

}  // namespace cwords

#endif
