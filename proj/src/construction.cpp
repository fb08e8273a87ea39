#include "cwords/construction.hpp"

#include <stdexcept>
#include <string>

#include "cwords/detect.hpp"

namespace cwords {

bool is_prime(long long n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (long long d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

long long pow_mod(long long base, long long exp, long long mod) {
    if (mod <= 0) throw std::invalid_argument("pow_mod: modulus must be positive");
    long long result = 1 % mod;
    base %= mod;
    if (base < 0) base += mod;
    while (exp > 0) {
        if (exp & 1) result = result * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return result;
}

long long element_order(long long x, long long p) {
    if (!is_prime(p)) throw std::invalid_argument("element_order: p must be prime");
    if (x < 1 || x >= p) throw std::invalid_argument("element_order: x must be in [1,p)");
    long long value = x % p;
    long long order = 1;
    while (value != 1) {
        value = value * (x % p) % p;
        ++order;
        if (order > p) throw std::logic_error("element_order: order exceeded p");
    }
    return order;
}

bool is_qr(long long a, long long p) {
    if (!is_prime(p) || p == 2) throw std::invalid_argument("is_qr: p must be an odd prime");
    if (a % p == 0) throw std::invalid_argument("is_qr: a must be nonzero mod p");
    return pow_mod(a, (p - 1) / 2, p) == 1;
}

long long find_generator(long long p) {
    if (!is_prime(p)) throw std::invalid_argument("find_generator: p must be prime");
    if (p == 2) return 1;
    for (long long g = 2; g < p; ++g)
        if (element_order(g, p) == p - 1) return g;
    throw std::logic_error("find_generator: no generator found");
}

std::pair<PrimeWordParams, Word> construct_prime_word(long long p) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw std::invalid_argument("construct_prime_word: p must be an odd prime >= 3");
    if (p > 127)
        throw std::invalid_argument(
            "construct_prime_word: p must be <= 127 so letters fit the 8-bit word type");

    PrimeWordParams params;
    params.p = p;
    params.g = find_generator(p);
    params.c = params.g * params.g % p;

    bool want_qr = (p % 8 == 5) || (p % 8 == 7);
    long long a = 0;
    for (long long cand = 1; cand < p; ++cand) {
        if (is_qr(cand, p) == want_qr) {
            a = cand;
            break;
        }
    }
    if (a == 0) throw std::logic_error("construct_prime_word: no residue class candidate");
    params.a = a;

    const long long count = p * p - p;  // e(k) for k = 1..count
    params.word_len = count - 1;

    std::vector<long long> e(count + 1, 0);
    long long ck = 1;
    for (long long k = 1; k <= count; ++k) {
        ck = ck * params.c % p;
        e[k] = (ck + a % p * (k % p) % p * (k % p)) % p;
    }
    Word word;
    word.reserve(params.word_len);
    for (long long k = 1; k <= count - 1; ++k) {
        long long f = (e[k + 1] - e[k]) % p;
        if (f < 0) f += p;
        word.push_back((Letter)f);
    }

    if (find_congruential_power(word, 2, (int)p))
        throw std::logic_error("construct_prime_word: constructed word contains a congruential "
                               "square mod " + std::to_string(p));
    return {params, std::move(word)};
}

}  // namespace cwords
