#ifndef CWORDS_MORPHISMS_HPP
#define CWORDS_MORPHISMS_HPP

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cwords/word.hpp"

namespace cwords {

// The square-free constructions run over {-1, 0, 1} plus a primed copy of
// zero. The primed letter is a distinct letter value with its own display
// name; codings collapse it back to 0.
inline constexpr Letter primed_zero = 2;

// Letter-to-word map over a fixed alphabet, with optional display names
// for letters (used for the primed zero).
struct Morphism {
    std::map<Letter, Word> images;
    std::map<Letter, std::string> names;

    bool contains(Letter a) const { return images.count(a) != 0; }
    const Word& image(Letter a) const;

    Word apply(const Word& w) const;

    // prolongable on s iff image(s) starts with s and has length >= 2
    bool prolongable_on(Letter s) const;

    std::string display(Letter a) const;
    std::string render(const Word& w) const;  // csv of display names
};

// Letter-to-letter map.
struct Coding {
    std::map<Letter, Letter> table;
    Word apply(const Word& w) const;
};

// Builtins from the square-free sum-avoiding construction.
const Morphism& phi_morphism();   // uniform, over {-1,0,1,0'}
const Morphism& zeta_morphism();  // non-uniform companion of phi
const Morphism& psi_morphism();   // zeta with 0' identified with 0
const Coding& tau_coding();       // erases the prime
const Morphism* builtin_morphism(const std::string& name);

// Text format, one line per letter: "letter -> l1 l2 l3 ...". Letters are
// decimal integers or arbitrary non-integer tokens (such as 0'), which get
// assigned fresh letter values. '#' starts a comment.
Morphism load_morphism(std::istream& in);
Morphism load_morphism_file(const std::string& path);

// default seed for a loaded morphism: the smallest prolongable letter,
// else the smallest letter
Letter default_seed(const Morphism& m);

// Length-n prefix of the fixed point m^omega(seed). Repeated application
// with truncation once n letters are available; handles non-uniform image
// lengths.
Word fixed_point_prefix(const Morphism& m, Letter seed, long long n);

// apply m n times to w
Word iterate_morphism(const Morphism& m, int n, Word w);

// In a word over {-1,0,1}, replace -1 by k-1, giving a word over Sigma_k.
Word map_to_sigma_k(const Word& w, int k);

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct Report {
    std::vector<Check> checks;
    bool ok() const;
};

// Checks phi^n(zeta(a)) == zeta^{n+1}(a) for every letter a and
// phi^n(0) == zeta^n(0), for all n <= n_max.
Report verify_zeta_lemma(int n_max);

// Checks tau(phi^n(0)) == psi^n(0) for all n <= n_max.
Report verify_tau_phi_psi(int n_max);

// Generates the length-n prefix of psi^omega(0) and checks that it is
// squarefree, that its running sums stay in {0,1}, and that it has no
// adjacent equal-nonzero-sum factor pair. Finite-prefix certificate only.
Report verify_psi_prefix(long long n);

}  // namespace cwords

#endif
