#include "cwords/morphisms.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "cwords/detect.hpp"

namespace cwords {

const Word& Morphism::image(Letter a) const {
    auto it = images.find(a);
    if (it == images.end())
        throw std::invalid_argument("morphism has no image for letter " + display(a));
    return it->second;
}

Word Morphism::apply(const Word& w) const {
    Word out;
    std::size_t total = 0;
    for (Letter a : w) total += image(a).size();
    out.reserve(total);
    for (Letter a : w) {
        const Word& img = images.find(a)->second;
        out.insert(out.end(), img.begin(), img.end());
    }
    return out;
}

bool Morphism::prolongable_on(Letter s) const {
    auto it = images.find(s);
    return it != images.end() && it->second.size() >= 2 && it->second[0] == s;
}

std::string Morphism::display(Letter a) const {
    auto it = names.find(a);
    if (it != names.end()) return it->second;
    return std::to_string((int)a);
}

std::string Morphism::render(const Word& w) const {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out.push_back(',');
        out += display(w[i]);
    }
    return out;
}

Word Coding::apply(const Word& w) const {
    Word out;
    out.reserve(w.size());
    for (Letter a : w) {
        auto it = table.find(a);
        if (it == table.end())
            throw std::invalid_argument("coding has no image for letter " + std::to_string((int)a));
        out.push_back(it->second);
    }
    return out;
}

namespace {

const std::map<Letter, std::string> primed_names = {{primed_zero, "0'"}};

Morphism make_phi() {
    Morphism m;
    m.images[0] = {0, 1, primed_zero, -1};
    m.images[1] = {0, 1, -1, 1};
    m.images[primed_zero] = {primed_zero, -1, 0, 1};
    m.images[-1] = {primed_zero, -1, 1, -1};
    m.names = primed_names;
    return m;
}

Morphism make_zeta() {
    Morphism m;
    m.images[0] = {0, 1, primed_zero, -1};
    m.images[primed_zero] = {0, 1, primed_zero, -1};
    m.images[1] = {0, 1, -1, 1, primed_zero, -1};
    m.images[-1] = {1, -1};
    m.names = primed_names;
    return m;
}

Morphism make_psi() {
    Morphism m;
    m.images[0] = {0, 1, 0, -1};
    m.images[1] = {0, 1, -1, 1, 0, -1};
    m.images[-1] = {1, -1};
    return m;
}

Coding make_tau() {
    Coding c;
    c.table[0] = 0;
    c.table[primed_zero] = 0;
    c.table[1] = 1;
    c.table[-1] = -1;
    return c;
}

}  // namespace

const Morphism& phi_morphism() {
    static const Morphism m = make_phi();
    return m;
}

const Morphism& zeta_morphism() {
    static const Morphism m = make_zeta();
    return m;
}

const Morphism& psi_morphism() {
    static const Morphism m = make_psi();
    return m;
}

const Coding& tau_coding() {
    static const Coding c = make_tau();
    return c;
}

const Morphism* builtin_morphism(const std::string& name) {
    if (name == "phi") return &phi_morphism();
    if (name == "zeta") return &zeta_morphism();
    if (name == "psi") return &psi_morphism();
    return nullptr;
}

namespace {

// integer tokens name themselves; anything else (eg "0'") gets a fresh value
struct SymbolTable {
    std::map<std::string, Letter> values;
    std::map<Letter, std::string> names;
    int next_fresh = 100;

    Letter lookup(const std::string& token) {
        auto it = values.find(token);
        if (it != values.end()) return it->second;
        int v = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
        Letter letter;
        if (ec == std::errc{} && ptr == token.data() + token.size()) {
            if (v < -128 || v > 127)
                throw std::invalid_argument("morphism letter " + token + " outside [-128,127]");
            letter = (Letter)v;
        } else {
            if (next_fresh > 127)
                throw std::invalid_argument("too many named letters in morphism definition");
            letter = (Letter)next_fresh++;
            names[letter] = token;
        }
        values[token] = letter;
        return letter;
    }
};

}  // namespace

Morphism load_morphism(std::istream& in) {
    Morphism m;
    SymbolTable symbols;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string src, arrow, tok;
        if (!(ls >> src)) continue;  // blank line
        if (!(ls >> arrow) || arrow != "->")
            throw std::invalid_argument("morphism line " + std::to_string(lineno) +
                                        ": expected 'letter -> l1 l2 ...'");
        Letter source = symbols.lookup(src);
        if (m.images.count(source))
            throw std::invalid_argument("morphism line " + std::to_string(lineno) +
                                        ": duplicate image for " + src);
        Word img;
        while (ls >> tok) img.push_back(symbols.lookup(tok));
        m.images[source] = std::move(img);
    }
    if (m.images.empty()) throw std::invalid_argument("morphism definition is empty");
    for (const auto& [src, img] : m.images)
        for (Letter a : img)
            if (!m.images.count(a))
                throw std::invalid_argument("morphism image letter " +
                                            (symbols.names.count(a) ? symbols.names[a]
                                                                    : std::to_string((int)a)) +
                                            " has no image of its own");
    m.names = symbols.names;
    return m;
}

Morphism load_morphism_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open morphism file " + path);
    return load_morphism(in);
}

Letter default_seed(const Morphism& m) {
    for (const auto& [a, img] : m.images)
        if (m.prolongable_on(a)) return a;
    return m.images.begin()->first;
}

Word fixed_point_prefix(const Morphism& m, Letter seed, long long n) {
    if (n < 0) throw std::invalid_argument("fixed_point_prefix: n must be >= 0");
    if (!m.prolongable_on(seed))
        throw std::invalid_argument("morphism is not prolongable on letter " + m.display(seed));
    if (n == 0) return {};
    Word w{seed};
    while ((long long)w.size() < n) {
        Word next;
        next.reserve(std::min<long long>(n, (long long)w.size() * 4 + 4));
        for (Letter a : w) {
            const Word& img = m.image(a);
            for (Letter b : img) {
                next.push_back(b);
                if ((long long)next.size() == n) break;
            }
            if ((long long)next.size() == n) break;
        }
        if (next.size() <= w.size())
            throw std::invalid_argument("morphism does not grow from seed " + m.display(seed));
        w = std::move(next);
    }
    return w;
}

Word iterate_morphism(const Morphism& m, int n, Word w) {
    for (int i = 0; i < n; ++i) w = m.apply(w);
    return w;
}

Word map_to_sigma_k(const Word& w, int k) {
    if (k < 2) throw std::invalid_argument("map_to_sigma_k: k must be >= 2");
    Word out;
    out.reserve(w.size());
    for (Letter a : w) {
        if (a != -1 && a != 0 && a != 1)
            throw std::invalid_argument("map_to_sigma_k: letter " + std::to_string((int)a) +
                                        " outside {-1,0,1}");
        out.push_back(a == -1 ? (Letter)(k - 1) : a);
    }
    return out;
}

bool Report::ok() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

namespace {

std::optional<std::size_t> first_mismatch(const Word& a, const Word& b) {
    if (a.size() != b.size()) return std::min(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return i;
    return std::nullopt;
}

Check compare_words(const std::string& name, const Word& lhs, const Word& rhs) {
    Check c;
    c.name = name;
    auto mismatch = first_mismatch(lhs, rhs);
    if (!mismatch) {
        c.pass = true;
        c.detail = "equal words of length " + std::to_string(lhs.size());
    } else {
        c.pass = false;
        c.detail = "lengths " + std::to_string(lhs.size()) + "/" + std::to_string(rhs.size()) +
                   ", first mismatch at position " + std::to_string(*mismatch + 1);
    }
    return c;
}

}  // namespace

Report verify_zeta_lemma(int n_max) {
    if (n_max < 0) throw std::invalid_argument("verify_zeta_lemma: n_max must be >= 0");
    const Morphism& phi = phi_morphism();
    const Morphism& zeta = zeta_morphism();
    const Word alphabet = {-1, 0, 1, primed_zero};
    Report report;
    for (int n = 0; n <= n_max; ++n) {
        for (Letter a : alphabet) {
            Word lhs = iterate_morphism(phi, n, zeta.apply({a}));
            Word rhs = iterate_morphism(zeta, n + 1, {a});
            report.checks.push_back(compare_words(
                "phi^" + std::to_string(n) + "(zeta(" + phi.display(a) + ")) == zeta^" +
                    std::to_string(n + 1) + "(" + phi.display(a) + ")",
                lhs, rhs));
        }
        Word lhs = iterate_morphism(phi, n, {0});
        Word rhs = iterate_morphism(zeta, n, {0});
        report.checks.push_back(compare_words(
            "phi^" + std::to_string(n) + "(0) == zeta^" + std::to_string(n) + "(0)", lhs, rhs));
    }
    return report;
}

Report verify_tau_phi_psi(int n_max) {
    if (n_max < 0) throw std::invalid_argument("verify_tau_phi_psi: n_max must be >= 0");
    const Morphism& phi = phi_morphism();
    const Morphism& psi = psi_morphism();
    const Coding& tau = tau_coding();
    Report report;
    for (int n = 0; n <= n_max; ++n) {
        Word lhs = tau.apply(iterate_morphism(phi, n, {0}));
        Word rhs = iterate_morphism(psi, n, {0});
        report.checks.push_back(compare_words(
            "tau(phi^" + std::to_string(n) + "(0)) == psi^" + std::to_string(n) + "(0)", lhs,
            rhs));
    }
    return report;
}

Report verify_psi_prefix(long long n) {
    if (n < 1) throw std::invalid_argument("verify_psi_prefix: n must be >= 1");
    Word prefix = fixed_point_prefix(psi_morphism(), 0, n);
    Report report;

    Check squarefree;
    squarefree.name = "prefix of length " + std::to_string(n) + " is squarefree";
    auto sq = find_square(prefix);
    squarefree.pass = !sq.has_value();
    squarefree.detail = sq ? "square at start " + std::to_string(sq->start) + ", block length " +
                                 std::to_string(sq->block_len)
                           : "no square found";
    report.checks.push_back(squarefree);

    Check sums;
    sums.name = "running sums stay in {0,1}";
    sums.pass = true;
    PrefixSums v = prefix_sums(prefix);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] != 0 && v[i] != 1) {
            sums.pass = false;
            sums.detail = "sum " + std::to_string(v[i]) + " at prefix index " + std::to_string(i);
            break;
        }
    }
    if (sums.pass) sums.detail = "all " + std::to_string(v.size()) + " running sums in {0,1}";
    report.checks.push_back(sums);

    Check adjacent;
    adjacent.name = "no adjacent equal-nonzero-sum factor pair";
    auto pair = find_adjacent_equal_nonzero_sum(prefix);
    adjacent.pass = !pair.has_value();
    adjacent.detail = pair ? "pair at i=" + std::to_string(pair->i) + " j=" +
                                 std::to_string(pair->j) + " j'=" + std::to_string(pair->j_prime) +
                                 " sum=" + std::to_string(pair->common_sum)
                           : "no such pair found";
    report.checks.push_back(adjacent);
    return report;
}

}  // namespace cwords
