#include "cwords/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "cwords/construction.hpp"
#include "cwords/detect.hpp"
#include "cwords/morphisms.hpp"
#include "cwords/ramsey.hpp"
#include "cwords/search.hpp"
#include "cwords/word.hpp"

namespace cwords::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr int exit_ok = 0;
constexpr int exit_outcome = 1;
constexpr int exit_usage = 2;
constexpr int exit_capped = 3;

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

std::string witness_text(const Word& w) {
    for (Letter a : w)
        if (a < 0 || a > 9) return render_word(w, Style::csv);
    return render_word(w, Style::compact);
}

json occurrence_json(const Occurrence& occ) {
    return json{{"kind", std::string(pattern_kind_name(occ.kind))},
                {"start", occ.start},
                {"m", occ.block_len},
                {"r", occ.blocks},
                {"sums", occ.block_sums}};
}

json adjacent_json(const AdjacentPairOccurrence& occ) {
    return json{{"kind", "adjacent-equal-sum"},
                {"i", occ.i},
                {"j", occ.j},
                {"j_prime", occ.j_prime},
                {"sum", occ.common_sum}};
}

json checks_json(const Report& report) {
    json checks = json::array();
    for (const auto& c : report.checks)
        checks.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return checks;
}

void print_report(std::ostream& out, const Report& report) {
    for (const auto& c : report.checks)
        out << (c.pass ? "PASS " : "FAIL ") << c.name << " (" << c.detail << ")\n";
    out << (report.ok() ? "ok" : "failed") << '\n';
}

struct DetectArgs {
    std::string pattern;
    std::string word;
    std::string expect;
    bool as_json = false;
};

int run_detect(const DetectArgs& args, std::ostream& out) {
    PatternSpec spec = PatternSpec::parse(args.pattern);
    Word w = parse_word(args.word);

    std::optional<json> found;
    switch (spec.type) {
        case PatternSpec::Type::square:
            if (auto occ = find_square(w)) found = occurrence_json(*occ);
            break;
        case PatternSpec::Type::abelian:
            if (auto occ = find_abelian_power(w, spec.r)) found = occurrence_json(*occ);
            break;
        case PatternSpec::Type::sum_square:
            if (auto occ = find_sum_square(w)) found = occurrence_json(*occ);
            break;
        case PatternSpec::Type::congruential:
            if (auto occ = find_congruential_power(w, spec.r, spec.k))
                found = occurrence_json(*occ);
            break;
        case PatternSpec::Type::adjacent_equal_sum:
            if (auto occ = find_adjacent_equal_nonzero_sum(w)) found = adjacent_json(*occ);
            break;
    }

    if (args.as_json) {
        json doc{{"pattern", args.pattern},
                 {"word", args.word},
                 {"avoided", !found.has_value()},
                 {"occurrence", found ? *found : json(nullptr)}};
        emit(out, doc);
    } else if (found) {
        out << "found " << found->dump() << '\n';
    } else {
        out << "avoids\n";
    }

    if (args.expect == "avoid") return found ? exit_outcome : exit_ok;
    if (args.expect == "found") return found ? exit_ok : exit_outcome;
    return exit_ok;
}

json search_json(int r, int k, const SearchResult& res) {
    return json{{"r", r},
                {"k", k},
                {"l", res.l},
                {"witness", witness_text(res.witness)},
                {"nodes", res.nodes},
                {"complete", res.complete}};
}

struct SearchArgs {
    int r = 2;
    int k = 2;
    std::optional<int> max_len;
    std::optional<long long> budget;
    int threads = 1;
    bool as_json = false;
};

int run_search(const SearchArgs& args, std::ostream& out, std::ostream& err) {
    SearchConfig cfg;
    cfg.r = args.r;
    cfg.k = args.k;
    cfg.max_len = args.max_len;
    cfg.node_budget = args.budget;
    cfg.threads = args.threads;
    cfg.progress_stream = &err;
    cfg.progress_every = 200'000'000;
    SearchResult res = longest_avoiding(cfg);
    if (args.as_json) {
        emit(out, search_json(args.r, args.k, res));
    } else {
        out << "l(" << args.r << "," << args.k << ") = " << res.l << '\n';
        out << "witness " << witness_text(res.witness) << '\n';
        out << "nodes " << res.nodes << " complete " << (res.complete ? "true" : "false")
            << '\n';
    }
    return res.complete ? exit_ok : exit_capped;
}

std::vector<std::pair<int, int>> parse_rows(const std::string& text) {
    std::vector<std::pair<int, int>> rows;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("bad row '" + item + "' (expected R:K)");
        try {
            int r = std::stoi(item.substr(0, colon));
            int k = std::stoi(item.substr(colon + 1));
            rows.emplace_back(r, k);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad row '" + item + "' (expected R:K)");
        }
    }
    if (rows.empty()) throw std::invalid_argument("no rows given");
    return rows;
}

struct TableArgs {
    std::string rows = "2:2,2:3,2:4,3:2";
    std::optional<long long> budget;
    int threads = 1;
    bool as_json = false;
};

int run_table(const TableArgs& args, std::ostream& out) {
    auto rows = parse_rows(args.rows);
    auto table = reproduce_table(rows, args.budget, args.threads);
    bool any_mismatch = false, any_incomplete = false;
    json out_rows = json::array();
    for (const auto& row : table) {
        std::string witness = witness_text(row.result.witness);
        if (args.as_json) {
            json r = search_json(row.r, row.k, row.result);
            if (row.golden) {
                r["golden_l"] = row.golden->l;
                r["golden_witness"] = row.golden->witness;
            } else {
                r["golden_l"] = nullptr;
                r["golden_witness"] = nullptr;
            }
            r["status"] = std::string(row_status_name(row.status));
            out_rows.push_back(r);
        } else {
            out << "r=" << row.r << " k=" << row.k << " l=" << row.result.l << " witness="
                << witness << " nodes=" << row.result.nodes << " status="
                << row_status_name(row.status) << '\n';
        }
        if (row.status == RowStatus::mismatch) any_mismatch = true;
        if (!row.result.complete) any_incomplete = true;
    }
    if (args.as_json) emit(out, json{{"rows", out_rows}});
    if (any_mismatch) return exit_outcome;
    if (any_incomplete) return exit_capped;
    return exit_ok;
}

struct ConstructArgs {
    long long prime = 0;
    bool verify = false;
    bool as_json = false;
};

int run_construct(const ConstructArgs& args, std::ostream& out) {
    auto [params, word] = construct_prime_word(args.prime);
    json params_json{{"p", params.p},
                     {"g", params.g},
                     {"c", params.c},
                     {"a", params.a},
                     {"word_len", params.word_len}};
    bool verified = false;
    if (args.verify)
        verified = !find_congruential_power(word, 2, (int)params.p).has_value();
    if (args.as_json) {
        json doc{{"params", params_json}, {"word", render_word(word, Style::csv)}};
        doc["verified"] = args.verify ? json(verified) : json(nullptr);
        emit(out, doc);
    } else {
        emit(out, params_json);
        out << render_word(word, Style::csv) << '\n';
        if (args.verify)
            out << (verified ? "verified: no congruential 2-power mod " +
                                   std::to_string(params.p)
                             : "verification FAILED")
                << '\n';
    }
    return args.verify && !verified ? exit_outcome : exit_ok;
}

struct MorphismArgs {
    std::string name;
    std::string seed_file;
    std::optional<int> power;
    std::optional<long long> prefix;
    std::string coding;
    bool as_json = false;
};

int run_morphism(const MorphismArgs& args, std::ostream& out) {
    Morphism loaded;
    const Morphism* m = nullptr;
    if (!args.seed_file.empty()) {
        loaded = load_morphism_file(args.seed_file);
        m = &loaded;
    } else {
        m = builtin_morphism(args.name);
        if (!m)
            throw std::invalid_argument("unknown morphism '" + args.name +
                                        "' (expected phi, zeta or psi)");
    }
    if (!args.power && !args.prefix)
        throw std::invalid_argument("one of --power or --prefix is required");
    if (args.power && args.prefix)
        throw std::invalid_argument("--power and --prefix are mutually exclusive");

    Letter seed = args.seed_file.empty() ? (Letter)0 : default_seed(*m);
    Word word;
    if (args.power) {
        if (*args.power < 0) throw std::invalid_argument("--power must be >= 0");
        word = iterate_morphism(*m, *args.power, {seed});
    } else {
        if (*args.prefix < 0) throw std::invalid_argument("--prefix must be >= 0");
        word = fixed_point_prefix(*m, seed, *args.prefix);
    }

    bool coded = false;
    if (!args.coding.empty()) {
        if (args.coding != "tau")
            throw std::invalid_argument("unknown coding '" + args.coding + "' (expected tau)");
        word = tau_coding().apply(word);
        coded = true;
    }
    std::string text = coded ? render_word(word, Style::csv) : m->render(word);
    if (args.as_json) {
        json doc{{"morphism", args.seed_file.empty() ? args.name : args.seed_file}};
        doc["power"] = args.power ? json(*args.power) : json(nullptr);
        doc["prefix"] = args.prefix ? json(*args.prefix) : json(nullptr);
        doc["coding"] = args.coding.empty() ? json(nullptr) : json(args.coding);
        doc["length"] = word.size();
        doc["word"] = text;
        emit(out, doc);
    } else {
        out << text << '\n';
    }
    return exit_ok;
}

struct VerifyArgs {
    std::string morphism;
    std::optional<long long> length;
    std::optional<int> zeta_lemma;
    std::optional<int> tau_phi_psi;
    bool as_json = false;
};

int run_verify(const VerifyArgs& args, std::ostream& out) {
    int modes = (args.length ? 1 : 0) + (args.zeta_lemma ? 1 : 0) + (args.tau_phi_psi ? 1 : 0);
    if (modes != 1)
        throw std::invalid_argument(
            "choose exactly one of --morphism NAME --length N, --zeta-lemma N, --tau-phi-psi N");

    std::string mode;
    Report report;
    if (args.length) {
        if (args.morphism != "psi")
            throw std::invalid_argument("--length verification runs on the psi fixed point; "
                                        "pass --morphism psi");
        mode = "psi-prefix";
        report = verify_psi_prefix(*args.length);
    } else if (args.zeta_lemma) {
        mode = "zeta-lemma";
        report = verify_zeta_lemma(*args.zeta_lemma);
    } else {
        mode = "tau-phi-psi";
        report = verify_tau_phi_psi(*args.tau_phi_psi);
    }

    if (args.as_json) {
        emit(out, json{{"mode", mode}, {"checks", checks_json(report)}, {"ok", report.ok()}});
    } else {
        print_report(out, report);
    }
    return report.ok() ? exit_ok : exit_outcome;
}

struct RamseyNumberArgs {
    int t = 3;
    int k = 1;
    int cap = 25;
    long long budget = 50'000'000;
    bool as_json = false;
};

int run_ramsey_number(const std::string& which, const RamseyNumberArgs& args,
                      std::ostream& out) {
    BruteForceResult res = which == "omega" ? omega(args.t, args.k, args.cap, args.budget)
                                            : w1(args.t, args.k, args.cap, args.budget);
    if (args.as_json) {
        json doc{{"quantity", which}, {"t", args.t}, {"k", args.k}, {"cap", args.cap}};
        doc["value"] = res.value ? json(*res.value) : json(nullptr);
        doc["capped"] = res.capped;
        doc["nodes"] = res.nodes;
        emit(out, doc);
    } else if (res.value) {
        out << which << "(" << args.t << "," << args.k << ") = " << *res.value << " nodes "
            << res.nodes << '\n';
    } else {
        out << which << "(" << args.t << "," << args.k << ") unresolved within cap "
            << args.cap << '\n';
    }
    return res.value ? exit_ok : exit_capped;
}

struct BoundsArgs {
    int k = 4;
    int t = 2;
    int omega_cap = 25;
    std::optional<long long> search_budget;
    bool as_json = false;
};

int run_check_bounds(const BoundsArgs& args, std::ostream& out) {
    LemmaBoundsOptions options;
    options.omega_cap = args.omega_cap;
    options.search_budget = args.search_budget;
    BoundsReport report = check_lemma_bounds(args.k, args.t, options);
    if (args.as_json) {
        json checks = json::array();
        for (const auto& c : report.checks)
            checks.push_back(json{{"name", c.name},
                                  {"lhs", c.lhs},
                                  {"rhs", c.rhs},
                                  {"holds", c.holds},
                                  {"capped", c.capped},
                                  {"detail", c.detail}});
        emit(out, json{{"k", args.k},
                       {"t", args.t},
                       {"checks", checks},
                       {"violation", report.any_violation},
                       {"partial", report.partial}});
    } else {
        for (const auto& c : report.checks)
            out << (c.holds ? "HOLDS " : "VIOLATED ") << c.name << ": " << c.lhs
                << " >= " << c.rhs << (c.capped ? " [capped]" : "") << " (" << c.detail << ")\n";
    }
    if (report.any_violation) return exit_outcome;
    if (report.partial) return exit_capped;
    return exit_ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"detect, construct and search words avoiding squares, abelian powers, "
                 "sum-squares and congruential powers"};
    app.name("cwords");
    app.require_subcommand(1);

    DetectArgs detect_args;
    auto* detect = app.add_subcommand("detect", "locate a pattern occurrence in a word");
    detect->add_option("--pattern", detect_args.pattern,
                       "square | abelian:R | sum-square | congruential:R:K | adjacent-equal-sum")
        ->required();
    detect->add_option("--word", detect_args.word, "compact digits or csv integers")->required();
    detect->add_option("--expect", detect_args.expect, "avoid | found")
        ->check(CLI::IsMember({"avoid", "found"}));
    detect->add_flag("--json", detect_args.as_json);

    SearchArgs search_args;
    auto* search = app.add_subcommand("search", "longest word avoiding congruential r-powers");
    search->add_option("--r", search_args.r)->required();
    search->add_option("--k", search_args.k)->required();
    search->add_option("--max-len", search_args.max_len);
    search->add_option("--budget", search_args.budget);
    search->add_option("--threads", search_args.threads)->check(CLI::PositiveNumber);
    search->add_flag("--json", search_args.as_json);

    TableArgs table_args;
    auto* table = app.add_subcommand("table", "reproduce the published l(r,k) table");
    table->add_option("--rows", table_args.rows, "comma-separated R:K list");
    table->add_option("--budget", table_args.budget, "node budget per row");
    table->add_option("--threads", table_args.threads)->check(CLI::PositiveNumber);
    table->add_flag("--json", table_args.as_json);

    ConstructArgs construct_args;
    auto* construct =
        app.add_subcommand("construct", "prime-based word avoiding congruential squares");
    construct->add_option("--prime", construct_args.prime)->required();
    construct->add_flag("--verify", construct_args.verify);
    construct->add_flag("--json", construct_args.as_json);

    MorphismArgs morphism_args;
    auto* morphism = app.add_subcommand("morphism", "iterate a morphism or generate a prefix");
    morphism->add_option("--name", morphism_args.name, "phi | zeta | psi");
    morphism->add_option("--seed-file", morphism_args.seed_file,
                         "custom morphism file, one 'letter -> l1 l2 ...' line per letter");
    morphism->add_option("--power", morphism_args.power, "apply the morphism N times to the seed");
    morphism->add_option("--prefix", morphism_args.prefix, "length-L fixed point prefix");
    morphism->add_option("--coding", morphism_args.coding, "tau");
    morphism->add_flag("--json", morphism_args.as_json);

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "check the avoidance properties");
    verify->add_option("--morphism", verify_args.morphism, "psi");
    verify->add_option("--length", verify_args.length, "prefix length for the psi checks");
    verify->add_option("--zeta-lemma", verify_args.zeta_lemma,
                       "check phi^n o zeta = zeta^{n+1} up to n");
    verify->add_option("--tau-phi-psi", verify_args.tau_phi_psi,
                       "check tau(phi^n(0)) = psi^n(0) up to n");
    verify->add_flag("--json", verify_args.as_json);

    auto* ramsey = app.add_subcommand("ramsey", "van der Waerden style quantities");
    ramsey->require_subcommand(1);
    RamseyNumberArgs omega_args;
    auto* omega_cmd = ramsey->add_subcommand("omega", "interval-system AP threshold");
    omega_cmd->add_option("--t", omega_args.t)->required();
    omega_cmd->add_option("--k", omega_args.k)->required();
    omega_cmd->add_option("--cap", omega_args.cap);
    omega_cmd->add_option("--budget", omega_args.budget);
    omega_cmd->add_flag("--json", omega_args.as_json);

    RamseyNumberArgs w1_args;
    auto* w1_cmd = ramsey->add_subcommand("w1", "mixed AP / consecutive-run threshold");
    w1_cmd->add_option("--t", w1_args.t)->required();
    w1_cmd->add_option("--k", w1_args.k)->required();
    w1_cmd->add_option("--cap", w1_args.cap);
    w1_cmd->add_option("--budget", w1_args.budget);
    w1_cmd->add_flag("--json", w1_args.as_json);

    BoundsArgs bounds_args;
    auto* bounds = ramsey->add_subcommand("check-bounds", "compare L(k,t) with the Omega bound");
    bounds->add_option("--k", bounds_args.k)->required();
    bounds->add_option("--t", bounds_args.t)->required();
    bounds->add_option("--omega-cap", bounds_args.omega_cap);
    bounds->add_option("--search-budget", bounds_args.search_budget);
    bounds->add_flag("--json", bounds_args.as_json);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // help request
            out << app.help();
            return exit_ok;
        }
        err << e.what() << '\n';
        return exit_usage;
    }

    try {
        if (detect->parsed()) return run_detect(detect_args, out);
        if (search->parsed()) return run_search(search_args, out, err);
        if (table->parsed()) return run_table(table_args, out);
        if (construct->parsed()) return run_construct(construct_args, out);
        if (morphism->parsed()) return run_morphism(morphism_args, out);
        if (verify->parsed()) return run_verify(verify_args, out);
        if (ramsey->parsed()) {
            if (omega_cmd->parsed()) return run_ramsey_number("omega", omega_args, out);
            if (w1_cmd->parsed()) return run_ramsey_number("w1", w1_args, out);
            if (bounds->parsed()) return run_check_bounds(bounds_args, out);
        }
        err << "no subcommand given\n";
        return exit_usage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return exit_outcome;
    }
}

}  // namespace cwords::cli
