#include "osc/cli.hpp"

#include "osc/constructions.hpp"
#include "osc/errors.hpp"
#include "osc/langs.hpp"
#include "osc/primeslab.hpp"
#include "osc/qtable.hpp"
#include "osc/registry.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <set>
#include <sstream>

namespace osc::cli {

namespace {

using json = nlohmann::ordered_json;

enum class Format { text, csv, json };

struct RunConfig {
    Format format = Format::text;
    std::uint64_t budget = default_query_budget;
    std::size_t parallelism = 1;
};

std::uint64_t budget_from_env() {
    if (const char* env = std::getenv("OSC_BUDGET")) {
        char* end = nullptr;
        const auto v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return v;
    }
    return default_query_budget;
}

void emit_json(std::ostream& out, const json& j) { out << j.dump() << "\n"; }

template <class T>
void row(std::ostream& out, const std::string& key, const T& value) {
    out << std::left << std::setw(20) << key << value << "\n";
}

std::set<std::uint64_t> parse_residues(const std::string& text) {
    std::set<std::uint64_t> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty())
            continue;
        std::size_t used = 0;
        std::uint64_t v = 0;
        try {
            v = std::stoull(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size() || used == 0)
            throw input_error("malformed residue '" + item + "' in --set");
        out.insert(v);
    }
    return out;
}

std::string join(const std::set<std::uint64_t>& values) {
    std::string out;
    for (auto v : values) {
        if (!out.empty())
            out += ',';
        out += std::to_string(v);
    }
    return out;
}

// ---------------------------------------------------------------------------

int cmd_list(std::ostream& out, const RunConfig& cfg) {
    if (cfg.format == Format::json) {
        emit_json(out, json{{"command", "list"},
                            {"languages", language_names()},
                            {"language_patterns", language_patterns()},
                            {"machines", machine_names()},
                            {"machine_patterns", machine_patterns()}});
        return ok;
    }
    out << registry_listing();
    out << "registered machine instances:\n";
    for (const auto& name : machine_names())
        out << "  " << name << "\n";
    return ok;
}

// Transition formulas applied along w, frontier by frontier.
void trace_word(std::ostream& out, const Machine& m, const Word& w) {
    constexpr std::size_t shown_states = 16;
    out << "    init: " << m.describe(m.init) << "\n";
    std::set<StateVal> frontier = atoms(m.init);
    for (Letter x : w) {
        out << "    read '" << m.alphabet.display(x) << "':\n";
        std::set<StateVal> next;
        std::size_t shown = 0;
        for (const auto& q : frontier) {
            const auto f = m.delta(q, x);
            if (shown++ < shown_states)
                out << "      " << m.describe(q) << " -> " << m.describe(f) << "\n";
            const auto more = atoms(f);
            next.insert(more.begin(), more.end());
        }
        if (frontier.size() > shown_states)
            out << "      ... " << frontier.size() - shown_states << " more states\n";
        frontier = std::move(next);
    }
    out << "    accepted: " << (accepts(m, w) ? "yes" : "no") << "\n";
}

int cmd_verify(std::ostream& out, const RunConfig& cfg, const std::string& name, std::size_t max_len,
               std::size_t max_report, bool trace) {
    const auto reg = make_machine(name, cfg.budget);
    const auto mismatches = verify_against_oracle(reg.machine, reg.oracle, max_len);
    const auto& alphabet = reg.oracle.alphabet();
    const std::size_t shown = std::min(max_report, mismatches.size());
    if (cfg.format == Format::json) {
        json words = json::array();
        for (std::size_t i = 0; i < shown; ++i)
            words.push_back(alphabet.render(mismatches[i]));
        emit_json(out, json{{"command", "verify"},
                            {"machine", reg.name},
                            {"language", reg.oracle.name()},
                            {"max_len", max_len},
                            {"mismatches", mismatches.size()},
                            {"reported", words}});
    } else {
        out << reg.name << " vs " << reg.oracle.name() << ", all words of length <= " << max_len << ": "
            << mismatches.size() << " mismatches\n";
        for (std::size_t i = 0; i < shown; ++i) {
            out << "  \"" << alphabet.render(mismatches[i]) << "\" language says "
                << (reg.oracle.contains(mismatches[i]) ? "member" : "non-member") << "\n";
            if (trace)
                trace_word(out, reg.machine, mismatches[i]);
        }
    }
    return mismatches.empty() ? ok : refuted;
}

int cmd_states(std::ostream& out, const RunConfig& cfg, const std::string& name, std::size_t max_len) {
    const auto reg = make_machine(name, cfg.budget);
    const auto curve = state_count_curve(reg.machine, max_len);
    switch (cfg.format) {
    case Format::csv:
        out << "n,states\n";
        for (const auto& e : curve.entries)
            out << e.n << "," << e.states << "\n";
        break;
    case Format::json: {
        json entries = json::array();
        for (const auto& e : curve.entries)
            entries.push_back(json{{"n", e.n}, {"states", e.states}});
        emit_json(out, json{{"command", "states"}, {"machine", curve.machine}, {"entries", entries}});
        break;
    }
    case Format::text:
        out << "reachable states of " << curve.machine << "\n";
        out << std::setw(6) << "n" << std::setw(14) << "s(n)" << "\n";
        for (const auto& e : curve.entries)
            out << std::setw(6) << e.n << std::setw(14) << e.states << "\n";
        break;
    }
    return ok;
}

int cmd_qtable(std::ostream& out, const RunConfig& cfg, const std::string& lang, std::size_t order,
               std::size_t probe_depth, bool keep_profiles) {
    const auto oracle = make_language(lang);
    QueryTableOptions options;
    options.parallelism = cfg.parallelism;
    options.keep_profiles = keep_profiles;
    options.budget = cfg.budget;
    const auto report = query_table(oracle, order, probe_depth, options);
    switch (cfg.format) {
    case Format::csv:
        out << "n,m,distinct_rows,distinct_cols\n";
        out << report.order << "," << report.probe_depth << "," << report.distinct_rows << ","
            << report.distinct_cols << "\n";
        break;
    case Format::json: {
        json j{{"command", "qtable"},
               {"language", report.language},
               {"order", report.order},
               {"probe_depth", report.probe_depth},
               {"distinct_rows", report.distinct_rows},
               {"distinct_cols", report.distinct_cols},
               {"query_count", report.query_count},
               {"elapsed_ms", report.elapsed_ms}};
        if (report.profiles) {
            json rows = json::array();
            for (const auto& p : *report.profiles)
                rows.push_back(p.to_string());
            j["profiles"] = rows;
        }
        emit_json(out, j);
        break;
    }
    case Format::text:
        row(out, "language", report.language);
        row(out, "order", report.order);
        row(out, "probe depth", report.probe_depth);
        row(out, "distinct rows", report.distinct_rows);
        row(out, "distinct columns", report.distinct_cols);
        row(out, "queries", report.query_count);
        row(out, "elapsed ms", report.elapsed_ms);
        if (report.profiles) {
            const auto rows = words_up_to(oracle.alphabet().size(), probe_depth);
            for (std::size_t r = 0; r < rows.size(); ++r)
                out << "  \"" << oracle.alphabet().render(rows[r]) << "\" " << (*report.profiles)[r].to_string()
                    << "\n";
        }
        break;
    }
    return ok;
}

int cmd_quotients(std::ostream& out, const RunConfig& cfg, const std::string& lang, std::size_t order,
                  std::size_t probe_depth) {
    const auto oracle = make_language(lang);
    const auto q = constructions::quotient_automaton(oracle, order, probe_depth, cfg.budget);
    const auto& alphabet = oracle.alphabet();
    if (cfg.format == Format::json) {
        json reps = json::array();
        for (const auto& r : q.representatives)
            reps.push_back(alphabet.render(r));
        emit_json(out, json{{"command", "quotients"},
                            {"language", oracle.name()},
                            {"order", order},
                            {"probe_depth", probe_depth},
                            {"distinct_cols", q.class_count()},
                            {"representatives", reps}});
    } else if (cfg.format == Format::csv) {
        out << "class,representative\n";
        for (std::size_t i = 0; i < q.representatives.size(); ++i)
            out << i << "," << alphabet.render(q.representatives[i]) << "\n";
    } else {
        out << oracle.name() << ": " << q.class_count() << " probe-distinct quotients of order " << order
            << " (probe depth " << probe_depth << ")\n";
        for (std::size_t i = 0; i < q.representatives.size(); ++i)
            out << "  [" << i << "] \"" << alphabet.render(q.representatives[i]) << "\"\n";
    }
    return ok;
}

int cmd_separate(std::ostream& out, const RunConfig& cfg, const std::string& lang, const std::string& u_text,
                 const std::string& v_text, std::size_t max_len) {
    const auto oracle = make_language(lang);
    const auto& alphabet = oracle.alphabet();
    const Word u = alphabet.parse(u_text);
    const Word v = alphabet.parse(v_text);
    const auto w = separating_word(oracle, u, v, max_len);
    if (cfg.format == Format::json) {
        json j{{"command", "separate"}, {"language", oracle.name()}, {"u", u_text}, {"v", v_text},
               {"max_len", max_len}};
        j["separator"] = w ? json(alphabet.render(*w)) : json(nullptr);
        emit_json(out, j);
    } else if (w) {
        out << "separator \"" << alphabet.render(*w) << "\": \"" << u_text << alphabet.render(*w) << "\" "
            << (oracle.contains(concat(u, *w)) ? "in" : "not in") << " " << oracle.name() << ", \"" << v_text
            << alphabet.render(*w) << "\" " << (oracle.contains(concat(v, *w)) ? "in" : "not in") << "\n";
    } else {
        out << "no separator of length <= " << max_len << "\n";
    }
    return w ? ok : refuted;
}

int cmd_isolated(std::ostream& out, const RunConfig& cfg, std::uint64_t a, std::uint64_t b, std::uint64_t radius,
                 std::uint64_t bound) {
    const auto r = primes::find_isolated_prime(a, b, radius, bound);
    const bool verified = r && primes::verify_isolated_prime(*r, a, b);
    if (cfg.format == Format::json) {
        json j{{"command", "primes isolated"}, {"residue", a}, {"modulus", b}, {"radius", radius}, {"bound", bound}};
        if (r) {
            j["found"] = true;
            j["k"] = r->k;
            j["p"] = r->p;
            j["window_lo"] = r->window_lo;
            j["window_hi"] = r->window_hi;
            j["verified"] = verified;
        } else {
            j["found"] = false;
        }
        emit_json(out, j);
    } else if (r) {
        out << "k=" << r->k << " p=" << r->p << " window=[" << r->window_lo << "," << r->window_hi << "] "
            << (verified ? "verified" : "VERIFICATION FAILED") << "\n";
    } else {
        out << "no isolated prime with k <= " << bound << "\n";
    }
    return r && verified ? ok : refuted;
}

int cmd_witness(std::ostream& out, const RunConfig& cfg, const std::string& u_text, std::uint64_t bound) {
    const Word u = langs::binary.parse(u_text);
    const auto w = primes::prime_profile_witness(u, bound);
    const bool verified = w && primes::verify_isolated_prime(w->prime, primes::bin(u), std::uint64_t{1} << u.size());
    const Alphabet& binary = langs::binary;
    if (cfg.format == Format::json) {
        json j{{"command", "primes witness"}, {"u", u_text}, {"bound", bound}};
        if (w) {
            j["found"] = true;
            j["w"] = binary.render(w->w);
            j["k"] = w->prime.k;
            j["p"] = w->prime.p;
            j["window_lo"] = w->prime.window_lo;
            j["window_hi"] = w->prime.window_hi;
            j["verified"] = verified;
        } else {
            j["found"] = false;
        }
        emit_json(out, j);
    } else if (w) {
        out << "w=\"" << binary.render(w->w) << "\" k=" << w->prime.k << " p=" << w->prime.p << " window=["
            << w->prime.window_lo << "," << w->prime.window_hi << "] " << (verified ? "verified" : "VERIFICATION FAILED")
            << "\n";
    } else {
        out << "no witness with k <= " << bound << "\n";
    }
    return w && verified ? ok : refuted;
}

int cmd_constellation(std::ostream& out, const RunConfig& cfg, std::size_t n, const std::string& set_text,
                      std::uint64_t bound) {
    const auto residues = parse_residues(set_text);
    const auto k = primes::constellation_search(n, residues, bound);
    if (cfg.format == Format::json) {
        json j{{"command", "primes constellation"}, {"n", n}, {"set", json(std::vector<std::uint64_t>(residues.begin(), residues.end()))},
               {"bound", bound}};
        j["k"] = k ? json(*k) : json(nullptr);
        emit_json(out, j);
    } else if (k) {
        out << "k=" << *k << ": 2^" << n << "*k + a is prime exactly for a in {" << join(residues) << "}\n";
    } else {
        out << "no k <= " << bound << " found\n";
    }
    return k ? ok : refuted;
}

int emit_demo(std::ostream& out, const RunConfig& cfg, const std::string& command, const WitnessDemoReport& r,
              const std::optional<QueryTableReport>& table) {
    const std::uint64_t target = std::uint64_t{1} << (std::uint64_t{1} << r.n);
    const bool pass = r.postcondition_failures == 0 && r.distinct_profiles == target;
    if (cfg.format == Format::json) {
        json j{{"command", command},
               {"language", r.language},
               {"n", r.n},
               {"order", r.order},
               {"witnesses", r.witnesses},
               {"distinct_profiles", r.distinct_profiles},
               {"target", target},
               {"postcondition_failures", r.postcondition_failures},
               {"columns", r.columns},
               {"full_profiles", r.full_profiles}};
        if (table) {
            j["probe_depth"] = table->probe_depth;
            j["distinct_rows"] = table->distinct_rows;
        }
        j["elapsed_ms"] = r.elapsed_ms;
        emit_json(out, j);
    } else if (cfg.format == Format::csv) {
        out << "n,order,witnesses,distinct_profiles\n"
            << r.n << "," << r.order << "," << r.witnesses << "," << r.distinct_profiles << "\n";
    } else {
        row(out, "language", r.language);
        row(out, "n", r.n);
        row(out, "order", r.order);
        row(out, "witnesses", r.witnesses);
        row(out, "distinct profiles", r.distinct_profiles);
        row(out, "target 2^(2^n)", target);
        row(out, "profile columns", std::to_string(r.columns) + (r.full_profiles ? " (all)" : " (test sites)"));
        row(out, "postcondition fails", r.postcondition_failures);
        if (table) {
            row(out, "probe depth", table->probe_depth);
            row(out, "query table rows", table->distinct_rows);
        }
        row(out, "elapsed ms", r.elapsed_ms);
    }
    return pass ? ok : refuted;
}

int report_error(std::ostream& err, const char* kind, const std::exception& e, int code) {
    err << "osc: " << kind << ": " << e.what() << "\n";
    return code;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Online state complexity toolkit: machines, query tables and prime experiments", "osc"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    cfg.budget = budget_from_env();
    std::string format = "text";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
    app.add_option("--budget", cfg.budget, "Membership query cap (default OSC_BUDGET or 2^28)")
        ->check(CLI::PositiveNumber);

    std::string machine, lang, u_text, v_text, set_text;
    std::size_t max_len = 0, max_report = 20, order = 0, probe_depth = 0, n = 0, ell = 0;
    std::uint64_t residue = 0, modulus = 0, radius = 0, bound = 0;
    bool keep_profiles = false;

    auto* list = app.add_subcommand("list", "List registered languages and machines");

    auto* verify = app.add_subcommand("verify", "Check a machine against its language on all short words");
    verify->add_option("--machine", machine)->required();
    verify->add_option("--max-len", max_len)->required();
    verify->add_option("--max-report", max_report, "Mismatches to print");
    bool trace = false;
    verify->add_flag("--trace", trace, "Print the transition formulas applied on each reported mismatch");

    auto* states = app.add_subcommand("states", "Reachable-state curve s(n)");
    states->add_option("--machine", machine)->required();
    states->add_option("--max-len", max_len)->required();

    auto* qtable = app.add_subcommand("qtable", "Query table of order n with probe depth m");
    qtable->add_option("--lang", lang)->required();
    qtable->add_option("--order", order)->required();
    qtable->add_option("--probe-depth", probe_depth)->required();
    qtable->add_option("--parallel", cfg.parallelism)->check(CLI::PositiveNumber);
    qtable->add_flag("--keep-profiles", keep_profiles);

    auto* quotients = app.add_subcommand("quotients", "Probe-distinct left quotients and representatives");
    quotients->add_option("--lang", lang)->required();
    quotients->add_option("--order", order)->required();
    quotients->add_option("--probe-depth", probe_depth)->required();

    auto* separate = app.add_subcommand("separate", "Least word separating two left quotients");
    separate->add_option("--lang", lang)->required();
    separate->add_option("--u", u_text)->required();
    separate->add_option("--v", v_text)->required();
    separate->add_option("--max-len", max_len)->required();

    auto* primes_cmd = app.add_subcommand("primes", "Prime-number experiments");
    primes_cmd->require_subcommand(1);
    primes_cmd->fallthrough();
    auto* isolated = primes_cmd->add_subcommand("isolated", "Isolated prime in a + b*k");
    isolated->add_option("--residue", residue)->required();
    isolated->add_option("--modulus", modulus)->required();
    isolated->add_option("--radius", radius)->required();
    isolated->add_option("--bound", bound)->required();
    auto* witness = primes_cmd->add_subcommand("witness", "Word whose profile is a single odd column");
    witness->add_option("--u", u_text)->required();
    witness->add_option("--bound", bound)->required();
    auto* constellation = primes_cmd->add_subcommand("constellation", "k with 2^n k + a prime exactly on S");
    constellation->add_option("--n", n)->required();
    constellation->add_option("--set", set_text)->required();
    constellation->add_option("--bound", bound)->required();

    auto* demo = app.add_subcommand("demo", "Lower-bound witness demonstrations");
    demo->require_subcommand(1);
    demo->fallthrough();
    auto* expalt = demo->add_subcommand("expalt", "Reverse-membership witnesses, 2^(2^n) profiles");
    expalt->add_option("--n", n)->required();
    expalt->add_option("--probe-depth", probe_depth);
    auto* hierarchy = demo->add_subcommand("hierarchy", "Hierarchy-language witnesses");
    hierarchy->add_option("--ell", ell)->required();
    hierarchy->add_option("--n", n)->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "osc: " << e.what() << "\n" << app.help();
        return usage;
    }
    cfg.format = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::text;

    try {
        if (list->parsed())
            return cmd_list(out, cfg);
        if (verify->parsed())
            return cmd_verify(out, cfg, machine, max_len, max_report, trace);
        if (states->parsed())
            return cmd_states(out, cfg, machine, max_len);
        if (qtable->parsed())
            return cmd_qtable(out, cfg, lang, order, probe_depth, keep_profiles);
        if (quotients->parsed())
            return cmd_quotients(out, cfg, lang, order, probe_depth);
        if (separate->parsed())
            return cmd_separate(out, cfg, lang, u_text, v_text, max_len);
        if (isolated->parsed())
            return cmd_isolated(out, cfg, residue, modulus, radius, bound);
        if (witness->parsed())
            return cmd_witness(out, cfg, u_text, bound);
        if (constellation->parsed())
            return cmd_constellation(out, cfg, n, set_text, bound);
        if (expalt->parsed()) {
            std::optional<QueryTableReport> table;
            if (probe_depth > 0) {
                QueryTableOptions options;
                options.budget = cfg.budget;
                table = query_table(make_language("reverse-membership"), n, probe_depth, options);
            }
            return emit_demo(out, cfg, "demo expalt", demo_expalt(n), table);
        }
        if (hierarchy->parsed())
            return emit_demo(out, cfg, "demo hierarchy", demo_hierarchy(ell, n), std::nullopt);
    } catch (const budget_error& e) {
        return report_error(err, "refused", e, refused);
    } catch (const capacity_error& e) {
        return report_error(err, "capacity", e, refused);
    } catch (const input_error& e) {
        return report_error(err, "input", e, usage);
    } catch (const contract_error& e) {
        return report_error(err, "precondition", e, usage);
    }
    err << app.help();
    return usage;
}

} // namespace osc::cli
