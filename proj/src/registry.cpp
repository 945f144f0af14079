#include "osc/registry.hpp"

#include "osc/constructions.hpp"
#include "osc/langs.hpp"

#include <charconv>
#include <sstream>

namespace osc {

namespace {

std::size_t parse_size(const std::string& text, const std::string& whole) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
        throw unknown_name_error("malformed parameter '" + text + "' in '" + whole + "'\n" + registry_listing());
    return v;
}

// "head:param" -> param when name starts with head + ':'.
bool parameterized(const std::string& name, const std::string& head, std::string& param) {
    if (name.size() <= head.size() + 1 || name.compare(0, head.size(), head) != 0 || name[head.size()] != ':')
        return false;
    param = name.substr(head.size() + 1);
    return true;
}

std::size_t default_depth(const Alphabet& a) {
    if (a.size() <= 2)
        return 9;
    if (a.size() <= 4)
        return 7;
    return 5;
}

} // namespace

LanguageOracle make_language(const std::string& name) {
    std::string param;
    try {
        if (name == "lexicographic")
            return langs::lexicographic();
        if (name == "reverse-membership")
            return langs::reverse_membership();
        if (name == "primes")
            return langs::primes();
        if (name == "maj2")
            return langs::maj2();
        if (name == "sq")
            return langs::sq();
        if (name == "parity-a")
            return langs::parity_a();
        if (name == "noteq")
            return langs::noteq(1);
        if (parameterized(name, "counteq", param))
            return langs::count_eq_all(parse_size(param, name));
        if (parameterized(name, "counteq-exists", param))
            return langs::count_eq_exists(parse_size(param, name));
        if (parameterized(name, "noteq", param))
            return langs::noteq(parse_size(param, name));
        if (parameterized(name, "hierarchy", param))
            return langs::hierarchy(parse_size(param, name));
    } catch (const unknown_name_error&) {
        throw;
    } catch (const input_error& e) {
        throw unknown_name_error("language '" + name + "': " + e.what() + "\n" + registry_listing());
    }
    throw unknown_name_error("unknown language '" + name + "'\n" + registry_listing());
}

RegisteredMachine make_machine(const std::string& name, std::uint64_t budget) {
    namespace c = constructions;
    std::string param;
    auto entry = [&](Machine m, LanguageOracle oracle, std::size_t depth) {
        return RegisteredMachine{name, std::move(m), std::move(oracle), depth};
    };
    try {
        if (name == "counteq3-det")
            return entry(c::det_count_eq_all3(), langs::count_eq_all(3), 8);
        if (name == "noteq-nd")
            return entry(c::nd_not_eq(), langs::noteq(1), 9);
        if (name == "lex-alt")
            return entry(c::alt_lexicographic(), langs::lexicographic(), 9);
        if (name == "maj2-det")
            return entry(c::det_maj2(), langs::maj2(), 10);
        if (parameterized(name, "counteq-exists-det", param)) {
            auto l = parse_size(param, name);
            auto oracle = langs::count_eq_exists(l);
            auto depth = default_depth(oracle.alphabet());
            return entry(c::det_count_eq_exists(l), std::move(oracle), depth);
        }
        if (parameterized(name, "counteq-exists-nd", param)) {
            auto l = parse_size(param, name);
            auto oracle = langs::count_eq_exists(l);
            auto depth = default_depth(oracle.alphabet());
            return entry(c::nd_count_eq_exists(l), std::move(oracle), depth);
        }
        if (parameterized(name, "noteq-nd", param)) {
            auto l = parse_size(param, name);
            return entry(c::nd_not_eq_multi(l), langs::noteq(l), l <= 2 ? 8 : 7);
        }
        if (parameterized(name, "hierarchy-alt", param)) {
            auto l = parse_size(param, name);
            return entry(c::alt_hierarchy(l), langs::hierarchy(l), l == 2 ? 8 : 7);
        }
        if (parameterized(name, "universal", param)) {
            auto cut = param.rfind(':');
            if (cut == std::string::npos)
                throw unknown_name_error("expected universal:<lang>:<cap>\n" + registry_listing());
            auto oracle = make_language(param.substr(0, cut));
            auto cap = parse_size(param.substr(cut + 1), name);
            auto depth = std::min(cap, default_depth(oracle.alphabet()) + 1);
            return entry(c::det_universal(oracle, cap), oracle, depth);
        }
        if (parameterized(name, "quotient", param)) {
            auto cut_m = param.rfind(':');
            auto cut_n = cut_m == std::string::npos || cut_m == 0 ? std::string::npos : param.rfind(':', cut_m - 1);
            if (cut_n == std::string::npos)
                throw unknown_name_error("expected quotient:<lang>:<n>:<m>\n" + registry_listing());
            auto oracle = make_language(param.substr(0, cut_n));
            auto n = parse_size(param.substr(cut_n + 1, cut_m - cut_n - 1), name);
            auto m = parse_size(param.substr(cut_m + 1), name);
            auto q = c::quotient_automaton(oracle, n, m, budget);
            return entry(std::move(q.machine), oracle, n);
        }
    } catch (const unknown_name_error&) {
        throw;
    } catch (const input_error& e) {
        throw unknown_name_error("machine '" + name + "': " + e.what() + "\n" + registry_listing());
    }
    throw unknown_name_error("unknown machine '" + name + "'\n" + registry_listing());
}

std::vector<std::string> language_names() {
    return {"counteq:3",  "counteq-exists:1", "counteq-exists:2",   "counteq-exists:3",
            "noteq",      "noteq:2",          "noteq:3",            "lexicographic",
            "reverse-membership", "hierarchy:2", "hierarchy:3",     "primes",
            "maj2",       "sq",               "parity-a"};
}

std::vector<std::string> language_patterns() {
    return {"counteq:<k>  (2..9)", "counteq-exists:<l>  (1..8)", "noteq  (= noteq:1)", "noteq:<l>  (1..8)",
            "lexicographic",       "reverse-membership",         "hierarchy:<l>  (2..4)", "primes",
            "maj2",                "sq",                         "parity-a"};
}

std::vector<std::string> machine_names() {
    return {"counteq3-det",        "counteq-exists-det:1", "counteq-exists-det:2", "counteq-exists-det:3",
            "counteq-exists-nd:1", "counteq-exists-nd:2",  "counteq-exists-nd:3",  "noteq-nd",
            "noteq-nd:2",          "noteq-nd:3",           "lex-alt",              "hierarchy-alt:2",
            "hierarchy-alt:3",     "maj2-det",             "universal:primes:12",  "quotient:maj2:9:9"};
}

std::vector<std::string> machine_patterns() {
    return {"counteq3-det",
            "counteq-exists-det:<l>  (1..6)",
            "counteq-exists-nd:<l>  (1..6)",
            "noteq-nd",
            "noteq-nd:<l>  (1..4)",
            "lex-alt",
            "hierarchy-alt:<l>  (2..3)",
            "maj2-det",
            "universal:<lang>:<cap>",
            "quotient:<lang>:<n>:<m>"};
}

std::string registry_listing() {
    std::ostringstream out;
    out << "languages:\n";
    for (const auto& p : language_patterns())
        out << "  " << p << "\n";
    out << "machines:\n";
    for (const auto& p : machine_patterns())
        out << "  " << p << "\n";
    return out.str();
}

} // namespace osc
