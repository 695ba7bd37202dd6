#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "wqo/grammar.hpp"
#include "wqo/infinite.hpp"
#include "wqo/regex.hpp"
#include "wqo/report.hpp"

namespace {

using namespace wqo;

constexpr int exit_true = 0;
constexpr int exit_false = 1;
constexpr int exit_error = 2;

struct SourceOptions {
    std::string regex;
    std::string automaton_file;
    std::string grammar_file;
    std::string alphabet;
};

void add_source_flags(CLI::App* cmd, SourceOptions& src) {
    auto* r = cmd->add_option("--regex", src.regex, "regular expression source");
    auto* a = cmd->add_option("--automaton", src.automaton_file, "automaton file source");
    auto* g = cmd->add_option("--grammar", src.grammar_file, "grammar file source");
    cmd->add_option("--alphabet", src.alphabet,
                    "alphabet for --regex (default: symbols of the expression)");
    r->excludes(a)->excludes(g);
    a->excludes(g);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

Alphabet regex_alphabet(const SourceOptions& src) {
    if (!src.alphabet.empty()) return Alphabet(src.alphabet);
    std::set<char> letters;
    for (std::size_t i = 0; i < src.regex.size(); ++i) {
        char c = src.regex[i];
        if (c == '\\' && i + 1 < src.regex.size()) {
            letters.insert(src.regex[++i]);
            continue;
        }
        if (src.regex.compare(i, 3, "eps") == 0) {
            i += 2;
            continue;
        }
        if (c == '|' || c == '*' || c == '+' || c == '?' || c == '(' || c == ')') continue;
        letters.insert(c);
    }
    if (letters.empty()) return Alphabet("ab");
    return Alphabet(std::string(letters.begin(), letters.end()));
}

bool is_grammar(const SourceOptions& src) { return !src.grammar_file.empty(); }

Nfa load_nfa(const SourceOptions& src) {
    if (!src.regex.empty()) return regex_language(src.regex, regex_alphabet(src));
    if (!src.automaton_file.empty()) return parse_automaton(slurp(src.automaton_file));
    throw std::runtime_error("a language source is required (--regex or --automaton)");
}

Cfg load_cfg(const SourceOptions& src) { return parse_cfg(slurp(src.grammar_file)); }

Rel parse_order(const std::string& name) {
    if (name == "prefix") return Rel::prefix;
    if (name == "suffix") return Rel::suffix;
    if (name == "infix") return Rel::infix;
    if (name == "subword") return Rel::subword;
    throw std::runtime_error("unknown order: " + name);
}

int run_cli(int argc, char** argv) {
    CLI::App app{"well-quasi-order decision toolkit for prefix, suffix and infix relations"};
    app.require_subcommand(1);

    SourceOptions src;
    bool json = false;
    DecideOptions options;
    std::string order = "infix";

    auto add_budget_flags = [&](CLI::App* cmd) {
        cmd->add_option("--state-budget", options.budget.max_dfa_states,
                        "subset-construction state cap");
        cmd->add_option("--mine-budget", options.mine_budget,
                        "words examined while mining antichains");
        cmd->add_option("--antichain-size", options.antichain_size,
                        "antichain sample size on not-wqo verdicts");
    };

    auto* decide = app.add_subcommand("decide", "decide well-quasi-orderedness");
    decide->add_option("--order", order, "prefix|suffix|infix")->required();
    add_source_flags(decide, src);
    decide->add_flag("--json", json, "emit the report as JSON");
    add_budget_flags(decide);

    std::size_t witness_size = 6;
    auto* witness = app.add_subcommand("witness", "antichain of a given size, when found");
    witness->add_option("--order", order, "prefix|suffix|infix|subword")->required();
    witness->add_option("--size", witness_size, "requested antichain size")->required();
    add_source_flags(witness, src);
    witness->add_flag("--json", json);
    add_budget_flags(witness);

    auto* bounded = app.add_subcommand("bounded", "bounding tuple w1..wn or a witness");
    add_source_flags(bounded, src);
    bounded->add_flag("--json", json);
    add_budget_flags(bounded);

    std::string closure_kind;
    auto* closure_cmd = app.add_subcommand("closure", "downward closure automaton");
    closure_cmd->add_option("--kind", closure_kind, "prefix|suffix|infix|subword")->required();
    add_source_flags(closure_cmd, src);

    std::string period_word;
    auto* period_cmd = app.add_subcommand("period", "minimal period of a word");
    period_cmd->add_option("--word", period_word, "the word")->required();

    std::string chain_period, chain_test;
    bool chain_test_set = false;
    auto* infchain = app.add_subcommand("infchain", "the language Inf(x) of a period x");
    infchain->add_option("--period", chain_period, "the period word")->required();
    infchain->add_option("--test", chain_test, "test membership of a word");

    std::string sequence = "thue-morse", sequence_file, check = "cube-free";
    UrOptions ur;
    std::size_t length = 4096;
    auto* infinite = app.add_subcommand("infinite", "infinite-word laboratory");
    infinite->add_option("--sequence", sequence, "thue-morse|block");
    infinite->add_option("--sequence-file", sequence_file, "automatic sequence file");
    infinite->add_option("--check", check, "cube-free|recurrence|ultimately-ur")->required();
    infinite->add_option("--length", length, "prefix length for cube-free");
    infinite->add_option("--horizon", ur.horizon, "scan horizon");
    infinite->add_option("--k-max", ur.k_max, "maximum factor length profiled");
    infinite->add_option("--n0-cap", ur.n0_cap, "largest shift tried");
    infinite->add_flag("--json", json);

    std::string reduce_kind;
    auto* reduce = app.add_subcommand("reduce", "marker / full-image reductions");
    reduce->add_option("--kind", reduce_kind, "marker|full-image")->required();
    add_source_flags(reduce, src);

    try {
        app.parse(argc, argv);
        chain_test_set = infchain->count("--test") > 0;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            app.exit(e);
            return exit_true;
        }
        std::cerr << e.what() << "\n";
        return exit_error;
    }

    if (decide->parsed()) {
        Rel rel = parse_order(order);
        DecisionReport report;
        if (is_grammar(src)) {
            report = decide_cfg(load_cfg(src), rel, options);
        } else {
            Dfa lang = determinize_trim(load_nfa(src), options.budget);
            switch (rel) {
                case Rel::prefix: report = decide_prefix(lang, options); break;
                case Rel::suffix: report = decide_suffix(lang, options); break;
                case Rel::infix: report = decide_infix(lang, options); break;
                case Rel::subword:
                    throw std::runtime_error(
                        "the subword relation is wqo for every language (Higman)");
            }
        }
        std::cout << emit_report(report, json ? ReportFormat::json : ReportFormat::text);
        if (json) std::cout << "\n";
        return report.wqo ? exit_true : exit_false;
    }

    if (witness->parsed()) {
        Rel rel = parse_order(order);
        MineResult mined;
        if (is_grammar(src)) {
            mined = mine_grammar_antichain(reduce_cfg(load_cfg(src)), rel, witness_size,
                                           options.mine_budget, options.budget);
        } else {
            mined = mine_language_antichain(load_nfa(src), rel, witness_size,
                                            options.mine_budget, options.budget);
        }
        if (mined.status == MineResult::Status::found) {
            for (const Word& w : mined.antichain) std::cout << w << "\n";
            return exit_true;
        }
        std::cerr << (mined.status == MineResult::Status::budget_exhausted
                          ? "mining budget exhausted"
                          : "language exhausted")
                  << " below the requested size\n";
        return exit_false;
    }

    if (bounded->parsed()) {
        BoundednessCertificate cert;
        if (is_grammar(src)) {
            cert = cfg_bounded(reduce_cfg(load_cfg(src)), options.budget);
        } else {
            cert = decide_bounded(determinize_trim(load_nfa(src), options.budget),
                                  options.budget);
        }
        if (cert.bounded) {
            std::cout << "bounded:";
            for (const Word& w : cert.words) std::cout << " " << w;
            std::cout << "\n";
            return exit_true;
        }
        std::cout << "unbounded: state " << cert.witness->state << " cycles '"
                  << cert.witness->u << "' '" << cert.witness->v << "'\n";
        return exit_false;
    }

    if (closure_cmd->parsed()) {
        Nfa result;
        if (is_grammar(src)) {
            if (closure_kind != "subword")
                throw std::runtime_error("grammar closure is available for --kind subword");
            result = cfg_subword_closure(reduce_cfg(load_cfg(src)), options.budget);
        } else {
            ClosureKind kind = closure_kind == "prefix"    ? ClosureKind::prefix
                               : closure_kind == "suffix"  ? ClosureKind::suffix
                               : closure_kind == "infix"   ? ClosureKind::infix
                               : closure_kind == "subword"
                                   ? ClosureKind::subword
                                   : throw std::runtime_error("unknown closure kind: " +
                                                              closure_kind);
            result = closure(kind, load_nfa(src));
        }
        std::cout << format_automaton(trim_nfa(result));
        return exit_true;
    }

    if (period_cmd->parsed()) {
        std::cout << minimal_period(period_word) << "\n";
        return exit_true;
    }

    if (infchain->parsed()) {
        PeriodChain chain = inf_period_chain(chain_period);
        if (chain_test_set) {
            bool member = nfa_accepts(chain.cyclic, chain_test);
            std::cout << (member ? "member" : "not-member") << "\n";
            return member ? exit_true : exit_false;
        }
        std::cout << "period: " << chain.period << "\n";
        std::cout << format_automaton(chain.cyclic);
        std::cout << "components:";
        auto or_eps = [](const Word& w) { return w.empty() ? Word("eps") : w; };
        for (const auto& [u, v] : chain.components)
            std::cout << " (" << or_eps(u) << "," << or_eps(v) << ")";
        std::cout << "\n";
        return exit_true;
    }

    if (infinite->parsed()) {
        SequenceOracle oracle;
        std::optional<AutomaticSequence> automatic;
        if (!sequence_file.empty()) {
            automatic = parse_automatic_sequence(slurp(sequence_file));
            oracle = oracle_of(*automatic);
        } else if (sequence == "thue-morse") {
            oracle = thue_morse_oracle();
        } else if (sequence == "block") {
            oracle = block_word_oracle();
        } else {
            throw std::runtime_error("unknown sequence: " + sequence);
        }
        if (check == "cube-free") {
            auto cube = has_cube(prefix_of(oracle, length));
            if (!cube) {
                std::cout << "cube-free up to length " << length << "\n";
                return exit_true;
            }
            std::cout << "cube (" << cube->base << ")^3 at position " << cube->position
                      << "\n";
            return exit_false;
        }
        if (check == "recurrence") {
            RecurrenceProfile profile = recurrence_profile(oracle, ur.k_max, ur.horizon);
            bool all_finite = true;
            if (json) {
                nlohmann::ordered_json j;
                j["horizon"] = profile.horizon;
                j["k_max"] = profile.k_max;
                j["bands"] = nlohmann::ordered_json::array();
                for (const auto& band : profile.bands) {
                    nlohmann::ordered_json b;
                    b["k"] = band.k;
                    b["factors"] = band.factor_count;
                    b["max_gap"] = band.max_gap;
                    if (band.window_bound)
                        b["window"] = *band.window_bound;
                    else
                        b["unbounded_at_horizon"] = true;
                    j["bands"].push_back(b);
                    all_finite = all_finite && !band.unbounded_at_horizon;
                }
                std::cout << j.dump() << "\n";
            } else {
                for (const auto& band : profile.bands) {
                    std::cout << "k=" << band.k << " factors=" << band.factor_count
                              << " max_gap=" << band.max_gap;
                    if (band.window_bound)
                        std::cout << " window=" << *band.window_bound;
                    else
                        std::cout << " unbounded-at-horizon";
                    std::cout << "\n";
                    all_finite = all_finite && !band.unbounded_at_horizon;
                }
            }
            return all_finite ? exit_true : exit_false;
        }
        if (check == "ultimately-ur") {
            UrResult result = empirical_ultimately_ur(oracle, ur);
            switch (result.verdict) {
                case UrResult::Verdict::ur_consistent:
                    std::cout << "ur-consistent with n0 = " << result.n0 << "\n";
                    return exit_true;
                case UrResult::Verdict::refuted:
                    std::cout << "refuted; gap factor '" << result.gap_factor
                              << "', antichain:";
                    for (const Word& w : result.antichain) std::cout << " '" << w << "'";
                    std::cout << "\n";
                    return exit_false;
                case UrResult::Verdict::inconclusive:
                    std::cout << "inconclusive at this horizon\n";
                    return exit_error;
            }
        }
        throw std::runtime_error("unknown check: " + check);
    }

    if (reduce->parsed()) {
        Nfa lang = load_nfa(src);
        Nfa result = reduce_kind == "marker" ? reduction_prefix_to_infix(lang)
                     : reduce_kind == "full-image"
                         ? reduction_emptiness_to_prefix(lang)
                         : throw std::runtime_error("unknown reduction kind: " + reduce_kind);
        std::cout << format_automaton(result);
        return exit_true;
    }

    return exit_error;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run_cli(argc, argv);
    } catch (const BudgetError& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return exit_error;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_error;
    }
}
