// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. An optional argv[1] names the CLI binary for the determinism
// criterion.

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "wqo/grammar.hpp"
#include "wqo/infinite.hpp"
#include "wqo/regex.hpp"
#include "wqo/report.hpp"

using namespace wqo;

namespace {

const Alphabet ab{"ab"};

int failures = 0;
std::vector<std::string> notes;

void note(const std::string& message) { notes.push_back(message); }

void criterion(int number, const std::string& label, bool ok) {
    std::printf("criterion %d [%s]: %s\n", number, label.c_str(), ok ? "PASS" : "FAIL");
    if (!ok) {
        ++failures;
        for (const auto& n : notes) std::printf("    %s\n", n.c_str());
    }
    notes.clear();
}

Dfa dfa_of(const std::string& re) { return determinize_trim(regex_language(re, ab)); }

bool verified_antichain(const std::vector<Word>& words, Rel rel, std::size_t size) {
    if (words.size() < size) {
        note("antichain too small: " + std::to_string(words.size()));
        return false;
    }
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i + 1; j < words.size(); ++j)
            if (compare(rel, words[i], words[j]) != Cmp::incomparable) {
                note("comparable pair '" + words[i] + "', '" + words[j] + "'");
                return false;
            }
    return true;
}

const std::vector<Word>* antichain_of(const DecisionReport& r) {
    if (const auto* s = std::get_if<AntichainSample>(&r.certificate)) return &s->words;
    if (const auto* u = std::get_if<Unboundedness>(&r.certificate)) return &u->antichain;
    if (const auto* e = std::get_if<EscapeWord>(&r.certificate)) return &e->antichain;
    return nullptr;
}

/// Fast repeated membership against a fixed NFA.
class NfaSim {
  public:
    explicit NfaSim(const Nfa& n) : nfa_(n), out_(n.num_states), eps_(n.num_states) {
        for (const auto& t : n.transitions) {
            if (t.label == eps_label)
                eps_[t.from].push_back(t.to);
            else
                out_[t.from].emplace_back(t.label, t.to);
        }
    }

    bool accepts(const Word& w) const {
        std::vector<char> cur(nfa_.num_states, 0), next;
        std::vector<int> stack;
        for (int q : nfa_.initial) mark(cur, stack, q);
        for (char c : w) {
            next.assign(nfa_.num_states, 0);
            for (int q = 0; q < nfa_.num_states; ++q)
                if (cur[q])
                    for (auto [label, to] : out_[q])
                        if (label == c) mark(next, stack, to);
            cur.swap(next);
            if (std::none_of(cur.begin(), cur.end(), [](char b) { return b; })) return false;
        }
        for (int q : nfa_.accepting)
            if (cur[q]) return true;
        return false;
    }

  private:
    void mark(std::vector<char>& set, std::vector<int>& stack, int q) const {
        if (set[q]) return;
        set[q] = 1;
        stack.push_back(q);
        while (!stack.empty()) {
            int p = stack.back();
            stack.pop_back();
            for (int to : eps_[p])
                if (!set[to]) {
                    set[to] = 1;
                    stack.push_back(to);
                }
        }
    }

    const Nfa& nfa_;
    std::vector<std::vector<std::pair<char, int>>> out_;
    std::vector<std::vector<int>> eps_;
};

/// Deterministic corpus of random trim DFAs over {a,b} with <= 4 states.
std::vector<Dfa> random_corpus(std::size_t count, unsigned seed) {
    std::mt19937 rng(seed);
    std::vector<Dfa> corpus;
    while (corpus.size() < count) {
        std::uniform_int_distribution<int> nstates(1, 4);
        int n = nstates(rng);
        Nfa raw;
        raw.alphabet = ab;
        raw.num_states = n;
        raw.initial = {0};
        std::uniform_int_distribution<int> target(0, n - 1);
        std::uniform_real_distribution<double> coin(0.0, 1.0);
        for (int q = 0; q < n; ++q) {
            for (char c : ab.symbols())
                if (coin(rng) < 0.8) raw.add_transition(q, c, target(rng));
            if (coin(rng) < 0.45) raw.accepting.insert(q);
        }
        raw.normalize();
        Dfa d = determinize_trim(raw);
        if (d.num_states == 0 || d.num_states > 4) continue;  // trim, small, non-empty
        corpus.push_back(std::move(d));
    }
    return corpus;
}

/// A deterministic sample of words of L (length <= maxlen), via random walks.
std::vector<Word> sample_words(const Dfa& d, std::size_t count, std::size_t maxlen,
                               unsigned seed) {
    std::mt19937 rng(seed);
    std::vector<Word> words;
    std::uniform_int_distribution<std::size_t> want_len(0, maxlen);
    std::size_t guard = 0;
    while (words.size() < count && guard < count * 200) {
        ++guard;
        Word w;
        int q = d.initial;
        std::size_t len = want_len(rng);
        while (w.size() < len) {
            std::string choices;
            for (char c : d.alphabet.symbols())
                if (d.step(q, c)) choices += c;
            if (choices.empty()) break;
            char c = choices[rng() % choices.size()];
            w += c;
            q = *d.step(q, c);
        }
        if (d.accepting.count(q)) words.push_back(w);
    }
    return words;
}

// --- criterion 1 -------------------------------------------------------

bool paper_examples() {
    using clock = std::chrono::steady_clock;
    bool ok = true;
    auto timed = [&](const char* name, auto&& call, bool expect_wqo,
                     std::size_t antichain = 0, Rel rel = Rel::prefix) {
        auto start = clock::now();
        DecisionReport r = call();
        double seconds = std::chrono::duration<double>(clock::now() - start).count();
        if (seconds >= 1.0) {
            note(std::string(name) + " took " + std::to_string(seconds) + "s");
            ok = false;
        }
        if (r.wqo != expect_wqo) {
            note(std::string(name) + " verdict mismatch");
            ok = false;
        }
        if (antichain > 0) {
            const auto* words = antichain_of(r);
            if (!words || !verified_antichain(*words, rel, antichain)) {
                note(std::string(name) + " lacks a verified antichain");
                ok = false;
            }
        }
        return r;
    };

    DecideOptions options;
    timed("decide(prefix, a*b)", [&] { return decide_prefix(dfa_of("a*b"), options); },
          false, 6, Rel::prefix);

    DecisionReport astar =
        timed("decide(prefix, a*)", [&] { return decide_prefix(dfa_of("a*")); }, true);
    if (std::get<ChainDecomposition>(astar.certificate).chain_count != 1) {
        note("a* should be a single chain");
        ok = false;
    }

    timed("decide(infix, a*b*|b*a*)", [&] { return decide_infix(dfa_of("a*b*|b*a*")); },
          true);
    timed("decide(infix, a*b*a*)", [&] { return decide_infix(dfa_of("a*b*a*")); }, false, 6,
          Rel::infix);
    timed("decide(infix, (ab)*)", [&] { return decide_infix(dfa_of("(ab)*")); }, true);
    return ok;
}

// --- criteria 2 and 3 ---------------------------------------------------

struct CorpusOutcome {
    bool cross_validation = true;
    bool reductions = true;
    std::vector<DecisionReport> wqo_reports;
};

CorpusOutcome corpus_checks() {
    CorpusOutcome outcome;
    auto corpus = random_corpus(200, 20250810);
    DecideOptions options;
    unsigned sample_seed = 1;
    for (const Dfa& lang : corpus) {
        Nfa language = nfa_from_dfa(lang);

        DecisionReport infix = decide_infix(lang, options);
        if (infix.wqo) outcome.wqo_reports.push_back(infix);
        if (!infix.wqo) {
            auto mined = mine_language_antichain(language, Rel::infix, 8, 100'000);
            if (mined.status != MineResult::Status::found ||
                !verified_antichain(mined.antichain, Rel::infix, 8)) {
                note("not-wqo instance without a size-8 antichain");
                outcome.cross_validation = false;
            }
        } else {
            const auto& cert = std::get<RInclusion>(infix.certificate);
            RBounds effective = cert.bounds;
            effective.b1 = cert.effective_b1;
            RLanguage r = build_r_language(effective, lang.alphabet);
            NfaSim sim(r.nfa);
            for (const Word& w : sample_words(lang, 1000, 20, sample_seed++))
                if (!sim.accepts(w)) {
                    note("sampled word '" + w + "' escapes R");
                    outcome.cross_validation = false;
                    break;
                }
            if (!decide_infix_closure_invariance(lang, options)) {
                note("closure invariance violated");
                outcome.cross_validation = false;
            }
        }

        // Reduction coherence.
        DecisionReport prefix = decide_prefix(lang, options);
        Dfa marked = determinize_trim(reduction_prefix_to_infix(language));
        if (decide_infix(marked, options).wqo != prefix.wqo) {
            note("marker reduction mismatch");
            outcome.reductions = false;
        }
        if (prefix.wqo) outcome.wqo_reports.push_back(prefix);
        Dfa rev = determinize_trim(reverse_nfa(language));
        if (decide_suffix(rev, options).wqo != prefix.wqo) {
            note("reversal mismatch");
            outcome.reductions = false;
        }
        Dfa image = determinize_trim(reduction_emptiness_to_prefix(language));
        bool image_wqo = decide_prefix(image, options).wqo;
        if (image_wqo != is_empty(language)) {
            note("full-image reduction mismatch");
            outcome.reductions = false;
        }
    }
    // The empty language exercises the degenerate side of criterion 3.
    Nfa none = empty_language(ab);
    if (!decide_prefix(determinize_trim(reduction_emptiness_to_prefix(none))).wqo)
        outcome.reductions = false;
    return outcome;
}

// --- criterion 4 --------------------------------------------------------

bool word_combinatorics() {
    bool ok = true;
    // minimal_period vs naive search, |w| <= 14
    std::vector<Word> level{""};
    for (std::size_t len = 1; len <= 14 && ok; ++len) {
        std::vector<Word> next;
        for (const Word& w : level)
            for (char c : ab.symbols()) next.push_back(w + c);
        level = std::move(next);
        for (const Word& w : level) {
            std::size_t naive = w.size();
            for (std::size_t p = 1; p < w.size(); ++p) {
                bool periodic = true;
                for (std::size_t i = 0; i + p < w.size(); ++i)
                    if (w[i] != w[i + p]) {
                        periodic = false;
                        break;
                    }
                if (periodic) {
                    naive = p;
                    break;
                }
            }
            if (minimal_period(w) != naive) {
                note("period mismatch on '" + w + "'");
                ok = false;
                break;
            }
        }
    }

    // period inheritance: zero violations for |v| <= 12
    level = {""};
    for (std::size_t len = 1; len <= 12 && ok; ++len) {
        std::vector<Word> next;
        for (const Word& w : level)
            for (char c : ab.symbols()) next.push_back(w + c);
        level = std::move(next);
        for (const Word& v : level)
            for (std::size_t i = 0; i < v.size() && ok; ++i)
                for (std::size_t l = 1; i + l <= v.size(); ++l)
                    if (period_inheritance_check(v.substr(i, l), v) ==
                        InheritanceResult::violation) {
                        note("inheritance violation in '" + v + "'");
                        ok = false;
                        break;
                    }
    }

    // Inf("ab") equals the brute-force factor set up to length 10
    PeriodChain chain = inf_period_chain("ab", ab);
    std::set<Word> factors;
    Word big = word_power("ab", 8);
    for (std::size_t i = 0; i <= big.size(); ++i)
        for (std::size_t l = 0; l <= 10 && i + l <= big.size(); ++l)
            factors.insert(big.substr(i, l));
    auto accepted = enumerate_words(chain.cyclic, 10);
    if (std::set<Word>(accepted.begin(), accepted.end()) != factors) {
        note("Inf(ab) differs from the factor set");
        ok = false;
    }

    // chain property for |x| <= 3, exponents <= 6, all three relations
    for (const Word& x : {Word("a"), Word("b"), Word("ab"), Word("aab"), Word("abb"),
                          Word("aba")}) {
        PeriodChain c = inf_period_chain(x, ab);
        for (const auto& [u, v] : c.components)
            for (std::size_t l = 0; l <= 6 && ok; ++l)
                for (std::size_t k = l + 1; k <= 6; ++k) {
                    Word small = u + word_power(c.period, l) + v;
                    Word large = u + word_power(c.period, k) + v;
                    if (!word_le(Rel::prefix, small, large) ||
                        !word_le(Rel::suffix, small, large) ||
                        !word_le(Rel::infix, small, large)) {
                        note("chain property fails for period '" + x + "'");
                        ok = false;
                        break;
                    }
                }
    }
    return ok;
}

// --- criterion 5 --------------------------------------------------------

bool boundedness_certificates() {
    bool ok = true;
    auto cert = decide_bounded(dfa_of("a*b*"));
    if (!cert.bounded) {
        note("a*b* must be bounded");
        ok = false;
    } else {
        Nfa tuple = bounded_tuple_language(ab, cert.words);
        if (!is_subset(regex_language("a*b*", ab), tuple).holds) {
            note("a*b* subset certificate fails");
            ok = false;
        }
    }

    cert = decide_bounded(determinize_trim(universal_language(ab)));
    if (cert.bounded || !cert.witness ||
        cert.witness->u + cert.witness->v == cert.witness->v + cert.witness->u) {
        note("(a|b)* needs a non-commuting witness");
        ok = false;
    }

    Cfg anbn = with_terminals(parse_cfg("S -> a S b | eps\n"), ab);
    auto gcert = cfg_bounded(reduce_cfg(anbn));
    if (!gcert.bounded || gcert.words != std::vector<Word>{"a", "b"}) {
        note("a^n b^n should yield the tuple (a, b)");
        ok = false;
    } else {
        // machine re-verification
        Nfa tuple = bounded_tuple_language(ab, gcert.words);
        Dfa complement_dfa = determinize_trim(nfa_from_dfa(complement(determinize_trim(tuple))));
        if (!cfg_is_empty(cfg_intersect_regular(reduce_cfg(anbn), complement_dfa)).empty) {
            note("a^n b^n tuple fails re-verification");
            ok = false;
        }
    }

    Cfg palindromes = parse_cfg("S -> a S a | b S b | a | b | eps\n");
    auto pcert = cfg_bounded(reduce_cfg(palindromes));
    if (pcert.bounded || !pcert.witness ||
        pcert.witness->u + pcert.witness->v == pcert.witness->v + pcert.witness->u) {
        note("palindromes need a non-commuting witness");
        ok = false;
    }
    return ok;
}

// --- criterion 6 --------------------------------------------------------

bool cfg_decisions() {
    bool ok = true;
    Cfg anbn = with_terminals(parse_cfg("S -> a S b | eps\n"), ab);
    if (!decide_cfg(anbn, Rel::infix).wqo) {
        note("a^n b^n must be infix-wqo");
        ok = false;
    }

    Cfg palindromes = parse_cfg("S -> a S a | b S b | a | b | eps\n");
    DecideOptions eight;
    eight.antichain_size = 8;
    DecisionReport p = decide_cfg(palindromes, Rel::infix, eight);
    const auto* mined = antichain_of(p);
    if (p.wqo || !mined || !verified_antichain(*mined, Rel::infix, 8)) {
        note("palindromes need a mined 8-antichain");
        ok = false;
    }
    // the named family a b^i a is an antichain of the language
    std::vector<Word> family;
    for (std::size_t i = 1; i <= 8; ++i) family.push_back("a" + Word(i, 'b') + "a");
    auto derivable = cfg_enumerate(palindromes, 10);
    std::set<Word> derived(derivable.begin(), derivable.end());
    for (const Word& w : family)
        if (!derived.count(w)) {
            note("family word '" + w + "' not derivable");
            ok = false;
        }
    if (!verified_antichain(family, Rel::infix, 8)) ok = false;

    // agreement with the automaton pipeline on ten regular grammars
    const std::array<std::pair<const char*, const char*>, 10> corpus{{
        {"S -> a S | b\n", "a*b"},
        {"S -> a S | eps\n", "a*"},
        {"S -> a T | eps\nT -> b S\n", "(ab)*"},
        {"S -> a S | b S | eps\n", "(a|b)*"},
        {"S -> a S | T\nT -> b T | eps\n", "a*b*"},
        {"S -> a T | b U\nT -> a\nU -> b\n", "aa|bb"},
        {"S -> a S | b T | a\nT -> b T | eps\n", "a*(bb*|a)"},
        {"S -> b T\nT -> a T | eps\n", "ba*"},
        {"S -> a T\nT -> b S | b\n", "(ab)*ab"},
        {"S -> a S | b S | a\n", "(a|b)*a"},
    }};
    for (const auto& [grammar, regex] : corpus) {
        Cfg g = with_terminals(parse_cfg(grammar), ab);
        bool grammar_wqo = decide_cfg(g, Rel::infix).wqo;
        bool dfa_wqo = decide_infix(dfa_of(regex)).wqo;
        if (grammar_wqo != dfa_wqo) {
            note(std::string("pipeline disagreement on ") + regex);
            ok = false;
        }
    }
    return ok;
}

// --- criterion 7 --------------------------------------------------------

bool cube_free_tm() { return !has_cube(thue_morse_prefix(4096)).has_value(); }

bool infinite_words() {
    bool ok = cube_free_tm();
    if (!ok) note("Thue-Morse prefix 4096 is not cube-free");

    std::size_t horizon = std::size_t{1} << 16;
    RecurrenceProfile profile = recurrence_profile(thue_morse_oracle(), 8, horizon);
    Word w = thue_morse_prefix(horizon);
    for (const auto& band : profile.bands) {
        if (band.unbounded_at_horizon || !band.window_bound) {
            note("Thue-Morse band k=" + std::to_string(band.k) + " not finite");
            ok = false;
            continue;
        }
        // independent re-scan: every length-k factor occurs in every window
        std::size_t window = *band.window_bound;
        std::map<Word, std::vector<std::size_t>> occ;
        for (std::size_t i = 0; i + band.k <= w.size(); ++i)
            occ[w.substr(i, band.k)].push_back(i);
        for (const auto& [factor, positions] : occ) {
            bool covered = positions.front() + band.k <= window &&
                           positions.back() + window >= w.size();
            for (std::size_t t = 0; t + 1 < positions.size() && covered; ++t)
                covered = positions[t + 1] - positions[t] + band.k <= window + 1;
            if (!covered) {
                note("window bound fails re-scan at k=" + std::to_string(band.k));
                ok = false;
                break;
            }
        }
    }

    UrResult tm = empirical_ultimately_ur(thue_morse_oracle());
    if (tm.verdict != UrResult::Verdict::ur_consistent) {
        note("Thue-Morse not ur-consistent");
        ok = false;
    }
    UrResult block = empirical_ultimately_ur(block_word_oracle());
    if (block.verdict != UrResult::Verdict::refuted ||
        !verified_antichain(block.antichain, Rel::infix, 8)) {
        note("block word not refuted with a verified antichain");
        ok = false;
    }

    AutomaticSequence tm_auto = thue_morse_automaton();
    for (std::uint64_t i = 0; i < (1u << 14); ++i)
        if (automatic_eval(tm_auto, i) != thue_morse(i)) {
            note("automatic evaluation diverges at " + std::to_string(i));
            ok = false;
            break;
        }
    return ok;
}

// --- criterion 8 --------------------------------------------------------

bool ordinal_layer(const std::vector<DecisionReport>& wqo_reports) {
    bool ok = true;
    if (hessenberg(OrdinalExpr::omega(), OrdinalExpr::omega()) != OrdinalExpr::omega_power(2)) {
        note("w (.) w != w^2");
        ok = false;
    }
    if (hessenberg(OrdinalExpr::omega_power(2), OrdinalExpr::omega()) !=
        OrdinalExpr::omega_power(3)) {
        note("w^2 (.) w != w^3");
        ok = false;
    }

    std::mt19937 rng(424242);
    std::uniform_int_distribution<std::size_t> len(0, 6);
    std::uniform_int_distribution<int> letter(0, 1);
    std::array<Rel, 4> rels{Rel::prefix, Rel::suffix, Rel::infix, Rel::subword};
    for (int round = 0; round < 50; ++round) {
        std::set<Word> words;
        std::uniform_int_distribution<std::size_t> size(2, 12);
        std::size_t want = size(rng);
        while (words.size() < want) {
            Word w;
            std::size_t l = len(rng);
            for (std::size_t i = 0; i < l; ++i) w += letter(rng) ? 'b' : 'a';
            words.insert(w);
        }
        FinitePoset poset{std::vector<Word>(words.begin(), words.end()),
                          rels[static_cast<std::size_t>(round) % rels.size()]};
        auto inv = poset_invariants(poset);
        if (inv.mot != poset.elements.size()) {
            note("mot differs from cardinality");
            ok = false;
            break;
        }
    }

    OrdinalExpr omega = OrdinalExpr::omega();
    OrdinalExpr omega2 = OrdinalExpr::omega_power(2);
    OrdinalExpr omega3 = OrdinalExpr::omega_power(3);
    for (const DecisionReport& r : wqo_reports) {
        if (!r.ordinal_bounds) {
            note("wqo report without bounds");
            ok = false;
            continue;
        }
        const auto& b = *r.ordinal_bounds;
        bool height_ok = ordinal_compare(b.height, omega) != Cmp::gt;
        bool width_ok = ordinal_compare(b.width, omega2) == Cmp::lt ||
                        (ordinal_compare(b.width, omega2) == Cmp::eq && b.width_strict);
        bool mot_ok = ordinal_compare(b.mot, omega3) == Cmp::lt ||
                      (ordinal_compare(b.mot, omega3) == Cmp::eq && b.mot_strict);
        if (!height_ok || !width_ok || !mot_ok) {
            note("reported bounds exceed the theorem caps");
            ok = false;
            break;
        }
    }
    return ok;
}

// --- criterion 9 --------------------------------------------------------

std::optional<std::string> run_command(const std::string& command) {
    std::string output;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return std::nullopt;
    char buffer[4096];
    std::size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) output.append(buffer, got);
    pclose(pipe);
    return output;
}

bool determinism(const std::string& cli) {
    if (cli.empty()) {
        note("no CLI binary given");
        return false;
    }
    const std::array<const char*, 7> golden{{
        "decide --order prefix --regex 'a*b' --json",
        "decide --order prefix --regex 'a*' --json",
        "decide --order infix --regex 'a*b*|b*a*' --json",
        "decide --order infix --regex 'a*b*a*' --json",
        "decide --order suffix --regex 'ba*' --json",
        "decide --order infix --regex '(ab)*' --json",
        "infinite --sequence thue-morse --check recurrence --horizon 4096 --json",
    }};
    for (const char* args : golden) {
        auto first = run_command(cli + " " + args + " 2>/dev/null");
        auto second = run_command(cli + " " + args + " 2>/dev/null");
        if (!first || !second || first->empty() || *first != *second) {
            note(std::string("not byte-identical: ") + args);
            return false;
        }
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli = argc > 1 ? argv[1] : "";

    criterion(1, "paper examples, exact verdicts", paper_examples());

    CorpusOutcome corpus = corpus_checks();
    criterion(2, "randomized cross-validation, 200 DFAs", corpus.cross_validation);
    criterion(3, "reduction coherence", corpus.reductions);
    criterion(4, "word combinatorics", word_combinatorics());
    criterion(5, "boundedness certificates", boundedness_certificates());
    criterion(6, "context-free decisions", cfg_decisions());
    criterion(7, "infinite words", infinite_words());
    criterion(8, "ordinal layer", ordinal_layer(corpus.wqo_reports));
    criterion(9, "deterministic JSON output", determinism(cli));

    if (failures > 0) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
