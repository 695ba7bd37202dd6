#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wqo/decision.hpp"
#include "wqo/nfa.hpp"

namespace wqo {

struct CfgSymbol {
    bool terminal = false;
    char t = 0;       // when terminal
    int nt = -1;      // when nonterminal
    bool operator==(const CfgSymbol&) const = default;
};

struct CfgProduction {
    int lhs = -1;
    std::vector<CfgSymbol> rhs;
};

/// Context-free grammar. `reduced` means every nonterminal is productive
/// and reachable; an empty production list on a reduced grammar marks the
/// empty language.
struct Cfg {
    std::vector<std::string> nonterminals;
    Alphabet terminals;
    std::vector<CfgProduction> productions;
    int start = 0;
    bool reduced = false;
};

/// One rule per line: `Nonterminal -> alt1 | alt2`, whitespace-separated
/// tokens, uppercase-initial tokens are nonterminals, single lowercase
/// characters are terminals, `eps` is the empty right-hand side.
Cfg parse_cfg(const std::string& text);

std::string format_cfg(const Cfg& g);

/// Same grammar over a wider terminal alphabet.
Cfg with_terminals(const Cfg& g, const Alphabet& terminals);

Cfg reduce_cfg(const Cfg& g);

struct CfgEmptiness {
    bool empty = true;
    std::optional<Word> witness;  // length-lex shortest derivable word
};

CfgEmptiness cfg_is_empty(const Cfg& g);

/// Bar-Hillel triple construction on the binarized grammar.
Cfg cfg_intersect_regular(const Cfg& g, const Dfa& d, const Budget& budget = {});

/// Derivable words of length <= maxlen, length-lex.
std::vector<Word> cfg_enumerate(const Cfg& g, std::size_t maxlen, const Budget& budget = {});

Cfg reverse_cfg(const Cfg& g);

/// Grammar for marker . L(g), the marker added as a fresh terminal.
Cfg marker_prefix_cfg(const Cfg& g, char marker = '#');

/// Boundedness through elementary derivation cycles: the collected cycle
/// pairs (x, y) with A =>* x A y must have pairwise commuting x-parts and
/// pairwise commuting y-parts at every nonterminal. Bounded verdicts carry
/// a tuple verified by an exact inclusion check; unbounded verdicts carry
/// the violating nonterminal and a non-commuting word pair.
BoundednessCertificate cfg_bounded(const Cfg& g, const Budget& budget = {});

/// Exact subword downward closure of L(g) as an NFA.
Nfa cfg_subword_closure(const Cfg& g, const Budget& budget = {});

/// Antichain mining over a lazily enumerated grammar language.
MineResult mine_grammar_antichain(const Cfg& g, Rel rel, std::size_t target,
                                  std::size_t budget, const Budget& resources = {});

/// WQO decision for context-free languages: the infix pipeline with
/// cfg_bounded, cfg_subword_closure and a Bar-Hillel emptiness inclusion
/// test; prefix via the marker reduction, suffix via the reversed grammar.
DecisionReport decide_cfg(const Cfg& g, Rel rel, const DecideOptions& options = {});

}  // namespace wqo
