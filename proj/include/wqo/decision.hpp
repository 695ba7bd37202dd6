#pragma once

#include <optional>
#include <tuple>
#include <variant>

#include "wqo/nfa.hpp"
#include "wqo/orders.hpp"
#include "wqo/transducer.hpp"
#include "wqo/words.hpp"

namespace wqo {

/// Fork structure of a trim DFA. A fork state has two distinct useful
/// outgoing letters; NC states are those from which a fork is reachable.
/// S = { w : delta(q0, w) is an NC state } is the set of words with two
/// prefix-incomparable extensions in the language.
struct PrefixAnalysis {
    Dfa dfa;
    std::set<int> fork_states;
    std::set<int> nc_states;
    Nfa s_language;
    bool s_finite = true;
};

PrefixAnalysis fork_analysis(const Dfa& d);

struct RBounds {
    std::size_t n = 0;   // number of bounding words
    std::size_t m = 0;   // max bounding-word length
    std::size_t n0 = 0;  // states of the trim subword-closure DFA
    std::size_t b1 = 0;  // period-length cap: max(n, m)
    std::size_t b2 = 0;  // middle-word cap: n * m * (n0 + 1)
};

struct ChainDecomposition {
    std::vector<Word> anchors;   // words wa on the NC fringe; each up-set is a chain
    std::vector<Word> s_words;   // the finite set S, length-lex
    std::vector<Word> s_max;     // maximal elements of S under prefix
    std::size_t chain_count = 0;
};

struct RInclusion {
    RBounds bounds;
    std::vector<Word> periods;  // canonical periods of the effective R
    std::size_t component_count = 0;
    std::size_t effective_b1 = 0;  // smallest monotone cap at which inclusion held
};

struct AntichainSample {
    std::vector<Word> words;
};

struct Unboundedness {
    int state = -1;
    Word u, v;  // two distinct non-commuting cycle words at `state`
    std::vector<Word> antichain;
};

struct EscapeWord {
    Word word;  // member of L \ R
    std::vector<Word> antichain;
};

using Certificate =
    std::variant<ChainDecomposition, RInclusion, AntichainSample, Unboundedness, EscapeWord>;

struct OrdinalBounds {
    OrdinalExpr height;
    bool height_strict = false;
    OrdinalExpr width;
    bool width_strict = false;
    OrdinalExpr mot;
    bool mot_strict = false;
};

struct DecisionReport {
    Rel relation;
    bool wqo = false;
    Certificate certificate;
    std::optional<OrdinalBounds> ordinal_bounds;  // present only on wqo verdicts
};

struct DecideOptions {
    std::size_t antichain_size = 6;   // sample size on not-wqo verdicts
    std::size_t mine_budget = 100'000;
    Budget budget;
};

/// WQO of the prefix relation: decided by finiteness of S; wqo verdicts
/// carry a chain decomposition, not-wqo verdicts a verified antichain
/// built along an antichain branch.
DecisionReport decide_prefix(const Dfa& lang, const DecideOptions& options = {});

/// Suffix = prefix on the reversed language, witnesses reversed back.
DecisionReport decide_suffix(const Dfa& lang, const DecideOptions& options = {});

/// k pairwise prefix-incomparable words of L along a lasso of NC states.
std::vector<Word> antichain_branch_witness(const PrefixAnalysis& analysis, std::size_t k);

struct BoundednessCertificate {
    bool bounded = false;
    std::vector<Word> words;  // L is a subset of words[0]* ... words[n-1]*
    struct CyclePair {
        int state = -1;
        Word u, v;  // non-commuting cycle words
    };
    std::optional<CyclePair> witness;  // present when unbounded
};

/// Bounded iff every SCC of the trim DFA is a single simple cycle. The
/// bounding tuple is verified internally via inclusion.
BoundednessCertificate decide_bounded(const Dfa& lang, const Budget& budget = {});

RBounds compute_r_bounds(const BoundednessCertificate& cert, const Dfa& lang,
                         const Budget& budget = {});

struct RLanguage {
    Nfa nfa;
    std::vector<Word> periods;
    std::size_t component_count = 0;
};

/// R = A . Sigma^{<=b2} . A where A = {eps} plus the union of Inf(x) over
/// canonical periods x with 1 <= |x| <= b1. Equals the finite union of
/// Inf(x) u Inf(y) components with the middle words collapsed.
RLanguage build_r_language(const RBounds& bounds, const Alphabet& alphabet,
                           const Budget& budget = {});

/// Boundedness test, R construction, inclusion L in R.
DecisionReport decide_infix(const Dfa& lang, const DecideOptions& options = {});

/// Self-check of the closure-invariance corollary for bounded languages.
bool decide_infix_closure_invariance(const Dfa& lang, const DecideOptions& options = {});

using IdealTriple = std::tuple<Word, Word, Word>;

/// Finite E with L equal to the union of Inf(x) u Inf(y) over (x,u,y) in E,
/// two-way verified; nullopt on budget exhaustion. Requires an
/// infix-downward-closed wqo language.
std::optional<std::vector<IdealTriple>> ideal_representation(const Dfa& lang,
                                                             std::size_t budget,
                                                             const DecideOptions& options = {});

/// #L over the alphabet extended with the marker: L prefix-wqo iff #L infix-wqo.
Nfa reduction_prefix_to_infix(const Nfa& lang, char marker = '#');

/// Image under the full transduction Sigma* x {a,b}*: empty iff L is empty,
/// {a,b}* otherwise; L empty iff the image is prefix-wqo.
Nfa reduction_emptiness_to_prefix(const Nfa& lang);

/// Antichain mining over the length-lex enumeration of a language.
MineResult mine_language_antichain(const Nfa& lang, Rel rel, std::size_t target,
                                   std::size_t budget, const Budget& resource_budget = {});

/// Length-lex word stream of a language (lazy).
class LanguageStream {
  public:
    explicit LanguageStream(const Nfa& lang, const Budget& budget = {});
    std::optional<Word> next();

  private:
    Dfa dfa_;
    std::vector<std::pair<int, Word>> level_;
    std::size_t index_ = 0;
};

Nfa bounded_tuple_language(const Alphabet& alphabet, const std::vector<Word>& words);

}  // namespace wqo
