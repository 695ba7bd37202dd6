#pragma once

#include "wqo/nfa.hpp"

namespace wqo {

struct TransducerTransition {
    int from;
    char input;   // eps_label allowed
    char output;  // eps_label allowed
    int to;
    auto operator<=>(const TransducerTransition&) const = default;
};

/// Finite-state transducer defining a rational relation between words over
/// `input_alphabet` and `output_alphabet`.
struct Transducer {
    Alphabet input_alphabet;
    Alphabet output_alphabet;
    int num_states = 0;
    std::set<int> initial;
    std::set<int> accepting;
    std::vector<TransducerTransition> transitions;

    int add_state() { return num_states++; }
    void add_transition(int from, char input, char output, int to);
};

/// Image of L(n) through the relation of t.
Nfa apply_transducer(const Transducer& t, const Nfa& n);

/// w -> marker w, over the input alphabet extended with `marker`.
Transducer marker_transducer(const Alphabet& input, char marker);

/// The full relation input* x output*.
Transducer full_image_transducer(const Alphabet& input, const Alphabet& output);

Transducer identity_transducer(const Alphabet& alphabet);

}  // namespace wqo
