#include "wqo/transducer.hpp"

#include <deque>
#include <map>
#include <stdexcept>

namespace wqo {

void Transducer::add_transition(int from, char input, char output, int to) {
    if (from < 0 || from >= num_states || to < 0 || to >= num_states)
        throw std::invalid_argument("transition endpoint not a declared state");
    if (input != eps_label && !input_alphabet.contains(input))
        throw std::invalid_argument("input label not in input alphabet");
    if (output != eps_label && !output_alphabet.contains(output))
        throw std::invalid_argument("output label not in output alphabet");
    transitions.push_back({from, input, output, to});
}

Nfa apply_transducer(const Transducer& t, const Nfa& n) {
    if (!(t.input_alphabet == n.alphabet))
        throw std::invalid_argument("alphabet mismatch between transducer input and language");

    // Product walk: transducer steps with input eps move alone; language
    // epsilon transitions move alone; otherwise labels must match.
    Nfa r;
    r.alphabet = t.output_alphabet;
    std::map<std::pair<int, int>, int> ids;
    std::deque<std::pair<int, int>> queue;
    auto intern = [&](std::pair<int, int> p) {
        auto it = ids.find(p);
        if (it != ids.end()) return it->second;
        int id = r.add_state();
        ids.emplace(p, id);
        queue.push_back(p);
        return id;
    };
    for (int qt : t.initial)
        for (int qn : n.initial) r.initial.insert(intern({qt, qn}));
    while (!queue.empty()) {
        auto [qt, qn] = queue.front();
        queue.pop_front();
        int id = ids.at({qt, qn});
        if (t.accepting.count(qt) && n.accepting.count(qn)) r.accepting.insert(id);
        for (const auto& tt : t.transitions) {
            if (tt.from != qt) continue;
            if (tt.input == eps_label) {
                r.transitions.push_back({id, tt.output, intern({tt.to, qn})});
            } else {
                for (const auto& nt : n.transitions)
                    if (nt.from == qn && nt.label == tt.input)
                        r.transitions.push_back({id, tt.output, intern({tt.to, nt.to})});
            }
        }
        for (const auto& nt : n.transitions)
            if (nt.from == qn && nt.label == eps_label)
                r.transitions.push_back({id, eps_label, intern({qt, nt.to})});
    }
    r.normalize();
    return r;
}

Transducer marker_transducer(const Alphabet& input, char marker) {
    Transducer t;
    t.input_alphabet = input;
    t.output_alphabet = input.with_symbol(marker);
    int start = t.add_state();
    int copy = t.add_state();
    t.initial = {start};
    t.accepting = {copy};
    t.add_transition(start, eps_label, marker, copy);
    for (char c : input.symbols()) t.add_transition(copy, c, c, copy);
    return t;
}

Transducer full_image_transducer(const Alphabet& input, const Alphabet& output) {
    Transducer t;
    t.input_alphabet = input;
    t.output_alphabet = output;
    int q = t.add_state();
    t.initial = {q};
    t.accepting = {q};
    for (char c : input.symbols()) t.add_transition(q, c, eps_label, q);
    for (char c : output.symbols()) t.add_transition(q, eps_label, c, q);
    return t;
}

Transducer identity_transducer(const Alphabet& alphabet) {
    Transducer t;
    t.input_alphabet = alphabet;
    t.output_alphabet = alphabet;
    int q = t.add_state();
    t.initial = {q};
    t.accepting = {q};
    for (char c : alphabet.symbols()) t.add_transition(q, c, c, q);
    return t;
}

}  // namespace wqo
