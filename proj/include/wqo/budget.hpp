#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wqo {

/// Thrown when a configurable resource cap is hit. Budget overruns are
/// reported, never silently truncated.
struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

/// Resource caps shared by the automaton and decision layers.
struct Budget {
    std::size_t max_dfa_states = 1'000'000;   // subset-construction cap
    std::size_t max_product_states = 1'000'000;
    std::size_t max_enum_words = 1'000'000;
    std::size_t max_poset_elements = 64;
    std::size_t max_r_periods = 100'000;      // period candidates in R
    std::size_t max_cfg_symbols = 1'000'000;  // Bar-Hillel triple cap
};

}  // namespace wqo
