#pragma once

#include "barker/searchlab.hpp"

#include <stdexcept>
#include <string>

namespace barker::search::detail {

inline void check_exhaustive_n(int n, const SearchOptions& opts) {
    if (n < 1) throw std::invalid_argument("search: n must be >= 1");
    if (n > opts.ceiling) {
        throw std::out_of_range("search: n = " + std::to_string(n) + " exceeds ceiling " +
                                std::to_string(opts.ceiling) + " (raise it explicitly to override)");
    }
    if (n > kExhaustiveHardLimit) {
        throw std::out_of_range("search: exhaustive enumeration is limited to n <= " +
                                std::to_string(kExhaustiveHardLimit));
    }
}

inline void check_pruned_n(int n, const SearchOptions& opts) {
    if (n < 1) throw std::invalid_argument("search: n must be >= 1");
    if (n % 2 == 0) throw std::domain_error("pruned_search: requires odd n");
    if (n > opts.ceiling) {
        throw std::out_of_range("search: n = " + std::to_string(n) + " exceeds ceiling " +
                                std::to_string(opts.ceiling) + " (raise it explicitly to override)");
    }
    if (n > kPrunedHardLimit - 1) throw std::out_of_range("pruned_search: n too large for packed output");
}

}  // namespace barker::search::detail
