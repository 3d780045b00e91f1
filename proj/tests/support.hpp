#pragma once

// Shared helpers and slow reference implementations for the unit tests.

#include "ncsf/ncsym.hpp"
#include "ncsf/oracle.hpp"
#include "ncsf/set_partition.hpp"
#include "ncsf/text.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace ncsf {

// Readable gtest failure messages.
inline void PrintTo(const NCSymElement& f, std::ostream* os) { *os << to_string(f); }
inline void PrintTo(const SymElement& f, std::ostream* os) { *os << to_string(f); }
inline void PrintTo(const SetPartition& pi, std::ostream* os) { *os << to_string(pi); }
inline void PrintTo(const IntPartition& lambda, std::ostream* os) { *os << to_string(lambda); }
inline void PrintTo(const MultiPolynomial& P, std::ostream* os) { *os << to_string(P); }
inline void PrintTo(const WordPolynomial& P, std::ostream* os) { *os << to_string(P); }
inline void PrintTo(const DottedTableau& T, std::ostream* os) { *os << to_string(T); }
inline void PrintTo(const Biword& beta, std::ostream* os) { *os << to_string(beta); }

}  // namespace ncsf

namespace ncsf::testing {

inline SetPartition P(const std::string& text) { return parse_set_partition(text); }
inline IntPartition L(std::vector<int> parts) { return IntPartition(std::move(parts)); }

// μ(σ,π) from μ(π,π)=1 and Σ_{σ≤τ≤π} μ(σ,τ)=0, memoized per interval.
inline Integer recursive_mobius(const SetPartition& sigma, const SetPartition& pi,
                                std::map<std::pair<SetPartition, SetPartition>, Integer>& memo) {
    if (!leq(sigma, pi)) return 0;
    if (sigma == pi) return 1;
    auto key = std::pair(sigma, pi);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Integer total = 0;
    for (const auto& tau : enumerate(sigma.size()))
        if (leq(sigma, tau) && leq(tau, pi) && tau != pi) total += recursive_mobius(sigma, tau, memo);
    memo.emplace(key, -total);
    return -total;
}

// Words of length n over k letters, lexicographic.
inline std::vector<Word> all_words(int n, int k) {
    std::vector<Word> out;
    Word w(static_cast<std::size_t>(n), 1);
    while (true) {
        out.push_back(w);
        int i = n - 1;
        while (i >= 0 && w[static_cast<std::size_t>(i)] == k) w[static_cast<std::size_t>(i--)] = 1;
        if (i < 0) break;
        ++w[static_cast<std::size_t>(i)];
    }
    return out;
}

// Number of pairs (f, L) in the definition of h_π with M_f = w: L ranges over
// linear orders of each block of ker f ∧ π, listed one by one.
inline Integer h_word_count_by_orders(const SetPartition& pi, const Word& w) {
    std::map<std::pair<int, int>, std::vector<int>> classes;
    for (int j = 1; j <= pi.size(); ++j) classes[{pi.block_of(j), w[static_cast<std::size_t>(j - 1)]}].push_back(j);
    Integer total = 1;
    for (auto& [key, block] : classes) {
        Integer orders = 0;
        do ++orders;
        while (std::next_permutation(block.begin(), block.end()));
        total *= orders;
    }
    return total;
}

}  // namespace ncsf::testing
