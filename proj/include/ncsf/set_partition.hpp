#pragma once

#include "ncsf/int_partition.hpp"

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ncsf {

/// A permutation of {1..n} in one-line notation: image()[i-1] = g(i).
class Permutation {
public:
    Permutation() = default;
    /// Throws SemanticError unless `images` is a permutation of 1..size.
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);
    /// The transposition (a b) on {1..n}.
    static Permutation transposition(int n, int a, int b);
    /// Every permutation of {1..n} in lexicographic order of one-line notation.
    static std::vector<Permutation> all(int n);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const;
    /// (*this ∘ other)(i) = (*this)(other(i)).
    Permutation compose(const Permutation& other) const;

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> images_;
};

/// A set partition of {1..n}, stored by its restricted growth string:
/// rgs[i] is the index of the block holding i+1, blocks numbered by first appearance.
class SetPartition {
public:
    /// The empty partition of the empty set.
    SetPartition() = default;

    /// Throws SemanticError unless `rgs` is a restricted growth string.
    static SetPartition from_rgs(std::vector<std::uint8_t> rgs);
    /// Throws SemanticError unless the blocks are disjoint, nonempty and cover {1..n}.
    static SetPartition from_blocks(int n, const std::vector<std::vector<int>>& blocks);
    /// Infers n as the largest element.
    static SetPartition from_blocks(const std::vector<std::vector<int>>& blocks);

    /// 0̂ = 1/2/…/n.
    static SetPartition finest(int n);
    /// 1̂ = 12…n (for n = 0 this is the empty partition).
    static SetPartition coarsest(int n);

    int size() const { return static_cast<int>(rgs_.size()); }
    int length() const { return blocks_; }
    int rank() const { return size() - length(); }
    int block_of(int element) const { return rgs_[static_cast<std::size_t>(element - 1)]; }
    const std::vector<std::uint8_t>& rgs() const { return rgs_; }

    /// Blocks in canonical order; elements ascending within each block.
    std::vector<std::vector<int>> blocks() const;
    std::vector<int> block_sizes() const;

    bool is_finest() const { return length() == size(); }

    /// Ordered by (n, rgs).
    auto operator<=>(const SetPartition&) const = default;

private:
    std::vector<std::uint8_t> rgs_;
    int blocks_ = 0;
};

/// Order used when listing terms: by ground-set size, then finer partitions
/// first, then by restricted growth string.
struct TermOrder {
    bool operator()(const SetPartition& a, const SetPartition& b) const;
};

/// σ ≤ π in the refinement order. Throws SemanticError on ground-set mismatch.
bool leq(const SetPartition& sigma, const SetPartition& pi);
SetPartition meet(const SetPartition& sigma, const SetPartition& pi);
SetPartition join(const SetPartition& sigma, const SetPartition& pi);

IntPartition type_of(const SetPartition& pi);
/// λ(σ,π): number of blocks of σ inside each block of π, sorted. Requires σ ≤ π.
IntPartition interval_type(const SetPartition& sigma, const SetPartition& pi);

/// Möbius function of Π_n: zero unless σ ≤ π, else ∏ (−1)^{λ_i−1}(λ_i−1)! over λ(σ,π).
Integer mobius(const SetPartition& sigma, const SetPartition& pi);
/// Sign of a permutation whose cycles are the blocks: ∏ (−1)^{|B|−1}.
int sign(const SetPartition& pi);

/// All partitions of [n] ordered by restricted growth string.
std::vector<SetPartition> enumerate(int n);
/// Bell number B(n).
Integer bell(int n);

/// gπ = { g(B) : B ∈ π }.
SetPartition act(const Permutation& g, const SetPartition& pi);

/// Precomputed order, meet and Möbius tables of Π_n, shared across threads.
class Lattice {
public:
    static constexpr int kMaxSize = 7;

    /// Throws SemanticError for n outside [0, kMaxSize].
    static const Lattice& of(int n);

    int size() const { return n_; }
    int count() const { return static_cast<int>(elements_.size()); }
    const std::vector<SetPartition>& elements() const { return elements_; }
    const SetPartition& operator[](int index) const { return elements_[static_cast<std::size_t>(index)]; }
    int index_of(const SetPartition& pi) const;

    bool leq(int a, int b) const { return leq_[flat(a, b)] != 0; }
    int meet(int a, int b) const { return meet_[flat(a, b)]; }
    const Integer& mobius(int a, int b) const { return mobius_[flat(a, b)]; }
    const Integer& mobius_from_bottom(int a) const { return mobius(bottom_, a); }
    /// (σ∧π)! for the given indices.
    const Integer& meet_factorial(int a, int b) const { return fact_parts_[static_cast<std::size_t>(meet(a, b))]; }
    const Integer& fact_parts(int a) const { return fact_parts_[static_cast<std::size_t>(a)]; }
    int sign(int a) const { return signs_[static_cast<std::size_t>(a)]; }
    int bottom() const { return bottom_; }
    int top() const { return top_; }

    /// Indices b with a ≤ b / b ≤ a.
    std::span<const int> above(int a) const { return above_[static_cast<std::size_t>(a)]; }
    std::span<const int> below(int a) const { return below_[static_cast<std::size_t>(a)]; }

private:
    explicit Lattice(int n);
    std::size_t flat(int a, int b) const {
        return static_cast<std::size_t>(a) * elements_.size() + static_cast<std::size_t>(b);
    }

    int n_;
    int bottom_ = 0;
    int top_ = 0;
    std::vector<SetPartition> elements_;
    std::vector<std::uint8_t> leq_;
    std::vector<int> meet_;
    std::vector<Integer> mobius_;
    std::vector<Integer> fact_parts_;
    std::vector<int> signs_;
    std::vector<std::vector<int>> above_;
    std::vector<std::vector<int>> below_;
};

/// Accepts "1,3/2,4" and, when no comma appears, the compact digit form "13/24".
/// The empty string is the empty partition.
SetPartition parse_set_partition(const std::string& text);
/// Canonical comma form, e.g. "1,3/2,4".
std::string to_string(const SetPartition& pi);

}  // namespace ncsf
