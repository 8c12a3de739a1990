#pragma once

#include <compare>
#include <string>
#include <vector>

#include "jtsnf/rational.hpp"

namespace jtsnf {

// Weakly decreasing sequence of positive integers; value type with structural
// equality, trailing zeros stripped on construction.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    // "7,5,5,2"; the empty partition is "-".
    static Partition parse(const std::string& text);

    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const;
    int part(int i) const;  // 1-based; 0 beyond the length
    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    bool contains(const Partition& inner) const;

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

    std::string str() const;

private:
    std::vector<int> parts_;
};

struct Cell {
    int row = 1, col = 1;  // 1-based
    int content() const { return col - row; }
    bool operator==(const Cell&) const = default;
    auto operator<=>(const Cell&) const = default;
};

// outer/inner with inner contained in outer componentwise.
class SkewShape {
public:
    SkewShape(Partition outer, Partition inner);

    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }
    int size() const { return outer_.weight() - inner_.weight(); }
    std::vector<Cell> cells() const;

    bool operator==(const SkewShape&) const = default;
    std::string str() const;  // "6,5,3/2,1"

private:
    Partition outer_, inner_;
};

struct DiagonalHook {
    int index = 1;
    std::vector<Cell> cells;  // sorted by content ascending
    bool empty() const { return cells.empty(); }
    std::vector<int> contents() const;
};

Partition conjugate(const Partition& lambda);

// max { i : lambda_i >= i }; the number of nonempty diagonal hooks.
int rank(const Partition& lambda);

// Cells (k, j>=k) along row k plus (i>=k, k) down column k; empty for k > rank.
DiagonalHook diagonal_hook(const Partition& lambda, int k);

// The partition whose diagram is the union of the k innermost diagonal hooks
// D_{t-k+1}, ..., D_t, i.e. the cells of lambda with both coordinates > t-k,
// translated back to the origin.
Partition hook_union(const Partition& lambda, int t, int k);

// Exact number of semistandard Young tableaux of the given skew shape with
// entries in {1..max_entry}: rows weakly increase, columns strictly increase.
// Plain column-by-column backtracking; this is the trusted oracle.
BigInt ssyt_count(const SkewShape& shape, int max_entry);

// Littlewood-Richardson coefficient: SSYT of shape rho/sigma and content tau
// whose reverse reading word (rows top to bottom, each row right to left) is
// a lattice permutation.
long lr_coefficient(const Partition& rho, const Partition& sigma, const Partition& tau);

// Partitions of m in reverse lexicographic order: (m), (m-1,1), ..., (1^m).
std::vector<Partition> partitions_of(int m);

// Nonempty partitions of weight 1..max_weight, weights ascending, reverse-lex
// within each weight.
std::vector<Partition> partitions_up_to(int max_weight);

// All partitions contained in outer (including the empty one and outer itself).
std::vector<Partition> subpartitions(const Partition& outer);

}  // namespace jtsnf
