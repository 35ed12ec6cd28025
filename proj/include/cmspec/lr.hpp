#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cmspec/partitions.hpp"

namespace cmspec {

// A skew diagram outer/inner: the boxes of outer not covered by inner.
// Requires inner to fit inside outer and at least one box.
struct SkewShape {
    SkewShape(Partition outer_arg, Partition inner_arg);
    Partition outer, inner;
    int rows() const { return outer.length(); }
    int row_begin(int r) const { return inner.at(r); }  // first column of row r, 0-based
    int row_end(int r) const { return outer.at(r); }    // one past the last column
    long long boxes() const { return outer.sum() - inner.sum(); }
    friend bool operator==(const SkewShape&, const SkewShape&) = default;
};

// A semistandard filling of a skew shape: rows weakly increase left to right,
// columns strictly increase top to bottom.  Row r stores its entries from
// column row_begin(r) onwards.
class SkewTableau {
public:
    SkewTableau(SkewShape shape, std::vector<std::vector<int>> rows);
    const SkewShape& shape() const { return shape_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int entry(int r, int c) const;  // c is an absolute column index
    // One line per row; erased inner boxes print as ':'.  Entries above 9 fall
    // back to space-separated tokens.
    std::string render() const;
    friend bool operator==(const SkewTableau&, const SkewTableau&) = default;

private:
    SkewShape shape_;
    std::vector<std::vector<int>> rows_;
};

using ReadingWord = std::vector<int>;

// True iff in every prefix, value s occurs at least as often as s+1 (for all s).
bool is_lattice_word(const ReadingWord& w);

// content(w)_v = number of occurrences of v in w, for v = 1..max(w).
WeakComposition content(const ReadingWord& w);

// Each row reversed, rows concatenated top to bottom.
ReadingWord reading_word(const SkewTableau& t);

// All semistandard fillings of shape whose reading word is a lattice word,
// optionally restricted to a prescribed content, ordered by lexicographically
// increasing reading word.
std::vector<SkewTableau> enumerate_lr_tableaux(
    const SkewShape& shape, const std::optional<Partition>& content_filter = std::nullopt);

// Littlewood-Richardson coefficient c^alpha_{beta,gamma}: the number of
// lattice semistandard fillings of alpha/beta with content gamma.  Requires
// |beta| + |gamma| = |alpha|; zero whenever beta does not fit inside alpha.
long long lr_coefficient(const Partition& alpha, const Partition& beta, const Partition& gamma);

// Iterated coefficient c^alpha_{beta^1,...,beta^p}, expanded by splitting off
// the last factor and summing over intermediate shapes (memoized).
long long multi_lr_coefficient(const Partition& alpha, const std::vector<Partition>& betas);

// One tuple of shapes (one per part of eta) together with its multiplicity.
// enumerate_admissible fills the iterated coefficient; the unconstrained
// variant enumerate_admissible_star always reports coefficient 1.
struct AdmissibleTuple {
    std::vector<WeakComposition> parts;
    long long coefficient = 0;
    friend bool operator==(const AdmissibleTuple&, const AdmissibleTuple&) = default;
};

// All tuples of partitions beta^i |- eta_i with positive iterated coefficient,
// ordered lexicographically decreasing by concatenated parts.
std::vector<AdmissibleTuple> enumerate_admissible(const Partition& alpha, const Partition& eta);

// All tuples of weak compositions gamma^i of size eta_i whose componentwise
// sum is alpha; same ordering convention, coefficient 1.
std::vector<AdmissibleTuple> enumerate_admissible_star(const Partition& alpha, const Partition& eta);

// The greedy lattice word with block profile delta: scanning blocks of lengths
// delta_1, delta_2, ... left to right, each position takes the largest value
// that keeps the prefix a lattice word and the block weakly decreasing.
// Rejects profiles with zero entries (drop equal rows first).
ReadingWord minimal_sequence(const WeakComposition& delta);

// r_i = number of occurrences of w_i among w_1..w_i.
std::vector<int> running_multiplicity(const ReadingWord& w);

// sort_to_partition(alpha - beta): the dominance-least content among lattice
// fillings of alpha/beta.  Requires beta componentwise <= alpha.
Partition minimal_content(const Partition& alpha, const Partition& beta);

// The unique filling of alpha/beta whose reading word is
// minimal_sequence(alpha - beta): left-justify the word's blocks as rows,
// right-shift row r by alpha_1 - alpha_r, then flip horizontally.  Requires
// every row of alpha - beta to be positive and `word` to be exactly the
// greedy word.
SkewTableau reconstruct_tableau(const ReadingWord& word, const Partition& alpha,
                                const Partition& beta);

}  // namespace cmspec
