#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "cmspec/partitions.hpp"
#include "cmspec/spectra.hpp"

// Brute-force numerical cross-checks for the exact machinery: explicit
// Laplacian matrices, the orthogonal matrix model of the symmetric group
// irreducibles, and a self-contained dense symmetric eigensolver.  Nothing in
// here shares code with the combinatorial path, which is the point.
namespace cmspec::oracle {

// Dense symmetric matrix; set/add always write both mirror entries, so the
// stored data is exactly symmetric by construction.
class DenseSymmetricMatrix {
public:
    explicit DenseSymmetricMatrix(std::size_t order);
    std::size_t order() const { return order_; }
    double at(std::size_t i, std::size_t j) const { return a_[i * order_ + j]; }
    void set(std::size_t i, std::size_t j, double v);
    void add(std::size_t i, std::size_t j, double v);
    const std::vector<double>& data() const { return a_; }
    // Row-major float64 little-endian, preceded by the order as uint64.
    void dump(std::ostream& out) const;

private:
    std::size_t order_;
    std::vector<double> a_;
};

// All eigenvalues in non-decreasing order, by cyclic Jacobi rotation sweeps.
// Converged when the off-diagonal Frobenius norm drops below 1e-12 times the
// matrix Frobenius norm; more than 100 sweeps is a hard error.
std::vector<double> symmetric_eigenvalues(const DenseSymmetricMatrix& m);

// Bijection between permutations of {0..n-1} (image lists) and 0..n!-1 via
// the factorial number system; identity <-> 0.
class PermutationIndex {
public:
    explicit PermutationIndex(int n);  // n <= 20 so that n! fits in 64 bits
    int n() const { return n_; }
    long long order() const { return order_; }
    long long rank(const std::vector<int>& perm) const;
    std::vector<int> unrank(long long r) const;

private:
    int n_;
    long long order_;
    std::vector<long long> factorial_;
};

// Laplacian of the complete multipartite graph itself (n <= 64): degree on
// the diagonal, -1 between vertices of different blocks.
DenseSymmetricMatrix graph_laplacian(const MultipartiteShape& shape);

// Laplacian of the Cayley graph on all n! permutations, generated by the
// transpositions along the edges of K_eta.  Dimension n! x n!, so n is capped
// (default 6; 7 is opt-in and expensive; above 7 always rejected).
DenseSymmetricMatrix cayley_laplacian(const MultipartiteShape& shape, int max_n = 6);

// All standard Young tableaux of the given shape, in a fixed deterministic
// order; this is the basis ordering used by the matrix model below.
std::vector<std::vector<std::vector<int>>> standard_tableaux(const Partition& alpha);

// Orthogonal matrix model of the irreducible labelled by alpha, evaluated at
// the transposition (a b), 1 <= a < b <= n: adjacent transpositions act by
// 1/d on the diagonal (d the axial distance) and sqrt(1 - 1/d^2) towards the
// swapped tableau; general (a b) is the conjugated product
// s_a ... s_{b-2} s_{b-1} s_{b-2} ... s_a.
DenseSymmetricMatrix yor_matrix(const Partition& alpha, int a, int b);

// Sum of yor_matrix(alpha, a, b) over all edges (a, b) of K_eta: the matrix
// of the alpha block of the edge-sum operator.  Rejects blocks larger than
// max_dimension.
DenseSymmetricMatrix rep_block_matrix(const Partition& alpha, const MultipartiteShape& shape,
                                      long long max_dimension = 2000);

struct SpectraComparison {
    bool ok = false;
    double worst_deviation = 0.0;
    std::size_t count = 0;
};

// Pair the exact multiset with the numeric list positionally after sorting;
// a size mismatch is a hard error.
SpectraComparison compare_spectra(const SpectrumMultiset& exact, std::vector<double> numeric,
                                  double tolerance);

}  // namespace cmspec::oracle
