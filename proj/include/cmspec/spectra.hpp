#pragma once

#include <map>
#include <vector>

#include "cmspec/lr.hpp"
#include "cmspec/partitions.hpp"

namespace cmspec {

// A complete multipartite graph K_eta on n = |eta| vertices: the parts of eta
// are the sizes of the independent blocks, and every pair of vertices in
// different blocks is joined by an edge.
class MultipartiteShape {
public:
    explicit MultipartiteShape(Partition eta);
    const Partition& eta() const { return eta_; }
    int n() const { return static_cast<int>(eta_.sum()); }
    int blocks() const { return eta_.length(); }
    long long edge_count() const { return edges_; }

private:
    Partition eta_;
    long long edges_;
};

// A multiset of exact integer eigenvalues.
class SpectrumMultiset {
public:
    void add(long long eigenvalue, long long multiplicity);
    const std::map<long long, long long>& entries() const { return entries_; }
    long long total() const;
    long long max_eigenvalue() const;  // requires a non-empty spectrum
    friend bool operator==(const SpectrumMultiset&, const SpectrumMultiset&) = default;

private:
    std::map<long long, long long> entries_;
};

// Eigenvalue attached to one admissible tuple: q(alpha) - sum_i q(part_i).
long long b_value(const WeakComposition& alpha, const AdmissibleTuple& tuple);

// The same quantity along the second evaluation path, valid for tuples whose
// parts sum componentwise to alpha: sum_{i<j} <part_i, part_j>.
long long inner_product_b_value(const AdmissibleTuple& tuple);

// Exact spectrum of the alpha-isotypic block of the edge-sum operator of
// K_eta: one eigenvalue b_value(alpha, t) per admissible tuple t, with
// multiplicity coefficient(t) * prod_i dimension(part_i).  Total multiplicity
// is checked against dimension(alpha).
SpectrumMultiset block_spectrum(const Partition& alpha, const MultipartiteShape& shape);

// Special case eta = (1,...,1): the block is q(alpha) times the identity.
SpectrumMultiset complete_graph_block(const Partition& alpha);

// Largest eigenvalue of the alpha block.
long long lambda_max(const Partition& alpha, const MultipartiteShape& shape);

// Maximum of the inner-product form over the unconstrained tuples; an upper
// bound for lambda_max that is tight at alpha = (n-1,1) unless eta = (1^n).
long long b_bar(const Partition& alpha, const MultipartiteShape& shape);

// |E| - lambda_max((n-1,1)): the second-smallest Laplacian eigenvalue of
// K_eta itself.  Requires at least two blocks.
long long spectral_gap_graph(const MultipartiteShape& shape);

// |E| - max over alpha != (n) of lambda_max(alpha): the second-smallest
// Laplacian eigenvalue of the Cayley graph.  Requires at least two blocks;
// sweeps all partitions of n, so n is capped (default 8).
long long spectral_gap_cayley(const MultipartiteShape& shape, int max_n = 8);

// Laplacian spectrum of the Cayley graph generated by the edges of K_eta:
// dimension(alpha) copies of each block spectrum, mapped to |E| - lambda.
// Total multiplicity n! (capped as above).
SpectrumMultiset cayley_spectrum(const MultipartiteShape& shape, int max_n = 8);

struct BlockReport {
    Partition alpha;
    long long lambda_max = 0;
    SpectrumMultiset spectrum;
};

struct AldousReport {
    Partition eta;
    int n = 0;
    long long edge_count = 0;
    long long gap_graph = 0;
    long long gap_cayley = 0;
    bool verdict = false;                 // gap_graph == gap_cayley
    std::vector<BlockReport> blocks;      // every alpha != (n), reverse lexicographic
    std::vector<Partition> argmax;        // alphas attaining the Cayley maximum
};

// Instance-by-instance verification that the graph and the Cayley graph have
// the same spectral gap.  Requires at least two blocks (capped as above).
AldousReport verify_aldous(const MultipartiteShape& shape, int max_n = 8);

// Direct decomposition of the alpha = (n-1,1) block: the all-trivial tuple
// with coefficient p-1, plus one tuple per part eta_i >= 2 that replaces slot
// i by (eta_i - 1, 1).  Must agree with enumerate_admissible((n-1,1), eta).
std::vector<AdmissibleTuple> restriction_n_minus_1(const MultipartiteShape& shape);

}  // namespace cmspec
