#include "cmspec/spectra.hpp"

#include <algorithm>
#include <stdexcept>

#include "cmspec/checked.hpp"

namespace cmspec {

MultipartiteShape::MultipartiteShape(Partition eta) : eta_(std::move(eta)) {
    if (eta_.empty()) throw std::invalid_argument("multipartite shape: eta must be non-empty");
    long long cross = 0;  // sum over i<j of eta_i * eta_j
    long long before = 0;
    for (int i = 0; i < eta_.length(); ++i) {
        cross = checked_add(cross, checked_mul(before, eta_.at(i)));
        before = checked_add(before, eta_.at(i));
    }
    edges_ = cross;
}

void SpectrumMultiset::add(long long eigenvalue, long long multiplicity) {
    if (multiplicity < 1) throw std::invalid_argument("spectrum multiset: multiplicity must be >= 1");
    auto& slot = entries_[eigenvalue];
    slot = checked_add(slot, multiplicity);
}

long long SpectrumMultiset::total() const {
    long long t = 0;
    for (const auto& [value, mult] : entries_) t = checked_add(t, mult);
    return t;
}

long long SpectrumMultiset::max_eigenvalue() const {
    if (entries_.empty()) throw std::logic_error("spectrum multiset: empty");
    return entries_.rbegin()->first;
}

long long b_value(const WeakComposition& alpha, const AdmissibleTuple& tuple) {
    long long b = q_value(alpha);
    for (const auto& part : tuple.parts) b = checked_sub(b, q_value(part));
    return b;
}

long long inner_product_b_value(const AdmissibleTuple& tuple) {
    long long total = 0;
    for (std::size_t i = 0; i < tuple.parts.size(); ++i)
        for (std::size_t j = i + 1; j < tuple.parts.size(); ++j) {
            const auto& a = tuple.parts[i];
            const auto& b = tuple.parts[j];
            for (int k = 0; k < std::min(a.length(), b.length()); ++k)
                total = checked_add(total, checked_mul(a.at(k), b.at(k)));
        }
    return total;
}

SpectrumMultiset block_spectrum(const Partition& alpha, const MultipartiteShape& shape) {
    if (alpha.sum() != shape.n())
        throw std::invalid_argument("block_spectrum: alpha must be a partition of |eta|");
    SpectrumMultiset spectrum;
    for (const AdmissibleTuple& tuple : enumerate_admissible(alpha, shape.eta())) {
        long long mult = tuple.coefficient;
        for (const auto& part : tuple.parts) mult = checked_mul(mult, dimension(Partition(part)));
        spectrum.add(b_value(alpha, tuple), mult);
    }
    if (spectrum.total() != dimension(alpha))
        throw std::logic_error("block_spectrum: multiplicities must add up to dimension(alpha)");
    return spectrum;
}

SpectrumMultiset complete_graph_block(const Partition& alpha) {
    if (alpha.empty()) throw std::invalid_argument("complete_graph_block: alpha must be non-empty");
    SpectrumMultiset spectrum;
    spectrum.add(q_value(alpha), dimension(alpha));
    return spectrum;
}

long long lambda_max(const Partition& alpha, const MultipartiteShape& shape) {
    return block_spectrum(alpha, shape).max_eigenvalue();
}

long long b_bar(const Partition& alpha, const MultipartiteShape& shape) {
    if (alpha.sum() != shape.n())
        throw std::invalid_argument("b_bar: alpha must be a partition of |eta|");
    bool first = true;
    long long best = 0;
    for (const AdmissibleTuple& tuple : enumerate_admissible_star(alpha, shape.eta())) {
        const long long b = inner_product_b_value(tuple);
        if (first || b > best) best = b;
        first = false;
    }
    if (first) throw std::logic_error("b_bar: no unconstrained tuples");
    return best;
}

namespace {

Partition defining_shape(int n) {
    if (n < 2) throw std::invalid_argument("spectral gap: need n >= 2");
    return Partition({n - 1, 1});  // (1,1) when n = 2
}

}  // namespace

long long spectral_gap_graph(const MultipartiteShape& shape) {
    if (shape.blocks() < 2)
        throw std::invalid_argument("spectral_gap_graph: need at least two blocks");
    return checked_sub(shape.edge_count(), lambda_max(defining_shape(shape.n()), shape));
}

long long spectral_gap_cayley(const MultipartiteShape& shape, int max_n) {
    if (shape.blocks() < 2)
        throw std::invalid_argument("spectral_gap_cayley: need at least two blocks");
    if (shape.n() > max_n)
        throw std::invalid_argument("spectral_gap_cayley: n exceeds the configured cap");
    long long best = 0;
    bool first = true;
    for (const Partition& alpha : enumerate_partitions(shape.n())) {
        if (alpha.length() == 1) continue;  // alpha = (n): the trivial block
        const long long lm = lambda_max(alpha, shape);
        if (first || lm > best) best = lm;
        first = false;
    }
    return checked_sub(shape.edge_count(), best);
}

SpectrumMultiset cayley_spectrum(const MultipartiteShape& shape, int max_n) {
    if (shape.n() > max_n)
        throw std::invalid_argument("cayley_spectrum: n exceeds the configured cap");
    SpectrumMultiset out;
    for (const Partition& alpha : enumerate_partitions(shape.n())) {
        const long long f = dimension(alpha);
        const SpectrumMultiset block = block_spectrum(alpha, shape);
        for (const auto& [value, mult] : block.entries())
            out.add(checked_sub(shape.edge_count(), value), checked_mul(f, mult));
    }
    long long fact = 1;
    for (int k = 2; k <= shape.n(); ++k) fact = checked_mul(fact, k);
    if (out.total() != fact)
        throw std::logic_error("cayley_spectrum: multiplicities must add up to n!");
    return out;
}

AldousReport verify_aldous(const MultipartiteShape& shape, int max_n) {
    if (shape.blocks() < 2)
        throw std::invalid_argument("verify_aldous: need at least two blocks");
    if (shape.n() > max_n)
        throw std::invalid_argument("verify_aldous: n exceeds the configured cap");
    AldousReport report;
    report.eta = shape.eta();
    report.n = shape.n();
    report.edge_count = shape.edge_count();
    report.gap_graph = spectral_gap_graph(shape);
    bool first = true;
    long long best = 0;
    for (const Partition& alpha : enumerate_partitions(shape.n())) {
        if (alpha.length() == 1) continue;
        BlockReport block;
        block.alpha = alpha;
        block.spectrum = block_spectrum(alpha, shape);
        block.lambda_max = block.spectrum.max_eigenvalue();
        if (first || block.lambda_max > best) best = block.lambda_max;
        first = false;
        report.blocks.push_back(std::move(block));
    }
    report.gap_cayley = checked_sub(shape.edge_count(), best);
    for (const BlockReport& block : report.blocks)
        if (block.lambda_max == best) report.argmax.push_back(block.alpha);
    report.verdict = report.gap_graph == report.gap_cayley;
    return report;
}

std::vector<AdmissibleTuple> restriction_n_minus_1(const MultipartiteShape& shape) {
    if (shape.n() < 2) throw std::invalid_argument("restriction_n_minus_1: need n >= 2");
    const Partition& eta = shape.eta();
    std::vector<AdmissibleTuple> out;
    std::vector<WeakComposition> trivial;
    for (int i = 0; i < eta.length(); ++i)
        trivial.emplace_back(std::vector<int>{eta.at(i)});
    if (shape.blocks() >= 2) out.push_back({trivial, shape.blocks() - 1});
    for (int i = 0; i < eta.length(); ++i) {
        if (eta.at(i) < 2) continue;
        auto parts = trivial;
        parts[i] = WeakComposition(std::vector<int>{eta.at(i) - 1, 1});
        out.push_back({std::move(parts), 1});
    }
    std::sort(out.begin(), out.end(), [](const AdmissibleTuple& x, const AdmissibleTuple& y) {
        for (std::size_t i = 0; i < std::min(x.parts.size(), y.parts.size()); ++i)
            if (x.parts[i] != y.parts[i]) return x.parts[i].parts() > y.parts[i].parts();
        return false;
    });
    return out;
}

}  // namespace cmspec
