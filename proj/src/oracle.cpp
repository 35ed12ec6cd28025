#include "cmspec/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <map>
#include <ostream>
#include <stdexcept>

#include "cmspec/checked.hpp"

namespace cmspec::oracle {

DenseSymmetricMatrix::DenseSymmetricMatrix(std::size_t order)
    : order_(order), a_(order * order, 0.0) {}

void DenseSymmetricMatrix::set(std::size_t i, std::size_t j, double v) {
    a_[i * order_ + j] = v;
    a_[j * order_ + i] = v;
}

void DenseSymmetricMatrix::add(std::size_t i, std::size_t j, double v) {
    a_[i * order_ + j] += v;
    if (i != j) a_[j * order_ + i] = a_[i * order_ + j];
}

void DenseSymmetricMatrix::dump(std::ostream& out) const {
    auto put64 = [&](std::uint64_t bits) {
        char raw[8];
        for (int k = 0; k < 8; ++k) raw[k] = static_cast<char>((bits >> (8 * k)) & 0xff);
        out.write(raw, 8);
    };
    put64(static_cast<std::uint64_t>(order_));
    for (double v : a_) put64(std::bit_cast<std::uint64_t>(v));
}

std::vector<double> symmetric_eigenvalues(const DenseSymmetricMatrix& m) {
    const std::size_t n = m.order();
    if (n == 0) return {};
    std::vector<double> a = m.data();
    auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };

    double scale = 0.0;
    for (double v : a) scale += v * v;
    scale = std::sqrt(scale);
    if (scale == 0.0) return std::vector<double>(n, 0.0);
    const double target = 1e-12 * scale;
    const double skip = target / static_cast<double>(n);

    for (int sweep = 1; sweep <= 100; ++sweep) {
        double off2 = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off2 += at(p, q) * at(p, q);
        if (std::sqrt(2.0 * off2) <= target) {
            std::vector<double> eig(n);
            for (std::size_t i = 0; i < n; ++i) eig[i] = at(i, i);
            std::sort(eig.begin(), eig.end());
            return eig;
        }
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                // Entries this small cannot lift the off-diagonal Frobenius
                // norm above the target, so rotating them is wasted work.
                if (std::abs(apq) <= skip) continue;
                const double theta = 0.5 * (at(q, q) - at(p, p)) / apq;
                double t;
                if (std::abs(theta) > 1e150) {
                    t = 0.5 / theta;
                } else {
                    t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                    if (theta < 0) t = -t;
                }
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);
                at(p, p) -= t * apq;
                at(q, q) += t * apq;
                at(p, q) = 0.0;
                at(q, p) = 0.0;
                for (std::size_t j = 0; j < n; ++j) {
                    if (j == p || j == q) continue;
                    const double ajp = at(j, p);
                    const double ajq = at(j, q);
                    const double np = ajp - s * (ajq + tau * ajp);
                    const double nq = ajq + s * (ajp - tau * ajq);
                    at(j, p) = np;
                    at(p, j) = np;
                    at(j, q) = nq;
                    at(q, j) = nq;
                }
            }
        }
    }
    throw std::runtime_error("symmetric_eigenvalues: no convergence within 100 sweeps");
}

PermutationIndex::PermutationIndex(int n) : n_(n) {
    if (n < 1 || n > 20)
        throw std::invalid_argument("permutation index: n must lie in 1..20");
    factorial_.assign(static_cast<std::size_t>(n) + 1, 1);
    for (int k = 1; k <= n; ++k)
        factorial_[k] = checked_mul(factorial_[k - 1], k);
    order_ = factorial_[n];
}

long long PermutationIndex::rank(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_)
        throw std::invalid_argument("permutation rank: wrong length");
    std::vector<bool> seen(static_cast<std::size_t>(n_), false);
    for (int v : perm) {
        if (v < 0 || v >= n_ || seen[v])
            throw std::invalid_argument("permutation rank: not a permutation of 0..n-1");
        seen[v] = true;
    }
    long long r = 0;
    for (int i = 0; i < n_; ++i) {
        long long smaller = 0;
        for (int j = i + 1; j < n_; ++j)
            if (perm[j] < perm[i]) ++smaller;
        r += smaller * factorial_[n_ - 1 - i];
    }
    return r;
}

std::vector<int> PermutationIndex::unrank(long long r) const {
    if (r < 0 || r >= order_) throw std::invalid_argument("permutation unrank: rank out of range");
    std::vector<int> pool(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) pool[i] = i;
    std::vector<int> perm;
    perm.reserve(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) {
        const long long block = factorial_[n_ - 1 - i];
        const long long idx = r / block;
        r %= block;
        perm.push_back(pool[idx]);
        pool.erase(pool.begin() + idx);
    }
    return perm;
}

namespace {

std::vector<int> block_of_vertex(const MultipartiteShape& shape) {
    std::vector<int> block;
    for (int b = 0; b < shape.blocks(); ++b)
        block.insert(block.end(), static_cast<std::size_t>(shape.eta().at(b)), b);
    return block;
}

// All cross-block vertex pairs (0-based, a < b): the edge set of K_eta.
std::vector<std::pair<int, int>> edges_of(const MultipartiteShape& shape) {
    const auto block = block_of_vertex(shape);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < shape.n(); ++u)
        for (int v = u + 1; v < shape.n(); ++v)
            if (block[u] != block[v]) edges.emplace_back(u, v);
    return edges;
}

}  // namespace

DenseSymmetricMatrix graph_laplacian(const MultipartiteShape& shape) {
    if (shape.n() > 64) throw std::invalid_argument("graph_laplacian: n capped at 64");
    const auto block = block_of_vertex(shape);
    const auto n = static_cast<std::size_t>(shape.n());
    DenseSymmetricMatrix lap(n);
    for (std::size_t u = 0; u < n; ++u) {
        lap.set(u, u, static_cast<double>(shape.n() - shape.eta().at(block[u])));
        for (std::size_t v = u + 1; v < n; ++v)
            if (block[u] != block[v]) lap.set(u, v, -1.0);
    }
    return lap;
}

DenseSymmetricMatrix cayley_laplacian(const MultipartiteShape& shape, int max_n) {
    if (max_n > 7)
        throw std::invalid_argument("cayley_laplacian: the cap cannot exceed 7");
    if (shape.n() > max_n)
        throw std::invalid_argument("cayley_laplacian: n exceeds the configured cap");
    const PermutationIndex index(shape.n());
    const auto edges = edges_of(shape);
    const auto order = static_cast<std::size_t>(index.order());
    DenseSymmetricMatrix lap(order);
    for (std::size_t r = 0; r < order; ++r) {
        auto perm = index.unrank(static_cast<long long>(r));
        lap.set(r, r, static_cast<double>(edges.size()));
        for (const auto& [u, v] : edges) {
            std::swap(perm[u], perm[v]);
            const auto c = static_cast<std::size_t>(index.rank(perm));
            std::swap(perm[u], perm[v]);
            lap.set(r, c, -1.0);
        }
    }
    return lap;
}

std::vector<std::vector<std::vector<int>>> standard_tableaux(const Partition& alpha) {
    const auto n = static_cast<int>(alpha.sum());
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(alpha.length()));
    auto rec = [&](auto&& self, int v) -> void {
        if (v > n) {
            out.push_back(rows);
            return;
        }
        for (int r = 0; r < alpha.length(); ++r) {
            const auto fill = static_cast<int>(rows[r].size());
            if (fill >= alpha.at(r)) continue;
            if (r > 0 && static_cast<int>(rows[r - 1].size()) <= fill) continue;
            rows[r].push_back(v);
            self(self, v + 1);
            rows[r].pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

namespace {

using Tableau = std::vector<std::vector<int>>;

struct MatrixModel {
    int n = 0;
    std::size_t dim = 0;
    std::vector<std::vector<int>> row_of;  // row_of[t][v-1]: row of value v in tableau t
    std::vector<std::vector<int>> col_of;
    std::map<std::vector<int>, std::size_t> index;  // keyed by the row_of vector

    explicit MatrixModel(const Partition& alpha) {
        n = static_cast<int>(alpha.sum());
        const auto tableaux = standard_tableaux(alpha);
        dim = tableaux.size();
        for (std::size_t t = 0; t < dim; ++t) {
            std::vector<int> rows(static_cast<std::size_t>(n)), cols(static_cast<std::size_t>(n));
            for (std::size_t r = 0; r < tableaux[t].size(); ++r)
                for (std::size_t c = 0; c < tableaux[t][r].size(); ++c) {
                    rows[tableaux[t][r][c] - 1] = static_cast<int>(r);
                    cols[tableaux[t][r][c] - 1] = static_cast<int>(c);
                }
            index[rows] = t;
            row_of.push_back(std::move(rows));
            col_of.push_back(std::move(cols));
        }
    }

    // Matrix of the adjacent transposition (k, k+1), 1 <= k <= n-1.
    DenseSymmetricMatrix adjacent(int k) const {
        DenseSymmetricMatrix m(dim);
        for (std::size_t t = 0; t < dim; ++t) {
            const int r1 = row_of[t][k - 1], c1 = col_of[t][k - 1];
            const int r2 = row_of[t][k], c2 = col_of[t][k];
            if (r1 == r2) {
                m.set(t, t, 1.0);
            } else if (c1 == c2) {
                m.set(t, t, -1.0);
            } else {
                const double d = (c2 - r2) - (c1 - r1);  // axial distance, |d| >= 2
                std::vector<int> swapped = row_of[t];
                std::swap(swapped[k - 1], swapped[k]);
                const std::size_t u = index.at(swapped);
                m.set(t, t, 1.0 / d);
                m.set(t, u, std::sqrt(1.0 - 1.0 / (d * d)));
            }
        }
        return m;
    }
};

// Row-major scratch products: the half product s * m of two symmetric
// matrices is not symmetric in general, so it cannot live in a
// DenseSymmetricMatrix (whose writes mirror both triangles).
std::vector<double> left_multiply(const DenseSymmetricMatrix& a, const std::vector<double>& b) {
    const std::size_t n = a.order();
    std::vector<double> out(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const double aik = a.at(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < n; ++j) out[i * n + j] += aik * b[k * n + j];
        }
    return out;
}

std::vector<double> right_multiply(const std::vector<double>& a, const DenseSymmetricMatrix& b) {
    const std::size_t n = b.order();
    std::vector<double> out(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const double aik = a[i * n + k];
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < n; ++j) out[i * n + j] += aik * b.at(k, j);
        }
    return out;
}

// rho((a b)) = s_a ... s_{b-2} s_{b-1} s_{b-2} ... s_a, built by conjugating
// outwards from the innermost adjacent transposition.  Each conjugation of a
// symmetric matrix by a symmetric matrix is symmetric again, so the final
// result fits back into a DenseSymmetricMatrix; this is asserted numerically.
DenseSymmetricMatrix transposition_matrix(const std::vector<DenseSymmetricMatrix>& adjacents,
                                          int a, int b) {
    std::vector<double> m = adjacents[a - 1].data();
    for (int k = a + 1; k < b; ++k)
        m = right_multiply(left_multiply(adjacents[k - 1], m), adjacents[k - 1]);
    const std::size_t n = adjacents[a - 1].order();
    DenseSymmetricMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            if (std::abs(m[i * n + j] - m[j * n + i]) > 1e-9)
                throw std::logic_error("matrix model: conjugated product is not numerically symmetric");
            out.set(i, j, 0.5 * (m[i * n + j] + m[j * n + i]));
        }
    return out;
}

}  // namespace

DenseSymmetricMatrix yor_matrix(const Partition& alpha, int a, int b) {
    const auto n = static_cast<int>(alpha.sum());
    if (!(1 <= a && a < b && b <= n))
        throw std::invalid_argument("yor_matrix: need 1 <= a < b <= n");
    const MatrixModel model(alpha);
    std::vector<DenseSymmetricMatrix> adjacents;
    for (int k = 1; k < n; ++k) adjacents.push_back(model.adjacent(k));
    return transposition_matrix(adjacents, a, b);
}

DenseSymmetricMatrix rep_block_matrix(const Partition& alpha, const MultipartiteShape& shape,
                                      long long max_dimension) {
    if (alpha.sum() != shape.n())
        throw std::invalid_argument("rep_block_matrix: alpha must be a partition of |eta|");
    if (dimension(alpha) > max_dimension)
        throw std::invalid_argument("rep_block_matrix: block dimension exceeds the cap");
    const MatrixModel model(alpha);
    std::vector<DenseSymmetricMatrix> adjacents;
    for (int k = 1; k < shape.n(); ++k) adjacents.push_back(model.adjacent(k));
    DenseSymmetricMatrix sum(model.dim);
    for (const auto& [u, v] : edges_of(shape)) {
        const DenseSymmetricMatrix term = transposition_matrix(adjacents, u + 1, v + 1);
        for (std::size_t i = 0; i < model.dim; ++i)
            for (std::size_t j = i; j < model.dim; ++j) sum.add(i, j, term.at(i, j));
    }
    return sum;
}

SpectraComparison compare_spectra(const SpectrumMultiset& exact, std::vector<double> numeric,
                                  double tolerance) {
    std::vector<long long> expanded;
    for (const auto& [value, mult] : exact.entries())
        expanded.insert(expanded.end(), static_cast<std::size_t>(mult), value);
    if (expanded.size() != numeric.size())
        throw std::invalid_argument("compare_spectra: multiset sizes differ");
    std::sort(numeric.begin(), numeric.end());
    SpectraComparison result;
    result.count = numeric.size();
    for (std::size_t i = 0; i < numeric.size(); ++i)
        result.worst_deviation =
            std::max(result.worst_deviation, std::abs(numeric[i] - static_cast<double>(expanded[i])));
    result.ok = result.worst_deviation <= tolerance;
    return result;
}

}  // namespace cmspec::oracle
