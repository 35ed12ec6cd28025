#include "cmspec/lr.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "cmspec/checked.hpp"

namespace cmspec {

SkewShape::SkewShape(Partition outer_arg, Partition inner_arg)
    : outer(std::move(outer_arg)), inner(std::move(inner_arg)) {
    if (!componentwise_leq(inner, outer))
        throw std::invalid_argument("skew shape: inner must fit componentwise inside outer");
    if (boxes() < 1) throw std::invalid_argument("skew shape: must contain at least one box");
}

SkewTableau::SkewTableau(SkewShape shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
    if (static_cast<int>(rows_.size()) != shape_.rows())
        throw std::invalid_argument("skew tableau: row count does not match the shape");
    for (int r = 0; r < shape_.rows(); ++r) {
        const auto& row = rows_[r];
        if (static_cast<int>(row.size()) != shape_.row_end(r) - shape_.row_begin(r))
            throw std::invalid_argument("skew tableau: row length does not match the shape");
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (row[k] < 1) throw std::invalid_argument("skew tableau: entries must be positive");
            if (k > 0 && row[k] < row[k - 1])
                throw std::invalid_argument("skew tableau: rows must weakly increase");
        }
    }
    for (int r = 1; r < shape_.rows(); ++r)
        for (int c = std::max(shape_.row_begin(r), shape_.row_begin(r - 1));
             c < std::min(shape_.row_end(r), shape_.row_end(r - 1)); ++c)
            if (entry(r - 1, c) >= entry(r, c))
                throw std::invalid_argument("skew tableau: columns must strictly increase");
}

int SkewTableau::entry(int r, int c) const {
    return rows_[r][static_cast<std::size_t>(c - shape_.row_begin(r))];
}

std::string SkewTableau::render() const {
    bool compact = true;
    for (const auto& row : rows_)
        for (int e : row)
            if (e > 9) compact = false;
    std::string out;
    for (int r = 0; r < shape_.rows(); ++r) {
        if (r) out += '\n';
        bool first = true;
        const auto push = [&](const std::string& token) {
            if (!compact && !first) out += ' ';
            out += token;
            first = false;
        };
        for (int c = 0; c < shape_.row_begin(r); ++c) push(":");
        for (int e : rows_[r]) push(std::to_string(e));
    }
    return out;
}

bool is_lattice_word(const ReadingWord& w) {
    std::vector<long long> cnt;
    for (int v : w) {
        if (v < 1) return false;
        if (static_cast<std::size_t>(v) > cnt.size()) {
            if (static_cast<std::size_t>(v) != cnt.size() + 1) return false;
            cnt.push_back(0);
        }
        ++cnt[v - 1];
        if (v > 1 && cnt[v - 1] > cnt[v - 2]) return false;
    }
    return true;
}

WeakComposition content(const ReadingWord& w) {
    std::vector<int> cnt;
    for (int v : w) {
        if (v < 1) throw std::invalid_argument("content: word values must be positive");
        if (static_cast<std::size_t>(v) > cnt.size()) cnt.resize(v, 0);
        ++cnt[v - 1];
    }
    return WeakComposition(std::move(cnt));
}

ReadingWord reading_word(const SkewTableau& t) {
    ReadingWord w;
    for (const auto& row : t.rows()) w.insert(w.end(), row.rbegin(), row.rend());
    return w;
}

std::vector<SkewTableau> enumerate_lr_tableaux(const SkewShape& shape,
                                               const std::optional<Partition>& content_filter) {
    if (content_filter && content_filter->sum() != shape.boxes()) return {};

    const int nrows = shape.rows();
    struct Cell {
        int r, c;
    };
    std::vector<Cell> cells;  // reading order: rows top to bottom, right to left
    for (int r = 0; r < nrows; ++r)
        for (int c = shape.row_end(r) - 1; c >= shape.row_begin(r); --c) cells.push_back({r, c});

    std::vector<std::vector<int>> grid(nrows);
    for (int r = 0; r < nrows; ++r)
        grid[r].assign(static_cast<std::size_t>(shape.row_end(r) - shape.row_begin(r)), 0);
    auto cell = [&](int r, int c) -> int& {
        return grid[r][static_cast<std::size_t>(c - shape.row_begin(r))];
    };

    std::vector<long long> cnt(static_cast<std::size_t>(nrows) + 1, 0);
    std::vector<SkewTableau> out;
    std::function<void(std::size_t)> dfs = [&](std::size_t k) {
        if (k == cells.size()) {
            out.emplace_back(shape, grid);
            return;
        }
        const auto [r, c] = cells[k];
        // In a lattice filling the entries of row r never exceed r+1.
        int hi = r + 1;
        if (content_filter) hi = std::min(hi, content_filter->length());
        if (c + 1 < shape.row_end(r)) hi = std::min(hi, cell(r, c + 1));
        int lo = 1;
        if (r > 0 && c >= shape.row_begin(r - 1)) lo = cell(r - 1, c) + 1;
        for (int v = lo; v <= hi; ++v) {
            if (v > 1 && cnt[v - 1] <= cnt[v]) continue;  // prefix would stop being lattice
            if (content_filter && cnt[v] >= content_filter->at(v - 1)) continue;
            cell(r, c) = v;
            ++cnt[v];
            dfs(k + 1);
            --cnt[v];
            cell(r, c) = 0;
        }
    };
    dfs(0);
    return out;
}

long long lr_coefficient(const Partition& alpha, const Partition& beta, const Partition& gamma) {
    if (beta.sum() + gamma.sum() != alpha.sum())
        throw std::invalid_argument("lr_coefficient: |beta| + |gamma| must equal |alpha|");
    if (!componentwise_leq(beta, alpha)) return 0;
    if (gamma.empty()) return 1;  // beta == alpha forced by the size check
    return static_cast<long long>(
        enumerate_lr_tableaux(SkewShape(alpha, beta), gamma).size());
}

long long multi_lr_coefficient(const Partition& alpha, const std::vector<Partition>& betas) {
    if (betas.empty()) throw std::invalid_argument("multi_lr_coefficient: at least one factor required");
    long long total = 0;
    for (const auto& b : betas) {
        if (b.empty()) throw std::invalid_argument("multi_lr_coefficient: factors must be non-empty");
        total = checked_add(total, b.sum());
    }
    if (total != alpha.sum())
        throw std::invalid_argument("multi_lr_coefficient: factor sizes must add up to |alpha|");

    std::map<std::pair<int, WeakComposition>, long long> memo;
    std::function<long long(const Partition&, int)> rec = [&](const Partition& delta,
                                                              int k) -> long long {
        if (k == 1) return delta == betas[0] ? 1 : 0;
        const auto key = std::make_pair(k, static_cast<WeakComposition>(delta));
        if (const auto it = memo.find(key); it != memo.end()) return it->second;
        const int zeta = static_cast<int>(delta.sum() - betas[k - 1].sum());
        long long acc = 0;
        for (const Partition& mid : enumerate_partitions(zeta)) {
            const long long c1 = lr_coefficient(delta, mid, betas[k - 1]);
            if (c1 == 0) continue;
            acc = checked_add(acc, checked_mul(c1, rec(mid, k - 1)));
        }
        memo[key] = acc;
        return acc;
    };
    return rec(alpha, static_cast<int>(betas.size()));
}

namespace {

// Orders tuples by lexicographically decreasing concatenated parts, the
// convention used for reporting admissible families.
bool tuple_after(const std::vector<WeakComposition>& a, const std::vector<WeakComposition>& b) {
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i)
        if (a[i] != b[i]) return a[i].parts() > b[i].parts();
    return false;
}

void sort_tuples(std::vector<AdmissibleTuple>& v) {
    std::sort(v.begin(), v.end(),
              [](const AdmissibleTuple& x, const AdmissibleTuple& y) { return tuple_after(x.parts, y.parts); });
}

}  // namespace

std::vector<AdmissibleTuple> enumerate_admissible(const Partition& alpha, const Partition& eta) {
    if (eta.empty()) throw std::invalid_argument("enumerate_admissible: eta must be non-empty");
    if (alpha.sum() != eta.sum())
        throw std::invalid_argument("enumerate_admissible: alpha and eta must have equal size");

    using TupleMap = std::map<std::vector<Partition>, long long>;
    std::map<std::pair<int, WeakComposition>, TupleMap> cache;
    std::function<const TupleMap&(const Partition&, int)> rec =
        [&](const Partition& delta, int k) -> const TupleMap& {
        const auto key = std::make_pair(k, static_cast<WeakComposition>(delta));
        if (const auto it = cache.find(key); it != cache.end()) return it->second;
        TupleMap acc;
        if (k == 1) {
            acc[{delta}] = 1;
        } else {
            const int zeta = static_cast<int>(delta.sum() - eta.at(k - 1));
            for (const Partition& mid : enumerate_partitions(zeta)) {
                std::vector<std::pair<Partition, long long>> splits;
                for (const Partition& last : enumerate_partitions(eta.at(k - 1))) {
                    const long long c1 = lr_coefficient(delta, mid, last);
                    if (c1 > 0) splits.emplace_back(last, c1);
                }
                if (splits.empty()) continue;
                for (const auto& [prefix, cPrefix] : rec(mid, k - 1))
                    for (const auto& [last, c1] : splits) {
                        std::vector<Partition> tuple = prefix;
                        tuple.push_back(last);
                        auto& slot = acc[std::move(tuple)];
                        slot = checked_add(slot, checked_mul(c1, cPrefix));
                    }
            }
        }
        return cache.emplace(key, std::move(acc)).first->second;
    };

    std::vector<AdmissibleTuple> out;
    for (const auto& [tuple, coeff] : rec(alpha, eta.length())) {
        AdmissibleTuple t;
        t.parts.assign(tuple.begin(), tuple.end());
        t.coefficient = coeff;
        out.push_back(std::move(t));
    }
    sort_tuples(out);
    return out;
}

std::vector<AdmissibleTuple> enumerate_admissible_star(const Partition& alpha, const Partition& eta) {
    if (eta.empty()) throw std::invalid_argument("enumerate_admissible_star: eta must be non-empty");
    if (alpha.sum() != eta.sum())
        throw std::invalid_argument("enumerate_admissible_star: alpha and eta must have equal size");

    const int p = eta.length();
    const int width = alpha.length();
    std::vector<int> rem = alpha.parts();
    std::vector<WeakComposition> current;
    std::vector<AdmissibleTuple> out;

    std::function<void(int)> nextSlot = [&](int slot) {
        if (slot == p - 1) {
            // The last shape is forced; its size is right by arithmetic.
            current.emplace_back(rem);
            out.push_back({current, 1});
            current.pop_back();
            return;
        }
        // Enumerate weak compositions of eta_slot bounded by rem, columns left
        // to right, larger values first (descending lexicographic order).
        std::vector<int> w(static_cast<std::size_t>(width), 0);
        std::function<void(int, int)> fillCol = [&](int col, int left) {
            if (col == width) {
                if (left != 0) return;
                for (int i = 0; i < width; ++i) rem[i] -= w[i];
                current.emplace_back(w);
                nextSlot(slot + 1);
                current.pop_back();
                for (int i = 0; i < width; ++i) rem[i] += w[i];
                return;
            }
            for (int v = std::min(left, rem[col]); v >= 0; --v) {
                w[col] = v;
                fillCol(col + 1, left - v);
            }
            w[col] = 0;
        };
        fillCol(0, eta.at(slot));
    };
    nextSlot(0);
    sort_tuples(out);
    return out;
}

ReadingWord minimal_sequence(const WeakComposition& delta) {
    if (delta.empty()) throw std::invalid_argument("minimal_sequence: empty block profile");
    for (int e : delta.parts())
        if (e < 1)
            throw std::invalid_argument(
                "minimal_sequence: block profile entries must be positive (drop equal rows first)");

    std::vector<long long> cnt(static_cast<std::size_t>(delta.length()) + 1, 0);
    ReadingWord w;
    for (int block = 0; block < delta.length(); ++block) {
        for (int j = 0; j < delta.at(block); ++j) {
            const int hi = (j == 0) ? block + 1 : w.back();
            int pick = 1;
            for (int v = hi; v >= 1; --v)
                if (v == 1 || cnt[v - 1] > cnt[v]) {
                    pick = v;
                    break;
                }
            w.push_back(pick);
            ++cnt[pick];
        }
    }
    if (content(w) != sort_to_partition(delta))
        throw std::logic_error("minimal_sequence: content must equal the sorted profile");
    return w;
}

std::vector<int> running_multiplicity(const ReadingWord& w) {
    std::map<int, int> seen;
    std::vector<int> r;
    r.reserve(w.size());
    for (int v : w) r.push_back(++seen[v]);
    return r;
}

Partition minimal_content(const Partition& alpha, const Partition& beta) {
    if (beta.sum() >= alpha.sum())
        throw std::invalid_argument("minimal_content: beta must be strictly smaller than alpha");
    return sort_to_partition(subtract(alpha, beta));
}

SkewTableau reconstruct_tableau(const ReadingWord& word, const Partition& alpha,
                                const Partition& beta) {
    if (!componentwise_leq(beta, alpha))
        throw std::invalid_argument("reconstruct_tableau: beta must fit componentwise inside alpha");
    const WeakComposition delta = subtract(alpha, beta);
    bool positive = delta.length() == alpha.length();
    for (int e : delta.parts()) positive = positive && e >= 1;
    if (alpha.empty() || !positive)
        throw std::invalid_argument(
            "reconstruct_tableau: alpha - beta has zero rows (drop equal rows first)");
    if (word != minimal_sequence(delta))
        throw std::invalid_argument("reconstruct_tableau: word is not the greedy word of alpha - beta");

    // Splitting the word into its blocks and reversing each one is exactly the
    // composite of the three geometric steps (left-justify, shift row r right
    // by alpha_1 - alpha_r, flip horizontally): row r of the result occupies
    // columns beta_r..alpha_r-1 of the skew shape alpha/beta.
    std::vector<std::vector<int>> rows;
    std::size_t pos = 0;
    for (int r = 0; r < delta.length(); ++r) {
        std::vector<int> row(word.begin() + pos, word.begin() + pos + delta.at(r));
        std::reverse(row.begin(), row.end());
        rows.push_back(std::move(row));
        pos += static_cast<std::size_t>(delta.at(r));
    }
    return SkewTableau(SkewShape(alpha, beta), std::move(rows));
}

}  // namespace cmspec
