#pragma once

#include <compare>
#include <string>
#include <vector>

namespace cmspec {

// A weak composition: finitely many non-negative integer parts.  Trailing
// zeros carry no information, so the constructor strips them; two inputs that
// differ only in trailing zeros compare equal.  Internal zeros are kept.
class WeakComposition {
public:
    WeakComposition() = default;
    explicit WeakComposition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    // Part at position i (0-based); positions past the stored length read as 0.
    int at(int i) const;
    long long sum() const;
    bool empty() const { return parts_.empty(); }

    friend bool operator==(const WeakComposition&, const WeakComposition&) = default;
    friend auto operator<=>(const WeakComposition&, const WeakComposition&) = default;

private:
    std::vector<int> parts_;
};

// An integer partition: non-increasing positive parts.  Trailing zeros in the
// input are tolerated and stripped; anything else out of order is an error.
class Partition : public WeakComposition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    explicit Partition(const WeakComposition& w);
};

// The canonical representative of a raw part list (trailing zeros dropped).
WeakComposition canonicalize(std::vector<int> entries);

// Conjugate partition: part s of the result counts the parts of a that are >= s.
Partition conjugate(const Partition& a);

// Dominance order a <= b: every prefix sum of b is >= the matching prefix sum
// of a.  Defined for arbitrary weak compositions; equal sums are not required.
bool dominance_leq(const WeakComposition& a, const WeakComposition& b);

// a_i <= b_i at every position.
bool componentwise_leq(const WeakComposition& a, const WeakComposition& b);

// Componentwise difference a - b; requires componentwise_leq(b, a).
WeakComposition subtract(const WeakComposition& a, const WeakComposition& b);

// Parts of w sorted into non-increasing order, zeros dropped.
Partition sort_to_partition(const WeakComposition& w);

// q(a) = 1/2 * sum_i a_i * (a_i - (2i - 1)), rows indexed from 1.  Every
// summand is even, so the result is an exact integer (checked arithmetic).
long long q_value(const WeakComposition& a);

// Number of standard Young tableaux of shape a, by the hook length formula.
// Exact in 64 bits; overflow (shapes past ~20 boxes) raises overflow_error.
long long dimension(const Partition& a);

// All partitions of n in reverse lexicographic order: (n) first, (1^n) last.
std::vector<Partition> enumerate_partitions(int n);

// Text format: comma-separated parts, e.g. "4,2,1".  Input additionally
// accepts the exponent shorthand "b^e" for e copies of b, e.g. "2^3,1".
Partition parse_partition(const std::string& text);
std::string format_composition(const WeakComposition& w);

}  // namespace cmspec
