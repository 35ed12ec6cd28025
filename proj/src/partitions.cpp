#include "cmspec/partitions.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "cmspec/checked.hpp"

namespace cmspec {

WeakComposition::WeakComposition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int e : parts_)
        if (e < 0) throw std::invalid_argument("weak composition parts must be non-negative");
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int WeakComposition::at(int i) const {
    return (i >= 0 && i < length()) ? parts_[i] : 0;
}

long long WeakComposition::sum() const {
    long long s = 0;
    for (int e : parts_) s = checked_add(s, e);
    return s;
}

Partition::Partition(std::vector<int> parts) : WeakComposition(std::move(parts)) {
    const auto& p = this->parts();
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && p[i] > p[i - 1])
            throw std::invalid_argument("partition parts must be non-increasing");
    }
}

Partition::Partition(const WeakComposition& w) : Partition(w.parts()) {}

WeakComposition canonicalize(std::vector<int> entries) {
    return WeakComposition(std::move(entries));
}

Partition conjugate(const Partition& a) {
    if (a.empty()) return Partition();
    std::vector<int> c(static_cast<std::size_t>(a.parts()[0]), 0);
    for (int part : a.parts())
        for (int s = 0; s < part; ++s) ++c[s];
    return Partition(std::move(c));
}

bool dominance_leq(const WeakComposition& a, const WeakComposition& b) {
    const int len = std::max(a.length(), b.length());
    long long surplus = 0;  // prefix sum of b minus prefix sum of a
    for (int i = 0; i < len; ++i) {
        surplus = checked_add(surplus, b.at(i) - a.at(i));
        if (surplus < 0) return false;
    }
    return true;
}

bool componentwise_leq(const WeakComposition& a, const WeakComposition& b) {
    for (int i = 0; i < a.length(); ++i)
        if (a.at(i) > b.at(i)) return false;
    return true;
}

WeakComposition subtract(const WeakComposition& a, const WeakComposition& b) {
    if (!componentwise_leq(b, a))
        throw std::invalid_argument("subtract: second argument must fit componentwise inside the first");
    std::vector<int> d(static_cast<std::size_t>(a.length()));
    for (int i = 0; i < a.length(); ++i) d[i] = a.at(i) - b.at(i);
    return WeakComposition(std::move(d));
}

Partition sort_to_partition(const WeakComposition& w) {
    std::vector<int> p = w.parts();
    std::sort(p.begin(), p.end(), std::greater<int>());
    while (!p.empty() && p.back() == 0) p.pop_back();
    return Partition(std::move(p));
}

long long q_value(const WeakComposition& a) {
    // Row i (1-based) contributes a_i*(a_i-1)/2 - (i-1)*a_i; both terms are
    // integers, so no halving of an odd quantity ever occurs.
    long long q = 0;
    for (int i = 0; i < a.length(); ++i) {
        const long long e = a.at(i);
        const long long row = checked_sub(checked_mul(e, e - 1) / 2, checked_mul(i, e));
        q = checked_add(q, row);
    }
    return q;
}

long long dimension(const Partition& a) {
    if (a.empty()) return 1;
    const Partition conj = conjugate(a);
    long long hooks = 1;
    for (int i = 0; i < a.length(); ++i)
        for (int j = 0; j < a.at(i); ++j) {
            const long long hook = (a.at(i) - j) + (conj.at(j) - i) - 1;
            hooks = checked_mul(hooks, hook);
        }
    long long fact = 1;
    for (long long k = 2; k <= a.sum(); ++k) fact = checked_mul(fact, k);
    if (fact % hooks != 0) throw std::logic_error("hook product does not divide the factorial");
    return fact / hooks;
}

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 1) throw std::invalid_argument("enumerate_partitions requires n >= 1");
    std::vector<Partition> out;
    std::vector<int> a{n};
    for (;;) {
        out.emplace_back(a);
        // Reverse lexicographic successor: decrement the last part larger
        // than 1 and redistribute everything after it in maximal chunks.
        int i = static_cast<int>(a.size()) - 1;
        while (i >= 0 && a[i] == 1) --i;
        if (i < 0) break;
        int rem = 1;
        for (std::size_t j = i + 1; j < a.size(); ++j) rem += a[j];
        a.resize(static_cast<std::size_t>(i) + 1);
        a[i] -= 1;
        while (rem > 0) {
            const int chunk = std::min(a[i], rem);
            a.push_back(chunk);
            rem -= chunk;
        }
    }
    return out;
}

namespace {

int parse_int_token(const std::string& tok, const std::string& whole) {
    int value = 0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || tok.empty())
        throw std::invalid_argument("malformed partition '" + whole + "': bad number '" + tok + "'");
    return value;
}

}  // namespace

Partition parse_partition(const std::string& text) {
    std::vector<int> parts;
    std::string token;
    std::stringstream stream(text);
    if (text.empty()) throw std::invalid_argument("malformed partition '': empty");
    std::size_t fields = 0;
    while (std::getline(stream, token, ',')) {
        ++fields;
        // Trim surrounding spaces.
        const auto b = token.find_first_not_of(" \t");
        const auto e = token.find_last_not_of(" \t");
        if (b == std::string::npos)
            throw std::invalid_argument("malformed partition '" + text + "': empty field");
        token = token.substr(b, e - b + 1);
        int base = 0, repeat = 1;
        if (const auto caret = token.find('^'); caret != std::string::npos) {
            base = parse_int_token(token.substr(0, caret), text);
            repeat = parse_int_token(token.substr(caret + 1), text);
            if (repeat < 1)
                throw std::invalid_argument("malformed partition '" + text + "': exponent must be >= 1");
        } else {
            base = parse_int_token(token, text);
        }
        if (base < 1)
            throw std::invalid_argument("malformed partition '" + text + "': parts must be positive");
        if (repeat > 4096 || parts.size() + repeat > 4096)
            throw std::invalid_argument("malformed partition '" + text + "': too many parts");
        parts.insert(parts.end(), static_cast<std::size_t>(repeat), base);
    }
    if (fields == 0 || parts.empty())
        throw std::invalid_argument("malformed partition '" + text + "': empty");
    for (std::size_t i = 1; i < parts.size(); ++i)
        if (parts[i] > parts[i - 1])
            throw std::invalid_argument("malformed partition '" + text + "': parts must be non-increasing");
    return Partition(std::move(parts));
}

std::string format_composition(const WeakComposition& w) {
    std::string s;
    for (int i = 0; i < w.length(); ++i) {
        if (i) s += ',';
        s += std::to_string(w.at(i));
    }
    return s;
}

}  // namespace cmspec
