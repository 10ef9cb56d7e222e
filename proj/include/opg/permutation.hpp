#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <functional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace opg {

/// Factorial with an overflow guard; n! fits in 64 bits for n <= 20.
inline std::uint64_t factorial(std::size_t n) {
    if (n > 20) throw std::overflow_error("factorial: " + std::to_string(n) + "! exceeds 64 bits");
    std::uint64_t f = 1;
    for (std::size_t i = 2; i <= n; ++i) f *= i;
    return f;
}

/// A permutation of the values 1..L for L <= 16.
///
/// Values are stored 1-based in fixed 8-bit lanes (unused lanes zeroed), so
/// equality and ordering are flat byte comparisons and hashing is two 64-bit
/// loads. A default-constructed Permutation is empty and only meaningful as a
/// placeholder.
class Permutation {
public:
    static constexpr std::size_t kMaxSize = 16;

    Permutation() = default;

    explicit Permutation(std::span<const int> values) { assign(values); }

    Permutation(std::initializer_list<int> values) {
        assign(std::span<const int>(values.begin(), values.size()));
    }

    static Permutation identity(std::size_t n) {
        check_length(n);
        Permutation p;
        p.size_ = static_cast<std::uint8_t>(n);
        for (std::size_t i = 0; i < n; ++i) p.values_[i] = static_cast<std::uint8_t>(i + 1);
        return p;
    }

    static Permutation reversal(std::size_t n) {
        check_length(n);
        Permutation p;
        p.size_ = static_cast<std::uint8_t>(n);
        for (std::size_t i = 0; i < n; ++i) p.values_[i] = static_cast<std::uint8_t>(n - i);
        return p;
    }

    std::size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }

    /// Value at 0-based position i; values range over 1..size().
    int operator[](std::size_t i) const { return values_[i]; }

    /// 0-based position of a value in 1..size().
    std::size_t position_of(int value) const {
        for (std::size_t i = 0; i < size_; ++i)
            if (values_[i] == value) return i;
        throw std::out_of_range("Permutation::position_of: value " + std::to_string(value) +
                                " not present");
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend std::strong_ordering operator<=>(const Permutation&, const Permutation&) = default;

    /// Raw value bytes, for hashing and window scans.
    const std::uint8_t* data() const { return values_.data(); }

private:
    std::uint8_t size_ = 0;
    alignas(8) std::array<std::uint8_t, kMaxSize> values_{};

    static void check_length(std::size_t n) {
        if (n < 1 || n > kMaxSize)
            throw std::invalid_argument("Permutation length must be in 1.." +
                                        std::to_string(kMaxSize) + ", got " + std::to_string(n));
    }

    void assign(std::span<const int> values) {
        check_length(values.size());
        std::array<bool, kMaxSize + 1> seen{};
        for (int v : values) {
            if (v < 1 || static_cast<std::size_t>(v) > values.size() || seen[v])
                throw std::invalid_argument("Permutation values must be a bijection onto 1..L");
            seen[v] = true;
        }
        size_ = static_cast<std::uint8_t>(values.size());
        for (std::size_t i = 0; i < values.size(); ++i)
            values_[i] = static_cast<std::uint8_t>(values[i]);
    }
};

/// Standardization: relabel a sequence of distinct values onto 1..L keeping
/// the relative order. Implemented by ranking via an index sort.
inline Permutation standardize(std::span<const int> word) {
    const std::size_t len = word.size();
    if (len == 0) throw std::invalid_argument("standardize: empty word");
    if (len > Permutation::kMaxSize)
        throw std::invalid_argument("standardize: word longer than " +
                                    std::to_string(Permutation::kMaxSize));
    std::array<std::uint8_t, Permutation::kMaxSize> order{};
    for (std::size_t i = 0; i < len; ++i) order[i] = static_cast<std::uint8_t>(i);
    std::sort(order.begin(), order.begin() + len,
              [&](std::uint8_t a, std::uint8_t b) { return word[a] < word[b]; });
    std::array<int, Permutation::kMaxSize> ranks{};
    for (std::size_t r = 0; r < len; ++r) {
        if (r > 0 && word[order[r]] == word[order[r - 1]])
            throw std::invalid_argument("standardize: duplicate value in word");
        ranks[order[r]] = static_cast<int>(r + 1);
    }
    return Permutation(std::span<const int>(ranks.data(), len));
}

inline Permutation standardize(std::initializer_list<int> word) {
    return standardize(std::span<const int>(word.begin(), word.size()));
}

inline Permutation standardize(const Permutation& p) {
    std::array<int, Permutation::kMaxSize> buf{};
    for (std::size_t i = 0; i < p.size(); ++i) buf[i] = p[i];
    return standardize(std::span<const int>(buf.data(), p.size()));
}

/// Standardization of the window of `len` entries starting at 0-based `pos`.
inline Permutation pattern(const Permutation& p, std::size_t pos, std::size_t len) {
    if (len == 0 || pos + len > p.size())
        throw std::out_of_range("pattern: window out of range");
    std::array<int, Permutation::kMaxSize> ranks{};
    const std::uint8_t* v = p.data() + pos;
    for (std::size_t i = 0; i < len; ++i) {
        int r = 1;
        for (std::size_t j = 0; j < len; ++j) r += v[j] < v[i];
        ranks[i] = r;
    }
    return Permutation(std::span<const int>(ranks.data(), len));
}

/// Entrywise complement a_i -> L+1-a_i. An involution.
inline Permutation complement(const Permutation& p) {
    std::array<int, Permutation::kMaxSize> buf{};
    const int l = static_cast<int>(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) buf[i] = l + 1 - p[i];
    return Permutation(std::span<const int>(buf.data(), p.size()));
}

/// Left rotation a_1 a_2 ... a_L -> a_2 ... a_L a_1.
inline Permutation cyclic_shift(const Permutation& p) {
    std::array<int, Permutation::kMaxSize> buf{};
    for (std::size_t i = 0; i + 1 < p.size(); ++i) buf[i] = p[i + 1];
    buf[p.size() - 1] = p[0];
    return Permutation(std::span<const int>(buf.data(), p.size()));
}

/// True iff consecutive differences strictly alternate in sign, i.e. descents
/// sit exactly at the odd positions or exactly at the even ones.
inline bool is_alternating(const Permutation& p) {
    for (std::size_t i = 0; i + 2 < p.size(); ++i) {
        const bool up = p[i] < p[i + 1];
        const bool up_next = p[i + 1] < p[i + 2];
        if (up == up_next) return false;
    }
    return true;
}

/// The identity and the reversal: the only loop-bearing vertices.
inline bool is_trivial(const Permutation& p) {
    return p == Permutation::identity(p.size()) || p == Permutation::reversal(p.size());
}

/// Lexicographic (Lehmer code) rank among the permutations of the same length.
inline std::uint64_t rank(const Permutation& p) {
    const std::size_t n = p.size();
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t smaller_later = 0;
        for (std::size_t j = i + 1; j < n; ++j) smaller_later += p[j] < p[i];
        r += smaller_later * factorial(n - 1 - i);
    }
    return r;
}

/// Inverse of rank: the r-th permutation of length n in lexicographic order.
inline Permutation unrank(std::size_t n, std::uint64_t r) {
    if (n < 1 || n > Permutation::kMaxSize)
        throw std::invalid_argument("unrank: length must be in 1..16");
    if (r >= factorial(n))
        throw std::out_of_range("unrank: rank " + std::to_string(r) + " out of range for length " +
                                std::to_string(n));
    std::array<int, Permutation::kMaxSize> pool{};
    for (std::size_t i = 0; i < n; ++i) pool[i] = static_cast<int>(i + 1);
    std::array<int, Permutation::kMaxSize> out{};
    std::size_t remaining = n;
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t f = factorial(remaining - 1);
        const std::size_t idx = static_cast<std::size_t>(r / f);
        r %= f;
        out[i] = pool[idx];
        std::copy(pool.begin() + idx + 1, pool.begin() + remaining, pool.begin() + idx);
        --remaining;
    }
    return Permutation(std::span<const int>(out.data(), n));
}

/// Extend a pattern by one entry: append a value of relative rank r (1-based)
/// and bump the existing values at or above it. The result has length L+1 and
/// its length-L prefix standardizes back to p.
inline Permutation append_rank(const Permutation& p, int r) {
    const std::size_t n = p.size();
    if (n + 1 > Permutation::kMaxSize)
        throw std::invalid_argument("append_rank: result would exceed max length");
    if (r < 1 || static_cast<std::size_t>(r) > n + 1)
        throw std::invalid_argument("append_rank: rank out of range");
    std::array<int, Permutation::kMaxSize> buf{};
    for (std::size_t i = 0; i < n; ++i) buf[i] = p[i] < r ? p[i] : p[i] + 1;
    buf[n] = r;
    return Permutation(std::span<const int>(buf.data(), n + 1));
}

/// Parse "21435" (digits, n <= 9), "3,6,1,5,8" (comma separated) or the
/// letter convention a=10, b=11, ... used for one-token long permutations.
inline Permutation parse_permutation(std::string_view text) {
    std::vector<int> values;
    if (text.find(',') != std::string_view::npos) {
        std::size_t start = 0;
        while (start <= text.size()) {
            std::size_t end = text.find(',', start);
            if (end == std::string_view::npos) end = text.size();
            const std::string tok(text.substr(start, end - start));
            try {
                values.push_back(std::stoi(tok));
            } catch (const std::exception&) {
                throw std::invalid_argument("invalid permutation entry '" + tok + "'");
            }
            start = end + 1;
            if (end == text.size()) break;
        }
    } else {
        for (char c : text) {
            if (c >= '1' && c <= '9')
                values.push_back(c - '0');
            else if (c >= 'a' && c <= 'z')
                values.push_back(c - 'a' + 10);
            else
                throw std::invalid_argument(std::string("invalid permutation character '") + c +
                                            "'");
        }
    }
    return Permutation(std::span<const int>(values.data(), values.size()));
}

/// Digits for n <= 9, comma separated otherwise.
inline std::string to_string(const Permutation& p) {
    std::string s;
    if (p.size() <= 9) {
        for (std::size_t i = 0; i < p.size(); ++i) s += static_cast<char>('0' + p[i]);
    } else {
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(p[i]);
        }
    }
    return s;
}

inline std::ostream& operator<<(std::ostream& os, const Permutation& p) {
    return os << to_string(p);
}

}  // namespace opg

template <>
struct std::hash<opg::Permutation> {
    std::size_t operator()(const opg::Permutation& p) const noexcept {
        std::uint64_t a, b;
        std::memcpy(&a, p.data(), 8);
        std::memcpy(&b, p.data() + 8, 8);
        std::uint64_t h = a * 0x9e3779b97f4a7c15ull ^ (b + 0xbf58476d1ce4e5b9ull) ^
                          (static_cast<std::uint64_t>(p.size()) << 56);
        h ^= h >> 31;
        h *= 0x94d049bb133111ebull;
        h ^= h >> 29;
        return static_cast<std::size_t>(h);
    }
};
