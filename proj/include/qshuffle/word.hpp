#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qshuffle {

enum class Letter : uint8_t { x = 0, y = 1 };

// x has bar value +1, y has bar value -1.
inline int bar(Letter l) { return l == Letter::x ? 1 : -1; }
inline char letter_char(Letter l) { return l == Letter::x ? 'x' : 'y'; }

// A word over {x, y}, packed one bit per letter (x = 0, y = 1, letter i at
// bit i). The empty word is the algebra unit and prints as "1". Words up to
// 64 letters cover everything within reach of exact computation here.
class Word {
public:
    static constexpr uint32_t max_length = 64;

    Word() = default;

    static Word single(Letter l) { return Word(l == Letter::y ? 1u : 0u, 1); }

    // Word of the given length whose i-th letter is x or y according to bit i.
    static Word from_bits(uint64_t bits, uint32_t len) {
        if (len > max_length) throw std::length_error("Word: length limit exceeded");
        uint64_t mask = len == 64 ? ~uint64_t(0) : ((uint64_t(1) << len) - 1);
        return Word(bits & mask, len);
    }

    static Word from_string(std::string_view s) {
        if (s == "1") return Word();
        Word w;
        for (char ch : s) {
            if (ch == 'x') {
                w = w.append(Letter::x);
            } else if (ch == 'y') {
                w = w.append(Letter::y);
            } else {
                throw std::invalid_argument("Word: bad letter '" + std::string(1, ch) + "'");
            }
        }
        return w;
    }

    uint32_t length() const { return len_; }
    bool empty() const { return len_ == 0; }

    Letter at(uint32_t i) const { return static_cast<Letter>((bits_ >> i) & 1u); }
    Letter first() const { return at(0); }
    Letter last() const { return at(len_ - 1); }

    Word append(Letter l) const {
        if (len_ >= max_length) throw std::length_error("Word: length limit exceeded");
        uint64_t b = bits_;
        if (l == Letter::y) b |= uint64_t(1) << len_;
        return Word(b, len_ + 1);
    }

    Word concat(const Word& o) const {
        if (len_ + o.len_ > max_length) throw std::length_error("Word: length limit exceeded");
        return Word(bits_ | (o.bits_ << len_), len_ + o.len_);
    }

    Word prepended(Letter l) const { return single(l).concat(*this); }

    // Drop the first letter.
    Word tail() const { return Word(bits_ >> 1, len_ - 1); }
    // Drop the last letter.
    Word drop_last() const { return Word(bits_ & ~(uint64_t(1) << (len_ - 1)), len_ - 1); }

    // #x - #y over the whole word.
    int bar_sum() const {
        int ones = std::popcount(bits_);
        return static_cast<int>(len_) - 2 * ones;
    }

    std::string str() const {
        if (len_ == 0) return "1";
        std::string s;
        s.reserve(len_);
        for (uint32_t i = 0; i < len_; ++i) s.push_back(letter_char(at(i)));
        return s;
    }

    bool operator==(const Word& o) const = default;

    // (length, lexicographic with x < y); this is the serialization order.
    std::strong_ordering operator<=>(const Word& o) const {
        if (len_ != o.len_) return len_ <=> o.len_;
        uint64_t diff = bits_ ^ o.bits_;
        if (diff == 0) return std::strong_ordering::equal;
        uint32_t i = static_cast<uint32_t>(std::countr_zero(diff));
        return ((bits_ >> i) & 1u) <=> ((o.bits_ >> i) & 1u);
    }

    uint64_t bits() const { return bits_; }

    size_t hash() const {
        uint64_t h = bits_ * 0x9e3779b97f4a7c15ull;
        h ^= (h >> 29) ^ (uint64_t(len_) << 56);
        return static_cast<size_t>(h * 0xbf58476d1ce4e5b9ull);
    }

private:
    Word(uint64_t bits, uint32_t len) : bits_(bits), len_(len) {}

    uint64_t bits_ = 0;
    uint32_t len_ = 0;
};

struct WordHash {
    size_t operator()(const Word& w) const { return w.hash(); }
};

inline Word operator""_w(const char* s, size_t n) { return Word::from_string({s, n}); }

}  // namespace qshuffle
