#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace ifpt {

// Fixed-width set of dense vertex indices.
class Bits {
public:
    Bits() = default;
    explicit Bits(std::size_t n) : size_(n), words_((n + 63) / 64, 0) {}

    std::size_t universe() const { return size_; }

    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }

    void clear() {
        for (auto& w : words_) w = 0;
    }
    void fill() {
        for (auto& w : words_) w = ~std::uint64_t{0};
        trim();
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    // First member at or after i, or universe() if none.
    std::size_t next(std::size_t i) const {
        if (i >= size_) return size_;
        std::size_t wi = i >> 6;
        std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (i & 63));
        while (true) {
            if (w) return (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
            if (++wi == words_.size()) return size_;
            w = words_[wi];
        }
    }
    std::size_t first() const { return next(0); }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                f((wi << 6) + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<std::size_t> members() const {
        std::vector<std::size_t> out;
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

    Bits& operator&=(const Bits& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    Bits& operator|=(const Bits& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    Bits& operator-=(const Bits& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
    friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
    friend Bits operator-(Bits a, const Bits& b) { return a -= b; }

    bool intersects(const Bits& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }
    bool subset_of(const Bits& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool operator==(const Bits& o) const = default;

    std::size_t hash() const {
        std::size_t h = size_;
        for (auto w : words_) h = h * 0x9e3779b97f4a7c15ULL ^ std::hash<std::uint64_t>{}(w);
        return h;
    }

private:
    void trim() {
        if (size_ & 63) words_.back() &= (std::uint64_t{1} << (size_ & 63)) - 1;
    }

    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace ifpt
