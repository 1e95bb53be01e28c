#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace gal {

/// Fixed-capacity vertex set backed by 64-bit words.
class Bitset
{
  public:
    Bitset() = default;
    explicit Bitset(int size) : size_(size), words_(static_cast<size_t>((size + 63) / 64), 0) {}

    static Bitset full(int size)
    {
        Bitset b(size);
        for (int i = 0; i < size; ++i)
            b.set(i);
        return b;
    }

    int size() const { return size_; }
    const std::vector<uint64_t>& words() const { return words_; }

    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { words_[i >> 6] |= uint64_t{1} << (i & 63); }
    void reset(int i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }

    int count() const
    {
        int c = 0;
        for (auto w : words_)
            c += std::popcount(w);
        return c;
    }

    bool none() const
    {
        for (auto w : words_)
            if (w)
                return false;
        return true;
    }
    bool any() const { return !none(); }

    /// Index of the lowest set bit, or -1 when empty.
    int first() const
    {
        for (size_t k = 0; k < words_.size(); ++k)
            if (words_[k])
                return static_cast<int>(k * 64) + std::countr_zero(words_[k]);
        return -1;
    }

    /// Index of the next set bit strictly after i, or -1.
    int next(int i) const
    {
        ++i;
        if (i >= size_)
            return -1;
        size_t k = static_cast<size_t>(i >> 6);
        uint64_t w = words_[k] & (~uint64_t{0} << (i & 63));
        while (true) {
            if (w)
                return static_cast<int>(k * 64) + std::countr_zero(w);
            if (++k == words_.size())
                return -1;
            w = words_[k];
        }
    }

    Bitset& operator&=(const Bitset& o)
    {
        for (size_t k = 0; k < words_.size(); ++k)
            words_[k] &= o.words_[k];
        return *this;
    }
    Bitset& operator|=(const Bitset& o)
    {
        for (size_t k = 0; k < words_.size(); ++k)
            words_[k] |= o.words_[k];
        return *this;
    }
    /// Removes every element of o.
    Bitset& subtract(const Bitset& o)
    {
        for (size_t k = 0; k < words_.size(); ++k)
            words_[k] &= ~o.words_[k];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend bool operator==(const Bitset&, const Bitset&) = default;

    bool intersects(const Bitset& o) const
    {
        for (size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & o.words_[k])
                return true;
        return false;
    }
    bool is_subset_of(const Bitset& o) const
    {
        for (size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & ~o.words_[k])
                return false;
        return true;
    }

    std::vector<int> to_vector() const
    {
        std::vector<int> out;
        for (int i = first(); i >= 0; i = next(i))
            out.push_back(i);
        return out;
    }

    template <typename F> void for_each(F&& f) const
    {
        for (size_t k = 0; k < words_.size(); ++k) {
            uint64_t w = words_[k];
            while (w) {
                f(static_cast<int>(k * 64) + std::countr_zero(w));
                w &= w - 1;
            }
        }
    }

  private:
    int size_ = 0;
    std::vector<uint64_t> words_;
};

} // namespace gal
