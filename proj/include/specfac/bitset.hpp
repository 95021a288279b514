#ifndef SPECFAC_BITSET_HPP
#define SPECFAC_BITSET_HPP

#include <bit>
#include <cstdint>
#include <cstddef>
#include <vector>

namespace specfac {

// Fixed-capacity dynamic bitset over [0, size). Word layout is little-endian
// bit order so that subset tests and popcounts are word-parallel.
class DynBitset {
public:
    DynBitset() = default;
    explicit DynBitset(std::size_t size)
        : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const { return size_; }

    bool test(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(std::size_t i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool none() const {
        for (auto w : words_) if (w) return false;
        return true;
    }

    // this ⊆ other
    bool is_subset_of(const DynBitset& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i]) return false;
        return true;
    }
    bool intersects(const DynBitset& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i]) return true;
        return false;
    }

    DynBitset& operator|=(const DynBitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    DynBitset& operator&=(const DynBitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    friend bool operator==(const DynBitset& a, const DynBitset& b) {
        return a.size_ == b.size_ && a.words_ == b.words_;
    }

    std::vector<int> indices() const {
        std::vector<int> out;
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t x = words_[w];
            while (x) {
                out.push_back(static_cast<int>(w * 64 + std::countr_zero(x)));
                x &= x - 1;
            }
        }
        return out;
    }

    // Lexicographic order on the sorted index sequences (not on the raw words).
    // Used for deterministic certificate tie-breaking.
    static bool lex_less(const DynBitset& a, const DynBitset& b) {
        std::size_t na = a.count(), nb = b.count();
        auto ia = a.indices(), ib = b.indices();
        std::size_t m = na < nb ? na : nb;
        for (std::size_t i = 0; i < m; ++i) {
            if (ia[i] != ib[i]) return ia[i] < ib[i];
        }
        return na < nb;
    }

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

using VertexSet = DynBitset;

} // namespace specfac

#endif
