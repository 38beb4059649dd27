#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace mstci {

// Fixed-width bitmask over dense edge indices. Pairwise cycle intersection
// is the hot operation of the whole project, so sets of edge indices are
// stored as machine words and intersection tests run word-parallel.
class EdgeSet {
public:
    EdgeSet() = default;
    explicit EdgeSet(int bit_capacity)
        : bits_(bit_capacity), words_((bit_capacity + 63) / 64, 0) {}

    int capacity() const { return bits_; }

    void set(int i) { words_[static_cast<std::size_t>(i) >> 6] |= word_bit(i); }
    void reset(int i) { words_[static_cast<std::size_t>(i) >> 6] &= ~word_bit(i); }
    bool test(int i) const {
        return (words_[static_cast<std::size_t>(i) >> 6] & word_bit(i)) != 0;
    }

    int count() const {
        int c = 0;
        for (std::uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (std::uint64_t w : words_)
            if (w != 0) return false;
        return true;
    }

    // True iff the two sets share at least one bit.
    bool intersects(const EdgeSet& other) const {
        const std::size_t k = words_.size() < other.words_.size() ? words_.size()
                                                                  : other.words_.size();
        for (std::size_t i = 0; i < k; ++i)
            if (words_[i] & other.words_[i]) return true;
        return false;
    }

    int intersection_count(const EdgeSet& other) const {
        const std::size_t k = words_.size() < other.words_.size() ? words_.size()
                                                                  : other.words_.size();
        int c = 0;
        for (std::size_t i = 0; i < k; ++i)
            c += std::popcount(words_[i] & other.words_[i]);
        return c;
    }

    bool operator==(const EdgeSet&) const = default;

    // Visits set bits in ascending order.
    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w != 0) {
                const int bit = std::countr_zero(w);
                f(static_cast<int>(wi * 64) + bit);
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

private:
    static std::uint64_t word_bit(int i) { return 1ULL << (i & 63); }

    int bits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace mstci
