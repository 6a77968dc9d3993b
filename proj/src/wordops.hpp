#ifndef SEPKIT_SRC_WORDOPS_HPP
#define SEPKIT_SRC_WORDOPS_HPP

// Word-level traversal core for the enumeration hot loops. Sets are raw
// spans of 64-bit words, graphs are the row-major blocks exposed by
// Graph; nothing here allocates per call.

#include <bit>
#include <cstdint>
#include <cstring>
#include <vector>

#include "sepkit/graph.hpp"

namespace sepkit::wordops {

using Word = std::uint64_t;

inline void clear(Word* dst, int words) {
    std::memset(dst, 0, static_cast<std::size_t>(words) * sizeof(Word));
}

inline void copy(Word* dst, const Word* src, int words) {
    std::memcpy(dst, src, static_cast<std::size_t>(words) * sizeof(Word));
}

inline bool any(const Word* a, int words) {
    for (int i = 0; i < words; ++i)
        if (a[i]) return true;
    return false;
}

inline int popcount(const Word* a, int words) {
    int total = 0;
    for (int i = 0; i < words; ++i) total += std::popcount(a[i]);
    return total;
}

inline bool test(const Word* a, int v) {
    return (a[v >> 6] >> (v & 63)) & 1u;
}

inline void set(Word* a, int v) { a[v >> 6] |= Word{1} << (v & 63); }
inline void reset(Word* a, int v) { a[v >> 6] &= ~(Word{1} << (v & 63)); }

template <typename Fn>
inline void for_each_bit(const Word* a, int words, Fn&& fn) {
    for (int i = 0; i < words; ++i)
        for (Word w = a[i]; w; w &= w - 1)
            fn((i << 6) + std::countr_zero(w));
}

inline std::uint64_t hash(const Word* a, int words) {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (int i = 0; i < words; ++i) {
        h ^= a[i];
        h *= 0xff51afd7ed558ccdull;
        h ^= h >> 33;
    }
    return h | 1;  // zero is the empty-slot sentinel
}

inline bool equal(const Word* a, const Word* b, int words) {
    return std::memcmp(a, b, static_cast<std::size_t>(words) * sizeof(Word)) ==
           0;
}

/// Fixed-stride scratch space for breadth-first traversals.
class Traversal {
public:
    explicit Traversal(const Graph& g)
        : g_(&g),
          n_(g.vertex_count()),
          words_(g.words()),
          comp_(words_),
          acc_(words_),
          frontier_(words_),
          free_(words_) {}

    int words() const { return words_; }

    /// Expand the component of seed in g - removed. On return comp holds
    /// the component and acc the union of its adjacency rows, so the
    /// component's neighborhood is acc & removed.
    void component_from(const Word* removed, int seed) {
        clear(comp_.data(), words_);
        clear(acc_.data(), words_);
        clear(frontier_.data(), words_);
        set(comp_.data(), seed);
        set(frontier_.data(), seed);
        while (any(frontier_.data(), words_)) {
            for_each_bit(frontier_.data(), words_, [&](int v) {
                const Word* row = g_->row_blocks(v);
                for (int i = 0; i < words_; ++i) acc_[i] |= row[i];
            });
            bool moved = false;
            for (int i = 0; i < words_; ++i) {
                const Word next = acc_[i] & ~removed[i] & ~comp_[i];
                frontier_[i] = next;
                comp_[i] |= next;
                moved |= next != 0;
            }
            if (!moved) break;
        }
    }

    /// True iff g - removed has at least two components.
    bool splits(const Word* removed) {
        int first = -1;
        for (int i = 0; i < words_ && first < 0; ++i) {
            const Word w = ~removed[i] & live_word(i);
            if (w) first = (i << 6) + std::countr_zero(w);
        }
        if (first < 0) return false;
        component_from(removed, first);
        return popcount(comp_.data(), words_) + popcount(removed, words_) <
               n_;
    }

    /// Visit every component of g - removed; fn(comp, neighborhood) gets
    /// scratch pointers valid only during the call.
    template <typename Fn>
    void components(const Word* removed, Fn&& fn) {
        copy(free_.data(), removed, words_);
        for (int i = 0; i < words_; ++i) free_[i] = ~free_[i] & live_word(i);
        for (int i = 0; i < words_; ++i) {
            while (free_[i]) {
                const int seed = (i << 6) + std::countr_zero(free_[i]);
                component_from(removed, seed);
                for (int k = 0; k < words_; ++k) {
                    free_[k] &= ~comp_[k];
                    acc_[k] &= removed[k];
                }
                fn(static_cast<const Word*>(comp_.data()),
                   static_cast<const Word*>(acc_.data()));
            }
        }
    }

private:
    Word live_word(int i) const {
        const int full = n_ >> 6;
        if (i < full) return ~Word{0};
        const int rem = n_ & 63;
        return i == full && rem ? (Word{1} << rem) - 1 : 0;
    }

    const Graph* g_;
    int n_;
    int words_;
    std::vector<Word> comp_, acc_, frontier_, free_;
};

/// Open-addressing set of fixed-width word masks; contents live in a
/// flat arena indexed by insertion order.
class MaskArena {
public:
    explicit MaskArena(int words) : words_(words) { rehash(1 << 12); }

    std::size_t size() const { return count_; }

    /// Insert if absent; returns true when the mask is new.
    bool insert(const Word* mask) {
        if ((count_ + 1) * 10 >= slots_.size() * 7) rehash(slots_.size() * 2);
        const std::uint64_t h = hash(mask, words_);
        std::size_t at = h & (slots_.size() - 1);
        while (slots_[at].hash) {
            if (slots_[at].hash == h &&
                equal(entry(slots_[at].index), mask, words_))
                return false;
            at = (at + 1) & (slots_.size() - 1);
        }
        slots_[at].hash = h;
        slots_[at].index = static_cast<std::uint32_t>(count_);
        arena_.insert(arena_.end(), mask, mask + words_);
        ++count_;
        return true;
    }

    const Word* entry(std::size_t index) const {
        return arena_.data() + index * words_;
    }

private:
    struct Slot {
        std::uint64_t hash = 0;
        std::uint32_t index = 0;
    };

    void rehash(std::size_t capacity) {
        std::vector<Slot> fresh(capacity);
        for (const Slot& s : slots_) {
            if (!s.hash) continue;
            std::size_t at = s.hash & (capacity - 1);
            while (fresh[at].hash) at = (at + 1) & (capacity - 1);
            fresh[at] = s;
        }
        slots_.swap(fresh);
    }

    int words_;
    std::size_t count_ = 0;
    std::vector<Slot> slots_;
    std::vector<Word> arena_;
};

/// Per-step candidate deduplicator: a round-stamped table, so reuse
/// never pays for clearing.
class ScratchDedup {
public:
    explicit ScratchDedup(int words) : words_(words), slots_(2048) {}

    void next_round() {
        ++round_;
        count_ = 0;
        keys_.clear();
    }

    /// True the first time this mask is seen in the current round.
    bool first_sighting(const Word* mask) {
        if ((count_ + 1) * 2 >= slots_.size()) grow();
        const std::uint64_t h = hash(mask, words_);
        std::size_t at = h & (slots_.size() - 1);
        for (;;) {
            Slot& s = slots_[at];
            if (s.round != round_) {
                s.round = round_;
                s.hash = h;
                s.offset = keys_.size();
                keys_.insert(keys_.end(), mask, mask + words_);
                ++count_;
                return true;
            }
            if (s.hash == h && equal(keys_.data() + s.offset, mask, words_))
                return false;
            at = (at + 1) & (slots_.size() - 1);
        }
    }

private:
    struct Slot {
        std::uint64_t hash = 0;
        std::uint64_t round = 0;
        std::size_t offset = 0;
    };

    void grow() {
        std::vector<Slot> fresh(slots_.size() * 2);
        for (const Slot& s : slots_) {
            if (s.round != round_) continue;
            std::size_t at = s.hash & (fresh.size() - 1);
            while (fresh[at].round == round_)
                at = (at + 1) & (fresh.size() - 1);
            fresh[at] = s;
        }
        slots_.swap(fresh);
    }

    int words_;
    std::uint64_t round_ = 1;
    std::size_t count_ = 0;
    std::vector<Slot> slots_;
    std::vector<Word> keys_;
};

} // namespace sepkit::wordops

#endif
