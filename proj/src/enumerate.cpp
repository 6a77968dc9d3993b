#include "sepkit/enumerate.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "sepkit/errors.hpp"
#include "sepkit/separators.hpp"
#include "wordops.hpp"

namespace sepkit {

namespace {

class Deadline {
public:
    explicit Deadline(std::chrono::milliseconds limit) {
        if (limit.count() > 0)
            deadline_ = std::chrono::steady_clock::now() + limit;
    }
    void check() {
        if (!deadline_) return;
        if (++tick_ % 256 == 0 &&
            std::chrono::steady_clock::now() > *deadline_)
            throw budget_error("enumeration exceeded its time budget");
    }

private:
    std::optional<std::chrono::steady_clock::time_point> deadline_;
    std::uint64_t tick_ = 0;
};

SeparatorFamily canonical_family(FamilyMethod method,
                                 std::vector<VertexSet> sets) {
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    return SeparatorFamily{method, std::move(sets)};
}

void require_enumerable(const Graph& g) {
    if (!g.connected())
        throw std::invalid_argument("enumeration requires a connected graph");
    if (g.vertex_count() < 2)
        throw std::invalid_argument(
            "enumeration requires at least two vertices");
}

void require_cap(const Graph& g, int max_vertices) {
    if (g.vertex_count() > max_vertices)
        throw budget_error("exhaustive enumeration refused: " +
                           std::to_string(g.vertex_count()) +
                           " vertices exceeds the cap of " +
                           std::to_string(max_vertices));
}

// Next subset of the same popcount (Gosper's hack); masks fit in 64 bits
// because the exhaustive oracles cap out far below that.
std::uint64_t next_same_popcount(std::uint64_t x) {
    const std::uint64_t c = x & (~x + 1);
    const std::uint64_t r = x + c;
    return (((r ^ x) >> 2) / c) | r;
}

Bits mask_from_word(std::uint64_t word, int n) {
    Bits b(n);
    while (word) {
        const int v = std::countr_zero(word);
        b.set(static_cast<std::size_t>(v));
        word &= word - 1;
    }
    return b;
}

} // namespace

std::string to_string(FamilyMethod method) {
    switch (method) {
        case FamilyMethod::berry: return "berry";
        case FamilyMethod::filter: return "filter";
        case FamilyMethod::bruteforce: return "bruteforce";
    }
    return "unknown";
}

bool SeparatorFamily::contains(const VertexSet& s) const {
    return std::binary_search(sets.begin(), sets.end(), s);
}

std::size_t SeparatorFamily::max_set_size() const {
    std::size_t best = 0;
    for (const VertexSet& s : sets) best = std::max(best, s.size());
    return best;
}

SeparatorFamily enumerate_minimal_separators(const Graph& g,
                                             const EnumBudget& budget) {
    require_enumerable(g);
    const int n = g.vertex_count();
    const int W = g.words();
    using wordops::Word;

    wordops::Traversal trav(g);
    wordops::MaskArena visited(W);
    wordops::ScratchDedup seen(W);
    Deadline deadline(budget.time_limit);

    std::vector<Word> removed(W), current(W);

    auto offer = [&](const Word* candidate) {
        if (!wordops::any(candidate, W)) return;
        if (!seen.first_sighting(candidate)) return;
        if (visited.insert(candidate) &&
            visited.size() > budget.max_separators)
            throw budget_error(
                "minimal-separator count exceeds the budget of " +
                std::to_string(budget.max_separators));
    };
    auto generate = [&](const Word* mask) {
        trav.components(mask, [&](const Word*, const Word* nb) { offer(nb); });
    };

    for (Vertex v = 0; v < n; ++v) {
        seen.next_round();
        wordops::copy(removed.data(), g.row_blocks(v), W);
        wordops::set(removed.data(), v);
        generate(removed.data());
        deadline.check();
    }

    // The arena grows while we walk it, which is exactly the closure.
    for (std::size_t head = 0; head < visited.size(); ++head) {
        wordops::copy(current.data(), visited.entry(head), W);
        seen.next_round();
        wordops::for_each_bit(current.data(), W, [&](int x) {
            for (int i = 0; i < W; ++i)
                removed[i] = current[i] | g.row_blocks(x)[i];
            generate(removed.data());
        });
        deadline.check();
    }

    std::vector<VertexSet> sets;
    sets.reserve(visited.size());
    for (std::size_t k = 0; k < visited.size(); ++k) {
        std::vector<Vertex> ids;
        wordops::for_each_bit(visited.entry(k), W,
                              [&](int v) { ids.push_back(v); });
        sets.push_back(VertexSet(std::move(ids)));
    }
    return canonical_family(FamilyMethod::berry, std::move(sets));
}

SeparatorFamily filter_inclusion_wise(const Graph& g,
                                      const SeparatorFamily& minimal) {
    if (!g.connected())
        throw std::invalid_argument("enumeration requires a connected graph");
    const int n = g.vertex_count();
    const int W = g.words();
    using wordops::Word;

    wordops::Traversal trav(g);
    std::vector<Word> mask(W);

    // A set of size >= 2 containing a one-vertex separator can never be
    // inclusion-wise minimal; precomputing those prunes almost all of a
    // large minimal family before the per-member scan.
    std::vector<char> singleton_separates(n, 0);
    for (int v = 0; v < n; ++v) {
        wordops::clear(mask.data(), W);
        wordops::set(mask.data(), v);
        singleton_separates[v] = trav.splits(mask.data()) ? 1 : 0;
    }

    std::vector<VertexSet> kept;
    for (const VertexSet& s : minimal.sets) {
        if (s.empty()) continue;
        if (s.size() == 1) {
            if (singleton_separates[s.ids().front()]) kept.push_back(s);
            continue;
        }
        bool pruned = false;
        for (Vertex v : s)
            if (singleton_separates[v]) {
                pruned = true;
                break;
            }
        if (pruned) continue;

        wordops::clear(mask.data(), W);
        for (Vertex v : s) wordops::set(mask.data(), v);
        if (!trav.splits(mask.data())) continue;
        bool minimal_by_inclusion = true;
        for (Vertex v : s) {
            wordops::reset(mask.data(), v);
            const bool still = trav.splits(mask.data());
            wordops::set(mask.data(), v);
            if (still) {
                minimal_by_inclusion = false;
                break;
            }
        }
        if (minimal_by_inclusion) kept.push_back(s);
    }
    return SeparatorFamily{FamilyMethod::filter, std::move(kept)};
}

SeparatorFamily enumerate_iwm_filter(const Graph& g,
                                     const EnumBudget& budget) {
    return filter_inclusion_wise(g, enumerate_minimal_separators(g, budget));
}

SeparatorFamily enumerate_iwm_bruteforce(const Graph& g, int max_vertices) {
    require_cap(g, max_vertices);
    require_enumerable(g);
    const int n = g.vertex_count();

    Bfs bfs(g);
    std::vector<Bits> emitted;
    std::vector<VertexSet> sets;
    for (int k = 1; k <= n - 2; ++k) {
        std::uint64_t word = (std::uint64_t{1} << k) - 1;
        const std::uint64_t end = std::uint64_t{1} << n;
        for (; word < end; word = next_same_popcount(word)) {
            Bits mask = mask_from_word(word, n);
            if (!bfs.splits(mask)) continue;
            bool dominated = false;
            for (const Bits& e : emitted) {
                if (e.is_subset_of(mask)) {
                    dominated = true;
                    break;
                }
            }
            if (dominated) continue;
            emitted.push_back(mask);
            sets.push_back(VertexSet::from_bits(mask));
        }
    }
    return canonical_family(FamilyMethod::bruteforce, std::move(sets));
}

SeparatorFamily enumerate_minimal_separators_bruteforce(const Graph& g,
                                                        int max_vertices) {
    require_cap(g, max_vertices);
    require_enumerable(g);
    const int n = g.vertex_count();

    Bfs bfs(g);
    std::vector<VertexSet> sets;
    std::vector<int> rest;
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = a + 1; b < n; ++b) {
            rest.clear();
            for (Vertex v = 0; v < n; ++v)
                if (v != a && v != b) rest.push_back(v);
            const std::uint64_t end = std::uint64_t{1} << rest.size();
            for (std::uint64_t word = 0; word < end; ++word) {
                Bits mask(n);
                for (std::uint64_t w = word; w;) {
                    const int i = std::countr_zero(w);
                    mask.set(static_cast<std::size_t>(rest[i]));
                    w &= w - 1;
                }
                if (bfs.connects(mask, a, b)) continue;
                bool minimal = true;
                for (auto u = mask.find_first(); u != Bits::npos;
                     u = mask.find_next(u)) {
                    mask.reset(u);
                    const bool still = !bfs.connects(mask, a, b);
                    mask.set(u);
                    if (still) {
                        minimal = false;
                        break;
                    }
                }
                if (minimal) sets.push_back(VertexSet::from_bits(mask));
            }
        }
    }
    return canonical_family(FamilyMethod::bruteforce, std::move(sets));
}

SeparatorFamily extract_inclusion_minimal(const SeparatorFamily& fam) {
    std::vector<VertexSet> kept;
    for (const VertexSet& s : fam.sets) {
        bool has_proper_subset = false;
        for (const VertexSet& t : fam.sets) {
            if (t.is_proper_subset_of(s)) {
                has_proper_subset = true;
                break;
            }
        }
        if (!has_proper_subset) kept.push_back(s);
    }
    return canonical_family(FamilyMethod::filter, std::move(kept));
}

void write_family_lines(const SeparatorFamily& fam, std::ostream& out) {
    for (const VertexSet& s : fam.sets) out << s << '\n';
}

std::string family_to_json(const SeparatorFamily& fam) {
    nlohmann::json j;
    j["count"] = fam.sets.size();
    j["method"] = to_string(fam.method);
    auto& sets = j["sets"] = nlohmann::json::array();
    for (const VertexSet& s : fam.sets) sets.push_back(s.ids());
    return j.dump(2);
}

} // namespace sepkit
