#ifndef SEPKIT_ENUMERATE_HPP
#define SEPKIT_ENUMERATE_HPP

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "sepkit/graph.hpp"

namespace sepkit {

enum class FamilyMethod { berry, filter, bruteforce };

std::string to_string(FamilyMethod method);

/// Deduplicated collection of vertex sets in lexicographic canonical
/// order, tagged with the method that produced it.
struct SeparatorFamily {
    FamilyMethod method = FamilyMethod::bruteforce;
    std::vector<VertexSet> sets;

    std::size_t size() const { return sets.size(); }
    bool contains(const VertexSet& s) const;
    /// Largest member size, 0 for an empty family.
    std::size_t max_set_size() const;
};

/// Caps for the closure-style enumeration. Minimal-separator counts are
/// worst-case exponential, so runs are bounded by solution count and,
/// optionally, wall-clock time (0 disables the clock).
struct EnumBudget {
    std::size_t max_separators = 1'000'000;
    std::chrono::milliseconds time_limit{0};
};

/// All minimal separators of a connected graph (n >= 2).
///
/// Closure procedure: seed with N(C) for every component C of g - N[v],
/// every vertex v; then, for each discovered separator S and each x in S,
/// add N(C) for every component C of g - (S u N(x)); repeat to a fixed
/// point with a visited-set guard. A complete graph yields the empty
/// family. Throws budget_error when the budget is exhausted.
SeparatorFamily enumerate_minimal_separators(const Graph& g,
                                             const EnumBudget& budget = {});

/// Inclusion-wise minimal separators, obtained by filtering the minimal
/// family through is_inclusion_wise_minimal_separator. Complete because
/// every inclusion-wise minimal separator is a minimal separator.
SeparatorFamily enumerate_iwm_filter(const Graph& g,
                                     const EnumBudget& budget = {});

/// Filter an already-enumerated minimal family without re-running the
/// closure (the verification pipeline enumerates once, filters once).
SeparatorFamily filter_inclusion_wise(const Graph& g,
                                      const SeparatorFamily& minimal);

/// Exhaustive oracle: subsets in increasing size, emitting those that
/// separate and contain no previously emitted set. Refuses graphs with
/// more than max_vertices vertices.
SeparatorFamily enumerate_iwm_bruteforce(const Graph& g,
                                         int max_vertices = 20);

/// Exhaustive oracle for the minimal family: union over all vertex pairs
/// of the minimal a-b separators found by subset testing.
SeparatorFamily enumerate_minimal_separators_bruteforce(const Graph& g,
                                                        int max_vertices = 20);

/// Antichain extraction: members of fam with no proper subset in fam.
SeparatorFamily extract_inclusion_minimal(const SeparatorFamily& fam);

/// One separator per line as space-separated sorted ids, lines in the
/// family's canonical order.
void write_family_lines(const SeparatorFamily& fam, std::ostream& out);
std::string family_to_json(const SeparatorFamily& fam);

} // namespace sepkit

#endif
