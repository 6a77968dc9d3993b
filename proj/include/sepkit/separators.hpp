#ifndef SEPKIT_SEPARATORS_HPP
#define SEPKIT_SEPARATORS_HPP

#include "sepkit/graph.hpp"

namespace sepkit {

// All predicates require a connected input graph and reject anything
// else: on a disconnected graph the empty set would already separate,
// and every family built downstream degenerates.

/// True iff g - s has at least two connected components.
bool is_separator(const Graph& g, const VertexSet& s);

/// True iff a and b end up in different components of g - s.
/// Requires a != b and a, b not in s.
bool is_ab_separator(const Graph& g, const VertexSet& s, Vertex a, Vertex b);

/// True iff s is an a-b separator and no co-singleton subset is one.
/// The a-b property is upward monotone for fixed endpoints, so dropping
/// one vertex at a time decides proper-subset minimality.
bool is_minimal_ab_separator(const Graph& g, const VertexSet& s, Vertex a,
                             Vertex b);

/// True iff s is a separator and s \ {u} is not, for every u in s.
/// Equivalent to "no proper subset of s is a separator" even though the
/// plain separator property is not monotone.
bool is_inclusion_wise_minimal_separator(const Graph& g, const VertexSet& s);

// Mask-based variants used by the enumeration inner loops. Same
// semantics, no per-call validation.
bool is_separator(const Graph& g, const Bits& s, Bfs& bfs);
bool is_inclusion_wise_minimal_separator(const Graph& g, const Bits& s,
                                         Bfs& bfs);

} // namespace sepkit

#endif
