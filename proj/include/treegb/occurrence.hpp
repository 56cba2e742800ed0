// Pattern occurrences in tree monomials and small common multiples (SCMs).
//
// An occurrence embeds a pattern tree into a host tree root-anchored at some
// host vertex, preserving child order; pattern leaves act as wildcards that
// capture whole host subtrees (the "hangings"). SCMs are the minimal
// overlaps of two patterns: every internal vertex of the overlap tree is
// covered by at least one of the two embeddings, and the overlap is smaller
// than a disjoint juxtaposition. They play the role of critical pairs.
#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "treegb/tree.hpp"

namespace treegb {

// Host-leaf interval covered by an occurrence, plus the per-pattern-leaf
// gap structure: hangings[k] = inclusive 1-based host-leaf range captured
// by pattern leaf k+1.
struct LeafSpan {
    int first = 0;
    int last = 0;
    std::vector<std::pair<int, int>> hangings;
    friend bool operator==(const LeafSpan&, const LeafSpan&) = default;
};

struct Occurrence {
    PlanarTree host;
    PlanarTree pattern;
    std::size_t anchor = 0;            // preorder code index in host
    std::vector<std::size_t> covered;  // host code indices of matched internal vertices
    LeafSpan leaf_span;

    friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

// A minimal common overlap of two patterns, with the two embeddings.
struct Scm {
    PlanarTree tree;
    Occurrence occ_left;
    Occurrence occ_right;
};

// All embeddings of `pattern` into `host`, ascending by anchor (preorder).
// A single-leaf pattern matches at every vertex.
std::vector<Occurrence> find_occurrences(const PlanarTree& pattern,
                                         const PlanarTree& host);

// True iff `pattern` matches root-anchored at host code index `anchor`.
bool occurs_at(const PlanarTree& pattern, const PlanarTree& host,
               std::size_t anchor);

// Builds the validated Occurrence record for a match at `anchor`;
// throws std::invalid_argument if the pattern does not occur there.
Occurrence make_occurrence(const PlanarTree& pattern, const PlanarTree& host,
                           std::size_t anchor);

// The subtrees of `host` captured by the pattern leaves of `occ`,
// in pattern-leaf order (size = arity of the pattern).
std::vector<PlanarTree> occurrence_hangings(const Occurrence& occ);

// All SCMs of the two patterns, deduplicated, sorted ascending by
// (arity, path-lex of the overlap tree, anchors). When `exclude_total_self`
// is set and p == q, the full-coincidence overlap (both embeddings at the
// root of p itself) is omitted.
std::vector<Scm> enumerate_scms(const PlanarTree& p, const PlanarTree& q,
                                bool exclude_total_self);

}  // namespace treegb
