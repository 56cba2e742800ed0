// Planar m-ary tree monomials: construction, partial composition, path
// sequences, the path-lex total order, and exhaustive enumeration by arity.
//
// A tree is stored as its preorder code over {0,1}: 1 marks an internal
// vertex (followed by the codes of its m children), 0 marks a leaf. For a
// fixed branching arity m the code is a complete invariant, so equality,
// hashing and ordering all reduce to operations on small byte vectors.
// Vertices are addressed by their index in the code (preorder position);
// leaves are also addressed 1..arity in left-to-right order.
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace treegb {

class PlanarTree {
public:
    // An empty (default) tree is only a placeholder for containers; every
    // factory below produces a valid tree.
    PlanarTree() = default;

    // Validating constructor from a preorder code (1 = internal, 0 = leaf).
    PlanarTree(int m, std::vector<std::uint8_t> code);

    static PlanarTree single_leaf(int m);

    int branching() const { return m_; }
    int weight() const { return weight_; }   // number of internal vertices
    int arity() const { return arity_; }     // number of leaves
    bool is_leaf() const { return weight_ == 0; }
    const std::vector<std::uint8_t>& code() const { return code_; }

    // Half-open code range [begin, end) of the subtree rooted at code
    // index `pos`.
    std::size_t subtree_end(std::size_t pos) const;

    // Code index of the i-th leaf (1-based).
    std::size_t leaf_position(int i) const;

    // 1-based leaf index of the leaf at code index `pos` (must be a leaf).
    int leaf_index_at(std::size_t pos) const;

    friend bool operator==(const PlanarTree&, const PlanarTree&) = default;

private:
    int m_ = 0;
    int arity_ = 0;
    int weight_ = 0;
    std::vector<std::uint8_t> code_;
};

// Leaf depths in left-to-right order; the single-leaf tree has entries (0).
// A valid path sequence determines its tree uniquely.
struct PathSequence {
    std::vector<int> entries;
    friend bool operator==(const PathSequence&, const PathSequence&) = default;
    friend auto operator<=>(const PathSequence&, const PathSequence&) = default;
};

enum class Ordering { less = -1, equal = 0, greater = 1 };

// The m-ary tree of weight 1 (one internal vertex, m leaves). Rejects m < 2.
PlanarTree generator(int m);

// Partial composition: graft the root of q onto leaf i (1-based) of p.
// Requires matching branching arities and 1 <= i <= arity(p).
PlanarTree compose_tree(const PlanarTree& p, int i, const PlanarTree& q);

PathSequence path_sequence(const PlanarTree& p);

// Rebuild a tree from its path sequence (inverse of path_sequence).
// Rejects sequences that do not describe an m-ary tree.
PlanarTree from_path_sequence(int m, const PathSequence& path);

// Lexicographic comparison of path sequences. Requires equal arity and m.
Ordering compare_pathlex(const PlanarTree& p, const PlanarTree& q);

// Total order usable on trees of any arity: by (arity, path sequence).
// This is the path-lex order when arities agree.
int compare_tree_key(const PlanarTree& p, const PlanarTree& q);

struct TreeKeyLess {
    bool operator()(const PlanarTree& a, const PlanarTree& b) const {
        return compare_tree_key(a, b) < 0;
    }
};
struct TreeKeyGreater {
    bool operator()(const PlanarTree& a, const PlanarTree& b) const {
        return compare_tree_key(a, b) > 0;
    }
};

// All trees of arity n (n == 1 mod m-1 required), ascending path-lex.
std::vector<PlanarTree> enumerate_trees(int m, int n);

// Number of m-ary trees of arity n (Fuss–Catalan in the weight grading),
// via the recurrence c(w) = sum of products over child weights.
std::uint64_t count_trees(int m, int n);

// Nonassociative text form: "*" for a leaf, "(c1 c2 ... cm)" without spaces
// for an internal vertex, e.g. "((***)**)".
std::string tree_to_text(const PlanarTree& p);

struct TreeHash {
    std::size_t operator()(const PlanarTree& t) const;
};

}  // namespace treegb
