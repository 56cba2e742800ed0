#include "treegb/occurrence.hpp"

#include <algorithm>
#include <stdexcept>

namespace treegb {

namespace {

// Attempts the root-anchored match of pattern against host starting at host
// code index `at`. On success fills `covered` (host indices of pattern
// internal vertices) and `hangings` (host code ranges captured by pattern
// leaves, in pattern-leaf order) and returns true.
bool match_at(const PlanarTree& pattern, const PlanarTree& host,
              std::size_t at, std::vector<std::size_t>& covered,
              std::vector<std::pair<std::size_t, std::size_t>>& hangings) {
    const auto& pc = pattern.code();
    const auto& hc = host.code();
    int m = host.branching();
    std::size_t pp = 0, hp = at;
    // Explicit walk: counts of pattern children still owed at each level.
    // Only a completed unit (a wildcard leaf, cascading up through finished
    // subtrees) consumes a parent slot.
    std::vector<int> open;
    do {
        if (pc[pp] == 0) {
            // Wildcard leaf: capture the whole host subtree here.
            std::size_t end = host.subtree_end(hp);
            hangings.emplace_back(hp, end);
            hp = end;
            ++pp;
            while (!open.empty() && --open.back() == 0)
                open.pop_back();
        } else {
            if (hc[hp] == 0)
                return false;  // pattern wants an internal vertex
            covered.push_back(hp);
            ++hp;
            ++pp;
            open.push_back(m);
        }
    } while (!open.empty());
    return true;
}

int leaves_before(const PlanarTree& t, std::size_t pos) {
    int n = 0;
    for (std::size_t cur = 0; cur < pos; ++cur)
        if (t.code()[cur] == 0)
            ++n;
    return n;
}

// Superpose two subtree codes: wherever one has a leaf, the other's subtree
// wins. Both patterns here have wildcard leaves, so the union always exists
// and is unique.
// Advances `pos` past the subtree starting there and copies it to `out`.
void copy_subtree(const std::vector<std::uint8_t>& code, std::size_t& pos,
                  int m, std::vector<std::uint8_t>& out) {
    long open = 1;
    std::size_t start = pos;
    while (open > 0) {
        open += code[pos] == 1 ? m - 1 : -1;
        ++pos;
    }
    out.insert(out.end(), code.begin() + static_cast<long>(start),
               code.begin() + static_cast<long>(pos));
}

void merge_codes(const std::vector<std::uint8_t>& a, std::size_t& i,
                 const std::vector<std::uint8_t>& b, std::size_t& j, int m,
                 std::vector<std::uint8_t>& out) {
    if (a[i] == 0) {
        ++i;
        copy_subtree(b, j, m, out);
        return;
    }
    if (b[j] == 0) {
        ++j;
        copy_subtree(a, i, m, out);
        return;
    }
    out.push_back(1);
    ++i;
    ++j;
    for (int c = 0; c < m; ++c)
        merge_codes(a, i, b, j, m, out);
}

PlanarTree merge_trees(const PlanarTree& a, const PlanarTree& b) {
    std::vector<std::uint8_t> out;
    std::size_t i = 0, j = 0;
    merge_codes(a.code(), i, b.code(), j, a.branching(), out);
    return PlanarTree(a.branching(), std::move(out));
}

// host with the subtree rooted at `pos` replaced by `sub`.
PlanarTree splice_subtree(const PlanarTree& host, std::size_t pos,
                          const PlanarTree& sub) {
    std::size_t end = host.subtree_end(pos);
    std::vector<std::uint8_t> code;
    code.reserve(host.code().size() - (end - pos) + sub.code().size());
    code.insert(code.end(), host.code().begin(),
                host.code().begin() + static_cast<long>(pos));
    code.insert(code.end(), sub.code().begin(), sub.code().end());
    code.insert(code.end(), host.code().begin() + static_cast<long>(end),
                host.code().end());
    return PlanarTree(host.branching(), std::move(code));
}

struct ScmKeyLess {
    bool operator()(const Scm& a, const Scm& b) const {
        if (int c = compare_tree_key(a.tree, b.tree); c != 0)
            return c < 0;
        if (a.occ_left.anchor != b.occ_left.anchor)
            return a.occ_left.anchor < b.occ_left.anchor;
        return a.occ_right.anchor < b.occ_right.anchor;
    }
};

bool scm_equal(const Scm& a, const Scm& b) {
    return a.tree == b.tree && a.occ_left.anchor == b.occ_left.anchor &&
           a.occ_right.anchor == b.occ_right.anchor;
}

}  // namespace

bool occurs_at(const PlanarTree& pattern, const PlanarTree& host,
               std::size_t anchor) {
    if (pattern.branching() != host.branching())
        throw std::invalid_argument("pattern/host branching mismatch");
    if (anchor >= host.code().size())
        return false;
    std::vector<std::size_t> covered;
    std::vector<std::pair<std::size_t, std::size_t>> hangings;
    return match_at(pattern, host, anchor, covered, hangings);
}

Occurrence make_occurrence(const PlanarTree& pattern, const PlanarTree& host,
                           std::size_t anchor) {
    if (pattern.branching() != host.branching())
        throw std::invalid_argument("pattern/host branching mismatch");
    std::vector<std::size_t> covered;
    std::vector<std::pair<std::size_t, std::size_t>> hangings;
    if (anchor >= host.code().size() ||
        !match_at(pattern, host, anchor, covered, hangings))
        throw std::invalid_argument("pattern does not occur at anchor");
    Occurrence occ;
    occ.host = host;
    occ.pattern = pattern;
    occ.anchor = anchor;
    occ.covered = std::move(covered);
    // Leaf bookkeeping: overall interval under the anchor subtree plus the
    // interval captured by each pattern leaf.
    int before = leaves_before(host, anchor);
    std::size_t end = host.subtree_end(anchor);
    int inside = leaves_before(host, end) - before;
    occ.leaf_span.first = before + 1;
    occ.leaf_span.last = before + inside;
    for (auto [b, e] : hangings) {
        int lo = leaves_before(host, b) + 1;
        int hi = leaves_before(host, e);
        occ.leaf_span.hangings.emplace_back(lo, hi);
    }
    return occ;
}

std::vector<PlanarTree> occurrence_hangings(const Occurrence& occ) {
    std::vector<std::size_t> covered;
    std::vector<std::pair<std::size_t, std::size_t>> ranges;
    if (!match_at(occ.pattern, occ.host, occ.anchor, covered, ranges))
        throw std::invalid_argument("occurrence is not valid for its host");
    std::vector<PlanarTree> out;
    out.reserve(ranges.size());
    const auto& hc = occ.host.code();
    for (auto [b, e] : ranges)
        out.emplace_back(occ.host.branching(),
                         std::vector<std::uint8_t>(
                             hc.begin() + static_cast<long>(b),
                             hc.begin() + static_cast<long>(e)));
    return out;
}

std::vector<Occurrence> find_occurrences(const PlanarTree& pattern,
                                         const PlanarTree& host) {
    if (pattern.branching() != host.branching())
        throw std::invalid_argument("pattern/host branching mismatch");
    std::vector<Occurrence> out;
    for (std::size_t pos = 0; pos < host.code().size(); ++pos) {
        std::vector<std::size_t> covered;
        std::vector<std::pair<std::size_t, std::size_t>> hangings;
        if (match_at(pattern, host, pos, covered, hangings))
            out.push_back(make_occurrence(pattern, host, pos));
    }
    return out;
}

std::vector<Scm> enumerate_scms(const PlanarTree& p, const PlanarTree& q,
                                bool exclude_total_self) {
    if (p.branching() != q.branching())
        throw std::invalid_argument("pattern branching mismatch");
    bool same = p == q;
    std::vector<Scm> out;

    // Overlay q's root onto each internal vertex v of p: the union is p
    // with its subtree at v superposed with q. The shared vertex v
    // witnesses minimality. v = 0 covers root-against-root overlaps
    // (total coincidence when p == q).
    for (std::size_t v = 0; v < p.code().size(); ++v) {
        if (p.code()[v] != 1)
            continue;
        if (same && exclude_total_self && v == 0)
            continue;
        std::size_t end = p.subtree_end(v);
        PlanarTree sub(p.branching(),
                       std::vector<std::uint8_t>(
                           p.code().begin() + static_cast<long>(v),
                           p.code().begin() + static_cast<long>(end)));
        PlanarTree merged = merge_trees(sub, q);
        PlanarTree tree = splice_subtree(p, v, merged);
        out.push_back(Scm{tree, make_occurrence(p, tree, 0),
                          make_occurrence(q, tree, v)});
    }

    // The mirrored overlays (p's root onto a non-root vertex of q) are new
    // records only for distinct patterns; for p == q they repeat the loop
    // above with the roles swapped.
    if (!same) {
        for (std::size_t u = 1; u < q.code().size(); ++u) {
            if (q.code()[u] != 1)
                continue;
            std::size_t end = q.subtree_end(u);
            PlanarTree sub(q.branching(),
                           std::vector<std::uint8_t>(
                               q.code().begin() + static_cast<long>(u),
                               q.code().begin() + static_cast<long>(end)));
            PlanarTree merged = merge_trees(sub, p);
            PlanarTree tree = splice_subtree(q, u, merged);
            out.push_back(Scm{tree, make_occurrence(p, tree, u),
                              make_occurrence(q, tree, 0)});
        }
    }

    std::sort(out.begin(), out.end(), ScmKeyLess{});
    out.erase(std::unique(out.begin(), out.end(), scm_equal), out.end());
    return out;
}

}  // namespace treegb
