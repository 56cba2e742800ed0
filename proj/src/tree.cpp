#include "treegb/tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace treegb {

namespace {

// Walks a preorder code and yields leaf depths one at a time, without
// materialising the whole path sequence. Used by the hot comparator.
class LeafDepthWalker {
public:
    explicit LeafDepthWalker(const PlanarTree& t)
        : m_(t.branching()), code_(&t.code()) {}

    // Returns the depth of the next leaf, or -1 when exhausted.
    int next() {
        while (pos_ < code_->size()) {
            std::uint8_t sym = (*code_)[pos_++];
            if (sym == 1) {
                pending_.push_back(m_);
                continue;
            }
            int depth = static_cast<int>(pending_.size());
            consume();
            return depth;
        }
        return -1;
    }

private:
    void consume() {
        while (!pending_.empty() && --pending_.back() == 0)
            pending_.pop_back();
    }

    int m_;
    const std::vector<std::uint8_t>* code_;
    std::size_t pos_ = 0;
    std::vector<int> pending_;
};

void check_same_family(const PlanarTree& p, const PlanarTree& q) {
    if (p.branching() != q.branching())
        throw std::invalid_argument("trees have different branching arities");
}

}  // namespace

PlanarTree::PlanarTree(int m, std::vector<std::uint8_t> code)
    : m_(m), code_(std::move(code)) {
    if (m < 2)
        throw std::invalid_argument("branching arity must be at least 2");
    // Validate the code by simulating the preorder walk: `open` counts
    // child slots still to be filled.
    long open = 1;
    for (std::uint8_t sym : code_) {
        if (open <= 0 || (sym != 0 && sym != 1))
            throw std::invalid_argument("malformed preorder tree code");
        if (sym == 1) {
            ++weight_;
            open += m - 1;
        } else {
            ++arity_;
            --open;
        }
    }
    if (open != 0)
        throw std::invalid_argument("truncated preorder tree code");
}

PlanarTree PlanarTree::single_leaf(int m) {
    return PlanarTree(m, {0});
}

std::size_t PlanarTree::subtree_end(std::size_t pos) const {
    long open = 1;
    std::size_t cur = pos;
    while (open > 0) {
        if (cur >= code_.size())
            throw std::out_of_range("subtree position outside tree");
        open += code_[cur] == 1 ? m_ - 1 : -1;
        ++cur;
    }
    return cur;
}

std::size_t PlanarTree::leaf_position(int i) const {
    if (i < 1 || i > arity_)
        throw std::out_of_range("leaf index outside 1..arity");
    int seen = 0;
    for (std::size_t pos = 0; pos < code_.size(); ++pos) {
        if (code_[pos] == 0 && ++seen == i)
            return pos;
    }
    throw std::logic_error("leaf count mismatch");  // unreachable on valid code
}

int PlanarTree::leaf_index_at(std::size_t pos) const {
    if (pos >= code_.size() || code_[pos] != 0)
        throw std::invalid_argument("position is not a leaf");
    int idx = 0;
    for (std::size_t cur = 0; cur <= pos; ++cur)
        if (code_[cur] == 0)
            ++idx;
    return idx;
}

PlanarTree generator(int m) {
    if (m < 2)
        throw std::invalid_argument("branching arity must be at least 2");
    std::vector<std::uint8_t> code(static_cast<std::size_t>(m) + 1, 0);
    code[0] = 1;
    return PlanarTree(m, std::move(code));
}

PlanarTree compose_tree(const PlanarTree& p, int i, const PlanarTree& q) {
    check_same_family(p, q);
    std::size_t at = p.leaf_position(i);
    std::vector<std::uint8_t> code;
    code.reserve(p.code().size() + q.code().size() - 1);
    code.insert(code.end(), p.code().begin(), p.code().begin() + at);
    code.insert(code.end(), q.code().begin(), q.code().end());
    code.insert(code.end(), p.code().begin() + at + 1, p.code().end());
    return PlanarTree(p.branching(), std::move(code));
}

PathSequence path_sequence(const PlanarTree& p) {
    PathSequence out;
    out.entries.reserve(static_cast<std::size_t>(p.arity()));
    LeafDepthWalker walk(p);
    for (int d = walk.next(); d >= 0; d = walk.next())
        out.entries.push_back(d);
    return out;
}

namespace {

// Recursive descent over a path sequence: a subtree rooted at depth d is a
// leaf exactly when the next entry equals d, otherwise an internal vertex
// whose m children are parsed at depth d + 1.
void path_subtree(const std::vector<int>& entries, int m, int depth,
                  std::size_t& pos, std::vector<std::uint8_t>& code) {
    if (pos >= entries.size())
        throw std::invalid_argument("path sequence ends prematurely");
    if (entries[pos] == depth) {
        code.push_back(0);
        ++pos;
        return;
    }
    if (entries[pos] < depth)
        throw std::invalid_argument("path sequence entry too small");
    code.push_back(1);
    for (int c = 0; c < m; ++c)
        path_subtree(entries, m, depth + 1, pos, code);
}

}  // namespace

PlanarTree from_path_sequence(int m, const PathSequence& path) {
    if (m < 2)
        throw std::invalid_argument("branching arity must be at least 2");
    if (path.entries.empty())
        throw std::invalid_argument("empty path sequence");
    std::vector<std::uint8_t> code;
    std::size_t pos = 0;
    path_subtree(path.entries, m, 0, pos, code);
    if (pos != path.entries.size())
        throw std::invalid_argument("path sequence has trailing entries");
    return PlanarTree(m, std::move(code));
}

Ordering compare_pathlex(const PlanarTree& p, const PlanarTree& q) {
    check_same_family(p, q);
    if (p.arity() != q.arity())
        throw std::invalid_argument("path-lex comparison requires equal arity");
    LeafDepthWalker wp(p), wq(q);
    for (;;) {
        int a = wp.next(), b = wq.next();
        if (a < 0 && b < 0)
            return Ordering::equal;
        if (a != b)
            return a < b ? Ordering::less : Ordering::greater;
    }
}

int compare_tree_key(const PlanarTree& p, const PlanarTree& q) {
    if (p.arity() != q.arity())
        return p.arity() < q.arity() ? -1 : 1;
    if (p.branching() != q.branching())
        return p.branching() < q.branching() ? -1 : 1;
    return static_cast<int>(compare_pathlex(p, q));
}

namespace {

void check_arity_valid(int m, int n) {
    if (m < 2)
        throw std::invalid_argument("branching arity must be at least 2");
    if (n < 1 || (n - 1) % (m - 1) != 0)
        throw std::invalid_argument(
            "arity must be 1 mod (m-1) for m-ary trees");
}

// All trees of internal-vertex count w, as raw codes.
std::vector<std::vector<std::uint8_t>> trees_by_weight(int m, int w) {
    std::vector<std::vector<std::vector<std::uint8_t>>> memo(
        static_cast<std::size_t>(w) + 1);
    memo[0] = {{0}};
    for (int k = 1; k <= w; ++k) {
        std::vector<std::vector<std::uint8_t>> out;
        // Distribute weight k - 1 over the m children of the root.
        std::vector<int> split(static_cast<std::size_t>(m), 0);
        std::vector<std::size_t> choice(static_cast<std::size_t>(m), 0);
        // Enumerate weak compositions of k - 1 into m parts.
        std::function<void(int, int)> rec = [&](int child, int left) {
            if (child == m - 1) {
                split[static_cast<std::size_t>(child)] = left;
                // For this split, take all combinations of child trees.
                std::function<void(int, std::vector<std::uint8_t>&)> emit =
                    [&](int c, std::vector<std::uint8_t>& acc) {
                        if (c == m) {
                            out.push_back(acc);
                            return;
                        }
                        for (const auto& sub :
                             memo[static_cast<std::size_t>(
                                 split[static_cast<std::size_t>(c)])]) {
                            std::size_t mark = acc.size();
                            acc.insert(acc.end(), sub.begin(), sub.end());
                            emit(c + 1, acc);
                            acc.resize(mark);
                        }
                    };
                std::vector<std::uint8_t> acc{1};
                emit(0, acc);
                return;
            }
            for (int take = 0; take <= left; ++take) {
                split[static_cast<std::size_t>(child)] = take;
                rec(child + 1, left - take);
            }
        };
        rec(0, k - 1);
        memo[static_cast<std::size_t>(k)] = std::move(out);
    }
    return memo[static_cast<std::size_t>(w)];
}

}  // namespace

std::vector<PlanarTree> enumerate_trees(int m, int n) {
    check_arity_valid(m, n);
    int w = (n - 1) / (m - 1);
    std::vector<PlanarTree> out;
    for (auto& code : trees_by_weight(m, w))
        out.emplace_back(m, std::move(code));
    std::sort(out.begin(), out.end(), TreeKeyLess{});
    return out;
}

std::uint64_t count_trees(int m, int n) {
    check_arity_valid(m, n);
    int w = (n - 1) / (m - 1);
    std::vector<std::uint64_t> cnt(static_cast<std::size_t>(w) + 1, 0);
    cnt[0] = 1;
    for (int k = 1; k <= w; ++k) {
        // Sum over weak compositions of k - 1 into m child weights of the
        // product of child counts, computed as repeated convolution.
        std::vector<std::uint64_t> conv(static_cast<std::size_t>(k), 0);
        conv[0] = 1;  // empty product
        for (int c = 0; c < m; ++c) {
            std::vector<std::uint64_t> next(static_cast<std::size_t>(k), 0);
            for (int a = 0; a < k; ++a) {
                if (conv[static_cast<std::size_t>(a)] == 0)
                    continue;
                for (int b = 0; a + b < k; ++b)
                    next[static_cast<std::size_t>(a + b)] +=
                        conv[static_cast<std::size_t>(a)] *
                        cnt[static_cast<std::size_t>(b)];
            }
            conv = std::move(next);
        }
        cnt[static_cast<std::size_t>(k)] = conv[static_cast<std::size_t>(k - 1)];
    }
    return cnt[static_cast<std::size_t>(w)];
}

std::string tree_to_text(const PlanarTree& p) {
    std::string out;
    out.reserve(p.code().size() + 2 * static_cast<std::size_t>(p.weight()));
    std::vector<int> pending;
    for (std::uint8_t sym : p.code()) {
        if (sym == 1) {
            out.push_back('(');
            pending.push_back(p.branching());
        } else {
            out.push_back('*');
            while (!pending.empty() && --pending.back() == 0) {
                pending.pop_back();
                out.push_back(')');
            }
        }
    }
    return out;
}

std::size_t TreeHash::operator()(const PlanarTree& t) const {
    // FNV-1a over the code bytes, seeded with the branching arity.
    std::size_t h = 1469598103934665603ull ^
                    static_cast<std::size_t>(t.branching());
    for (std::uint8_t sym : t.code()) {
        h ^= sym;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace treegb
