#include "cfml/tree_labels.hpp"

#include <algorithm>

namespace cfml {

namespace {

// Index of the last common separator, or -1 when the labels share none.
// Common separators form a prefix at identical positions: both labels follow
// the same component chain until the decomposition splits them.
template <typename E>
int last_common_index(std::span<const E> lu, std::span<const E> lv)
{
    const size_t lim = std::min(lu.size(), lv.size());
    int last = -1;
    for (size_t k = 0; k < lim; ++k) {
        if (lu[k].separator != lv[k].separator)
            break;
        last = static_cast<int>(k);
    }
    return last;
}

} // namespace

// Shared machinery of the two encoders: iterative centroid decomposition.
class TreeSeparatorEncoder {
public:
    explicit TreeSeparatorEncoder(const LabeledTree& t)
        : t_(t), removed_(t.size(), 0), size_(t.size(), 0),
          dist_(t.size(), 0), parent_(t.size(), -1), branch_port_(t.size(), 0),
          par_port_(t.size(), 0), seen_epoch_(t.size(), 0)
    {
    }

    template <typename AppendFn>
    void run(AppendFn&& append)
    {
        std::vector<std::uint32_t> stack_comp{0};
        if (t_.size() == 0)
            return;
        while (!stack_comp.empty()) {
            std::uint32_t rep = stack_comp.back();
            stack_comp.pop_back();
            std::uint32_t c = find_centroid(rep);
            // BFS from c within the component: distances, first hops
            bfs_from(c);
            for (std::uint32_t v : order_) {
                Port to_sep = v == c ? 0 : port_to_parent(v);
                append(v, t_.host(c), dist_[v], to_sep, branch_port_[v]);
            }
            removed_[c] = 1;
            for (auto arc : t_.arcs(c))
                if (!removed_[arc.to])
                    stack_comp.push_back(arc.to);
        }
    }

private:
    std::uint32_t component_sizes(std::uint32_t root)
    {
        // iterative subtree sizes within the active component
        ++epoch_;
        order_.clear();
        parent_[root] = -1;
        std::vector<std::uint32_t> stk{root};
        seen_epoch_[root] = epoch_;
        while (!stk.empty()) {
            std::uint32_t u = stk.back();
            stk.pop_back();
            order_.push_back(u);
            for (auto arc : t_.arcs(u))
                if (!removed_[arc.to] && seen_epoch_[arc.to] != epoch_) {
                    seen_epoch_[arc.to] = epoch_;
                    parent_[arc.to] = static_cast<int>(u);
                    stk.push_back(arc.to);
                }
        }
        for (auto it = order_.rbegin(); it != order_.rend(); ++it)
            size_[*it] = 1;
        for (auto it = order_.rbegin(); it != order_.rend(); ++it) {
            std::uint32_t u = *it;
            if (parent_[u] >= 0)
                size_[static_cast<std::uint32_t>(parent_[u])] += size_[u];
        }
        return size_[root];
    }

    std::uint32_t find_centroid(std::uint32_t rep)
    {
        const std::uint32_t total = component_sizes(rep);
        // descend toward the heavy side
        std::uint32_t c = rep;
        for (;;) {
            std::uint32_t heavy = kNoLocal;
            for (auto arc : t_.arcs(c)) {
                if (removed_[arc.to] || parent_[arc.to] != static_cast<int>(c))
                    continue;
                if (size_[arc.to] > total / 2) {
                    heavy = arc.to;
                    break;
                }
            }
            if (heavy == kNoLocal)
                break;
            c = heavy;
        }
        // Plateau: a tree has at most two adjacent centroids; prefer the
        // minimum host id.
        std::uint32_t best = c;
        for (auto arc : t_.arcs(c)) {
            if (removed_[arc.to])
                continue;
            std::uint32_t comp = parent_[arc.to] == static_cast<int>(c)
                                     ? size_[arc.to]
                                     : total - size_[c];
            if (2 * comp == total && t_.host(arc.to) < t_.host(best))
                best = arc.to;
        }
        return best;
    }

    void bfs_from(std::uint32_t c)
    {
        ++epoch_;
        order_.clear();
        order_.push_back(c);
        dist_[c] = 0;
        parent_[c] = -1;
        branch_port_[c] = 0;
        seen_epoch_[c] = epoch_;
        for (size_t head = 0; head < order_.size(); ++head) {
            std::uint32_t u = order_[head];
            for (auto arc : t_.arcs(u)) {
                std::uint32_t w = arc.to;
                if (removed_[w] || seen_epoch_[w] == epoch_)
                    continue;
                seen_epoch_[w] = epoch_;
                dist_[w] = dist_[u] + 1;
                parent_[w] = static_cast<int>(u);
                // port w -> u is the reverse arc port; find it on w's arc list
                for (auto back : t_.arcs(w))
                    if (back.to == u) {
                        par_port_[w] = back.port;
                        break;
                    }
                branch_port_[w] = u == c ? arc.port : branch_port_[u];
                order_.push_back(w);
            }
        }
    }

    Port port_to_parent(std::uint32_t v) const { return par_port_[v]; }

    static constexpr std::uint32_t kNoLocal = static_cast<std::uint32_t>(-1);

    const LabeledTree& t_;
    std::vector<char> removed_;
    std::vector<std::uint32_t> size_;
    std::vector<std::uint32_t> dist_;
    std::vector<int> parent_;
    std::vector<Port> branch_port_; // first hop port from the separator toward v
    std::vector<Port> par_port_;    // port from v toward its BFS parent
    std::vector<std::uint32_t> seen_epoch_;
    std::vector<std::uint32_t> order_;
    std::uint32_t epoch_ = 0;
};

std::vector<TreeDistLabel> tree_dist_encode(const LabeledTree& t)
{
    std::vector<TreeDistLabel> labels(t.size());
    TreeSeparatorEncoder enc(t);
    enc.run([&](std::uint32_t v, Vid sep, std::uint32_t d, Port, Port) {
        labels[v].entries.push_back({sep, d});
    });
    return labels;
}

std::vector<TreeRoutLabel> tree_rout_encode(const LabeledTree& t)
{
    std::vector<TreeRoutLabel> labels(t.size());
    TreeSeparatorEncoder enc(t);
    enc.run([&](std::uint32_t v, Vid sep, std::uint32_t, Port to_sep, Port from_sep) {
        labels[v].entries.push_back({sep, to_sep, from_sep});
    });
    return labels;
}

std::uint32_t tree_dist_decode(std::span<const TreeDistEntry> lu, std::span<const TreeDistEntry> lv)
{
    int k = last_common_index(lu, lv);
    if (k < 0)
        throw NoCommonSeparatorError("tree distance labels share no separator");
    return lu[k].dist + lv[k].dist;
}

std::uint32_t tree_dist_decode(const TreeDistLabel& lu, const TreeDistLabel& lv)
{
    return tree_dist_decode(std::span<const TreeDistEntry>(lu.entries),
                            std::span<const TreeDistEntry>(lv.entries));
}

Port tree_rout_decode(std::span<const TreeRoutEntry> lu, std::span<const TreeRoutEntry> lv)
{
    int k = last_common_index(lu, lv);
    if (k < 0)
        throw NoCommonSeparatorError("tree routing labels share no separator");
    if (lu[k].to_sep == 0) // u is the separator itself
        return lv[k].from_sep;
    return lu[k].to_sep;
}

Port tree_rout_decode(const TreeRoutLabel& lu, const TreeRoutLabel& lv)
{
    return tree_rout_decode(std::span<const TreeRoutEntry>(lu.entries),
                            std::span<const TreeRoutEntry>(lv.entries));
}

std::uint32_t ncad_decode(const TreeDistLabel& lu, const TreeDistLabel& lv)
{
    std::uint32_t d = tree_dist_decode(lu, lv);
    return (static_cast<std::uint32_t>(lu.depth) + static_cast<std::uint32_t>(lv.depth) - d) / 2;
}

} // namespace cfml
