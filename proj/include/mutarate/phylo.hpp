#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mutarate/distance.hpp"

namespace mutarate {

struct ClampEvent {
    std::string node;  // leaf label, or "internal#<id>"
    double raw_length = 0.0;
};

// Rooted representation of a (possibly unrooted) tree. For NJ output the root
// is the node created by the last join, so it may have three children.
class PhyloTree {
public:
    struct Node {
        std::string label;                 // empty for internal nodes
        int parent = -1;
        std::vector<int> children;
        double branch_length = 0.0;        // to parent; unused at the root
        std::optional<double> raw_length;  // pre-clamp value when clamping occurred
    };

    int add_node(std::string label = {});
    void attach(int child, int parent, double length);

    const std::vector<Node>& nodes() const { return nodes_; }
    const Node& node(int id) const { return nodes_[static_cast<std::size_t>(id)]; }
    Node& mutable_node(int id) { return nodes_[static_cast<std::size_t>(id)]; }
    int root() const { return root_; }
    void set_root(int id) { root_ = id; }

    bool is_leaf(int id) const { return node(id).children.empty(); }
    std::vector<std::string> leaf_labels() const;  // depth-first order
    int find_leaf(std::string_view label) const;   // -1 when absent

    // Sum of branch lengths on the path between two leaves.
    double path_length(std::string_view a, std::string_view b) const;
    // Leaf-to-leaf path lengths, rows/columns in the given label order.
    DistanceMatrix path_length_matrix(const std::vector<std::string>& labels) const;

    std::vector<ClampEvent> clamp_events() const;

    // Empty when connected, acyclic, with unique leaf labels and
    // non-negative branch lengths.
    std::string check_invariants() const;

private:
    std::vector<Node> nodes_;
    int root_ = -1;
};

// Standard neighbor joining with the Q-criterion. Ties go to the lowest
// (row, column) pair of the active node list, negative limbs are clamped to
// zero, and the final two nodes are joined by their remaining distance.
PhyloTree neighbor_joining(const DistanceMatrix& d);

std::string to_newick(const PhyloTree& tree);
PhyloTree parse_newick(std::string_view text);

// Moves the root to the internal node the named leaf hangs from. Leaf set and
// leaf-to-leaf path lengths are unchanged; an old root left with a single
// child is spliced out.
PhyloTree reroot(const PhyloTree& tree, std::string_view leaf_label);

}  // namespace mutarate
