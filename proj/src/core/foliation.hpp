#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "core/invariants.hpp"

namespace ratknot {

enum class NodeKind { elliptic, hyperbolic };
enum class Sign { positive, negative };

struct NormalizeResult;

// Combinatorial characteristic foliation: signed elliptic and hyperbolic
// singularities with directed separatrix edges, plus a distinguished
// virtual node for the outward flow through the boundary.
//
// A graph is valid when
//   - every hyperbolic node has exactly two inbound and two outbound edges,
//   - positive elliptic nodes have no inbound edges and negative elliptic
//     nodes have no outbound edges,
//   - the boundary node has only inbound edges.
//
// Graphs are immutable; rewrites return new graphs.
class FoliationGraph {
public:
    struct Node {
        NodeKind kind;
        Sign sign;

        friend bool operator==(const Node&, const Node&) = default;
    };

    using Edge = std::pair<std::string, std::string>;  // flow direction

    static constexpr std::string_view boundary_id = "∂";

    FoliationGraph() = default;

    static FoliationGraph build(std::map<std::string, Node> nodes,
                                std::vector<Edge> edges);

    // One node per line "N <id> <e|h> <+|->", one edge per line
    // "E <from> <to>"; blank lines are skipped, the boundary id is
    // implicit and reserved.
    static FoliationGraph parse(std::string_view text);
    std::string serialize() const;

    const std::map<std::string, Node>& nodes() const { return nodes_; }
    const std::vector<Edge>& edges() const { return edges_; }

    SingularityCounts counts() const;

    // Removes a same-sign elliptic/hyperbolic pair joined by a direct edge
    // and splices the through-flow: the saddle's remaining inbound
    // separatrix is joined to its first remaining outbound one. Errors on
    // kind or sign mismatch, on a missing connecting edge, and on
    // configurations whose removal would leave an invalid graph.
    FoliationGraph cancel_pair(const std::string& elliptic_id,
                               const std::string& hyperbolic_id) const;

    // Inserts a canceling elliptic/hyperbolic pair of the given sign along
    // an existing edge; counts gain one node of each kind, every count
    // difference is preserved. Errors when the edge is missing.
    FoliationGraph add_canceling_pair(Sign sign, const std::string& from,
                                      const std::string& to) const;

    // Repeatedly cancels negative elliptic points against directly
    // attached negative saddles. When a negative elliptic point survives
    // with no negative saddle on its basin frontier, the frontier is
    // returned as an overtwisted certificate.
    NormalizeResult normalize() const;

    friend bool operator==(const FoliationGraph& a, const FoliationGraph& b);

private:
    void validate() const;
    std::string fresh_id(char stem) const;

    std::map<std::string, Node> nodes_;
    std::vector<Edge> edges_;
};

struct NormalizeResult {
    bool overtwisted = false;
    std::optional<FoliationGraph> normalized;  // set when !overtwisted
    std::vector<std::string> certificate;      // set when overtwisted
};

}  // namespace ratknot
