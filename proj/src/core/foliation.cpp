#include "core/foliation.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace ratknot {

namespace {

const std::string kBoundary{FoliationGraph::boundary_id};

bool is_boundary(const std::string& id) { return id == kBoundary; }

}  // namespace

FoliationGraph FoliationGraph::build(std::map<std::string, Node> nodes,
                                     std::vector<Edge> edges) {
    FoliationGraph g;
    g.nodes_ = std::move(nodes);
    g.edges_ = std::move(edges);
    g.validate();
    return g;
}

void FoliationGraph::validate() const {
    if (nodes_.contains(kBoundary))
        fail(errc::invalid_argument, "node id ∂ is reserved for the boundary");
    std::map<std::string, std::pair<int64_t, int64_t>> degree;  // in, out
    for (const Edge& e : edges_) {
        if (!nodes_.contains(e.first)) {
            if (is_boundary(e.first))
                fail(errc::invalid_argument, "boundary node cannot be an edge source");
            fail(errc::invalid_argument, "edge from unknown node " + e.first);
        }
        if (!nodes_.contains(e.second) && !is_boundary(e.second))
            fail(errc::invalid_argument, "edge to unknown node " + e.second);
        degree[e.second].first += 1;
        degree[e.first].second += 1;
    }
    for (const auto& [id, node] : nodes_) {
        auto [in, out] = degree.count(id) ? degree[id] : std::pair<int64_t, int64_t>{0, 0};
        if (node.kind == NodeKind::hyperbolic) {
            if (in != 2 || out != 2)
                fail(errc::invalid_argument,
                     "hyperbolic node " + id + " must have 2 inbound and 2 "
                     "outbound separatrices, has " + std::to_string(in) + "/" +
                         std::to_string(out));
        } else if (node.sign == Sign::positive) {
            if (in != 0)
                fail(errc::invalid_argument,
                     "positive elliptic node " + id + " is a source but has inbound flow");
        } else {
            if (out != 0)
                fail(errc::invalid_argument,
                     "negative elliptic node " + id + " is a sink but has outbound flow");
        }
    }
}

FoliationGraph FoliationGraph::parse(std::string_view text) {
    std::map<std::string, Node> nodes;
    std::vector<Edge> edges;
    std::istringstream stream{std::string(text)};
    std::string line;
    size_t lineno = 0;
    while (std::getline(stream, line)) {
        ++lineno;
        std::istringstream fields(line);
        std::string tag;
        if (!(fields >> tag)) continue;  // blank line
        auto bad = [&](const std::string& why) {
            fail(errc::parse, "line " + std::to_string(lineno) + ": " + why);
        };
        if (tag == "N") {
            std::string id, kind, sign, extra;
            if (!(fields >> id >> kind >> sign) || fields >> extra)
                bad("expected \"N <id> <e|h> <+|->\"");
            if (is_boundary(id)) bad("node id ∂ is reserved");
            if (nodes.contains(id)) bad("duplicate node id " + id);
            Node node{};
            if (kind == "e") node.kind = NodeKind::elliptic;
            else if (kind == "h") node.kind = NodeKind::hyperbolic;
            else bad("node kind must be e or h");
            if (sign == "+") node.sign = Sign::positive;
            else if (sign == "-") node.sign = Sign::negative;
            else bad("node sign must be + or -");
            nodes.emplace(id, node);
        } else if (tag == "E") {
            std::string from, to, extra;
            if (!(fields >> from >> to) || fields >> extra)
                bad("expected \"E <from> <to>\"");
            edges.emplace_back(std::move(from), std::move(to));
        } else {
            bad("unknown line tag " + tag);
        }
    }
    return build(std::move(nodes), std::move(edges));
}

std::string FoliationGraph::serialize() const {
    std::string out;
    for (const auto& [id, node] : nodes_) {
        out += "N ";
        out += id;
        out += node.kind == NodeKind::elliptic ? " e " : " h ";
        out += node.sign == Sign::positive ? "+" : "-";
        out += "\n";
    }
    for (const Edge& e : edges_) {
        out += "E " + e.first + " " + e.second + "\n";
    }
    return out;
}

SingularityCounts FoliationGraph::counts() const {
    SingularityCounts c;
    for (const auto& [id, node] : nodes_) {
        if (node.kind == NodeKind::elliptic)
            (node.sign == Sign::positive ? c.e_plus : c.e_minus) += 1;
        else
            (node.sign == Sign::positive ? c.h_plus : c.h_minus) += 1;
    }
    return c;
}

FoliationGraph FoliationGraph::cancel_pair(const std::string& elliptic_id,
                                           const std::string& hyperbolic_id) const {
    auto e_it = nodes_.find(elliptic_id);
    auto h_it = nodes_.find(hyperbolic_id);
    if (e_it == nodes_.end() || h_it == nodes_.end())
        fail(errc::invalid_argument, "cancellation references an unknown node");
    if (e_it->second.kind != NodeKind::elliptic ||
        h_it->second.kind != NodeKind::hyperbolic)
        fail(errc::invalid_argument,
             "cancellation needs one elliptic and one hyperbolic node");
    if (e_it->second.sign != h_it->second.sign)
        fail(errc::invalid_argument,
             "cancellation needs singularities of the same sign");
    // The leaf joining them runs source-to-saddle for a positive pair and
    // saddle-to-sink for a negative one; validity forces the direction.
    bool joined = false;
    for (const Edge& e : edges_) {
        if ((e.first == elliptic_id && e.second == hyperbolic_id) ||
            (e.first == hyperbolic_id && e.second == elliptic_id)) {
            joined = true;
            break;
        }
    }
    if (!joined)
        fail(errc::invalid_argument,
             "no leaf connects " + elliptic_id + " and " + hyperbolic_id);

    auto in_pair = [&](const std::string& id) {
        return id == elliptic_id || id == hyperbolic_id;
    };
    std::vector<std::string> sources;  // saddle inbound, not from the pair
    std::vector<std::string> targets;  // saddle outbound, not into the pair
    std::vector<std::string> clients;  // other neighbors of the elliptic node
    for (const Edge& e : edges_) {
        if (e.second == hyperbolic_id && !in_pair(e.first))
            sources.push_back(e.first);
        if (e.first == hyperbolic_id && !in_pair(e.second))
            targets.push_back(e.second);
        if (e.first == elliptic_id && !in_pair(e.second))
            clients.push_back(e.second);
        if (e.second == elliptic_id && !in_pair(e.first))
            clients.push_back(e.first);
    }
    // The through-flow keeps one trajectory: interior targets first so a
    // creation move cancels back to the original edge.
    std::stable_partition(targets.begin(), targets.end(),
                          [](const std::string& id) { return !is_boundary(id); });

    std::map<std::string, Node> nodes = nodes_;
    nodes.erase(elliptic_id);
    nodes.erase(hyperbolic_id);
    std::vector<Edge> edges;
    for (const Edge& e : edges_)
        if (!in_pair(e.first) && !in_pair(e.second)) edges.push_back(e);
    const bool spliced = !sources.empty() && !targets.empty();
    if (spliced) edges.emplace_back(sources.front(), targets.front());

    // Every other flow through the cancelled region reconnects so that the
    // surviving saddles keep their four separatrices: flow that entered the
    // region drains toward the spliced target or the boundary, flow that
    // left it is fed from the spliced source.
    const std::string drain = targets.empty() ? kBoundary : targets.front();
    auto is_saddle = [&](const std::string& id) {
        auto it = nodes.find(id);
        return it != nodes.end() && it->second.kind == NodeKind::hyperbolic;
    };
    auto feed = [&](const std::string& id) {
        if (sources.empty() || is_saddle(sources.front()))
            fail(errc::domain,
                 "cancellation strands the stable separatrix of " + id);
        edges.emplace_back(sources.front(), id);
    };
    if (e_it->second.sign == Sign::positive) {
        for (const std::string& z : clients)
            if (is_saddle(z)) feed(z);
        for (size_t i = spliced ? 1 : 0; i < targets.size(); ++i)
            if (is_saddle(targets[i])) feed(targets[i]);
    } else {
        for (const std::string& x : clients)
            if (is_saddle(x)) edges.emplace_back(x, drain);
        for (size_t i = spliced ? 1 : 0; i < sources.size(); ++i)
            if (is_saddle(sources[i])) edges.emplace_back(sources[i], drain);
    }

    FoliationGraph g;
    g.nodes_ = std::move(nodes);
    g.edges_ = std::move(edges);
    try {
        g.validate();
    } catch (const Error& err) {
        fail(errc::domain,
             std::string("cancellation would leave an invalid foliation: ") +
                 err.what());
    }
    return g;
}

std::string FoliationGraph::fresh_id(char stem) const {
    for (int64_t n = 1;; ++n) {
        std::string id = std::string(1, stem) + std::to_string(n);
        if (!nodes_.contains(id)) return id;
    }
}

FoliationGraph FoliationGraph::add_canceling_pair(Sign sign,
                                                  const std::string& from,
                                                  const std::string& to) const {
    auto pos = std::find(edges_.begin(), edges_.end(), Edge{from, to});
    if (pos == edges_.end())
        fail(errc::invalid_argument, "no edge " + from + " -> " + to + " to attach to");

    std::map<std::string, Node> nodes = nodes_;
    std::vector<Edge> edges = edges_;
    edges.erase(edges.begin() + (pos - edges_.begin()));
    std::string e_id = fresh_id('e');
    std::string h_id = fresh_id('h');
    nodes.emplace(e_id, Node{NodeKind::elliptic, sign});
    nodes.emplace(h_id, Node{NodeKind::hyperbolic, sign});
    if (sign == Sign::positive) {
        // New source feeds one stable separatrix, the old flow the other;
        // one unstable separatrix continues the old flow, the other drains
        // through the boundary.
        edges.emplace_back(e_id, h_id);
        edges.emplace_back(from, h_id);
        edges.emplace_back(h_id, to);
        edges.emplace_back(h_id, kBoundary);
    } else {
        edges.emplace_back(h_id, e_id);
        edges.emplace_back(from, h_id);
        edges.emplace_back(from, h_id);
        edges.emplace_back(h_id, to);
    }

    FoliationGraph g;
    g.nodes_ = std::move(nodes);
    g.edges_ = std::move(edges);
    try {
        g.validate();
    } catch (const Error& err) {
        fail(errc::domain,
             std::string("pair insertion would leave an invalid foliation: ") +
                 err.what());
    }
    return g;
}

NormalizeResult FoliationGraph::normalize() const {
    FoliationGraph g = *this;
    // Backward closure of p under the flow; its hyperbolic members are the
    // combinatorial shadow of the basin frontier.
    auto frontier = [](const FoliationGraph& graph, const std::string& p) {
        std::set<std::string> seen{p};
        std::deque<std::string> queue{p};
        while (!queue.empty()) {
            std::string cur = queue.front();
            queue.pop_front();
            for (const Edge& e : graph.edges_)
                if (e.second == cur && seen.insert(e.first).second)
                    queue.push_back(e.first);
        }
        std::vector<std::string> result;
        for (const std::string& id : seen) {
            auto it = graph.nodes_.find(id);
            if (it != graph.nodes_.end() && it->second.kind == NodeKind::hyperbolic)
                result.push_back(id);
        }
        return result;
    };

    while (true) {
        std::vector<std::string> sinks;
        for (const auto& [id, node] : g.nodes_)
            if (node.kind == NodeKind::elliptic && node.sign == Sign::negative)
                sinks.push_back(id);
        if (sinks.empty()) {
            NormalizeResult result;
            result.normalized = std::move(g);
            return result;
        }

        bool progressed = false;
        for (const std::string& p : sinks) {
            for (const Edge& e : g.edges_) {
                if (e.second != p) continue;
                auto it = g.nodes_.find(e.first);
                if (it == g.nodes_.end() ||
                    it->second.kind != NodeKind::hyperbolic ||
                    it->second.sign != Sign::negative)
                    continue;
                try {
                    g = g.cancel_pair(p, e.first);
                    progressed = true;
                    break;
                } catch (const Error&) {
                    // Non-generic neighborhood; try the next candidate.
                }
            }
            if (progressed) break;
        }
        if (progressed) continue;

        // No cancellation applies anywhere. A sink whose basin frontier
        // carries no negative saddle certifies an overtwisted disk.
        NormalizeResult result;
        result.overtwisted = true;
        for (const std::string& p : sinks) {
            std::vector<std::string> front = frontier(g, p);
            bool has_negative = std::any_of(
                front.begin(), front.end(), [&](const std::string& id) {
                    return g.nodes_.at(id).sign == Sign::negative;
                });
            if (!has_negative) {
                result.certificate = std::move(front);
                return result;
            }
        }
        // Only reachable through saddle-saddle chains, which a generic
        // foliation does not have; report the first basin as found.
        result.certificate = frontier(g, sinks.front());
        return result;
    }
}

bool operator==(const FoliationGraph& a, const FoliationGraph& b) {
    if (a.nodes_ != b.nodes_) return false;
    std::vector<FoliationGraph::Edge> ea = a.edges_, eb = b.edges_;
    std::sort(ea.begin(), ea.end());
    std::sort(eb.begin(), eb.end());
    return ea == eb;
}

}  // namespace ratknot
