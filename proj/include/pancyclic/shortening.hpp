#pragma once

#include <string>
#include <vector>

#include "pancyclic/error.hpp"
#include "pancyclic/graph.hpp"

namespace pancyclic {

// Increasing positions v_1 < ... < v_l on a host ordering such that every
// (host[v_i], host[v_{i+1} + 1]) is an edge.
struct SpecialSequence {
    std::vector<Vertex> host;
    std::vector<int> positions;

    std::vector<Vertex> vertices() const;
    // Host labels of the special edges, one per consecutive pair of positions.
    std::vector<Edge> edges() const;
    int count_outside(const std::vector<Vertex>& excluded) const;
};

bool validate_special_sequence(const Graph& g, const SpecialSequence& s);

// All maximal special sequences obtained from the Gallai-Milgram cover of the
// host with consecutive pairs removed, plus the leftover singletons. Ordered
// by first position.
std::vector<SpecialSequence> special_decomposition(const Graph& g, const std::vector<Vertex>& host);

// Member of special_decomposition with the most positions outside `excluded`;
// ties go to the earliest start. At least (|host| - |excluded|) / (2 alpha) of
// them when alpha(g[host]) <= alpha.
SpecialSequence find_special_sequence(const Graph& g, const std::vector<Vertex>& host,
                                      const std::vector<Vertex>& excluded, int k);

// Bypasses the first chord found in a window of 2k + 1 consecutive vertices,
// scanning from p.front(). PreconditionFailed unless p.length() > 2k;
// NoChordFound when every window is chordless (then alpha(g[V(p)]) > k).
OrderedPath easy_jump(const Graph& g, const OrderedPath& p, int k);

// c ((|P| - (4c - 1)|U|) / (2k) - 1) > k with |P| counted in vertices,
// evaluated as c (|P| - (4c - 1)|U| - 2k) > 2k^2.
bool zigzag_precondition(int path_vertices, int pinned, int c, int k);
std::string zigzag_inequality(int path_vertices, int pinned, int c, int k);

struct ZigzagResult {
    OrderedPath path;
    // "short_gap" (a special edge bridges fewer than 2c positions),
    // "inside_s" (the edge found in S lies in one S_v) or "zigzag".
    std::string branch;
    int removed = 0;
};

// Shorter x-y path keeping every pinned vertex, removing between 1 and 4c - 3
// vertices. PreconditionFailed when the inequality above is false;
// InternalContradiction when S spans no edge, which certifies alpha > k.
ZigzagResult jump_with_zigzag(const Graph& g, const OrderedPath& p, int c, const std::vector<Vertex>& pinned, int k);

class ShorteningError : public Error {
public:
    ShorteningError(const Error& cause, std::vector<OrderedPath> partial)
        : Error(cause.kind(), std::string(cause.what()).substr(to_string(cause.kind()).size() + 2)),
          partial_(std::move(partial))
    {
    }
    const std::vector<OrderedPath>& partial() const noexcept { return partial_; }

private:
    std::vector<OrderedPath> partial_;
};

// P_0 = p, then repeated jump_with_zigzag until the length drops below
// target_lo or the precondition fails. Throws ShorteningError with an empty
// list when the very first step is not allowed, and with the paths built so
// far when a later step raises.
std::vector<OrderedPath> shorten_to_target(const Graph& g, const OrderedPath& p, int target_lo, int c,
                                           const std::vector<Vertex>& pinned, int k);

} // namespace pancyclic
