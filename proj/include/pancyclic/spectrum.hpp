#pragma once

#include <array>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "pancyclic/config.hpp"
#include "pancyclic/dense_paths.hpp"
#include "pancyclic/error.hpp"
#include "pancyclic/graph.hpp"
#include "pancyclic/params.hpp"
#include "pancyclic/report.hpp"

namespace pancyclic {

// ---- combining paths into cycles -------------------------------------------

// One v_i -> v_{i+1} leg: witness paths keyed by length, all running through
// `internal` only.
struct BankSegment {
    Vertex from = 0;
    Vertex to = 0;
    std::vector<Vertex> internal;
    std::map<int, OrderedPath> paths;
};

// Legs v_1 -> v_2 -> ... -> v_t -> v_1; segment i runs from v_i to v_{i+1}.
struct PathBank {
    std::vector<BankSegment> segments;
};

// Throws InvalidBank naming the first broken rule: fewer than two legs,
// repeated anchors, legs that do not chain, overlapping internal sets, or a
// witness that leaves its leg or fails to validate.
void validate_bank(const Graph& g, const PathBank& bank);

// One cycle per length in A_1 + ... + A_t (sums below 3 are dropped: they can
// only arise from two single edges between the same anchors).
std::map<int, CycleWitness> combine_banks(const Graph& g, const PathBank& bank);

// ---- cycle plus matching -----------------------------------------------------

struct MatchingCycleDecomposition {
    // Current cycle C; vertices[0] is position 1 and never moves.
    CycleWitness cycle;
    // S in extraction order, with matched[i] = m(s[i]) on C.
    std::vector<Vertex> s;
    std::vector<Vertex> matched;
    int target = 0;

    // 0-based position of v on the cycle, or -1.
    int position(Vertex v) const;
};

// Cycle/S partition, M a matching covering S, each s[i] adjacent to matched[i].
bool validate_decomposition(const Graph& g, const MatchingCycleDecomposition& d);

class DecompositionError : public Error {
public:
    DecompositionError(const Error& cause, MatchingCycleDecomposition partial)
        : Error(cause.kind(), std::string(cause.what()).substr(to_string(cause.kind()).size() + 2)),
          partial_(std::move(partial))
    {
    }
    const MatchingCycleDecomposition& partial() const noexcept { return partial_; }

private:
    MatchingCycleDecomposition partial_;
};

// Ejects floor(eps n / 20) vertices one at a time with jump_with_zigzag (c = 1,
// pinned = matched vertices and their cycle neighbours), matching each ejected
// vertex to its cycle predecessor. `hamilton` fixes the rotation; without it
// the oracle supplies one. DecompositionError(PreconditionFailed) carries the
// partial result when the shortening inequality fails midway.
MatchingCycleDecomposition partition_into_matching_cycle(const Graph& g, int k, double eps,
                                                         const std::optional<CycleWitness>& hamilton = std::nullopt,
                                                         const OracleConfig& cfg = {});

// ---- induced increasing paths and chord density ----------------------------

// Induced path of length target_len, increasing along `segment`, ending at
// segment.back(). nullopt after an exhaustive search; BudgetExceeded when the
// node budget runs out first.
std::optional<OrderedPath> find_induced_increasing_path(const Graph& g, const OrderedPath& segment, int target_len,
                                                        std::uint64_t node_budget = 5'000'000);

// Repeatedly bypasses a chord among the last window + 2 vertices of the
// current path until its length is at most `window`. Consecutive lengths
// differ by at most `window`. NoChordFound when those vertices are chordless,
// i.e. they form an induced increasing path of length window + 1.
DensePairCertificate chord_dense_endpoints(const Graph& g, const OrderedPath& segment, int window);

// ---- tri-coloured auxiliary graph --------------------------------------------

// Increasing path Q ending at the matched vertex, cut into equal thirds:
// q[0, t) = Q^3 (far end, holds z), q[t, 2t) = Q^2, q[2t, 3t) = Q^1.
struct SegmentTriple {
    OrderedPath q;
    int position = 0; // cycle position of the matched vertex, used for ordering

    int third_size() const noexcept { return q.vertex_count() / 3; }
    std::span<const Vertex> third(int which) const;
    Vertex matched() const { return q.back(); }
    Vertex far_end() const { return q.front(); }
};

// Drops vertices from the far end until the count is a multiple of three.
// InvalidArgument for fewer than three vertices.
SegmentTriple make_triple(const OrderedPath& q, int position);

enum class PairColor { Red, Blue, Green };

struct TriColoredGraph {
    int r = 0;
    std::vector<PairColor> colors; // r * r, symmetric, diagonal unused
    // For i < j: an edge from Q^1_i to Q^1_j (e1) and from Q^3_i to Q^3_j (e3),
    // first in scan order, stored as (vertex of Q_i, vertex of Q_j).
    std::map<std::pair<int, int>, Edge> e1;
    std::map<std::pair<int, int>, Edge> e3;

    PairColor color(int i, int j) const { return colors[static_cast<std::size_t>(i * r + j)]; }
};

// Red iff E[Q^1_i, Q^1_j] and E[Q^3_i, Q^3_j] are both non-empty, blue iff
// E[Q^1_i, Q^1_j] is empty, green otherwise. InvalidArgument on overlapping triples.
TriColoredGraph build_tricolored(const Graph& g, const std::vector<SegmentTriple>& triples);

// Lexicographically first red clique of `size` indices. BudgetExceeded when
// the search runs past node_budget; CapExceeded above 64 indices.
std::optional<std::vector<int>> find_red_clique(const TriColoredGraph& h, int size,
                                                std::uint64_t node_budget = 5'000'000);

// Paths R'_i from z (far end of the first triple) to the matched vertex of
// the last, ordered by cycle position of the clique members. Consecutive R'
// lengths differ by at most |Q_i| + |Q_{i+1}| + |Q_last|, which becomes the
// certificate gap. MissingWitness if a needed red edge is absent.
DensePairCertificate zigzag_dense_Q(const Graph& g, const std::vector<SegmentTriple>& triples,
                                    const TriColoredGraph& h, const std::vector<int>& clique);

// ---- range drivers -----------------------------------------------------------

// Replacements for constants that only make sense as k grows. Each one that
// is used shows up as an "override" step in the report.
struct DeskOverrides {
    std::optional<int> upper_radius;   // c of the upper shortening; default floor(eps^2 k / 400)
    std::optional<int> upper_floor;    // shortening stops below this length; default floor(900 k / eps^2)
    std::optional<int> segment_length; // length of each P_i; default floor(1000 k / eps^2)
    std::optional<int> induced_length; // induced increasing path length; default floor(eps^3 k)
    std::optional<int> pool_pairs;     // dense pairs extracted from S; default floor(eps k^2 / 40)
    std::optional<int> red_clique;     // red clique size; default ceil(4 / eps^7)
};

struct RangeOptions {
    OracleConfig oracle;
    std::optional<CycleWitness> hamilton;
    DeskOverrides desk;
    // Fill unknown lengths with the exact oracle in full_certificate.
    bool oracle_fallback = true;
};

// r(C_ell, K_s) upper bound ((ell - 2)(s^{1/x} + 2) + 1)(s - 1), x = floor((ell - 1) / 2).
double cycle_complete_ramsey_bound(int ell, int s);

// Lengths 3 .. min(n, ceil((2 + eps) k)) by exact search; an absence while n
// reaches the Ramsey bound for (ell, k + 1) is flagged as a contradiction.
SpectrumReport lower_range_certificates(const Graph& g, int k, double eps, const RangeOptions& opt = {});

// [2k^2 + 2k, n] by repeated c = 1 shortening of a Hamilton path, then the
// matching-cycle / dense-pair / shortening composition for
// [1000k / eps^2, 2k^2 + 2k].
SpectrumReport upper_range_certificates(const Graph& g, int k, double eps, const RangeOptions& opt = {});

// [(2 + eps) k, 1000k / eps^2] through the induced-path dichotomy, the
// tri-coloured graph and the zigzag through a red clique.
SpectrumReport middle_range_certificates(const Graph& g, int k, double eps, const RangeOptions& opt = {});

// One c = 1 shortening of a Hamilton path closed by its end edge.
// PreconditionFailed unless n > 2k^2 + 2k.
CycleWitness cycle_n_minus_1(const Graph& g, int k, const std::optional<CycleWitness>& hamilton = std::nullopt,
                             const OracleConfig& cfg = {});

// All three ranges merged, then oracle fallback for whatever is still open.
SpectrumReport full_certificate(const Graph& g, const AnalysisParams& params, const RangeOptions& opt = {});

} // namespace pancyclic
