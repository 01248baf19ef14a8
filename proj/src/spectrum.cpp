#include "pancyclic/spectrum.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <cmath>
#include <cstdint>
#include <sstream>

#include "pancyclic/oracles.hpp"
#include "pancyclic/shortening.hpp"

namespace pancyclic {

namespace {

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

std::string num(double x)
{
    std::ostringstream out;
    out << x;
    return out.str();
}

// floor / ceil that shrug off representation noise such as 0.5 * 40 / 20 = 0.9999...
int floor_int(double x)
{
    double f = std::floor(x + 1e-9);
    return f >= INT_MAX ? INT_MAX : static_cast<int>(f);
}

int ceil_int(double x)
{
    double c = std::ceil(x - 1e-9);
    return c >= INT_MAX ? INT_MAX : static_cast<int>(c);
}

int resolve(const std::optional<int>& over, int fallback, const std::string& name, const std::string& formula,
            SpectrumReport& rep)
{
    if (!over)
        return fallback;
    rep.add_step("override", name + " = " + std::to_string(*over) + " instead of " + formula + " = "
                                 + std::to_string(fallback),
                 true, "desk-scale constant");
    return *over;
}

CycleWitness require_hamilton(const Graph& g, const std::optional<CycleWitness>& supplied, const OracleConfig& cfg)
{
    if (supplied) {
        if (supplied->length() != g.order() || !validate_cycle(g, *supplied))
            throw Error(ErrorKind::InvalidArgument, "supplied Hamilton cycle does not validate");
        return *supplied;
    }
    auto c = hamilton_cycle(g, cfg);
    if (!c)
        throw Error(ErrorKind::PreconditionFailed, "graph has no Hamilton cycle");
    return *c;
}

// Errors that mean "this route did not work out" rather than misuse.
bool route_failure(const Error& e)
{
    switch (e.kind()) {
    case ErrorKind::InvalidArgument:
    case ErrorKind::InvalidBank:
    case ErrorKind::InvalidGraph:
        return false;
    default:
        return true;
    }
}

void mark_unknown(SpectrumReport& rep, int lo, int hi, const std::string& source, const std::string& note)
{
    for (int ell = std::max(lo, 3); ell <= std::min(hi, rep.order()); ++ell)
        if (rep.status(ell) != LengthStatus::Witnessed)
            rep.record_unknown(ell, source, note);
}

void record_all(SpectrumReport& rep, const std::map<int, CycleWitness>& cycles, const std::string& source)
{
    for (const auto& [len, c] : cycles)
        rep.record_witness(c, source, Provenance::Constructive);
}

// Vertices at cycle positions from, from + step, ... through `to` (mod N).
OrderedPath cycle_walk(const std::vector<Vertex>& cyc, int from, int to, int step)
{
    const int n = static_cast<int>(cyc.size());
    OrderedPath p;
    for (int i = from;; i = (i + step + n) % n) {
        p.vertices.push_back(cyc[idx(i)]);
        if (i == to)
            break;
    }
    return p;
}

std::vector<Vertex> internal_of(const OrderedPath& p)
{
    if (p.vertex_count() <= 2)
        return {};
    return {p.vertices.begin() + 1, p.vertices.end() - 1};
}

// p followed by repeated easy_jump until the length is at most 2k.
std::vector<OrderedPath> jump_chain(const Graph& g, OrderedPath p, int k, SpectrumReport& rep, const std::string& op)
{
    std::vector<OrderedPath> out{p};
    while (p.length() > 2 * k) {
        try {
            p = easy_jump(g, p, k);
        } catch (const Error& e) {
            if (!route_failure(e))
                throw;
            rep.add_step(op + "/easy_jump", "chord within every 2k + 1 consecutive vertices", false, e.what());
            break;
        }
        out.push_back(p);
    }
    return out;
}

BankSegment make_segment(Vertex from, Vertex to, std::vector<Vertex> internal, const std::vector<OrderedPath>& paths)
{
    BankSegment s{from, to, std::move(internal), {}};
    for (const auto& p : paths)
        s.paths.emplace(p.length(), p.front() == from ? p : p.reversed());
    return s;
}

// [s_from, x, ..., y, s_to] where `inner` runs from x to y inside S.
OrderedPath wrap(Vertex s_from, const OrderedPath& inner, Vertex s_to)
{
    OrderedPath p;
    p.vertices.push_back(s_from);
    p.vertices.insert(p.vertices.end(), inner.vertices.begin(), inner.vertices.end());
    p.vertices.push_back(s_to);
    return p;
}

OrderedPath lift(const OrderedPath& local, const std::vector<Vertex>& labels)
{
    OrderedPath p;
    for (Vertex v : local.vertices)
        p.vertices.push_back(labels[idx(v)]);
    return p;
}

} // namespace

// ---- combining ---------------------------------------------------------------

void validate_bank(const Graph& g, const PathBank& bank)
{
    const auto& segs = bank.segments;
    const int t = static_cast<int>(segs.size());
    if (t < 2)
        throw Error(ErrorKind::InvalidBank, "need at least two legs, got " + std::to_string(t));
    // -2 anchor, -1 free, i owned by leg i
    std::vector<int> owner(idx(g.order()), -1);
    for (int i = 0; i < t; ++i) {
        const auto& s = segs[idx(i)];
        if (!g.contains(s.from) || !g.contains(s.to))
            throw Error(ErrorKind::InvalidBank, "leg " + std::to_string(i) + " has an anchor outside the graph");
        if (s.to != segs[idx((i + 1) % t)].from)
            throw Error(ErrorKind::InvalidBank, "leg " + std::to_string(i) + " ends at " + std::to_string(s.to)
                                                    + " but the next leg starts elsewhere");
        if (owner[idx(s.from)] == -2)
            throw Error(ErrorKind::InvalidBank, "anchor " + std::to_string(s.from) + " repeated");
        owner[idx(s.from)] = -2;
    }
    for (int i = 0; i < t; ++i)
        for (Vertex v : segs[idx(i)].internal) {
            if (!g.contains(v))
                throw Error(ErrorKind::InvalidBank, "internal vertex " + std::to_string(v) + " outside the graph");
            int& o = owner[idx(v)];
            if (o == -2)
                throw Error(ErrorKind::InvalidBank, "anchor " + std::to_string(v) + " listed as internal");
            if (o >= 0 && o != i)
                throw Error(ErrorKind::InvalidBank, "legs " + std::to_string(o) + " and " + std::to_string(i)
                                                        + " overlap at " + std::to_string(v));
            o = i;
        }
    for (int i = 0; i < t; ++i) {
        const auto& s = segs[idx(i)];
        if (s.paths.empty())
            throw Error(ErrorKind::InvalidBank, "leg " + std::to_string(i) + " has no paths");
        for (const auto& [len, p] : s.paths) {
            bool ok = len >= 1 && p.length() == len && validate_path(g, p) && p.front() == s.from && p.back() == s.to;
            for (int j = 1; ok && j + 1 < p.vertex_count(); ++j)
                ok = owner[idx(p.vertices[idx(j)])] == i;
            if (!ok)
                throw Error(ErrorKind::InvalidBank,
                            "leg " + std::to_string(i) + ": witness of length " + std::to_string(len) + " is invalid");
        }
    }
}

std::map<int, CycleWitness> combine_banks(const Graph& g, const PathBank& bank)
{
    validate_bank(g, bank);
    const int n = g.order();
    const auto& segs = bank.segments;
    const std::size_t t = segs.size();
    // choice[i][s]: length taken on leg i to reach total s after legs 0..i
    std::vector<std::vector<int>> choice(t, std::vector<int>(idx(n + 1), -1));
    for (const auto& [len, p] : segs[0].paths)
        if (len <= n)
            choice[0][idx(len)] = len;
    for (std::size_t i = 1; i < t; ++i)
        for (int s = 0; s <= n; ++s) {
            if (choice[i - 1][idx(s)] < 0)
                continue;
            for (const auto& [len, p] : segs[i].paths)
                if (s + len <= n && choice[i][idx(s + len)] < 0)
                    choice[i][idx(s + len)] = len;
        }

    std::map<int, CycleWitness> out;
    for (int total = 3; total <= n; ++total) {
        if (choice[t - 1][idx(total)] < 0)
            continue;
        std::vector<int> lens(t);
        for (std::size_t i = t, s = idx(total); i-- > 0;) {
            lens[i] = choice[i][s];
            s -= idx(lens[i]);
        }
        CycleWitness c;
        for (std::size_t i = 0; i < t; ++i) {
            const auto& p = segs[i].paths.at(lens[i]).vertices;
            c.vertices.insert(c.vertices.end(), p.begin(), p.end() - 1);
        }
        if (c.length() != total || !validate_cycle(g, c))
            throw Error(ErrorKind::InternalContradiction, "combined cycle of length " + std::to_string(total)
                                                              + " does not validate");
        out.emplace(total, std::move(c));
    }
    return out;
}

// ---- cycle plus matching -----------------------------------------------------

int MatchingCycleDecomposition::position(Vertex v) const
{
    auto it = std::find(cycle.vertices.begin(), cycle.vertices.end(), v);
    return it == cycle.vertices.end() ? -1 : static_cast<int>(it - cycle.vertices.begin());
}

bool validate_decomposition(const Graph& g, const MatchingCycleDecomposition& d)
{
    const int n = g.order();
    if (d.cycle.length() < 3 || !validate_cycle(g, d.cycle) || d.s.size() != d.matched.size())
        return false;
    std::vector<int> seen(idx(n), 0);
    for (Vertex v : d.cycle.vertices)
        ++seen[idx(v)];
    for (Vertex v : d.s) {
        if (!g.contains(v))
            return false;
        ++seen[idx(v)];
    }
    if (std::ranges::any_of(seen, [](int c) { return c != 1; }))
        return false;
    std::vector<char> used(idx(n), 0);
    for (std::size_t i = 0; i < d.s.size(); ++i) {
        Vertex m = d.matched[i];
        if (!g.contains(m) || used[idx(m)] || d.position(m) < 0 || !g.has_edge(d.s[i], m))
            return false;
        used[idx(m)] = 1;
    }
    return true;
}

MatchingCycleDecomposition partition_into_matching_cycle(const Graph& g, int k, double eps,
                                                         const std::optional<CycleWitness>& hamilton,
                                                         const OracleConfig& cfg)
{
    if (k < 1)
        throw Error(ErrorKind::InvalidK, "k must be positive, got " + std::to_string(k));
    if (!std::isfinite(eps) || eps <= 0)
        throw Error(ErrorKind::InvalidArgument, "eps must be positive");
    MatchingCycleDecomposition d;
    d.cycle = require_hamilton(g, hamilton, cfg);
    d.target = floor_int(eps * g.order() / 20);

    while (static_cast<int>(d.s.size()) < d.target) {
        const auto& cyc = d.cycle.vertices;
        const int len = d.cycle.length();
        std::vector<Vertex> pinned;
        for (Vertex m : d.matched) {
            int p = d.position(m);
            pinned.push_back(m);
            pinned.push_back(cyc[idx((p + len - 1) % len)]);
            pinned.push_back(cyc[idx((p + 1) % len)]);
        }
        std::ranges::sort(pinned);
        pinned.erase(std::unique(pinned.begin(), pinned.end()), pinned.end());
        const int u = static_cast<int>(pinned.size());
        if (!zigzag_precondition(len, u, 1, k))
            throw DecompositionError(Error(ErrorKind::PreconditionFailed,
                                           "after " + std::to_string(d.s.size()) + " of " + std::to_string(d.target)
                                               + " ejections: " + zigzag_inequality(len, u, 1, k)),
                                     d);
        try {
            auto r = jump_with_zigzag(g, open_cycle(d.cycle), 1, pinned, k);
            std::vector<char> kept(idx(g.order()), 0);
            for (Vertex v : r.path.vertices)
                kept[idx(v)] = 1;
            auto gone = std::ranges::find_if(cyc, [&](Vertex v) { return !kept[idx(v)]; });
            int pv = static_cast<int>(gone - cyc.begin());
            d.s.push_back(*gone);
            d.matched.push_back(cyc[idx(pv - 1)]);
            d.cycle.vertices = std::move(r.path.vertices);
        } catch (const DecompositionError&) {
            throw;
        } catch (const Error& e) {
            throw DecompositionError(e, d);
        }
    }
    return d;
}

// ---- induced increasing paths and chord density ----------------------------

std::optional<OrderedPath> find_induced_increasing_path(const Graph& g, const OrderedPath& segment, int target_len,
                                                        std::uint64_t node_budget)
{
    if (target_len < 0 || segment.vertices.empty())
        throw Error(ErrorKind::InvalidArgument, "need a non-empty segment and target_len >= 0");
    const auto& s = segment.vertices;
    const int last = segment.vertex_count() - 1;
    if (target_len > last)
        return std::nullopt;

    std::vector<int> chosen{last}; // indices into s, decreasing
    std::uint64_t nodes = 0;
    auto extend = [&](auto&& self) -> bool {
        const int depth = static_cast<int>(chosen.size()) - 1;
        if (depth == target_len)
            return true;
        if (++nodes > node_budget)
            throw Error(ErrorKind::BudgetExceeded, "induced path search passed " + std::to_string(node_budget) + " nodes");
        const int tip = chosen.back();
        const int need = target_len - depth - 1; // indices still required below j
        for (int j = tip - 1; j >= need; --j) {
            if (!g.has_edge(s[idx(j)], s[idx(tip)]))
                continue;
            bool clean = true;
            for (std::size_t c = 0; clean && c + 1 < chosen.size(); ++c)
                clean = !g.has_edge(s[idx(j)], s[idx(chosen[c])]);
            if (!clean)
                continue;
            chosen.push_back(j);
            if (self(self))
                return true;
            chosen.pop_back();
        }
        return false;
    };
    if (!extend(extend))
        return std::nullopt;
    OrderedPath p;
    for (auto it = chosen.rbegin(); it != chosen.rend(); ++it)
        p.vertices.push_back(s[idx(*it)]);
    return p;
}

DensePairCertificate chord_dense_endpoints(const Graph& g, const OrderedPath& segment, int window)
{
    if (window < 1)
        throw Error(ErrorKind::InvalidArgument, "window must be at least 1");
    if (segment.vertices.empty() || !validate_path(g, segment))
        throw Error(ErrorKind::InvalidArgument, "segment is not a path of the graph");
    DensePairCertificate cert;
    cert.method = "chord_density";
    cert.u = segment.front();
    cert.v = segment.back();
    cert.gap = window;
    OrderedPath cur = segment;
    cert.paths.emplace(cur.length(), cur);
    while (cur.length() > window) {
        const int m = cur.vertex_count();
        const int lo = std::max(0, m - (window + 2));
        int a = -1, b = -1;
        for (int i = lo; i < m && a < 0; ++i)
            for (int j = i + 2; j < m; ++j)
                if (g.has_edge(cur.vertices[idx(i)], cur.vertices[idx(j)])) {
                    a = i;
                    b = j;
                    break;
                }
        if (a < 0)
            throw Error(ErrorKind::NoChordFound, "last " + std::to_string(m - lo) + " vertices of the length-"
                                                     + std::to_string(cur.length()) + " path are chordless");
        OrderedPath next;
        next.vertices.assign(cur.vertices.begin(), cur.vertices.begin() + a + 1);
        next.vertices.insert(next.vertices.end(), cur.vertices.begin() + b, cur.vertices.end());
        cur = std::move(next);
        cert.paths.emplace(cur.length(), cur);
    }
    cert.lo = cert.paths.begin()->first;
    cert.hi = cert.paths.rbegin()->first;
    return cert;
}

// ---- tri-coloured auxiliary graph --------------------------------------------

std::span<const Vertex> SegmentTriple::third(int which) const
{
    if (which < 1 || which > 3)
        throw Error(ErrorKind::InvalidArgument, "thirds are numbered 1..3");
    const int t = third_size();
    return std::span<const Vertex>(q.vertices).subspan(idx((3 - which) * t), idx(t));
}

SegmentTriple make_triple(const OrderedPath& q, int position)
{
    if (q.vertex_count() < 3)
        throw Error(ErrorKind::InvalidArgument, "a triple needs at least three vertices");
    SegmentTriple t;
    t.q.vertices.assign(q.vertices.begin() + q.vertex_count() % 3, q.vertices.end());
    t.position = position;
    return t;
}

namespace {

std::optional<Edge> first_edge(const Graph& g, std::span<const Vertex> a, std::span<const Vertex> b)
{
    for (Vertex x : a)
        for (Vertex y : b)
            if (g.has_edge(x, y))
                return Edge{x, y};
    return std::nullopt;
}

} // namespace

TriColoredGraph build_tricolored(const Graph& g, const std::vector<SegmentTriple>& triples)
{
    std::vector<char> seen(idx(g.order()), 0);
    for (const auto& t : triples)
        for (Vertex v : t.q.vertices) {
            if (!g.contains(v) || seen[idx(v)])
                throw Error(ErrorKind::InvalidArgument, "triples overlap or leave the graph at " + std::to_string(v));
            seen[idx(v)] = 1;
        }
    TriColoredGraph h;
    h.r = static_cast<int>(triples.size());
    h.colors.assign(idx(h.r * h.r), PairColor::Blue);
    for (int i = 0; i < h.r; ++i)
        for (int j = i + 1; j < h.r; ++j) {
            auto e1 = first_edge(g, triples[idx(i)].third(1), triples[idx(j)].third(1));
            auto e3 = first_edge(g, triples[idx(i)].third(3), triples[idx(j)].third(3));
            PairColor c = !e1 ? PairColor::Blue : (e3 ? PairColor::Red : PairColor::Green);
            if (e1)
                h.e1.emplace(std::pair{i, j}, *e1);
            if (e3)
                h.e3.emplace(std::pair{i, j}, *e3);
            h.colors[idx(i * h.r + j)] = h.colors[idx(j * h.r + i)] = c;
        }
    return h;
}

std::optional<std::vector<int>> find_red_clique(const TriColoredGraph& h, int size, std::uint64_t node_budget)
{
    if (size < 1)
        throw Error(ErrorKind::InvalidArgument, "clique size must be positive");
    if (h.r > 64)
        throw Error(ErrorKind::CapExceeded, "red clique search handles at most 64 triples, got " + std::to_string(h.r));
    if (size > h.r)
        return std::nullopt;
    std::vector<std::uint64_t> red(idx(h.r), 0);
    for (int i = 0; i < h.r; ++i)
        for (int j = 0; j < h.r; ++j)
            if (i != j && h.color(i, j) == PairColor::Red)
                red[idx(i)] |= std::uint64_t{1} << j;

    std::vector<int> clique;
    std::uint64_t nodes = 0;
    auto grow = [&](auto&& self, std::uint64_t cand) -> bool {
        if (static_cast<int>(clique.size()) == size)
            return true;
        if (++nodes > node_budget)
            throw Error(ErrorKind::BudgetExceeded, "red clique search passed " + std::to_string(node_budget) + " nodes");
        while (cand) {
            if (static_cast<int>(clique.size()) + std::popcount(cand) < size)
                return false;
            int v = std::countr_zero(cand);
            cand &= cand - 1;
            clique.push_back(v);
            if (self(self, cand & red[idx(v)]))
                return true;
            clique.pop_back();
        }
        return false;
    };
    std::uint64_t all = h.r == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << h.r) - 1;
    if (!grow(grow, all))
        return std::nullopt;
    return clique;
}

DensePairCertificate zigzag_dense_Q(const Graph& g, const std::vector<SegmentTriple>& triples,
                                    const TriColoredGraph& h, const std::vector<int>& clique)
{
    if (clique.empty())
        throw Error(ErrorKind::InvalidArgument, "empty clique");
    for (int i : clique)
        if (i < 0 || i >= static_cast<int>(triples.size()) || i >= h.r)
            throw Error(ErrorKind::InvalidArgument, "clique index " + std::to_string(i) + " out of range");
    std::vector<int> order = clique;
    std::ranges::sort(order, [&](int a, int b) { return triples[idx(a)].position < triples[idx(b)].position; });
    const std::size_t m = order.size();
    auto q = [&](std::size_t i) -> const OrderedPath& { return triples[idx(order[i])].q; };

    DensePairCertificate cert;
    cert.method = "zigzag_dense_Q";
    cert.u = q(0).front();
    cert.v = q(m - 1).back();
    if (m == 1) {
        cert.gap = std::max(1, q(0).vertex_count());
        cert.paths.emplace(q(0).length(), q(0));
        cert.lo = cert.hi = q(0).length();
        return cert;
    }

    // Edge between thirds `third` of clique members i and j, as (vertex of i, vertex of j).
    auto red_edge = [&](std::size_t i, std::size_t j, int third) {
        int a = order[i], b = order[j];
        auto key = std::pair{std::min(a, b), std::max(a, b)};
        const auto& store = third == 1 ? h.e1 : h.e3;
        auto it = store.find(key);
        if (h.color(a, b) != PairColor::Red || it == store.end())
            throw Error(ErrorKind::MissingWitness, "no red edge between Q^" + std::to_string(third) + " of triples "
                                                       + std::to_string(a) + " and " + std::to_string(b));
        return a < b ? it->second : Edge{it->second.second, it->second.first};
    };
    auto index_in = [](const OrderedPath& p, Vertex v) {
        return static_cast<int>(std::ranges::find(p.vertices, v) - p.vertices.begin());
    };
    // q[from..to] in walking order, without q[from]
    auto walk = [](std::vector<Vertex>& out, const OrderedPath& p, int from, int to) {
        for (int i = from; i != to;) {
            i += to > from ? 1 : -1;
            out.push_back(p.vertices[idx(i)]);
        }
    };

    std::vector<Vertex> r{cert.u};
    int at = 0; // index of z_i in Q_i
    int a = 3;  // third holding z_i
    std::vector<OrderedPath> r_prime;
    for (std::size_t i = 0; i + 1 < m; ++i) {
        const int b = a == 3 ? 1 : 3;
        auto [into_i, into_last] = red_edge(i, m - 1, b);
        OrderedPath full{r};
        walk(full.vertices, q(i), at, index_in(q(i), into_i));
        full.vertices.push_back(into_last);
        walk(full.vertices, q(m - 1), index_in(q(m - 1), into_last), q(m - 1).vertex_count() - 1);
        r_prime.push_back(std::move(full));

        auto [from_i, into_next] = red_edge(i, i + 1, b);
        walk(r, q(i), at, index_in(q(i), from_i));
        r.push_back(into_next);
        at = index_in(q(i + 1), into_next);
        a = b;
    }

    cert.gap = 1;
    for (std::size_t i = 0; i < r_prime.size(); ++i) {
        if (!validate_path(g, r_prime[i]) || r_prime[i].front() != cert.u || r_prime[i].back() != cert.v)
            throw Error(ErrorKind::InternalContradiction, "R'_" + std::to_string(i + 1) + " is not a z-m(x) path");
        if (i + 1 < r_prime.size()) {
            int bound = q(i).vertex_count() + q(i + 1).vertex_count() + q(m - 1).vertex_count();
            if (std::abs(r_prime[i + 1].length() - r_prime[i].length()) > bound)
                throw Error(ErrorKind::InternalContradiction,
                            "R'_" + std::to_string(i + 1) + " and R'_" + std::to_string(i + 2) + " differ by more than "
                                + std::to_string(bound));
            cert.gap = std::max(cert.gap, bound);
        }
        cert.paths.emplace(r_prime[i].length(), r_prime[i]);
    }
    cert.lo = cert.paths.begin()->first;
    cert.hi = cert.paths.rbegin()->first;
    return cert;
}

// ---- range drivers -----------------------------------------------------------

double cycle_complete_ramsey_bound(int ell, int s)
{
    if (ell < 3 || s < 1)
        throw Error(ErrorKind::InvalidArgument, "need ell >= 3 and s >= 1");
    const int x = (ell - 1) / 2;
    return ((ell - 2) * (std::pow(static_cast<double>(s), 1.0 / x) + 2) + 1) * (s - 1);
}

SpectrumReport lower_range_certificates(const Graph& g, int k, double eps, const RangeOptions& opt)
{
    const int n = g.order();
    SpectrumReport rep(n);
    const int hi = std::min(n, ceil_int((2 + eps) * k));
    rep.add_step("lower_range", "3 <= ell <= min(n, ceil((2 + eps)k)) = " + std::to_string(hi), hi >= 3);
    const std::string src = "lower_range/cycle_of_length";
    for (int ell = 3; ell <= hi; ++ell) {
        try {
            if (auto c = cycle_of_length(g, ell, opt.oracle)) {
                rep.record_witness(*c, src, Provenance::Oracle);
                continue;
            }
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::BudgetExceeded && e.kind() != ErrorKind::CapExceeded)
                throw;
            rep.record_unknown(ell, src, e.what());
            continue;
        }
        const double bound = cycle_complete_ramsey_bound(ell, k + 1);
        const bool flag = n >= bound;
        rep.record_absent(ell, src, flag);
        if (flag)
            rep.add_step("lower_range/ramsey", "n = " + std::to_string(n) + " >= r(C_" + std::to_string(ell) + ", K_"
                                                   + std::to_string(k + 1) + ") bound " + num(bound),
                         true, "C_" + std::to_string(ell) + " absent, so alpha > " + std::to_string(k));
    }
    return rep;
}

CycleWitness cycle_n_minus_1(const Graph& g, int k, const std::optional<CycleWitness>& hamilton, const OracleConfig& cfg)
{
    if (k < 1)
        throw Error(ErrorKind::InvalidK, "k must be positive, got " + std::to_string(k));
    const int n = g.order();
    const int bound = 2 * k * k + 2 * k;
    if (n <= bound)
        throw Error(ErrorKind::PreconditionFailed,
                    "n = " + std::to_string(n) + " must exceed 2k^2 + 2k = " + std::to_string(bound));
    auto ham = require_hamilton(g, hamilton, cfg);
    auto r = jump_with_zigzag(g, open_cycle(ham), 1, {}, k);
    CycleWitness c{std::move(r.path.vertices)};
    if (c.length() != n - 1 || !validate_cycle(g, c))
        throw Error(ErrorKind::InternalContradiction, "shortened Hamilton path does not close to a C_{n-1}");
    return c;
}

namespace {

// Decomposition, tolerating a shortfall: the partial result is still a valid
// cycle plus matching.
MatchingCycleDecomposition decompose(const Graph& g, int k, double eps, const CycleWitness& ham,
                                     const OracleConfig& cfg, SpectrumReport& rep, const std::string& op)
{
    try {
        auto d = partition_into_matching_cycle(g, k, eps, ham, cfg);
        rep.add_step(op + "/matching_cycle", "|S| = floor(eps n / 20) = " + std::to_string(d.target), true);
        return d;
    } catch (const DecompositionError& e) {
        const auto& d = e.partial();
        rep.add_step(op + "/matching_cycle", "|S| = floor(eps n / 20) = " + std::to_string(d.target), false,
                     std::string(e.what()) + "; continuing with |S| = " + std::to_string(d.s.size()));
        return d;
    }
}

void upper_composition(const Graph& g, int k, double eps, const RangeOptions& opt, const CycleWitness& ham,
                       SpectrumReport& rep, int lo, int hi)
{
    const std::string op = "upper_range/composition";
    const int n = g.order();
    const int bound = 2 * k * k + 2 * k;
    auto d = decompose(g, k, eps, ham, opt.oracle, rep, op);
    const int big_n = d.cycle.length();

    const int parts = std::max(1, ceil_int(4 / eps));
    std::vector<int> count(idx(parts), 0);
    auto part_of = [&](int pos) { return static_cast<int>(static_cast<long long>(pos) * parts / big_n); };
    for (Vertex m : d.matched)
        ++count[idx(part_of(d.position(m)))];
    const int best = static_cast<int>(std::ranges::max_element(count) - count.begin());
    const int need = floor_int(eps * eps * n / 80);
    rep.add_step(op + "/pigeonhole",
                 "matched endpoints in one of " + std::to_string(parts) + " intervals: "
                     + std::to_string(count[idx(best)]) + " >= floor(eps^2 n / 80) = " + std::to_string(need),
                 count[idx(best)] >= need);
    std::vector<Vertex> s_prime, m_prime;
    for (std::size_t i = 0; i < d.s.size(); ++i)
        if (part_of(d.position(d.matched[i])) == best) {
            s_prime.push_back(d.s[i]);
            m_prime.push_back(d.matched[i]);
        }
    if (s_prime.size() < 2) {
        rep.add_step(op + "/dense_pair", "|S'| >= 2", false, "|S'| = " + std::to_string(s_prime.size()));
        mark_unknown(rep, lo, hi, op, "fewer than two vertices of S share an interval");
        return;
    }

    AnalysisParams dense;
    dense.k = k;
    dense.eps = eps;
    dense.gamma = 0.01;
    auto cert = find_dense_pair(g.induced(s_prime), dense);
    const double want_lo = eps * eps * k / 100, want_hi = eps * eps * k / 50;
    rep.add_step(op + "/dense_pair",
                 "[" + num(want_lo) + ", " + num(want_hi) + "] within achieved [" + std::to_string(cert.lo) + ", "
                     + std::to_string(cert.hi) + "]",
                 cert.lo <= want_lo && want_hi <= cert.hi);
    if (cert.u == cert.v) {
        mark_unknown(rep, lo, hi, op, "dense pair degenerated to a single vertex");
        return;
    }
    const Vertex x = m_prime[idx(cert.u)], y = m_prime[idx(cert.v)];
    const int px = d.position(x), py = d.position(y);
    auto forward = cycle_walk(d.cycle.vertices, px, py, 1);
    auto backward = cycle_walk(d.cycle.vertices, px, py, -1);
    OrderedPath p = forward.vertex_count() >= backward.vertex_count() ? forward : backward;
    rep.add_step(op + "/long_arc", "|P| = " + std::to_string(p.vertex_count()) + " > 2k^2 + 2k = " + std::to_string(bound),
                 p.vertex_count() > bound);

    const int c = resolve(opt.desk.upper_radius, floor_int(eps * eps * k / 400), "c", "floor(eps^2 k / 400)", rep);
    const int stop = resolve(opt.desk.upper_floor, floor_int(900 * k / (eps * eps)), "shortening floor",
                             "floor(900k / eps^2)", rep);
    std::vector<OrderedPath> arcs{p};
    if (c < 1) {
        rep.add_step(op + "/shorten", "c = " + std::to_string(c) + " >= 1", false, "using the long arc alone");
    } else {
        try {
            arcs = shorten_to_target(g, p, stop, c, {}, k);
            rep.add_step(op + "/shorten", zigzag_inequality(p.vertex_count(), 0, c, k), true,
                         std::to_string(arcs.size()) + " paths");
        } catch (const ShorteningError& e) {
            if (!route_failure(e))
                throw;
            if (!e.partial().empty())
                arcs = e.partial();
            rep.add_step(op + "/shorten", zigzag_inequality(p.vertex_count(), 0, c, k), false, e.what());
        }
    }

    std::vector<OrderedPath> through_s;
    for (const auto& [len, path] : cert.paths)
        through_s.push_back(wrap(y, lift(path, s_prime).reversed(), x));
    PathBank bank{{make_segment(x, y, internal_of(p), arcs), make_segment(y, x, s_prime, through_s)}};
    auto cycles = combine_banks(g, bank);
    record_all(rep, cycles, op);
    rep.add_step(op + "/combine", "sumset of " + std::to_string(arcs.size()) + " x " + std::to_string(through_s.size())
                                      + " lengths",
                 !cycles.empty(), std::to_string(cycles.size()) + " cycles");
    mark_unknown(rep, lo, hi, op, "length not reached by the composition");
}

} // namespace

SpectrumReport upper_range_certificates(const Graph& g, int k, double eps, const RangeOptions& opt)
{
    if (k < 1)
        throw Error(ErrorKind::InvalidK, "k must be positive, got " + std::to_string(k));
    const int n = g.order();
    SpectrumReport rep(n);
    const int bound = 2 * k * k + 2 * k;
    int comp_lo = ceil_int(1000 * k / (eps * eps));
    if (opt.desk.upper_floor)
        comp_lo = *opt.desk.upper_floor;
    const int comp_hi = bound - 1;

    CycleWitness ham;
    try {
        ham = require_hamilton(g, opt.hamilton, opt.oracle);
    } catch (const Error& e) {
        if (!route_failure(e))
            throw;
        rep.add_step("upper_range/hamilton", "G has a Hamilton cycle", false, e.what());
        mark_unknown(rep, std::min(comp_lo, bound), n, "upper_range", e.what());
        return rep;
    }
    rep.record_witness(ham, opt.hamilton ? "upper_range/hamilton_input" : "upper_range/hamilton_cycle",
                       opt.hamilton ? Provenance::Constructive : Provenance::Oracle);

    // [2k^2 + 2k, n]: one vertex at a time, closing with the end edge each time.
    const std::string op = "upper_range/zigzag_c1";
    OrderedPath p = open_cycle(ham);
    rep.add_step(op, zigzag_inequality(n, 0, 1, k), zigzag_precondition(n, 0, 1, k));
    while (zigzag_precondition(p.vertex_count(), 0, 1, k)) {
        try {
            p = jump_with_zigzag(g, p, 1, {}, k).path;
        } catch (const Error& e) {
            if (!route_failure(e))
                throw;
            rep.add_step(op, zigzag_inequality(p.vertex_count(), 0, 1, k), false, e.what());
            break;
        }
        rep.record_witness(CycleWitness{p.vertices}, op, Provenance::Constructive);
    }
    mark_unknown(rep, bound, n, op, "shortening stopped before reaching this length");

    const bool open = comp_lo <= comp_hi && comp_lo <= n;
    rep.add_step("upper_range/composition",
                 std::to_string(comp_lo) + " <= min(n, 2k^2 + 2k - 1) = " + std::to_string(std::min(n, comp_hi)), open,
                 open ? "" : "interval empty");
    if (open) {
        try {
            upper_composition(g, k, eps, opt, ham, rep, comp_lo, comp_hi);
        } catch (const Error& e) {
            if (!route_failure(e))
                throw;
            rep.add_step("upper_range/composition", "pipeline completes", false, e.what());
            mark_unknown(rep, comp_lo, comp_hi, "upper_range/composition", e.what());
        }
    }
    return rep;
}

namespace {

struct PoolPair {
    Vertex x = 0, y = 0; // in S, with pos(m(x)) < pos(m(y))
    Vertex mx = 0, my = 0;
    int px = 0, py = 0;
    std::vector<OrderedPath> paths; // x ... y inside S
};

void middle_pipeline(const Graph& g, int k, double eps, const RangeOptions& opt, const CycleWitness& ham,
                     SpectrumReport& rep, int lo, int hi, int seg_len)
{
    const std::string op = "middle_range";
    auto d = decompose(g, k, eps, ham, opt.oracle, rep, op);
    const auto& cyc = d.cycle.vertices;
    const int w = resolve(opt.desk.induced_length, floor_int(eps * eps * eps * k), "induced path length",
                          "floor(eps^3 k)", rep);
    const int t = resolve(opt.desk.pool_pairs, floor_int(eps * k * k / 40), "pairs", "floor(eps k^2 / 40)", rep);
    const int red = resolve(opt.desk.red_clique, ceil_int(4 / std::pow(eps, 7)), "red clique size",
                            "ceil(4 / eps^7)", rep);
    if (w < 1) {
        rep.add_step(op + "/dichotomy", "eps^3 k >= 1", false, "w = " + std::to_string(w));
        mark_unknown(rep, lo, hi, op, "induced path length below 1");
        return;
    }

    std::vector<Vertex> pool;
    for (std::size_t i = 0; i < d.s.size(); ++i)
        if (d.position(d.matched[i]) >= seg_len)
            pool.push_back(d.s[i]);
    auto match_of = [&](Vertex s) { return d.matched[idx(static_cast<int>(std::ranges::find(d.s, s) - d.s.begin()))]; };

    AnalysisParams dense;
    dense.k = k;
    dense.eps = eps;
    dense.gamma = 0.01;
    std::vector<PoolPair> pairs;
    while (static_cast<int>(pairs.size()) < t && pool.size() >= 2) {
        auto cert = find_dense_pair(g.induced(pool), dense);
        if (cert.u == cert.v)
            break;
        PoolPair pp;
        pp.x = pool[idx(cert.u)];
        pp.y = pool[idx(cert.v)];
        for (const auto& [len, path] : cert.paths)
            pp.paths.push_back(lift(path, pool));
        pp.mx = match_of(pp.x);
        pp.my = match_of(pp.y);
        pp.px = d.position(pp.mx);
        pp.py = d.position(pp.my);
        if (pp.px > pp.py) {
            std::swap(pp.x, pp.y);
            std::swap(pp.mx, pp.my);
            std::swap(pp.px, pp.py);
            for (auto& path : pp.paths)
                path = path.reversed();
        }
        std::erase_if(pool, [&](Vertex v) { return v == pp.x || v == pp.y; });
        pairs.push_back(std::move(pp));
    }
    rep.add_step(op + "/pairs", "extracted " + std::to_string(pairs.size()) + " >= t = " + std::to_string(t),
                 static_cast<int>(pairs.size()) >= t);
    std::ranges::sort(pairs, {}, &PoolPair::px);

    // Disjoint segments P_i = positions [px - L, px], greedily in cycle order.
    std::vector<std::size_t> chosen;
    int last_end = -1;
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if (pairs[i].px - seg_len > last_end) {
            chosen.push_back(i);
            last_end = pairs[i].px;
        }

    std::vector<SegmentTriple> triples;
    std::vector<std::size_t> triple_pair;
    for (std::size_t i : chosen) {
        const auto& pp = pairs[i];
        const int start = pp.px - seg_len;
        auto segment = cycle_walk(cyc, start, pp.px, 1);
        std::optional<OrderedPath> q;
        try {
            q = find_induced_increasing_path(g, segment, w);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::BudgetExceeded)
                throw;
            rep.add_step(op + "/dichotomy", "induced path search finishes", false, e.what());
            continue;
        }
        if (q) {
            triples.push_back(make_triple(*q, pp.px));
            triple_pair.push_back(i);
            continue;
        }
        // No induced increasing path of length w: every window of w + 2 has a chord.
        auto near = chord_dense_endpoints(g, segment, w);
        auto arc = cycle_walk(cyc, pp.py, start, 1);
        auto arcs = jump_chain(g, arc, k, rep, op);
        std::vector<OrderedPath> near_paths, through_s;
        for (const auto& [len, path] : near.paths)
            near_paths.push_back(path);
        for (const auto& path : pp.paths)
            through_s.push_back(wrap(pp.my, path.reversed(), pp.mx));
        PathBank bank{{make_segment(pp.mx, cyc[idx(start)], internal_of(segment), near_paths),
                       make_segment(cyc[idx(start)], pp.my, internal_of(arc), arcs),
                       make_segment(pp.my, pp.mx, d.s, through_s)}};
        auto cycles = combine_banks(g, bank);
        record_all(rep, cycles, op + "/chord_dense_composition");
        rep.add_step(op + "/chord_dense", "no induced increasing path of length " + std::to_string(w) + " ending at "
                                              + std::to_string(pp.mx),
                     true, std::to_string(cycles.size()) + " cycles");
    }

    const bool enough = static_cast<int>(triples.size()) >= red;
    rep.add_step(op + "/tricolored", "segments with an induced path: " + std::to_string(triples.size())
                                         + " >= red clique size " + std::to_string(red),
                 enough);
    if (enough && red >= 1) {
        auto h = build_tricolored(g, triples);
        std::optional<std::vector<int>> clique;
        try {
            clique = find_red_clique(h, red);
        } catch (const Error& e) {
            if (!route_failure(e))
                throw;
            rep.add_step(op + "/red_clique", "search finishes", false, e.what());
        }
        if (clique) {
            auto qcert = zigzag_dense_Q(g, triples, h, *clique);
            int last = clique->front();
            for (int c : *clique)
                if (triples[idx(c)].position > triples[idx(last)].position)
                    last = c;
            const auto& pp = pairs[triple_pair[idx(last)]];
            const Vertex z = qcert.u;
            const int pz = d.position(z);
            auto outer = cycle_walk(cyc, pz, pp.py, -1);
            auto outers = jump_chain(g, outer, k, rep, op);
            std::vector<OrderedPath> q_paths, through_s;
            for (const auto& [len, path] : qcert.paths)
                q_paths.push_back(path);
            for (const auto& path : pp.paths)
                through_s.push_back(wrap(pp.my, path.reversed(), pp.mx));
            std::vector<Vertex> between(cyc.begin() + pz + 1, cyc.begin() + pp.px);
            PathBank bank{{make_segment(z, pp.my, internal_of(outer), outers),
                           make_segment(pp.my, pp.mx, d.s, through_s),
                           make_segment(pp.mx, z, std::move(between), q_paths)}};
            auto cycles = combine_banks(g, bank);
            record_all(rep, cycles, op + "/red_clique_composition");
            rep.add_step(op + "/red_clique", "red clique of size " + std::to_string(red), true,
                         "gap " + std::to_string(qcert.gap) + ", " + std::to_string(cycles.size()) + " cycles");
        } else {
            rep.add_step(op + "/red_clique", "red clique of size " + std::to_string(red), false);
        }
    }
    mark_unknown(rep, lo, hi, op, "length not reached by the middle-range constructions");
}

} // namespace

SpectrumReport middle_range_certificates(const Graph& g, int k, double eps, const RangeOptions& opt)
{
    if (k < 1)
        throw Error(ErrorKind::InvalidK, "k must be positive, got " + std::to_string(k));
    const int n = g.order();
    SpectrumReport rep(n);
    const int lo = std::max(3, ceil_int((2 + eps) * k));
    const int seg_len = resolve(opt.desk.segment_length, floor_int(1000 * k / (eps * eps)), "segment length",
                                "floor(1000k / eps^2)", rep);
    const int hi = std::min(n, seg_len);
    const bool open = lo <= hi && seg_len >= 2;
    rep.add_step("middle_range", "ceil((2 + eps)k) = " + std::to_string(lo) + " <= min(n, L) = " + std::to_string(hi),
                 open);
    if (!open)
        return rep;
    if (seg_len >= n) {
        rep.add_step("middle_range", "L = " + std::to_string(seg_len) + " < n = " + std::to_string(n), false,
                     "segments do not fit on the cycle");
        mark_unknown(rep, lo, hi, "middle_range", "segment length L is not below n");
        return rep;
    }
    try {
        auto ham = require_hamilton(g, opt.hamilton, opt.oracle);
        middle_pipeline(g, k, eps, opt, ham, rep, lo, hi, seg_len);
    } catch (const Error& e) {
        if (!route_failure(e))
            throw;
        rep.add_step("middle_range", "pipeline completes", false, e.what());
        mark_unknown(rep, lo, hi, "middle_range", e.what());
    }
    return rep;
}

SpectrumReport full_certificate(const Graph& g, const AnalysisParams& params, const RangeOptions& opt)
{
    params.validate();
    const int n = g.order();
    SpectrumReport rep(n);
    rep.merge(lower_range_certificates(g, params.k, params.eps, opt));
    rep.merge(middle_range_certificates(g, params.k, params.eps, opt));
    rep.merge(upper_range_certificates(g, params.k, params.eps, opt));

    const bool oracle_ok = opt.oracle_fallback && n <= opt.oracle.oracle_cap;
    for (int ell = 3; ell <= n; ++ell) {
        auto st = rep.status(ell);
        if (st == LengthStatus::Witnessed || st == LengthStatus::Absent || st == LengthStatus::Present)
            continue;
        if (!oracle_ok) {
            rep.record_unknown(ell, "full_certificate", "no certificate and the oracle fallback is unavailable");
            continue;
        }
        try {
            if (auto c = cycle_of_length(g, ell, opt.oracle))
                rep.record_witness(*c, "oracle_fallback", Provenance::Oracle);
            else
                rep.record_absent(ell, "oracle_fallback");
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::BudgetExceeded)
                throw;
            rep.record_unknown(ell, "oracle_fallback", e.what());
        }
    }
    return rep;
}

} // namespace pancyclic
