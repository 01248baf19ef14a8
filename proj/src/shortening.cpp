#include "pancyclic/shortening.hpp"

#include <algorithm>

#include "pancyclic/covers.hpp"

namespace pancyclic {

namespace {

void require_path(const Graph& g, const OrderedPath& p, const char* what)
{
    if (p.vertices.empty() || !validate_path(g, p))
        throw Error(ErrorKind::InvalidArgument, std::string(what) + ": input is not a path of the graph");
}

OrderedPath splice(const OrderedPath& p, int keep_to, int resume_from)
{
    OrderedPath out;
    out.vertices.assign(p.vertices.begin(), p.vertices.begin() + keep_to + 1);
    out.vertices.insert(out.vertices.end(), p.vertices.begin() + resume_from, p.vertices.end());
    return out;
}

} // namespace

std::vector<Vertex> SpecialSequence::vertices() const
{
    std::vector<Vertex> out;
    for (int pos : positions)
        out.push_back(host[static_cast<std::size_t>(pos)]);
    return out;
}

std::vector<Edge> SpecialSequence::edges() const
{
    std::vector<Edge> out;
    for (std::size_t i = 0; i + 1 < positions.size(); ++i)
        out.emplace_back(host[static_cast<std::size_t>(positions[i])], host[static_cast<std::size_t>(positions[i + 1] + 1)]);
    return out;
}

int SpecialSequence::count_outside(const std::vector<Vertex>& excluded) const
{
    int count = 0;
    for (Vertex v : vertices())
        if (std::find(excluded.begin(), excluded.end(), v) == excluded.end())
            ++count;
    return count;
}

bool validate_special_sequence(const Graph& g, const SpecialSequence& s)
{
    const int n = static_cast<int>(s.host.size());
    if (s.positions.empty())
        return false;
    for (std::size_t i = 0; i < s.positions.size(); ++i) {
        int pos = s.positions[i];
        if (pos < 0 || pos >= n)
            return false;
        if (i > 0 && pos <= s.positions[i - 1])
            return false;
    }
    for (std::size_t i = 0; i + 1 < s.positions.size(); ++i)
        if (s.positions[i + 1] + 1 >= n)
            return false;
    for (auto [a, b] : s.edges())
        if (!g.has_edge(a, b))
            return false;
    return true;
}

std::vector<SpecialSequence> special_decomposition(const Graph& g, const std::vector<Vertex>& host)
{
    const int n = static_cast<int>(host.size());
    std::vector<Edge> arcs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 2; j < n; ++j)
            if (g.has_edge(host[static_cast<std::size_t>(i)], host[static_cast<std::size_t>(j)]))
                arcs.emplace_back(i, j);
    auto cover = gallai_milgram_cover(Digraph(n, arcs));

    // In the cover every position has at most one successor; i -> j becomes
    // the special step i -> j - 1, which is injective and increasing.
    std::vector<int> step(static_cast<std::size_t>(n), -1);
    std::vector<char> has_pred(static_cast<std::size_t>(n), 0);
    for (const auto& path : cover.paths)
        for (std::size_t t = 0; t + 1 < path.vertices.size(); ++t) {
            int from = path.vertices[t], to = path.vertices[t + 1] - 1;
            step[static_cast<std::size_t>(from)] = to;
            has_pred[static_cast<std::size_t>(to)] = 1;
        }
    std::vector<SpecialSequence> out;
    for (int start = 0; start < n; ++start) {
        if (has_pred[static_cast<std::size_t>(start)])
            continue;
        SpecialSequence s;
        s.host = host;
        for (int pos = start; pos >= 0; pos = step[static_cast<std::size_t>(pos)])
            s.positions.push_back(pos);
        out.push_back(std::move(s));
    }
    return out;
}

SpecialSequence find_special_sequence(const Graph& g, const std::vector<Vertex>& host,
                                      const std::vector<Vertex>& excluded, int k)
{
    if (k < 1)
        throw Error(ErrorKind::InvalidK, "find_special_sequence: k must be positive");
    if (host.empty())
        throw Error(ErrorKind::InvalidArgument, "find_special_sequence: empty host");
    auto family = special_decomposition(g, host);
    std::size_t best = 0;
    int best_count = -1;
    for (std::size_t i = 0; i < family.size(); ++i) {
        int count = family[i].count_outside(excluded);
        if (count > best_count) {
            best_count = count;
            best = i;
        }
    }
    return family[best];
}

OrderedPath easy_jump(const Graph& g, const OrderedPath& p, int k)
{
    if (k < 1)
        throw Error(ErrorKind::InvalidK, "easy_jump: k must be positive");
    require_path(g, p, "easy_jump");
    const int last = p.length();
    if (last <= 2 * k)
        throw Error(ErrorKind::PreconditionFailed,
                    "easy_jump: |P| = " + std::to_string(last) + " must exceed 2k = " + std::to_string(2 * k));
    for (int i = 0; i + 2 <= last; ++i)
        for (int j = i + 2; j <= std::min(i + 2 * k, last); ++j)
            if (g.has_edge(p.vertices[static_cast<std::size_t>(i)], p.vertices[static_cast<std::size_t>(j)]))
                return splice(p, i, j);
    throw Error(ErrorKind::NoChordFound,
                "easy_jump: no chord within any window of " + std::to_string(2 * k + 1) + " consecutive vertices");
}

bool zigzag_precondition(int path_vertices, int pinned, int c, int k)
{
    if (c < 1 || k < 1)
        return false;
    long long lhs = static_cast<long long>(c)
                  * (static_cast<long long>(path_vertices) - static_cast<long long>(4 * c - 1) * pinned - 2LL * k);
    return lhs > 2LL * k * k;
}

std::string zigzag_inequality(int path_vertices, int pinned, int c, int k)
{
    return "c((|P|-(4c-1)|U|)/(2k)-1) > k with c=" + std::to_string(c) + ", |P|=" + std::to_string(path_vertices)
         + ", |U|=" + std::to_string(pinned) + ", k=" + std::to_string(k);
}

ZigzagResult jump_with_zigzag(const Graph& g, const OrderedPath& p, int c, const std::vector<Vertex>& pinned, int k)
{
    if (c < 1 || k < 1)
        throw Error(ErrorKind::InvalidArgument, "jump_with_zigzag: need c >= 1 and k >= 1");
    require_path(g, p, "jump_with_zigzag");
    const int n = p.vertex_count();
    std::vector<int> pos_of(static_cast<std::size_t>(g.order()), -1);
    for (int i = 0; i < n; ++i)
        pos_of[static_cast<std::size_t>(p.vertices[static_cast<std::size_t>(i)])] = i;
    std::vector<Vertex> pinned_set = pinned;
    std::sort(pinned_set.begin(), pinned_set.end());
    pinned_set.erase(std::unique(pinned_set.begin(), pinned_set.end()), pinned_set.end());
    for (Vertex u : pinned_set)
        if (!g.contains(u) || pos_of[static_cast<std::size_t>(u)] < 0)
            throw Error(ErrorKind::InvalidArgument, "jump_with_zigzag: pinned vertex " + std::to_string(u) + " not on the path");
    const int u_size = static_cast<int>(pinned_set.size());
    if (!zigzag_precondition(n, u_size, c, k))
        throw Error(ErrorKind::PreconditionFailed, zigzag_inequality(n, u_size, c, k) + " is false");

    // U_c: positions within 2c - 1 of a pinned position.
    std::vector<char> in_uc(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> uc_labels;
    for (Vertex u : pinned_set) {
        int at = pos_of[static_cast<std::size_t>(u)];
        for (int q = std::max(0, at - (2 * c - 1)); q <= std::min(n - 1, at + 2 * c - 1); ++q)
            in_uc[static_cast<std::size_t>(q)] = 1;
    }
    for (int q = 0; q < n; ++q)
        if (in_uc[static_cast<std::size_t>(q)])
            uc_labels.push_back(p.vertices[static_cast<std::size_t>(q)]);

    auto seq = find_special_sequence(g, p.vertices, uc_labels, k);
    const auto& v = seq.positions;

    auto finish = [&](OrderedPath out, std::string branch) {
        ZigzagResult r{std::move(out), std::move(branch), 0};
        r.removed = n - r.path.vertex_count();
        if (r.removed < 1 || r.removed > 4 * c - 3 || !validate_path(g, r.path) || r.path.front() != p.front()
            || r.path.back() != p.back())
            throw Error(ErrorKind::InternalContradiction, "jump_with_zigzag: " + r.branch + " branch produced an invalid path");
        for (Vertex u : pinned_set)
            if (std::find(r.path.vertices.begin(), r.path.vertices.end(), u) == r.path.vertices.end())
                throw Error(ErrorKind::InternalContradiction, "jump_with_zigzag: dropped pinned vertex " + std::to_string(u));
        return r;
    };

    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        if (!in_uc[static_cast<std::size_t>(v[i + 1])] && v[i + 1] - v[i] < 2 * c)
            return finish(splice(p, v[i], v[i + 1] + 1), "short_gap");

    // S_v = {v-1, v-3, ..., v-(2c-1)} for special v outside U_c, skipping v_1.
    std::vector<int> s_positions;
    std::vector<int> owner(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (in_uc[static_cast<std::size_t>(v[i])])
            continue;
        for (int t = 1; t <= 2 * c - 1; t += 2) {
            int q = v[i] - t;
            s_positions.push_back(q);
            owner[static_cast<std::size_t>(q)] = static_cast<int>(i);
        }
    }
    std::sort(s_positions.begin(), s_positions.end());
    int a = -1, b = -1;
    for (std::size_t x = 0; x < s_positions.size() && a < 0; ++x)
        for (std::size_t y = x + 1; y < s_positions.size(); ++y)
            if (g.has_edge(p.vertices[static_cast<std::size_t>(s_positions[x])],
                           p.vertices[static_cast<std::size_t>(s_positions[y])])) {
                a = s_positions[x];
                b = s_positions[y];
                break;
            }
    if (a < 0)
        throw Error(ErrorKind::InternalContradiction,
                    "jump_with_zigzag: S spans no edge, so these " + std::to_string(s_positions.size())
                        + " vertices are independent and alpha exceeds k=" + std::to_string(k));
    int oi = owner[static_cast<std::size_t>(a)], oj = owner[static_cast<std::size_t>(b)];
    if (oi == oj)
        return finish(splice(p, a, b), "inside_s");

    // Two increasing walks from v_i that alternate over the blocks
    // [v_t + 1, v_{t+1}]; one ends at b, the other jumps to v_j + 1.
    const int vi = v[static_cast<std::size_t>(oi)], vj = v[static_cast<std::size_t>(oj)];
    std::vector<int> special_index(static_cast<std::size_t>(n), -1);
    for (std::size_t t = 0; t < v.size(); ++t)
        special_index[static_cast<std::size_t>(v[t])] = static_cast<int>(t);
    auto walk = [&](int first) {
        std::vector<int> w{vi, first};
        while (w.back() != b && w.back() != vj + 1) {
            int r = w.back();
            int t = special_index[static_cast<std::size_t>(r)];
            if (t >= 0 && t + 1 < static_cast<int>(v.size()))
                w.push_back(v[static_cast<std::size_t>(t + 1)] + 1);
            else
                w.push_back(r + 1);
            if (w.back() > vj + 1)
                throw Error(ErrorKind::InternalContradiction, "jump_with_zigzag: zigzag walk overshot v_j + 1");
        }
        return w;
    };
    auto w2 = walk(vi + 1);
    auto w3 = walk(v[static_cast<std::size_t>(oi + 1)] + 1);
    if (w3.back() == b)
        std::swap(w2, w3);
    if (w2.back() != b || w3.back() != vj + 1)
        throw Error(ErrorKind::InternalContradiction, "jump_with_zigzag: walks did not end at b and v_j + 1");

    OrderedPath out;
    for (int q = 0; q <= a; ++q)
        out.vertices.push_back(p.vertices[static_cast<std::size_t>(q)]);
    for (auto it = w2.rbegin(); it != w2.rend(); ++it)
        out.vertices.push_back(p.vertices[static_cast<std::size_t>(*it)]);
    for (std::size_t t = 1; t < w3.size(); ++t)
        out.vertices.push_back(p.vertices[static_cast<std::size_t>(w3[t])]);
    for (int q = vj + 2; q < n; ++q)
        out.vertices.push_back(p.vertices[static_cast<std::size_t>(q)]);
    return finish(std::move(out), "zigzag");
}

std::vector<OrderedPath> shorten_to_target(const Graph& g, const OrderedPath& p, int target_lo, int c,
                                           const std::vector<Vertex>& pinned, int k)
{
    std::vector<OrderedPath> out{p};
    try {
        if (!zigzag_precondition(p.vertex_count(), static_cast<int>(pinned.size()), c, k))
            throw ShorteningError(Error(ErrorKind::PreconditionFailed,
                                        zigzag_inequality(p.vertex_count(), static_cast<int>(pinned.size()), c, k)
                                            + " is false at the first step"),
                                  {});
        while (out.back().length() >= target_lo
               && zigzag_precondition(out.back().vertex_count(), static_cast<int>(pinned.size()), c, k))
            out.push_back(jump_with_zigzag(g, out.back(), c, pinned, k).path);
    } catch (const ShorteningError&) {
        throw;
    } catch (const Error& e) {
        throw ShorteningError(e, out.size() > 1 ? out : std::vector<OrderedPath>{});
    }
    return out;
}

} // namespace pancyclic
