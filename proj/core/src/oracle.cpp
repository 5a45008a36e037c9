#include <k33lab/oracle.hpp>

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <string>
#include <thread>

#include <k33lab/decomposition.hpp>
#include <k33lab/errors.hpp>
#include <k33lab/planarity.hpp>

#include "reduction.hpp"

namespace k33lab
{

namespace
{

constexpr std::array<std::pair<OracleClass, std::string_view>, 5> kNames{{
    {OracleClass::P2planar, "P2planar"},
    {OracleClass::Gsp, "Gsp"},
    {OracleClass::HP, "HP"},
    {OracleClass::F, "F"},
    {OracleClass::HF, "HF"},
}};

int edge_cap(int n)
{
    return n <= 5 ? n * (n - 1) / 2 : 3 * n - 6;
}

struct Wanted {
    bool p = false;
    bool gsp = false;
    bool hp = false;
    bool f = false;
    bool hf = false;
};

// Which classes a 2-connected graph on `rows` belongs to.
template <typename Sink>
void classify(const VertexMask *rows, int n, int m, const Wanted &want, Sink &&sink)
{
    int low = Graph::kMaxVertices;
    for (int v = 0; v < n; ++v) {
        low = std::min(low, popcount(rows[v]));
    }
    const bool planar = is_planar_rows(rows, n);
    if (planar) {
        if (want.p) {
            sink(OracleClass::P2planar, m);
        }
        if (want.hp && n >= 3 && low >= 3) {
            sink(OracleClass::HP, m);
        }
        if (want.gsp) {
            detail::Rows r{};
            std::copy(rows, rows + n, r.begin());
            if (popcount(detail::suppress_low_degree(r, bit(n) - 1)) < 3) {
                sink(OracleClass::Gsp, m);
            }
        }
        return;
    }
    if (want.f || want.hf) {
        Graph g(n);
        for (int u = 0; u < n; ++u) {
            for_each_vertex(rows[u] & above(u), [&](int v) { g.add_edge(u, v); });
        }
        if (decompose(g).accepted()) {
            if (want.f) {
                sink(OracleClass::F, m);
            }
            if (want.hf && low >= 3) {
                sink(OracleClass::HF, m);
            }
        }
    }
}

// Calls visit(rows, m) for every 2-connected graph in [begin, end) of the mask order.
template <typename Visit>
void sweep(int n, std::uint64_t begin, std::uint64_t end, bool planarity_first, Visit &&visit)
{
    std::vector<Edge> pairs;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            pairs.emplace_back(u, v);
        }
    }
    const int cap = edge_cap(n);
    const int floor = n >= 3 ? n : (n == 2 ? 1 : 0);
    std::array<VertexMask, Graph::kMaxVertices> rows{};
    for (std::uint64_t mask = begin; mask < end; ++mask) {
        const int m = std::popcount(mask);
        if (m > cap || m < floor || (n < 2)) {
            continue;
        }
        std::fill(rows.begin(), rows.begin() + n, 0);
        for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
            const auto &[u, v] = pairs[std::countr_zero(rest)];
            rows[u] |= bit(v);
            rows[v] |= bit(u);
        }
        if (planarity_first) {
            if (!is_planar_rows(rows.data(), n) || !is_two_connected_rows(rows.data(), n)) {
                continue;
            }
        } else if (!is_two_connected_rows(rows.data(), n)) {
            continue;
        }
        visit(rows.data(), m, mask);
    }
}

void check_n(int n, int limit)
{
    if (n < 0 || n > limit) {
        throw SizeLimitError("exhaustive oracle supports 0 <= n <= " + std::to_string(limit) + ", got "
                             + std::to_string(n));
    }
}

} // namespace

std::string_view to_string(OracleClass c)
{
    for (const auto &[cls, name] : kNames) {
        if (cls == c) {
            return name;
        }
    }
    return "unknown";
}

std::optional<OracleClass> parse_oracle_class(std::string_view name)
{
    if (name == "P") {
        return OracleClass::P2planar;
    }
    for (const auto &[cls, text] : kNames) {
        if (text == name) {
            return cls;
        }
    }
    return std::nullopt;
}

int default_workers()
{
    if (const char *env = std::getenv("K33LAB_WORKERS")) {
        const int w = std::atoi(env);
        if (w > 0) {
            return w;
        }
    }
    return 1;
}

std::map<OracleClass, EdgeCounts> oracle_census(int n, std::span<const OracleClass> classes,
                                                const OracleOptions &options)
{
    check_n(n, kOracleLimit);
    if (options.workers < 1) {
        throw InputError("worker count must be at least 1");
    }
    Wanted want;
    for (OracleClass c : classes) {
        want.p |= c == OracleClass::P2planar;
        want.gsp |= c == OracleClass::Gsp;
        want.hp |= c == OracleClass::HP;
        want.f |= c == OracleClass::F;
        want.hf |= c == OracleClass::HF;
    }
    const bool planarity_first = options.planarity_first && !want.f && !want.hf;

    const int edges = n * (n - 1) / 2;
    const std::uint64_t total = std::uint64_t{1} << edges;
    const std::uint64_t chunk_size = std::max<std::uint64_t>(1, total >> 8);
    const std::uint64_t chunks = (total + chunk_size - 1) / chunk_size;

    using Tally = std::array<EdgeCounts, kNames.size()>;
    std::vector<Tally> per_chunk(chunks);
    std::atomic<std::uint64_t> next{0};
    auto work = [&] {
        for (std::uint64_t c = next++; c < chunks; c = next++) {
            Tally &tally = per_chunk[c];
            const std::uint64_t begin = c * chunk_size;
            const std::uint64_t end = std::min(total, begin + chunk_size);
            sweep(n, begin, end, planarity_first, [&](const VertexMask *rows, int m, std::uint64_t) {
                classify(rows, n, m, want, [&](OracleClass cls, int mm) { ++tally[static_cast<int>(cls)][mm]; });
            });
        }
    };
    const int workers = static_cast<int>(std::min<std::uint64_t>(options.workers, chunks));
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back(work);
        }
        for (auto &t : pool) {
            t.join();
        }
    }

    std::map<OracleClass, EdgeCounts> out;
    for (OracleClass c : classes) {
        EdgeCounts &dst = out[c];
        for (const Tally &tally : per_chunk) {
            for (const auto &[m, count] : tally[static_cast<int>(c)]) {
                dst[m] += count;
            }
        }
    }
    return out;
}

EdgeCounts oracle_count(OracleClass c, int n, const OracleOptions &options)
{
    const std::array<OracleClass, 1> one{c};
    return oracle_census(n, one, options).at(c);
}

std::vector<Graph> collect_members(OracleClass c, int n)
{
    check_n(n, 7);
    Wanted want;
    want.p = c == OracleClass::P2planar;
    want.gsp = c == OracleClass::Gsp;
    want.hp = c == OracleClass::HP;
    want.f = c == OracleClass::F;
    want.hf = c == OracleClass::HF;
    std::vector<Graph> out;
    const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    sweep(n, 0, total, false, [&](const VertexMask *rows, int m, std::uint64_t) {
        bool hit = false;
        classify(rows, n, m, want, [&](OracleClass cls, int) { hit = hit || cls == c; });
        if (hit) {
            Graph g(n);
            for (int u = 0; u < n; ++u) {
                for_each_vertex(rows[u] & above(u), [&](int v) { g.add_edge(u, v); });
            }
            out.push_back(std::move(g));
        }
    });
    return out;
}

} // namespace k33lab
