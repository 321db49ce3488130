#include "rgt/enumerate.hpp"

#include <bit>
#include <thread>

#include "rgt/edge_subset.hpp"

namespace rgt {

namespace {

void check_cap(std::size_t log2_states, const EnumerateOptions& opts,
               const char* what) {
    if (opts.override_cap) return;
    if (log2_states > opts.cap)
        throw CapExceededError(std::string(what) + " would visit 2^" +
                               std::to_string(log2_states) +
                               " states, over the cap of 2^" +
                               std::to_string(opts.cap) +
                               " (raise the cap to override)");
}

unsigned worker_count(const EnumerateOptions& opts, std::uint64_t states) {
    unsigned t = opts.threads ? opts.threads : std::thread::hardware_concurrency();
    if (t == 0) t = 1;
    if (states < 1024) return 1;  // not worth spawning
    return static_cast<unsigned>(std::min<std::uint64_t>(t, states / 512));
}

// run fn(worker_index, lo, hi) over [0, states) split into contiguous ranges;
// results merge by addition so the split cannot affect the output
template <typename Fn>
void parallel_ranges(std::uint64_t states, unsigned workers, Fn&& fn) {
    if (workers <= 1) {
        fn(0u, std::uint64_t{0}, states);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t lo = states * w / workers;
        const std::uint64_t hi = states * (w + 1) / workers;
        pool.emplace_back([=, &fn] { fn(w, lo, hi); });
    }
    for (auto& t : pool) t.join();
}

GenusPolynomial histogram_to_polynomial(const std::vector<std::uint64_t>& hist) {
    GenusPolynomial p;
    for (unsigned e = 0; e < hist.size(); ++e)
        if (hist[e])
            p += GenusPolynomial::monomial(e, GenusPolynomial::Int(hist[e]));
    return p;
}

// flattened rotation data reused across subsets by the spanning tracer
struct RotationTable {
    std::vector<std::uint32_t> darts;   // flag_id(d, 0) per dart, vertex-major
    std::vector<std::uint32_t> vertex_begin;  // vertex v darts at [begin[v], begin[v+1])

    explicit RotationTable(const RibbonGraph& g) {
        vertex_begin.reserve(g.vertex_count() + 1);
        vertex_begin.push_back(0);
        for (const auto& rot : g.rotations()) {
            for (const Dart& d : rot) darts.push_back(flag_id(d, 0));
            vertex_begin.push_back(static_cast<std::uint32_t>(darts.size()));
        }
    }
};

// face counter for spanning subgraphs (V, A), rebuilt per subset from
// preallocated scratch
class SpanningFaceTracer {
public:
    SpanningFaceTracer(const RibbonGraph& g, const RotationTable& table)
        : g_(g),
          table_(table),
          corner_(4 * g.edge_count(), 0),
          epoch_seen_(4 * g.edge_count(), 0),
          twist_bits_(0) {
        for (std::size_t e = 0; e < g.edge_count(); ++e)
            if (g.twists()[e]) twist_bits_ |= std::uint64_t{1} << e;
    }

    std::size_t faces(std::uint64_t subset) {
        ++epoch_;
        std::size_t count = 0;
        const std::size_t nv = g_.vertex_count();
        for (std::size_t v = 0; v < nv; ++v) {
            std::uint32_t first = 0, prev = 0;
            bool any = false;
            for (std::uint32_t i = table_.vertex_begin[v];
                 i < table_.vertex_begin[v + 1]; ++i) {
                const std::uint32_t f = table_.darts[i];
                if (!(subset >> (f / 4) & 1)) continue;
                if (!any) {
                    first = prev = f;
                    any = true;
                } else {
                    corner_[prev + 1] = f;
                    corner_[f] = prev + 1;
                    prev = f;
                }
            }
            if (!any) {
                ++count;  // bare vertex disk
            } else {
                corner_[prev + 1] = first;
                corner_[first] = prev + 1;
            }
        }
        for (std::uint64_t rest = subset; rest; rest &= rest - 1) {
            const std::uint32_t e = static_cast<std::uint32_t>(std::countr_zero(rest));
            const std::uint32_t f0 = 4 * e;
            for (std::uint32_t start = f0; start < f0 + 4; ++start) {
                if (epoch_seen_[start] == epoch_) continue;
                ++count;
                std::uint32_t x = start;
                while (epoch_seen_[x] != epoch_) {
                    const std::uint32_t base = x & ~3u;
                    const std::uint32_t off = x & 3u;
                    const std::uint32_t y =
                        base + ((twist_bits_ >> (x / 4) & 1) ? (off ^ 2u) : (3u - off));
                    epoch_seen_[x] = epoch_seen_[y] = epoch_;
                    x = corner_[y];
                }
            }
        }
        return count;
    }

private:
    const RibbonGraph& g_;
    const RotationTable& table_;
    std::vector<std::uint32_t> corner_;
    std::vector<std::uint32_t> epoch_seen_;
    std::uint64_t twist_bits_;
    std::uint32_t epoch_ = 0;
};

// corner matching over the full graph; the 'minus' flag of a dart is
// flag_id(d, 0), 'plus' is flag_id(d, 1)
std::vector<std::uint32_t> full_corner(const RibbonGraph& g) {
    std::vector<std::uint32_t> corner(4 * g.edge_count(), 0);
    for (const auto& rot : g.rotations()) {
        const std::size_t k = rot.size();
        for (std::size_t j = 0; j < k; ++j) {
            const std::uint32_t a = flag_id(rot[j], 1);
            const std::uint32_t b = flag_id(rot[(j + 1) % k], 0);
            corner[a] = b;
            corner[b] = a;
        }
    }
    return corner;
}

// face count maintained across single-edge twist toggles: only the boundary
// walks through the toggled edge's flags are retraced
class IncrementalFaceTracker {
public:
    IncrementalFaceTracker(const RibbonGraph& g, std::uint64_t twist_bits)
        : corner_(full_corner(g)),
          cycle_id_(4 * g.edge_count(), 0),
          twist_bits_(twist_bits) {
        retrace_all();
    }

    std::size_t faces() const { return faces_; }
    std::uint64_t twist_bits() const { return twist_bits_; }

    void toggle(std::size_t e) {
        twist_bits_ ^= std::uint64_t{1} << e;
        const std::uint32_t f0 = 4 * static_cast<std::uint32_t>(e);
        std::uint64_t old_ids[4];
        unsigned old_distinct = 0;
        for (std::uint32_t f = f0; f < f0 + 4; ++f) {
            bool dup = false;
            for (unsigned i = 0; i < old_distinct; ++i)
                if (old_ids[i] == cycle_id_[f]) dup = true;
            if (!dup) old_ids[old_distinct++] = cycle_id_[f];
        }
        const std::uint64_t fresh_from = next_id_;
        for (std::uint32_t f = f0; f < f0 + 4; ++f) {
            if (cycle_id_[f] >= fresh_from) continue;  // relabelled this step
            trace_from(f);
        }
        faces_ += static_cast<std::size_t>(next_id_ - fresh_from);
        faces_ -= old_distinct;
    }

private:
    std::uint32_t band_partner(std::uint32_t x) const {
        const std::uint32_t base = x & ~3u;
        const std::uint32_t off = x & 3u;
        return base + ((twist_bits_ >> (x / 4) & 1) ? (off ^ 2u) : (3u - off));
    }

    void trace_from(std::uint32_t start) {
        const std::uint64_t id = next_id_++;
        std::uint32_t x = start;
        do {
            const std::uint32_t y = band_partner(x);
            cycle_id_[x] = cycle_id_[y] = id;
            x = corner_[y];
        } while (x != start);
    }

    void retrace_all() {
        faces_ = 0;
        next_id_ = 1;
        std::fill(cycle_id_.begin(), cycle_id_.end(), 0);
        for (std::uint32_t f = 0; f < cycle_id_.size(); ++f) {
            if (cycle_id_[f] != 0) continue;
            trace_from(f);
            ++faces_;
        }
    }

    std::vector<std::uint32_t> corner_;
    std::vector<std::uint64_t> cycle_id_;
    std::uint64_t twist_bits_;
    std::size_t faces_ = 0;
    std::uint64_t next_id_ = 1;
};

std::uint64_t gray(std::uint64_t i) { return i ^ (i >> 1); }

std::uint64_t twist_bits_of(const RibbonGraph& g) {
    std::uint64_t bits = 0;
    for (std::size_t e = 0; e < g.edge_count(); ++e)
        if (g.twists()[e]) bits |= std::uint64_t{1} << e;
    return bits;
}

std::size_t isolated_count(const RibbonGraph& g) {
    std::size_t n = 0;
    for (const auto& rot : g.rotations())
        if (rot.empty()) ++n;
    return n;
}

}  // namespace

std::vector<std::uint64_t> cut_space_basis(const RibbonGraph& g) {
    const std::size_t nv = g.vertex_count();
    std::vector<std::pair<std::size_t, std::size_t>> ends(g.edge_count(), {nv, nv});
    for (std::size_t v = 0; v < nv; ++v)
        for (const Dart& d : g.rotation(v))
            (d.end == 0 ? ends[d.edge].first : ends[d.edge].second) = v;
    std::vector<std::uint64_t> star(nv, 0);
    std::vector<std::vector<std::size_t>> adj(nv);
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = ends[e];
        if (u == v) continue;
        star[u] ^= std::uint64_t{1} << e;
        star[v] ^= std::uint64_t{1} << e;
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<bool> seen(nv, false);
    std::vector<std::uint64_t> basis;
    for (std::size_t root = 0; root < nv; ++root) {
        if (seen[root]) continue;
        seen[root] = true;  // root star omitted
        std::vector<std::size_t> stack{root};
        while (!stack.empty()) {
            const std::size_t u = stack.back();
            stack.pop_back();
            for (std::size_t v : adj[u]) {
                if (seen[v]) continue;
                seen[v] = true;
                basis.push_back(star[v]);
                stack.push_back(v);
            }
        }
    }
    return basis;
}

void for_each_orientable_petrial(
    const RibbonGraph& g, const EnumerateOptions& opts,
    const std::function<void(std::uint64_t, std::size_t)>& fn) {
    const auto basis = cut_space_basis(g);
    const std::size_t dim = basis.size();
    check_cap(dim, opts, "orientable coset sweep");
    const std::size_t iso = isolated_count(g);
    const std::uint64_t sigma = twist_bits_of(g);
    IncrementalFaceTracker tracker(g, 0);
    const std::uint64_t states = std::uint64_t{1} << dim;
    for (std::uint64_t i = 0; i < states; ++i) {
        if (i != 0) {
            const std::size_t b = static_cast<std::size_t>(std::countr_zero(i));
            for (std::uint64_t es = basis[b]; es; es &= es - 1)
                tracker.toggle(static_cast<std::size_t>(std::countr_zero(es)));
        }
        fn(sigma ^ tracker.twist_bits(), tracker.faces() + iso);
    }
}

GenusPolynomial partial_star_polynomial(const RibbonGraph& g,
                                        const EnumerateOptions& opts) {
    const std::size_t ne = g.edge_count();
    check_cap(ne, opts, "partial-* enumeration");
    const std::size_t base = 2 * components(g) + ne;
    if (ne == 0) return GenusPolynomial::monomial(
        static_cast<unsigned>(euler_genus(g)), 1);

    const std::uint64_t full = (~std::uint64_t{0}) >> (64 - ne);
    const std::uint64_t pairs = std::uint64_t{1} << (ne - 1);
    const unsigned workers = worker_count(opts, pairs);
    const RotationTable table(g);
    std::vector<std::vector<std::uint64_t>> hists(
        workers, std::vector<std::uint64_t>(base + 1, 0));

    parallel_ranges(pairs, workers, [&](unsigned w, std::uint64_t lo, std::uint64_t hi) {
        SpanningFaceTracer tracer(g, table);
        auto& hist = hists[w];
        for (std::uint64_t a = lo; a < hi; ++a) {
            const std::size_t fa = tracer.faces(a);
            const std::size_t fac = tracer.faces(full ^ a);
            hist[base - fa - fac] += 2;  // eu(G^{*|A}) = eu(G^{*|A^c})
        }
    });

    std::vector<std::uint64_t> total(base + 1, 0);
    for (const auto& h : hists)
        for (std::size_t i = 0; i <= base; ++i) total[i] += h[i];
    return histogram_to_polynomial(total);
}

GenusPolynomial partial_petrial_polynomial(const RibbonGraph& g,
                                           const EnumerateOptions& opts) {
    const std::size_t ne = g.edge_count();
    check_cap(ne, opts, "partial-x enumeration");
    const std::size_t base = 2 * components(g) + ne - g.vertex_count();
    const std::size_t iso = isolated_count(g);
    const std::uint64_t sigma = twist_bits_of(g);
    const std::uint64_t states = std::uint64_t{1} << ne;
    const unsigned workers = worker_count(opts, states);
    std::vector<std::vector<std::uint64_t>> hists(
        workers, std::vector<std::uint64_t>(base + 1, 0));

    parallel_ranges(states, workers, [&](unsigned w, std::uint64_t lo, std::uint64_t hi) {
        IncrementalFaceTracker tracker(g, sigma ^ gray(lo));
        auto& hist = hists[w];
        for (std::uint64_t i = lo; i < hi; ++i) {
            if (i != lo)
                tracker.toggle(static_cast<std::size_t>(std::countr_zero(i)));
            hist[base - tracker.faces() - iso] += 1;
        }
    });

    std::vector<std::uint64_t> total(base + 1, 0);
    for (const auto& h : hists)
        for (std::size_t i = 0; i <= base; ++i) total[i] += h[i];
    return histogram_to_polynomial(total);
}

GenusPolynomial restricted_orientable_petrial_polynomial(
    const RibbonGraph& g, const EnumerateOptions& opts) {
    const auto basis = cut_space_basis(g);
    const std::size_t dim = basis.size();
    check_cap(dim, opts, "restricted orientable enumeration");
    const std::size_t base = 2 * components(g) + g.edge_count() - g.vertex_count();
    const std::size_t iso = isolated_count(g);
    const std::uint64_t states = std::uint64_t{1} << dim;
    const unsigned workers = worker_count(opts, states);
    std::vector<std::vector<std::uint64_t>> hists(
        workers, std::vector<std::uint64_t>(base + 1, 0));

    parallel_ranges(states, workers, [&](unsigned w, std::uint64_t lo, std::uint64_t hi) {
        // twist vector for the coset member at Gray position lo
        std::uint64_t start_bits = 0;
        const std::uint64_t glo = gray(lo);
        for (std::size_t b = 0; b < dim; ++b)
            if (glo >> b & 1) start_bits ^= basis[b];
        IncrementalFaceTracker tracker(g, start_bits);
        auto& hist = hists[w];
        for (std::uint64_t i = lo; i < hi; ++i) {
            if (i != lo) {
                const std::size_t b = static_cast<std::size_t>(std::countr_zero(i));
                for (std::uint64_t es = basis[b]; es; es &= es - 1)
                    tracker.toggle(static_cast<std::size_t>(std::countr_zero(es)));
            }
            hist[base - tracker.faces() - iso] += 1;
        }
    });

    std::vector<std::uint64_t> total(base + 1, 0);
    for (const auto& h : hists)
        for (std::size_t i = 0; i <= base; ++i) total[i] += h[i];
    return histogram_to_polynomial(total);
}

GenusPolynomial restricted_orientable_petrial_polynomial_filtered(
    const RibbonGraph& g, const EnumerateOptions& opts) {
    const std::size_t ne = g.edge_count();
    check_cap(ne, opts, "restricted (filtered) enumeration");
    GenusPolynomial p;
    for (std::uint64_t bits = 0;; ++bits) {
        const EdgeSubset a(bits, ne);
        const RibbonGraph h = partial_petrial(g, a);
        if (is_orientable(h))
            p += GenusPolynomial::monomial(static_cast<unsigned>(euler_genus(h)), 1);
        if (bits + 1 == (std::uint64_t{1} << ne)) break;
    }
    return p;
}

GenusPolynomial::Int count_orientable_petrials(const RibbonGraph& g) {
    // Petrial twist vectors sweep the coset of the cut space through the
    // twist vector, so exactly 2^{v-c} subsets give an orientable graph
    const std::size_t dim = g.vertex_count() - components(g);
    return GenusPolynomial::Int(1) << dim;
}

GenusPolynomial enumerate_euler_spectrum(const RibbonGraph& g,
                                         const TwualityWord& w,
                                         const EnumerateOptions& opts) {
    const std::size_t ne = g.edge_count();
    check_cap(ne, opts, "twuality spectrum enumeration");
    const std::uint64_t states = std::uint64_t{1} << ne;
    const unsigned workers = worker_count(opts, states);
    std::vector<GenusPolynomial> parts(workers);

    parallel_ranges(states, workers, [&](unsigned wi, std::uint64_t lo, std::uint64_t hi) {
        GenusPolynomial acc;
        for (std::uint64_t bits = lo; bits < hi; ++bits) {
            const RibbonGraph h = apply_twuality(g, w, EdgeSubset(bits, ne));
            acc += GenusPolynomial::monomial(static_cast<unsigned>(euler_genus(h)), 1);
        }
        parts[wi] = std::move(acc);
    });

    GenusPolynomial p;
    for (auto& part : parts) p += part;
    return p;
}

}  // namespace rgt
