#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace racdraw {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;   // structural edge (a segment of a logical edge, or a dummy)
using Dart = std::int32_t;     // 2*edge + side; twin(d) == d^1
using LogicalId = std::int32_t; // edge of the input graph

constexpr VertexId kNoVertex = -1;
constexpr EdgeId kNoEdge = -1;
constexpr Dart kNoDart = -1;
constexpr LogicalId kNoLogical = -1;

enum class VertexKind : std::uint8_t { Original, Crossing, Dummy, Subdivision };
enum class EdgeKind : std::uint8_t { Original, Dummy };

struct StructuralError : std::runtime_error {
    explicit StructuralError(const std::string& m) : std::runtime_error(m) {}
};

// Embedded multigraph as a rotation system. Rotations are counterclockwise;
// with that convention inner face walks run counterclockwise and the outer
// face walk runs clockwise (face to the left of each dart).
//
// Crossings are carried in one of two states: as abstract crossing pairs over
// logical edges (freshly parsed input), or planarized as degree-4 crossing
// vertices whose rotation alternates the two logical edges.
class EmbeddedGraph {
public:
    struct LogicalEdge {
        VertexId u = kNoVertex;
        VertexId v = kNoVertex;
        bool alive = true;
    };

    // --- vertices ---------------------------------------------------------
    std::vector<VertexKind> vkind;
    std::vector<bool> valive;
    std::vector<Dart> vfirst;  // some live dart with this tail, or kNoDart
    std::vector<std::int32_t> vdegree;

    // --- darts / structural edges ----------------------------------------
    std::vector<Dart> dnext, dprev; // CCW rotation around dtail[d]
    std::vector<VertexId> dtail;
    std::vector<EdgeKind> ekind;
    std::vector<bool> ealive;
    std::vector<LogicalId> elogical;

    // --- logical layer ----------------------------------------------------
    std::vector<LogicalEdge> logical;
    std::vector<std::pair<LogicalId, LogicalId>> crossing_pairs; // abstract state
    std::unordered_map<VertexId, std::pair<LogicalId, LogicalId>> crossing_of; // planarized state

    Dart outer_dart = kNoDart;

    // ----------------------------------------------------------------------
    static Dart twin(Dart d) { return d ^ 1; }
    EdgeId edge_of(Dart d) const { return d >> 1; }
    VertexId tail(Dart d) const { return dtail[d]; }
    VertexId head(Dart d) const { return dtail[twin(d)]; }
    // Next dart of the face walk that has its face on the left of d.
    Dart face_next(Dart d) const { return dprev[twin(d)]; }
    Dart face_prev(Dart d) const { return twin(dnext[d]); }

    std::size_t vertex_count() const {
        std::size_t n = 0;
        for (bool a : valive) n += a;
        return n;
    }
    std::size_t edge_count() const {
        std::size_t n = 0;
        for (bool a : ealive) n += a;
        return n;
    }

    VertexId add_vertex(VertexKind k) {
        vkind.push_back(k);
        valive.push_back(true);
        vfirst.push_back(kNoDart);
        vdegree.push_back(0);
        return static_cast<VertexId>(vkind.size() - 1);
    }

    LogicalId add_logical(VertexId u, VertexId v) {
        logical.push_back({u, v, true});
        return static_cast<LogicalId>(logical.size() - 1);
    }

    // Insert edge (u,v); the dart at u goes immediately CCW-after after_u in
    // u's rotation (after_u == kNoDart when u is isolated), likewise at v.
    EdgeId add_edge(VertexId u, Dart after_u, VertexId v, Dart after_v,
                    EdgeKind kind, LogicalId lg = kNoLogical) {
        EdgeId e = static_cast<EdgeId>(ekind.size());
        ekind.push_back(kind);
        ealive.push_back(true);
        elogical.push_back(lg);
        Dart du = 2 * e, dv = 2 * e + 1;
        dnext.resize(2 * e + 2);
        dprev.resize(2 * e + 2);
        dtail.resize(2 * e + 2);
        dtail[du] = u;
        dtail[dv] = v;
        attach_dart(u, du, after_u);
        if (u == v && after_v == kNoDart) after_v = du; // self-loop bootstrap
        attach_dart(v, dv, after_v);
        return e;
    }

    void attach_dart(VertexId v, Dart d, Dart after) {
        if (after == kNoDart) {
            if (vfirst[v] != kNoDart)
                throw StructuralError("attach without position at non-isolated vertex");
            dnext[d] = d;
            dprev[d] = d;
            vfirst[v] = d;
        } else {
            if (dtail[after] != v) throw StructuralError("position dart at wrong vertex");
            dnext[d] = dnext[after];
            dprev[d] = after;
            dprev[dnext[after]] = d;
            dnext[after] = d;
        }
        ++vdegree[v];
    }

    void detach_dart(Dart d) {
        VertexId v = dtail[d];
        if (dnext[d] == d) {
            vfirst[v] = kNoDart;
        } else {
            dnext[dprev[d]] = dnext[d];
            dprev[dnext[d]] = dprev[d];
            if (vfirst[v] == d) vfirst[v] = dnext[d];
        }
        --vdegree[v];
    }

    void remove_edge(EdgeId e) {
        if (!ealive[e]) throw StructuralError("edge already removed");
        detach_dart(2 * e);
        detach_dart(2 * e + 1);
        ealive[e] = false;
    }

    void remove_isolated_vertex(VertexId v) {
        if (vdegree[v] != 0) throw StructuralError("vertex not isolated");
        valive[v] = false;
    }

    struct Subdivision {
        VertexId mid;
        EdgeId first;  // (u, mid), reuses the old edge id
        EdgeId second; // (mid, v)
    };

    // Split edge e = (u,v) by a new vertex. The dart ids at u keep their
    // rotation slots; v's slot is taken over by the new edge's dart.
    Subdivision subdivide_edge(EdgeId e, VertexKind mid_kind) {
        Dart du = 2 * e, dv = 2 * e + 1;
        VertexId v = dtail[dv];
        VertexId s = add_vertex(mid_kind);

        EdgeId f = static_cast<EdgeId>(ekind.size());
        ekind.push_back(ekind[e]);
        ealive.push_back(true);
        elogical.push_back(elogical[e]);
        Dart fs = 2 * f, fv = 2 * f + 1;
        dnext.resize(2 * f + 2);
        dprev.resize(2 * f + 2);
        dtail.resize(2 * f + 2);

        // fv replaces dv in v's rotation.
        dtail[fv] = v;
        if (dnext[dv] == dv) {
            dnext[fv] = fv;
            dprev[fv] = fv;
            vfirst[v] = fv;
        } else {
            dnext[fv] = dnext[dv];
            dprev[fv] = dprev[dv];
            dnext[dprev[dv]] = fv;
            dprev[dnext[dv]] = fv;
            if (vfirst[v] == dv) vfirst[v] = fv;
        }
        // s's rotation: [dv (s->u side), fs (s->v side)].
        dtail[dv] = s;
        dtail[fs] = s;
        dnext[dv] = fs;
        dprev[dv] = fs;
        dnext[fs] = dv;
        dprev[fs] = dv;
        vfirst[s] = dv;
        vdegree[s] = 2;
        return {s, e, f};
    }

    VertexId logical_u(LogicalId l) const { return logical[l].u; }
    VertexId logical_v(LogicalId l) const { return logical[l].v; }

    std::vector<Dart> rotation(VertexId v) const {
        std::vector<Dart> r;
        if (vfirst[v] == kNoDart) return r;
        Dart d = vfirst[v];
        do {
            r.push_back(d);
            d = dnext[d];
        } while (d != vfirst[v]);
        return r;
    }

    std::vector<Dart> face_walk(Dart start) const {
        std::vector<Dart> w;
        Dart d = start;
        do {
            w.push_back(d);
            d = face_next(d);
            if (w.size() > dnext.size()) throw StructuralError("face walk does not close");
        } while (d != start);
        return w;
    }

    // All face walks plus a dart -> face index map.
    struct FaceSet {
        std::vector<std::vector<Dart>> walks;
        std::vector<std::int32_t> face_of; // indexed by dart, -1 for dead darts
    };

    FaceSet faces() const {
        FaceSet fs;
        fs.face_of.assign(dnext.size(), -1);
        for (Dart d = 0; d < static_cast<Dart>(dnext.size()); ++d) {
            if (!ealive[edge_of(d)] || fs.face_of[d] != -1) continue;
            std::int32_t id = static_cast<std::int32_t>(fs.walks.size());
            std::vector<Dart> walk;
            Dart cur = d;
            do {
                fs.face_of[cur] = id;
                walk.push_back(cur);
                cur = face_next(cur);
            } while (cur != d);
            fs.walks.push_back(std::move(walk));
        }
        return fs;
    }

    // Rotation-system sanity plus Euler's formula per connected component.
    void check_valid() const {
        std::size_t live_darts = 0;
        for (Dart d = 0; d < static_cast<Dart>(dnext.size()); ++d) {
            if (!ealive[edge_of(d)]) continue;
            ++live_darts;
            if (!valive[dtail[d]]) throw StructuralError("dart at dead vertex");
            if (dnext[dprev[d]] != d || dprev[dnext[d]] != d)
                throw StructuralError("rotation links broken");
            if (dtail[dnext[d]] != dtail[d]) throw StructuralError("rotation mixes vertices");
        }
        std::size_t seen = 0;
        for (VertexId v = 0; v < static_cast<VertexId>(vkind.size()); ++v) {
            if (!valive[v] || vfirst[v] == kNoDart) continue;
            seen += rotation(v).size();
        }
        if (seen != live_darts) throw StructuralError("darts not partitioned by rotations");

        // Euler per component: v - e + f = 1 + c over the whole graph.
        std::vector<std::int32_t> comp(vkind.size(), -1);
        std::int32_t ncomp = 0;
        for (VertexId v = 0; v < static_cast<VertexId>(vkind.size()); ++v) {
            if (!valive[v] || comp[v] != -1) continue;
            std::vector<VertexId> stack{v};
            comp[v] = ncomp;
            while (!stack.empty()) {
                VertexId u = stack.back();
                stack.pop_back();
                for (Dart d : rotation(u)) {
                    VertexId w = head(d);
                    if (comp[w] == -1) {
                        comp[w] = ncomp;
                        stack.push_back(w);
                    }
                }
            }
            ++ncomp;
        }
        long long V = 0, E = 0, F = static_cast<long long>(faces().walks.size());
        for (bool a : valive) V += a;
        for (bool a : ealive) E += a;
        // Isolated vertices contribute a component but no face.
        long long isolated = 0;
        for (VertexId v = 0; v < static_cast<VertexId>(vkind.size()); ++v)
            if (valive[v] && vfirst[v] == kNoDart) ++isolated;
        if (V - E + F != 1 + ncomp - isolated)
            throw StructuralError("rotation system is not planar (Euler check failed)");
    }

    bool is_connected() const {
        VertexId start = kNoVertex;
        for (VertexId v = 0; v < static_cast<VertexId>(vkind.size()); ++v)
            if (valive[v]) { start = v; break; }
        if (start == kNoVertex) return true;
        std::vector<bool> seen(vkind.size(), false);
        std::vector<VertexId> stack{start};
        seen[start] = true;
        std::size_t cnt = 1;
        while (!stack.empty()) {
            VertexId u = stack.back();
            stack.pop_back();
            for (Dart d : rotation(u)) {
                VertexId w = head(d);
                if (!seen[w]) { seen[w] = true; stack.push_back(w); ++cnt; }
            }
        }
        return cnt == vertex_count();
    }
};

} // namespace racdraw
