#include "aclab/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "aclab/conformal_map.hpp"

namespace aclab {

namespace {

constexpr double nan_v = std::numeric_limits<double>::quiet_NaN();

double wrap(double t)
{
    t = std::fmod(t, two_pi);
    return t < 0.0 ? t + two_pi : t;
}

double orient(const Vec2& a, const Vec2& b, const Vec2& c)
{
    return (b - a).x() * (c - a).y() - (b - a).y() * (c - a).x();
}

void add_ccw(TriMesh& m, int i, int j, int k)
{
    if (orient(m.nodes[i], m.nodes[j], m.nodes[k]) < 0.0) std::swap(j, k);
    m.triangles.push_back({i, j, k});
}

int add_node(TriMesh& m, const Vec2& x, int component, double theta)
{
    m.nodes.push_back(x);
    m.node_component.push_back(component);
    m.node_param.push_back(theta);
    return m.num_nodes() - 1;
}

// Ring of n nodes at radius r, angles offset + 2 pi i / n.
std::vector<int> add_ring(TriMesh& m, double r, int n, double offset, int component)
{
    std::vector<int> ids(n);
    for (int i = 0; i < n; ++i) {
        const double t = wrap(offset + two_pi * i / n);
        ids[i] = add_node(m, Vec2(r * std::cos(t), r * std::sin(t)), component,
                          component >= 0 ? t : nan_v);
    }
    return ids;
}

// Triangulates the band between two concentric rings by merging their angle sequences.
void zipper(TriMesh& m, const std::vector<int>& a, double off_a, const std::vector<int>& b, double off_b)
{
    const int na = static_cast<int>(a.size()), nb = static_cast<int>(b.size());
    // Both sequences start at their first node; unwrap the later ring's offset.
    if (off_b < off_a) off_b += two_pi;
    int i = 0, j = 0;
    while (i < na || j < nb) {
        const double next_a = off_a + two_pi * (i + 1) / na;
        const double next_b = off_b + two_pi * (j + 1) / nb;
        const bool step_b = i == na || (j < nb && next_b <= next_a + 1e-12);
        if (step_b) {
            add_ccw(m, a[i % na], b[j % nb], b[(j + 1) % nb]);
            ++j;
        } else {
            add_ccw(m, a[i % na], b[j % nb], a[(i + 1) % na]);
            ++i;
        }
    }
}

std::uint64_t edge_key(int a, int b)
{
    const auto lo = static_cast<std::uint64_t>(std::min(a, b));
    const auto hi = static_cast<std::uint64_t>(std::max(a, b));
    return (lo << 32) | hi;
}

} // namespace

double mid_angle(double a, double b) { return lerp_angle(a, b, 0.5); }

double lerp_angle(double a, double b, double t)
{
    double d = std::remainder(b - a, two_pi);
    return wrap(a + t * d);
}

double TriMesh::signed_area(int t) const
{
    const auto& tri = triangles[t];
    return 0.5 * orient(nodes[tri[0]], nodes[tri[1]], nodes[tri[2]]);
}

double TriMesh::area() const
{
    double a = 0.0;
    for (int t = 0; t < num_triangles(); ++t) a += signed_area(t);
    return a;
}

double TriMesh::max_edge_length() const
{
    double h = 0.0;
    for (const auto& t : triangles)
        for (int e = 0; e < 3; ++e) h = std::max(h, (nodes[t[e]] - nodes[t[(e + 1) % 3]]).norm());
    return h;
}

int TriMesh::num_components() const
{
    int c = 0;
    for (int v : node_component) c = std::max(c, v + 1);
    return c;
}

void TriMesh::check() const
{
    for (int t = 0; t < num_triangles(); ++t) {
        const double a = signed_area(t);
        if (!(a > 0.0)) {
            const auto& tri = triangles[t];
            std::ostringstream os;
            os << "mesh: triangle " << t << " (nodes " << tri[0] << ", " << tri[1] << ", " << tri[2]
               << ") has non-positive area " << a;
            throw InvalidInput(os.str());
        }
    }
}

void TriMesh::rebuild_boundary()
{
    std::unordered_map<std::uint64_t, int> count;
    std::unordered_map<std::uint64_t, std::array<int, 2>> directed;
    for (const auto& t : triangles)
        for (int e = 0; e < 3; ++e) {
            const int a = t[e], b = t[(e + 1) % 3];
            const auto k = edge_key(a, b);
            ++count[k];
            directed[k] = {a, b};
        }
    boundary.clear();
    for (const auto& [k, c] : count) {
        if (c != 1) continue;
        const auto [a, b] = directed[k];
        const int ca = node_component[a], cb = node_component[b];
        if (ca < 0 || ca != cb)
            throw InvalidInput("mesh: boundary edge (" + std::to_string(a) + ", " + std::to_string(b) +
                               ") joins nodes not on a common boundary component");
        boundary.push_back({a, b, ca});
    }
    std::sort(boundary.begin(), boundary.end(), [this](const BoundaryEdge& x, const BoundaryEdge& y) {
        if (x.component != y.component) return x.component < y.component;
        return node_param[x.a] < node_param[y.a];
    });
}

TriMesh coarse_disc_mesh(double radius)
{
    constexpr int rings = 3;
    TriMesh m;
    const int center = add_node(m, Vec2::Zero(), -1, nan_v);
    std::vector<int> prev{center};
    double prev_off = 0.0;
    for (int k = 1; k <= rings; ++k) {
        // Rings graded toward the boundary.
        const double r = radius * (1.0 - std::pow(1.0 - double(k) / rings, 1.3));
        const auto ring = add_ring(m, r, 6 * k, 0.0, k == rings ? 0 : -1);
        if (k == 1) {
            for (int i = 0; i < 6; ++i) add_ccw(m, center, ring[i], ring[(i + 1) % 6]);
        } else {
            zipper(m, prev, prev_off, ring, 0.0);
        }
        prev = ring;
    }
    m.rebuild_boundary();
    return m;
}

TriMesh coarse_annulus_mesh(double r_in, double r_out)
{
    constexpr int layers = 2;
    constexpr int per_ring = 16;
    TriMesh m;
    std::vector<int> prev;
    double prev_off = 0.0;
    for (int l = 0; l <= layers; ++l) {
        const double r = r_in + (r_out - r_in) * l / layers;
        const double off = l * pi / per_ring;
        const int comp = l == 0 ? 1 : (l == layers ? 0 : -1);
        const auto ring = add_ring(m, r, per_ring, off, comp);
        if (l > 0) zipper(m, prev, prev_off, ring, off);
        prev = ring;
        prev_off = off;
    }
    m.rebuild_boundary();
    return m;
}

TriMesh refine(const TriMesh& mesh, const BoundaryProjector& project)
{
    TriMesh out;
    out.nodes = mesh.nodes;
    out.node_component = mesh.node_component;
    out.node_param = mesh.node_param;
    out.level = mesh.level + 1;

    std::unordered_map<std::uint64_t, int> on_boundary;
    for (const auto& e : mesh.boundary) on_boundary[edge_key(e.a, e.b)] = e.component;

    std::unordered_map<std::uint64_t, int> mid;
    mid.reserve(mesh.triangles.size() * 2);
    auto midpoint = [&](int a, int b) {
        const auto k = edge_key(a, b);
        if (auto it = mid.find(k); it != mid.end()) return it->second;
        int id;
        if (auto bt = on_boundary.find(k); bt != on_boundary.end()) {
            const double t = mid_angle(mesh.node_param[a], mesh.node_param[b]);
            id = add_node(out, project(bt->second, t), bt->second, t);
        } else {
            id = add_node(out, 0.5 * (mesh.nodes[a] + mesh.nodes[b]), -1, nan_v);
        }
        mid.emplace(k, id);
        return id;
    };

    out.triangles.reserve(mesh.triangles.size() * 4);
    for (const auto& t : mesh.triangles) {
        const int a = t[0], b = t[1], c = t[2];
        const int ab = midpoint(a, b), bc = midpoint(b, c), ca = midpoint(c, a);
        out.triangles.push_back({a, ab, ca});
        out.triangles.push_back({ab, b, bc});
        out.triangles.push_back({ca, bc, c});
        out.triangles.push_back({ab, bc, ca});
    }
    out.rebuild_boundary();
    return out;
}

TriMesh map_mesh(const TriMesh& mesh, const ConformalMap& map)
{
    TriMesh out = mesh;
    for (auto& x : out.nodes) x = map.apply(x);
    return out;
}

void write_mesh(std::ostream& out, const TriMesh& mesh)
{
    out.precision(17);
    out << "# aclab-mesh v1\n";
    out << "level " << mesh.level << "\n";
    out << "nodes " << mesh.num_nodes() << "\n";
    for (int i = 0; i < mesh.num_nodes(); ++i) {
        out << mesh.nodes[i].x() << " " << mesh.nodes[i].y();
        if (mesh.node_component[i] >= 0) out << " " << mesh.node_component[i] << " " << mesh.node_param[i];
        out << "\n";
    }
    out << "triangles " << mesh.num_triangles() << "\n";
    for (const auto& t : mesh.triangles) out << t[0] << " " << t[1] << " " << t[2] << "\n";
}

TriMesh read_mesh(std::istream& in)
{
    TriMesh m;
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& msg) {
        throw InvalidInput("mesh file line " + std::to_string(lineno) + ": " + msg);
    };
    auto next = [&]() -> std::string {
        while (std::getline(in, line)) {
            ++lineno;
            const auto p = line.find_first_not_of(" \t\r");
            if (p == std::string::npos || line[p] == '#') continue;
            return line;
        }
        fail("unexpected end of file");
        return {};
    };
    auto header = [&](const std::string& key) {
        std::istringstream is(next());
        std::string k;
        long n = -1;
        if (!(is >> k >> n) || k != key || n < 0) fail("expected '" + key + " <count>'");
        return static_cast<int>(n);
    };
    {
        std::istringstream is(next());
        std::string k;
        if (!(is >> k >> m.level) || k != "level") fail("expected 'level <n>'");
    }
    const int n = header("nodes");
    for (int i = 0; i < n; ++i) {
        std::istringstream is(next());
        double x, y;
        if (!(is >> x >> y)) fail("expected node coordinates 'x y [component theta]'");
        int c = -1;
        double t = nan_v;
        if (is >> c) {
            if (!(is >> t)) fail("boundary node needs 'component theta'");
        }
        add_node(m, Vec2(x, y), c, t);
    }
    const int nt = header("triangles");
    for (int i = 0; i < nt; ++i) {
        std::istringstream is(next());
        int a, b, c;
        if (!(is >> a >> b >> c)) fail("expected triangle 'i j k'");
        for (int v : {a, b, c})
            if (v < 0 || v >= n) fail("triangle references node " + std::to_string(v) + " out of range");
        m.triangles.push_back({a, b, c});
    }
    m.check();
    m.rebuild_boundary();
    return m;
}

} // namespace aclab
