#include "flatfront/mesh_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace flatfront {

Vec GridSpec::param(const Front& front, int i, int j) const {
    const int n = front.dim();
    Vec p = Vec::Zero(n);
    if (fixed.size() == n) p = fixed;
    p[0] = t0 + (t1 - t0) * i / static_cast<double>(nt - 1);
    p[w_index] = w_min + (w_max - w_min) * j / static_cast<double>(nw - 1);
    return p;
}

SampledMesh sample_front(const Front& front, const GridSpec& grid,
                         const std::map<std::string, ChannelFn>& channels) {
    SampledMesh mesh;
    mesh.rows = grid.nt;
    mesh.cols = grid.nw;
    for (const auto& [name, fn] : channels) mesh.channels[name] = {};
    for (int i = 0; i < grid.nt; ++i) {
        for (int j = 0; j < grid.nw; ++j) {
            const Vec p = grid.param(front, i, j);
            mesh.vertices.push_back(front.position(p));
            mesh.normals.push_back(front.normal(p));
            for (const auto& [name, fn] : channels)
                mesh.channels[name].push_back(fn(p));
        }
    }
    for (int i = 0; i + 1 < grid.nt; ++i)
        for (int j = 0; j + 1 < grid.nw; ++j)
            mesh.quads.push_back({mesh.vertex(i, j), mesh.vertex(i + 1, j),
                                  mesh.vertex(i + 1, j + 1), mesh.vertex(i, j + 1)});
    return mesh;
}

SampledMesh singular_surface_mesh(const FlatFront& front, const GridSpec& grid) {
    if (front.dim() != 3)
        throw FlatFrontError("singular_surface_mesh expects an n = 3 front");
    const auto strata = stratify_singular_set(front, grid.nt - 1);
    SampledMesh mesh;
    std::vector<int> col_of_row;
    int rows = 0;
    for (const auto& st : strata) {
        if (st.tag != StratumTag::S2) continue;
        for (int j = 0; j < grid.nw; ++j) {
            const double w2 =
                grid.w_min + (grid.w_max - grid.w_min) * j / (grid.nw - 1);
            Vec p = Vec::Zero(3);
            p[0] = st.t0;
            // Graph over the non-dominant coordinate.
            const int jstar = st.dominant_index;
            const int jo = st.other_indices.front();
            p[1 + jo] = w2;
            p[1 + jstar] = st.offset - st.mu_hat.front() * w2;
            mesh.vertices.push_back(front.position(p));
            mesh.normals.push_back(front.normal(p));
            mesh.channels["rho_hat"].push_back(front.rho_hat(p));
        }
        ++rows;
    }
    mesh.rows = rows;
    mesh.cols = grid.nw;
    for (int i = 0; i + 1 < rows; ++i)
        for (int j = 0; j + 1 < grid.nw; ++j)
            mesh.quads.push_back({mesh.vertex(i, j), mesh.vertex(i + 1, j),
                                  mesh.vertex(i + 1, j + 1), mesh.vertex(i, j + 1)});
    return mesh;
}

namespace {

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", x);
    return buf;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoFailure("cannot open for writing: " + path);
    return out;
}

}  // namespace

void export_obj(const SampledMesh& mesh, const std::string& path,
                std::array<int, 3> proj) {
    auto out = open_out(path);
    for (const Vec& v : mesh.vertices)
        out << "v " << fmt(v[proj[0]]) << ' ' << fmt(v[proj[1]]) << ' '
            << fmt(v[proj[2]]) << '\n';
    for (const Vec& n : mesh.normals)
        out << "vn " << fmt(n[proj[0]]) << ' ' << fmt(n[proj[1]]) << ' '
            << fmt(n[proj[2]]) << '\n';
    for (const auto& q : mesh.quads) {
        out << 'f';
        for (int idx : q) out << ' ' << idx + 1 << "//" << idx + 1;
        out << '\n';
    }
    if (!out) throw IoFailure("write failed: " + path);
}

void export_ply(const SampledMesh& mesh, const std::string& path,
                std::array<int, 3> proj) {
    auto out = open_out(path);
    out << "ply\nformat ascii 1.0\n";
    out << "element vertex " << mesh.vertices.size() << '\n';
    out << "property float x\nproperty float y\nproperty float z\n";
    out << "property float nx\nproperty float ny\nproperty float nz\n";
    for (const auto& [name, _] : mesh.channels)
        out << "property float " << name << '\n';
    out << "element face " << mesh.quads.size() << '\n';
    out << "property list uchar int vertex_indices\nend_header\n";
    for (std::size_t k = 0; k < mesh.vertices.size(); ++k) {
        const Vec& v = mesh.vertices[k];
        const Vec& n = mesh.normals[k];
        out << fmt(v[proj[0]]) << ' ' << fmt(v[proj[1]]) << ' ' << fmt(v[proj[2]])
            << ' ' << fmt(n[proj[0]]) << ' ' << fmt(n[proj[1]]) << ' '
            << fmt(n[proj[2]]);
        for (const auto& [name, vals] : mesh.channels) out << ' ' << fmt(vals[k]);
        out << '\n';
    }
    for (const auto& q : mesh.quads)
        out << "4 " << q[0] << ' ' << q[1] << ' ' << q[2] << ' ' << q[3] << '\n';
    if (!out) throw IoFailure("write failed: " + path);
}

void export_polyline(const std::vector<Vec>& points, const std::string& path,
                     std::array<int, 3> proj) {
    auto out = open_out(path);
    for (const Vec& v : points)
        out << "v " << fmt(v[proj[0]]) << ' ' << fmt(v[proj[1]]) << ' '
            << fmt(v[proj[2]]) << '\n';
    out << 'l';
    for (std::size_t k = 0; k < points.size(); ++k) out << ' ' << k + 1;
    out << '\n';
    if (!out) throw IoFailure("write failed: " + path);
}

ParsedMesh read_obj(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoFailure("cannot open: " + path);
    ParsedMesh mesh;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ss(line);
        std::string tag;
        ss >> tag;
        if (tag == "v" || tag == "vn") {
            Vec v(3);
            ss >> v[0] >> v[1] >> v[2];
            (tag == "v" ? mesh.vertices : mesh.normals).push_back(v);
        } else if (tag == "f") {
            std::vector<int> face;
            std::string item;
            while (ss >> item)
                face.push_back(std::stoi(item.substr(0, item.find('/'))) - 1);
            mesh.faces.push_back(face);
        }
    }
    return mesh;
}

ParsedMesh read_ply(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoFailure("cannot open: " + path);
    ParsedMesh mesh;
    std::string line;
    std::size_t n_vert = 0, n_face = 0;
    std::vector<std::string> props;
    while (std::getline(in, line)) {
        std::istringstream ss(line);
        std::string tag;
        ss >> tag;
        if (tag == "element") {
            std::string what;
            std::size_t count;
            ss >> what >> count;
            (what == "vertex" ? n_vert : n_face) = count;
        } else if (tag == "property") {
            std::string type, name;
            ss >> type;
            if (type == "list") continue;
            ss >> name;
            props.push_back(name);
        } else if (tag == "end_header") {
            break;
        }
    }
    for (std::size_t k = 0; k < n_vert; ++k) {
        std::getline(in, line);
        std::istringstream ss(line);
        Vec v(3), n(3);
        ss >> v[0] >> v[1] >> v[2] >> n[0] >> n[1] >> n[2];
        mesh.vertices.push_back(v);
        mesh.normals.push_back(n);
        for (std::size_t i = 6; i < props.size(); ++i) {
            double val;
            ss >> val;
            mesh.channels[props[i]].push_back(val);
        }
    }
    for (std::size_t k = 0; k < n_face; ++k) {
        std::getline(in, line);
        std::istringstream ss(line);
        int cnt;
        ss >> cnt;
        std::vector<int> face(cnt);
        for (int& idx : face) ss >> idx;
        mesh.faces.push_back(face);
    }
    return mesh;
}

}  // namespace flatfront
