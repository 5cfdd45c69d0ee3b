#pragma once

#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "flatfront/front.hpp"
#include "flatfront/front_builder.hpp"
#include "flatfront/singular.hpp"
#include "flatfront/types.hpp"

namespace flatfront {

// Rectangular sampling window in parameter space.  The second grid axis runs
// along parameter index `w_index`; all other w-coordinates are pinned to the
// entries of `fixed`.
struct GridSpec {
    int nt = 64;
    int nw = 16;
    double t0 = 0.0, t1 = 1.0;
    double w_min = -2.0, w_max = 2.0;
    int w_index = 1;
    Vec fixed;  // size n; entries at 0 and w_index are ignored

    Vec param(const Front& front, int i, int j) const;
};

struct SampledMesh {
    std::vector<Vec> vertices;  // ambient coordinates
    std::vector<Vec> normals;   // unit normals, same count
    std::vector<std::array<int, 4>> quads;
    std::map<std::string, std::vector<double>> channels;

    int rows = 0, cols = 0;
    int vertex(int i, int j) const { return i * cols + j; }
};

using ChannelFn = std::function<double(const Vec&)>;

SampledMesh sample_front(const Front& front, const GridSpec& grid,
                         const std::map<std::string, ChannelFn>& channels = {});

// Graph mesh of the S2 part of the singular set {rho_hat = 0} of an n = 3
// front: per t-slice, w_{j*} is solved from the stratum graph over w2.
SampledMesh singular_surface_mesh(const FlatFront& front, const GridSpec& grid);

// Deterministic ASCII writers (9 significant digits).  Vertices beyond R^3
// are projected onto coordinates `proj`.
void export_obj(const SampledMesh& mesh, const std::string& path,
                std::array<int, 3> proj = {0, 1, 2});
void export_ply(const SampledMesh& mesh, const std::string& path,
                std::array<int, 3> proj = {0, 1, 2});
void export_polyline(const std::vector<Vec>& points, const std::string& path,
                     std::array<int, 3> proj = {0, 1, 2});

// Internal readers for round-trip tests.
struct ParsedMesh {
    std::vector<Vec> vertices;
    std::vector<Vec> normals;
    std::vector<std::vector<int>> faces;
    std::map<std::string, std::vector<double>> channels;
};

ParsedMesh read_obj(const std::string& path);
ParsedMesh read_ply(const std::string& path);

}  // namespace flatfront
