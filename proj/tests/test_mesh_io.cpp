#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "flatfront/mesh_io.hpp"

using namespace flatfront;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

GridSpec tiny_grid() {
    GridSpec g;
    g.nt = 2;
    g.nw = 2;
    g.t0 = 0.0;
    g.t1 = 1.0;
    g.w_min = 0.0;
    g.w_max = 1.0;
    return g;
}

}  // namespace

TEST_CASE("sampling a plane on a 2x2 grid gives 4 vertices and 1 quad") {
    PlanePatch plane(2);
    SampledMesh mesh = sample_front(plane, tiny_grid());
    CHECK(mesh.vertices.size() == 4);
    CHECK(mesh.normals.size() == 4);
    REQUIRE(mesh.quads.size() == 1);
    CHECK(mesh.rows == 2);
    CHECK(mesh.cols == 2);
    // Quad indices address the sampled corners.
    for (int idx : mesh.quads[0]) CHECK(idx >= 0);
    for (int idx : mesh.quads[0]) CHECK(idx < 4);
}

TEST_CASE("channels are evaluated per vertex") {
    PlanePatch plane(2);
    SampledMesh mesh = sample_front(plane, tiny_grid(),
                                    {{"tval", [](const Vec& p) { return p[0]; }}});
    REQUIRE(mesh.channels.count("tval") == 1);
    CHECK(mesh.channels.at("tval").size() == mesh.vertices.size());
}

TEST_CASE("obj export round-trips vertices, normals and faces") {
    CylinderFront cyl(1.0, 2);
    GridSpec g;
    g.nt = 8;
    g.nw = 3;
    g.t1 = 3.0;
    SampledMesh mesh = sample_front(cyl, g);
    const std::string path = "test_roundtrip.obj";
    export_obj(mesh, path);
    ParsedMesh back = read_obj(path);
    REQUIRE(back.vertices.size() == mesh.vertices.size());
    REQUIRE(back.normals.size() == mesh.normals.size());
    REQUIRE(back.faces.size() == mesh.quads.size());
    for (std::size_t i = 0; i < mesh.vertices.size(); ++i) {
        CHECK((back.vertices[i] - mesh.vertices[i].head(3)).norm() < 1e-6);
        CHECK((back.normals[i] - mesh.normals[i].head(3)).norm() < 1e-6);
    }
    for (std::size_t q = 0; q < mesh.quads.size(); ++q)
        for (int c = 0; c < 4; ++c) CHECK(back.faces[q][c] == mesh.quads[q][c]);
    std::remove(path.c_str());
}

TEST_CASE("ply export round-trips per-vertex channels") {
    PlanePatch plane(2);
    SampledMesh mesh = sample_front(
        plane, tiny_grid(), {{"rho_hat", [](const Vec& p) { return p[0] - p[1]; }}});
    const std::string path = "test_roundtrip.ply";
    export_ply(mesh, path);
    ParsedMesh back = read_ply(path);
    REQUIRE(back.vertices.size() == mesh.vertices.size());
    REQUIRE(back.channels.count("rho_hat") == 1);
    const auto& ch = back.channels.at("rho_hat");
    REQUIRE(ch.size() == mesh.channels.at("rho_hat").size());
    for (std::size_t i = 0; i < ch.size(); ++i)
        CHECK(ch[i] == doctest::Approx(mesh.channels.at("rho_hat")[i]).epsilon(1e-6));
    std::remove(path.c_str());
}

TEST_CASE("exports are byte-deterministic") {
    CylinderFront cyl(1.3, 2);
    GridSpec g;
    g.nt = 6;
    g.nw = 4;
    g.t1 = 6.0;
    SampledMesh mesh = sample_front(cyl, g);
    export_obj(mesh, "det_a.obj");
    export_obj(mesh, "det_b.obj");
    CHECK(slurp("det_a.obj") == slurp("det_b.obj"));
    export_ply(mesh, "det_a.ply");
    export_ply(mesh, "det_b.ply");
    CHECK(slurp("det_a.ply") == slurp("det_b.ply"));
    for (const char* f : {"det_a.obj", "det_b.obj", "det_a.ply", "det_b.ply"})
        std::remove(f);
}

TEST_CASE("polyline export writes vertices and line records") {
    std::vector<Vec> pts;
    for (int k = 0; k < 5; ++k) {
        Vec v(3);
        v << k, 2 * k, -k;
        pts.push_back(v);
    }
    export_polyline(pts, "test_line.obj");
    const std::string text = slurp("test_line.obj");
    CHECK(text.find("v 0 0 ") != std::string::npos);
    CHECK(text.find("\nl ") != std::string::npos);
    std::remove("test_line.obj");
}

TEST_CASE("grid windows pin the off-axis coordinates") {
    PlanePatch plane(3);
    GridSpec g = tiny_grid();
    g.w_index = 2;
    g.fixed = Vec::Zero(3);
    g.fixed[1] = 0.75;
    const Vec p = g.param(plane, 1, 1);
    CHECK(p[0] == doctest::Approx(1.0));
    CHECK(p[1] == doctest::Approx(0.75));
    CHECK(p[2] == doctest::Approx(1.0));
}
