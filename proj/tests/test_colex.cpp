#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "twistcc/colex.hpp"
#include "twistcc/json_io.hpp"

using namespace twistcc;

namespace {

void check_colex_identities(const Lattice& lat) {
    std::size_t v = lat.num_vertices(), e = lat.num_edges(), f = lat.num_faces();
    CHECK(3 * v == 2 * e);
    CHECK(v + f == e + 2);
    CHECK(2 * f == v + 4);
    auto rep = validate(lat);
    for (const auto& issue : rep.issues) CAPTURE(issue.rule + ": " + issue.detail);
    CHECK(rep.ok());
    CHECK(lat.faces[std::size_t(lat.outer_face)].color == Color::B);
}

}  // namespace

TEST_CASE("hexagonal lattices satisfy colex identities") {
    for (auto [r, c] : {std::pair{1, 1}, {1, 2}, {2, 2}, {3, 2}, {2, 3}, {3, 4}, {4, 6}}) {
        CAPTURE(r);
        CAPTURE(c);
        check_colex_identities(build_hexagonal(r, c));
    }
}

TEST_CASE("square-octagon lattices satisfy colex identities") {
    for (auto [r, c] : {std::pair{1, 1}, {2, 2}, {2, 3}, {3, 3}}) {
        CAPTURE(r);
        CAPTURE(c);
        check_colex_identities(build_square_octagon(r, c));
    }
}

TEST_CASE("validate flags broken lattices") {
    auto lat = build_hexagonal(2, 2);

    SUBCASE("deleted edge produces degree violations") {
        Lattice broken = lat;
        for (auto& e : broken.edges) {
            if (e.alive) { e.alive = false; break; }
        }
        bool threw = false;
        ValidationReport rep;
        try {
            broken.finalize();
            rep = validate(broken);
        } catch (const std::logic_error&) {
            threw = true;  // face side without matching edge
        }
        CHECK((threw || !rep.ok()));
    }

    SUBCASE("recolored face pair is flagged") {
        Lattice broken = lat;
        int f0 = -1;
        for (const auto& f : broken.faces) {
            if (f.id == broken.outer_face) continue;
            for (int g : broken.adjacent_faces(f.id)) {
                if (g == broken.outer_face) continue;
                f0 = f.id;
                broken.faces[std::size_t(g)].color = f.color;
                break;
            }
            if (f0 >= 0) break;
        }
        REQUIRE(f0 >= 0);
        auto rep = validate(broken);
        CHECK_FALSE(rep.ok());
        bool has_coloring = false;
        for (const auto& i : rep.issues) has_coloring |= (i.rule == "coloring");
        CHECK(has_coloring);
    }
}

TEST_CASE("dual counts and adjacency oracle") {
    for (auto lat : {build_hexagonal(2, 2), build_square_octagon(1, 1)}) {
        auto d = dual(lat);
        CHECK(d.nodes.size() == lat.num_faces());
        CHECK(d.links.size() == lat.num_edges());

        // oracle: recompute face adjacency directly and compare as pair sets
        std::set<std::pair<int, int>> from_dual, from_lattice;
        for (const auto& l : d.links)
            from_dual.insert({std::min(l[0], l[1]), std::max(l[0], l[1])});
        for (const auto& f : lat.faces) {
            if (!f.alive) continue;
            for (int g : lat.adjacent_faces(f.id))
                from_lattice.insert({std::min(f.id, g), std::max(f.id, g)});
        }
        CHECK(from_dual == from_lattice);
    }
}

TEST_CASE("shrunk graphs") {
    auto lat = build_hexagonal(2, 2);
    for (Color c : {Color::R, Color::G, Color::B}) {
        auto s = shrunk(lat, c);
        for (int f : s.nodes) CHECK(lat.faces[std::size_t(f)].color == c);
        for (const auto& l : s.links) {
            CHECK(lat.faces[std::size_t(l[1])].color == c);
            CHECK(lat.faces[std::size_t(l[2])].color == c);
        }
        // a c-face's shrunk degree equals its count of incident c-edges that
        // stick out of the face
        for (int f : s.nodes) {
            int cnt = 0;
            for (const auto& l : s.links) cnt += (l[1] == f) + (l[2] == f);
            int sticking = 0;
            for (int v : lat.faces[std::size_t(f)].vertices)
                for (int e : lat.edges_of_vertex(v))
                    if (lat.edges[std::size_t(e)].color == c &&
                        lat.faces_of_edge(e)[0] != f && lat.faces_of_edge(e)[1] != f)
                        ++sticking;
            CHECK(cnt == sticking);
        }
    }
}

TEST_CASE("twist separation is a metric on small duals") {
    auto lat = build_hexagonal(2, 2);
    auto d = dual(lat);
    for (int a : d.nodes) CHECK(twist_separation(d, a, a) == 0);
    for (const auto& l : d.links) CHECK(twist_separation(d, l[0], l[1]) == 1);
    for (int a : d.nodes) {
        for (int b : d.nodes) {
            int ab = twist_separation(d, a, b);
            CHECK(ab == twist_separation(d, b, a));
            for (int c : d.nodes) {
                CHECK(ab <= twist_separation(d, a, c) + twist_separation(d, c, b));
            }
        }
    }
}

TEST_CASE("lattice json round trip is lossless") {
    for (auto lat : {build_hexagonal(2, 3), build_square_octagon(2, 2)}) {
        auto text = lattice_to_json(lat);
        auto back = lattice_from_json(text);
        CHECK(lattice_to_json(back) == text);
        CHECK(back.num_vertices() == lat.num_vertices());
        CHECK(back.num_edges() == lat.num_edges());
        CHECK(back.num_faces() == lat.num_faces());
        CHECK(back.outer_face == lat.outer_face);
        CHECK(validate(back).ok());
    }
}
