#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace twistcc {

enum class Color : uint8_t { R = 0, G = 1, B = 2 };

inline char color_char(Color c) { return c == Color::R ? 'r' : (c == Color::G ? 'g' : 'b'); }
std::optional<Color> color_from_char(char c);

// Embedded trivalent lattice with colored faces. Faces store counterclockwise
// vertex cycles; the unbounded face is stored like any other face and flagged
// by `outer_face`. Parallel edges are legal (weight-2 boundary stabilizers).
// Vertex coordinates are for rendering only.
class Lattice {
public:
    struct Vertex {
        int id = -1;
        double x = 0, y = 0;
        bool alive = true;
    };
    struct Edge {
        int id = -1;
        int u = -1, v = -1;
        Color color = Color::R;
        bool alive = true;
    };
    struct Face {
        int id = -1;
        std::vector<int> vertices;  // ccw cycle
        Color color = Color::R;
        bool alive = true;
    };

    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    std::vector<Face> faces;
    int outer_face = -1;

    int add_vertex(double x, double y);
    int add_edge(int u, int v, Color c);
    int add_face(std::vector<int> cycle, Color c);

    // Derived incidence; call after any structural change.
    void finalize();

    std::size_t num_vertices() const { return alive_vertices_; }
    std::size_t num_edges() const { return alive_edges_; }
    std::size_t num_faces() const { return alive_faces_; }  // includes outer

    const std::vector<int>& faces_of_vertex(int v) const { return vfaces_[std::size_t(v)]; }
    const std::vector<int>& edges_of_vertex(int v) const { return vedges_[std::size_t(v)]; }
    const std::array<int, 2>& faces_of_edge(int e) const { return efaces_[std::size_t(e)]; }
    const std::vector<int>& edges_of_face(int f) const { return fedges_[std::size_t(f)]; }

    int degree(int v) const { return int(vedges_[std::size_t(v)].size()); }
    // Faces sharing an edge with f.
    std::vector<int> adjacent_faces(int f) const;
    // Any edge shared by faces f1, f2 (-1 if none).
    int shared_edge(int f1, int f2) const;
    // The face at vertex v that is not incident to edge e (third-face rule).
    int opposite_face(int v, int e) const;

    bool face_has_vertex(int f, int v) const;

private:
    std::size_t alive_vertices_ = 0, alive_edges_ = 0, alive_faces_ = 0;
    std::vector<std::vector<int>> vfaces_, vedges_, fedges_;
    std::vector<std::array<int, 2>> efaces_;
};

struct ValidationIssue {
    std::string rule;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool ok() const { return issues.empty(); }
};

// Checks trivalence, Euler relation, 2f = v + 4, proper face coloring and the
// like-color edge rule. Violations are data, not failures.
ValidationReport validate(const Lattice& lat);

struct DualGraph {
    std::vector<int> nodes;                       // face ids
    std::vector<std::array<int, 2>> links;        // face id pairs, one per edge
    std::map<int, std::vector<int>> adjacency;    // face id -> neighbor face ids
};

struct ShrunkGraph {
    Color color;
    std::vector<int> nodes;                 // c-colored face ids
    std::vector<std::array<int, 3>> links;  // {edge id, face id, face id}
};

DualGraph dual(const Lattice& lat);
ShrunkGraph shrunk(const Lattice& lat, Color c);

// Shortest-path distance between two faces in the dual (Definition of twist
// separation). Returns -1 if disconnected.
int twist_separation(const DualGraph& d, int f1, int f2);

// Dual BFS distances from a face, optionally refusing to route through the
// outer face or a blocked set.
std::vector<int> dual_distances(const Lattice& lat, int from,
                                const std::vector<int>& blocked = {});

Lattice build_hexagonal(int rows, int cols);
Lattice build_square_octagon(int rows, int cols);

}  // namespace twistcc
