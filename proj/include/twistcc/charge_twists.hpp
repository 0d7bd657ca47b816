#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "twistcc/colex.hpp"
#include "twistcc/pauli.hpp"

namespace twistcc {

// Domain wall between a twist pair: a dual-lattice path whose interior faces
// get the mixed Y/Z stabilizers of the wall.
struct DomainWallPath {
    std::vector<int> dual_path;  // face ids, first and last are the twists
};

enum class FaceClass { Twist, Wall, Normal, Outer };

struct WallGeometry {
    int twist_a = -1, twist_b = -1;
    std::vector<int> interior;        // wall faces in path order
    std::vector<int> crossed_edges;   // primal edges the wall passes through
    std::map<int, std::set<int>> m1;  // wall face -> vertices left of the path
};

// Stabilizer/subsystem code from X-type charge-permuting twists. The lattice
// itself is never modified; qubit q lives on vertex q.
struct ChargeTwistedCode {
    Lattice lat;
    std::vector<WallGeometry> walls;
    std::vector<int> twists;              // 2 per wall, creation order
    std::map<int, FaceClass> face_class;  // every alive face
    std::set<int> wall_edges;             // all crossed edges

    PauliGroupBasis stabilizers;              // generator list
    std::vector<int> stabilizer_face;         // provenance, face id per generator
    std::vector<LogicalPair> logicals;        // floor(t/3) canonical pairs
    std::vector<LogicalPair> gauge_pairs;     // remaining encoded qubits
    std::vector<std::vector<int>> qubit_twists;  // twist triple per logical qubit

    std::size_t n() const { return lat.num_vertices(); }
    std::size_t t() const { return twists.size(); }

    // u, v on opposite sides of the wall running through `face`.
    bool wall_separated_in_face(int face, int u, int v) const;
};

struct FaceClassification {
    std::vector<int> twist_faces;
    std::vector<int> wall_faces;
    std::vector<int> normal_faces;
};

// Untwisted color code stabilizers (X and Z on every face, outer included).
PauliGroupBasis base_stabilizers(const Lattice& lat);

// The construction: validates paths, assigns stabilizers, builds canonical
// logicals for the floor(t/3) encoding and completes the gauge pairs.
// Throws std::invalid_argument naming the offending path on bad input.
ChargeTwistedCode insert_charge_twists(const Lattice& lat,
                                       const std::vector<DomainWallPath>& paths);

FaceClassification classify_faces(const ChargeTwistedCode& code);

struct CodeParameters {
    std::size_t n = 0;
    std::size_t k = 0;       // t - 1
    std::size_t logical = 0; // floor(t/3)
    std::size_t gauge = 0;   // k - logical
    std::size_t rank_stabilizers = 0;
};
CodeParameters count_parameters(const ChargeTwistedCode& code);

// A string on the c-shrunk lattice. Flavor is the Pauli at the first support
// vertex; Y/Z strings flip flavor at every domain-wall crossing, X strings
// never do.
struct ColorString {
    Color color;
    char flavor = 'Z';        // 'X', 'Y' or 'Z'
    bool closed = false;
    std::vector<int> faces;   // visited c-faces
    std::vector<int> edges;   // c-edges; closed: size == faces, open: faces-1
};

PauliOperator string_to_pauli(const ChargeTwistedCode& code, const ColorString& s);

// Closed c-colored string whose winding parity around each twist matches
// `enclosed`. Empty optional when no such cycle exists on this lattice.
std::optional<ColorString> find_enclosing_string(const ChargeTwistedCode& code, Color c,
                                                 const std::set<int>& enclosed_twists);

// Canonical logical strings per encoded qubit: Z on the first created pair of
// the triple (blue string), X spanning into the next pair (green string).
struct CanonicalStrings {
    std::vector<ColorString> z_strings;
    std::vector<ColorString> x_strings;
};
CanonicalStrings canonical_logical_strings(const ChargeTwistedCode& code);

// Wall planning helper: lay `pairs` twist pairs along a long interior dual
// path with the given separation. Deterministic.
std::vector<DomainWallPath> plan_twist_row(const Lattice& lat, int pairs, int separation);

// Commutation audit over all generator pairs, grouped by the six adjacent
// face-class cases (twist/wall/normal combinations).
struct CommutationAudit {
    std::map<std::string, int> cases;   // case label -> pairs checked
    std::vector<std::string> failures;  // human-readable anticommuting pairs
    bool ok() const { return failures.empty(); }
};
CommutationAudit commutation_audit(const ChargeTwistedCode& code);

// The two stabilizer dependency products (over red+blue and red+green faces).
// Both must be the identity with +1 sign.
std::vector<PauliOperator> dependency_products(const ChargeTwistedCode& code);

}  // namespace twistcc
