#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "twistcc/charge_twists.hpp"

using namespace twistcc;

namespace {

PauliGroupBasis stabs_and_gauge(const ChargeTwistedCode& code) {
    PauliGroupBasis b = code.stabilizers;
    for (const auto& g : code.gauge_pairs) {
        b.add(g.x, GeneratorKind::Gauge);
        b.add(g.z, GeneratorKind::Gauge);
    }
    return b;
}

}  // namespace

TEST_CASE("base colex code encodes zero qubits") {
    for (auto lat : {build_hexagonal(2, 2), build_square_octagon(2, 2)}) {
        auto basis = base_stabilizers(lat);
        CHECK(rank(basis) == lat.num_vertices());
        // four dependent stabilizers among the 2f face operators
        CHECK(basis.size() == 2 * lat.num_faces());
        CHECK(basis.size() - rank(basis) == 4);
    }
}

TEST_CASE("single pair on hexagonal lattice: k = 1") {
    auto lat = build_hexagonal(3, 4);
    auto paths = plan_twist_row(lat, 1, 3);
    auto code = insert_charge_twists(lat, paths);
    auto params = count_parameters(code);
    CHECK(params.n == lat.num_vertices());
    CHECK(params.k == 1);
    CHECK(params.logical == 0);  // floor(2/3)
    CHECK(params.gauge == 1);
    CHECK(code.gauge_pairs.size() == 1);
}

TEST_CASE("two pairs on square-octagon: k = 3, one canonical qubit") {
    auto lat = build_square_octagon(4, 6);
    auto paths = plan_twist_row(lat, 2, 2);
    auto code = insert_charge_twists(lat, paths);
    auto params = count_parameters(code);
    CHECK(params.k == 3);
    CHECK(params.logical == 1);
    CHECK(params.gauge == 2);
    CHECK(code.logicals.size() == 1);
    CHECK(code.gauge_pairs.size() == 2);
}

TEST_CASE("face classification") {
    auto lat = build_square_octagon(3, 5);

    SUBCASE("no twists: everything normal") {
        auto code = insert_charge_twists(lat, {});
        auto cls = classify_faces(code);
        CHECK(cls.twist_faces.empty());
        CHECK(cls.wall_faces.empty());
        CHECK(cls.normal_faces.size() == lat.num_faces() - 1);  // outer excluded
    }

    SUBCASE("twists and wall interiors are classified") {
        auto big = build_square_octagon(4, 6);
        auto paths = plan_twist_row(big, 2, 2);
        auto code = insert_charge_twists(big, paths);
        auto cls = classify_faces(code);
        CHECK(cls.twist_faces.size() == 4);
        CHECK(cls.wall_faces.size() == 2);  // separation-2 walls have one interior face each
        for (const auto& p : paths) {
            CHECK(code.face_class.at(p.dual_path.front()) == FaceClass::Twist);
            CHECK(code.face_class.at(p.dual_path[1]) == FaceClass::Wall);
        }
    }
}

TEST_CASE("insert rejects bad wall plans") {
    auto lat = build_square_octagon(3, 5);
    auto paths = plan_twist_row(lat, 1, 2);

    SUBCASE("separation below two") {
        DomainWallPath tiny;
        tiny.dual_path = {paths[0].dual_path[0], paths[0].dual_path[1]};
        CHECK_THROWS_AS(insert_charge_twists(lat, {tiny}), std::invalid_argument);
    }
    SUBCASE("crossing paths") {
        CHECK_THROWS_AS(insert_charge_twists(lat, {paths[0], paths[0]}), std::invalid_argument);
    }
    SUBCASE("broken dual path") {
        DomainWallPath bad = paths[0];
        std::swap(bad.dual_path[0], bad.dual_path[1]);
        // swapping makes consecutive faces non-adjacent on most lattices; if
        // they happen to stay adjacent the construction may legally succeed,
        // so only check that failure comes typed when it comes.
        try {
            insert_charge_twists(lat, {bad});
        } catch (const std::invalid_argument&) {
            CHECK(true);
        }
    }
}

TEST_CASE("commutation audit passes and covers the six cases") {
    auto lat = build_square_octagon(4, 6);
    auto code = insert_charge_twists(lat, plan_twist_row(lat, 2, 2));
    auto audit = commutation_audit(code);
    for (const auto& f : audit.failures) CAPTURE(f);
    CHECK(audit.ok());
    CHECK(audit.cases.count("normal/wall"));
    CHECK(audit.cases.count("normal/twist"));
    CHECK(audit.cases.count("twist/wall"));
    CHECK(audit.cases.count("normal/normal"));
}

TEST_CASE("dependency products are the exact identity") {
    auto lat = build_square_octagon(4, 6);
    auto code = insert_charge_twists(lat, plan_twist_row(lat, 2, 2));
    auto prods = dependency_products(code);
    REQUIRE(prods.size() == 2);
    for (const auto& p : prods) {
        CHECK(p.is_identity());
        CHECK(p.sign() == 1);
    }
}

TEST_CASE("string to pauli basics") {
    auto lat = build_square_octagon(3, 5);
    auto code = insert_charge_twists(lat, {});

    SUBCASE("one dashed hop is X tensor X on the edge endpoints") {
        // find any red edge between two non-outer faces
        for (const auto& e : code.lat.edges) {
            if (e.color != Color::R) continue;
            int fu = code.lat.opposite_face(e.u, e.id);
            int fv = code.lat.opposite_face(e.v, e.id);
            if (fu == code.lat.outer_face || fv == code.lat.outer_face) continue;
            ColorString s;
            s.color = Color::R;
            s.flavor = 'X';
            s.closed = false;
            s.faces = {fu, fv};
            s.edges = {e.id};
            auto p = string_to_pauli(code, s);
            CHECK(p.weight() == 2);
            CHECK(p.pauli_at(std::size_t(e.u)) == 1);
            CHECK(p.pauli_at(std::size_t(e.v)) == 1);
            break;
        }
    }

    SUBCASE("contractible loop around one face gives that face's stabilizer") {
        // find a bounded face all of whose neighbors are bounded
        for (const auto& f : code.lat.faces) {
            if (!f.alive || f.id == code.lat.outer_face) continue;
            bool interior = true;
            for (int g : code.lat.adjacent_faces(f.id)) interior &= (g != code.lat.outer_face);
            if (!interior) continue;
            // walk f's sides of one color c != f.color; they form the loop
            Color c = (f.color == Color::B) ? Color::G : Color::B;
            std::vector<int> loop_edges;
            for (int e : code.lat.edges_of_face(f.id))
                if (code.lat.edges[std::size_t(e)].color == c) loop_edges.push_back(e);
            if (loop_edges.size() < 2) continue;
            // face sequence: the c-colored neighbors joined by those sides
            ColorString s;
            s.color = c;
            s.flavor = 'Z';
            s.closed = true;
            // order edges around the face cycle
            std::vector<int> ordered;
            const auto& cyc = f.vertices;
            for (std::size_t i = 0; i < cyc.size(); ++i) {
                int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
                for (int e : loop_edges) {
                    const auto& ed = code.lat.edges[std::size_t(e)];
                    if ((ed.u == a && ed.v == b) || (ed.u == b && ed.v == a)) ordered.push_back(e);
                }
            }
            REQUIRE(ordered.size() == loop_edges.size());
            for (int e : ordered) {
                s.edges.push_back(e);
                s.faces.push_back(code.lat.opposite_face(code.lat.edges[std::size_t(e)].u, e) ==
                                          f.id
                                      ? code.lat.opposite_face(code.lat.edges[std::size_t(e)].v, e)
                                      : code.lat.opposite_face(code.lat.edges[std::size_t(e)].u, e));
            }
            // rotate so faces[i] is between edges[i-1] and edges[i]
            std::rotate(s.faces.begin(), s.faces.begin() + s.faces.size() - 1, s.faces.end());
            auto p = string_to_pauli(code, s);
            PauliOperator expect(code.lat.num_vertices());
            for (int v : f.vertices) expect.set_pauli(std::size_t(v), 'Z');
            CHECK(p.same_bits(expect));
            break;
        }
    }
}

TEST_CASE("wall-crossing hop carries mixed flavor") {
    auto lat = build_square_octagon(3, 5);
    auto code = insert_charge_twists(lat, plan_twist_row(lat, 1, 2));
    REQUIRE_FALSE(code.wall_edges.empty());
    // one of the crossed edges joining two same-colored faces away from twists
    for (int eid : code.wall_edges) {
        const auto& e = code.lat.edges[std::size_t(eid)];
        int fu = code.lat.opposite_face(e.u, eid);
        int fv = code.lat.opposite_face(e.v, eid);
        if (code.face_class.at(fu) == FaceClass::Twist ||
            code.face_class.at(fv) == FaceClass::Twist)
            continue;
        ColorString s;
        s.color = e.color;
        s.flavor = 'Z';
        s.closed = false;
        s.faces = {fu, fv};
        s.edges = {eid};
        auto p = string_to_pauli(code, s);
        CHECK(p.weight() == 2);
        int pu = p.pauli_at(std::size_t(e.u)), pv = p.pauli_at(std::size_t(e.v));
        CHECK(pu == 2);  // Z
        CHECK(pv == 3);  // Y
        return;
    }
    WARN_MESSAGE(false, "no non-terminal crossed edge found on this instance");
}

TEST_CASE("closed canonical strings are in the centralizer but not the group") {
    auto lat = build_square_octagon(4, 6);
    auto code = insert_charge_twists(lat, plan_twist_row(lat, 2, 2));
    REQUIRE(code.logicals.size() == 1);
    auto big = stabs_and_gauge(code);
    CHECK_FALSE(in_group(code.logicals[0].x, big).has_value());
    CHECK_FALSE(in_group(code.logicals[0].z, big).has_value());
    // products with gauge strings stay in the centralizer
    auto y = multiply(code.logicals[0].x, code.logicals[0].z);
    for (const auto& g : code.stabilizers.generators) CHECK(commutes(y, g));
}

TEST_CASE("equivalent red strings reach the canonical logicals modulo gauge") {
    auto lat = build_square_octagon(4, 6);
    auto code = insert_charge_twists(lat, plan_twist_row(lat, 2, 2));
    REQUIRE(code.logicals.size() == 1);
    int t1 = code.twists[0], t2 = code.twists[1], t3 = code.twists[2];

    auto big = stabs_and_gauge(code);
    SUBCASE("red string around the created pair is Z-bar modulo gauge") {
        auto rs = find_enclosing_string(code, Color::R, {t1, t2});
        REQUIRE(rs.has_value());
        auto rp = string_to_pauli(code, *rs);
        auto diff = multiply(rp, code.logicals[0].z);
        CHECK(in_group(diff, big).has_value());
    }
    SUBCASE("red string spanning pairs is X-bar modulo gauge") {
        auto rs = find_enclosing_string(code, Color::R, {t1, t3});
        REQUIRE(rs.has_value());
        auto rp = string_to_pauli(code, *rs);
        auto diff = multiply(rp, code.logicals[0].x);
        CHECK(in_group(diff, big).has_value());
    }
    SUBCASE("X-bar times Z-bar equals the red string around the other two twists") {
        auto rs = find_enclosing_string(code, Color::R, {t2, t3});
        REQUIRE(rs.has_value());
        auto rp = string_to_pauli(code, *rs);
        auto y = multiply(code.logicals[0].x, code.logicals[0].z);
        auto diff = multiply(rp, y);
        CHECK(in_group(diff, big).has_value());
    }
}

TEST_CASE("lemma counting across t and separation") {
    auto lat = build_square_octagon(5, 9);
    for (int pairs : {1, 2, 3}) {
        for (int sep : {2}) {
            CAPTURE(pairs);
            auto code = insert_charge_twists(lat, plan_twist_row(lat, pairs, sep));
            auto params = count_parameters(code);
            CHECK(params.k == std::size_t(2 * pairs - 1));
            CHECK(params.logical == std::size_t(2 * pairs) / 3);
        }
    }
}
