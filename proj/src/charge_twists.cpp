#include "twistcc/charge_twists.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace twistcc {

namespace {

PauliOperator face_operator(const Lattice& lat, int face, char pauli) {
    PauliOperator p(lat.num_vertices());
    for (int v : lat.faces[std::size_t(face)].vertices) p.set_pauli(std::size_t(v), pauli);
    return p;
}

std::string class_name(FaceClass c) {
    switch (c) {
        case FaceClass::Twist: return "twist";
        case FaceClass::Wall: return "wall";
        case FaceClass::Normal: return "normal";
        case FaceClass::Outer: return "outer";
    }
    return "?";
}

}  // namespace

PauliGroupBasis base_stabilizers(const Lattice& lat) {
    PauliGroupBasis basis;
    basis.n = lat.num_vertices();
    for (const auto& f : lat.faces) {
        if (!f.alive) continue;
        basis.add(face_operator(lat, f.id, 'X'));
        basis.add(face_operator(lat, f.id, 'Z'));
    }
    return basis;
}

bool ChargeTwistedCode::wall_separated_in_face(int face, int u, int v) const {
    for (const auto& w : walls) {
        auto it = w.m1.find(face);
        if (it == w.m1.end()) continue;
        bool su = it->second.count(u) > 0, sv = it->second.count(v) > 0;
        if (su != sv) return true;
    }
    return false;
}

ChargeTwistedCode insert_charge_twists(const Lattice& lat,
                                       const std::vector<DomainWallPath>& paths) {
    ChargeTwistedCode code;
    code.lat = lat;
    code.lat.finalize();
    auto d = dual(lat);

    // --- validate paths ---
    std::set<int> used_faces;
    std::vector<int> endpoints;
    for (std::size_t pi = 0; pi < paths.size(); ++pi) {
        const auto& p = paths[pi].dual_path;
        std::string tag = "path " + std::to_string(pi);
        if (p.size() < 3) throw std::invalid_argument(tag + ": endpoints closer than separation 2");
        for (std::size_t i = 0; i < p.size(); ++i) {
            int f = p[i];
            if (f < 0 || f >= int(lat.faces.size()) || !lat.faces[std::size_t(f)].alive)
                throw std::invalid_argument(tag + ": face does not exist");
            if (f == lat.outer_face) throw std::invalid_argument(tag + ": touches the outer face");
            if (used_faces.count(f)) throw std::invalid_argument(tag + ": crosses another path");
            if (i + 1 < p.size() && lat.shared_edge(p[i], p[i + 1]) < 0)
                throw std::invalid_argument(tag + ": not a dual path");
            if (i + 2 < p.size() && p[i] == p[i + 2])
                throw std::invalid_argument(tag + ": backtracks");
        }
        for (int f : p) used_faces.insert(f);
        endpoints.push_back(p.front());
        endpoints.push_back(p.back());
    }
    for (std::size_t i = 0; i < endpoints.size(); ++i) {
        for (std::size_t j = i + 1; j < endpoints.size(); ++j) {
            int sep = twist_separation(d, endpoints[i], endpoints[j]);
            if (sep < 2)
                throw std::invalid_argument("twists " + std::to_string(endpoints[i]) + "," +
                                            std::to_string(endpoints[j]) +
                                            " closer than separation 2");
        }
    }

    // --- wall geometry ---
    for (const auto& p : paths) {
        WallGeometry w;
        w.twist_a = p.dual_path.front();
        w.twist_b = p.dual_path.back();
        for (std::size_t i = 0; i + 1 < p.dual_path.size(); ++i)
            w.crossed_edges.push_back(lat.shared_edge(p.dual_path[i], p.dual_path[i + 1]));
        for (std::size_t i = 1; i + 1 < p.dual_path.size(); ++i) {
            int f = p.dual_path[i];
            w.interior.push_back(f);
            const auto& cyc = lat.faces[std::size_t(f)].vertices;
            int ein = w.crossed_edges[i - 1], eout = w.crossed_edges[i];
            auto side_at = [&](int eid, int avoid) {
                const auto& e = lat.edges[std::size_t(eid)];
                std::size_t L = cyc.size();
                for (std::size_t s = 0; s < L; ++s) {
                    int a = cyc[s], b = cyc[(s + 1) % L];
                    if (int(s) != avoid && ((a == e.u && b == e.v) || (a == e.v && b == e.u)))
                        return int(s);
                }
                return -1;
            };
            int sp = side_at(ein, -1);
            int sq = side_at(eout, sp);
            if (sp < 0 || sq < 0)
                throw std::invalid_argument("wall partition inconsistent with geometry at face " +
                                            std::to_string(f));
            std::set<int> m1;
            std::size_t L = cyc.size();
            for (std::size_t s = (std::size_t(sp) + 1) % L;; s = (s + 1) % L) {
                m1.insert(cyc[s]);
                if (int(s) == sq) break;
            }
            if (m1.empty() || m1.size() == L)
                throw std::invalid_argument("degenerate wall partition at face " + std::to_string(f));
            w.m1[f] = std::move(m1);
        }
        for (int e : w.crossed_edges) code.wall_edges.insert(e);
        code.walls.push_back(w);
        code.twists.push_back(w.twist_a);
        code.twists.push_back(w.twist_b);
    }

    // --- face classification ---
    for (const auto& f : lat.faces) {
        if (!f.alive) continue;
        code.face_class[f.id] = (f.id == lat.outer_face) ? FaceClass::Outer : FaceClass::Normal;
    }
    for (const auto& w : code.walls) {
        code.face_class[w.twist_a] = FaceClass::Twist;
        code.face_class[w.twist_b] = FaceClass::Twist;
        for (int f : w.interior) code.face_class[f] = FaceClass::Wall;
    }

    // --- stabilizers ---
    code.stabilizers.n = lat.num_vertices();
    auto add_gen = [&](const PauliOperator& p, int face) {
        code.stabilizers.add(p);
        code.stabilizer_face.push_back(face);
    };
    for (const auto& [face, cls] : code.face_class) {
        switch (cls) {
            case FaceClass::Normal: {
                add_gen(face_operator(lat, face, 'Z'), face);
                add_gen(face_operator(lat, face, 'Y'), face);
                break;
            }
            case FaceClass::Wall: {
                const WallGeometry* wp = nullptr;
                for (const auto& w : code.walls)
                    if (w.m1.count(face)) wp = &w;
                const auto& m1 = wp->m1.at(face);
                PauliOperator b1(lat.num_vertices()), b2(lat.num_vertices());
                for (int v : lat.faces[std::size_t(face)].vertices) {
                    bool left = m1.count(v) > 0;
                    b1.set_pauli(std::size_t(v), left ? 'Y' : 'Z');
                    b2.set_pauli(std::size_t(v), left ? 'Z' : 'Y');
                }
                add_gen(b1, face);
                add_gen(b2, face);
                break;
            }
            case FaceClass::Twist:
            case FaceClass::Outer: {
                add_gen(face_operator(lat, face, 'X'), face);
                break;
            }
        }
    }

    // Fix generator signs so both dependency products are exactly +I. The
    // outer generator only enters the red+blue product; a green-face
    // generator only the red+green one.
    {
        auto prods = dependency_products(code);
        if (!prods[0].is_identity() || !prods[1].is_identity())
            throw std::logic_error("dependency products have non-identity support");
        if (prods[0].sign() < 0) {
            for (std::size_t i = 0; i < code.stabilizers.size(); ++i) {
                if (code.stabilizer_face[i] == lat.outer_face) {
                    auto& g = code.stabilizers.generators[i];
                    g.set_phase_exp(uint8_t((g.phase_exp() + 2) & 3));
                    break;
                }
            }
        }
        if (prods[1].sign() < 0) {
            bool done = false;
            for (std::size_t i = 0; i < code.stabilizers.size() && !done; ++i) {
                int f = code.stabilizer_face[i];
                if (lat.faces[std::size_t(f)].color == Color::G) {
                    auto& g = code.stabilizers.generators[i];
                    g.set_phase_exp(uint8_t((g.phase_exp() + 2) & 3));
                    done = true;
                }
            }
            if (!done) throw std::logic_error("no green generator available for sign fix");
        }
        prods = dependency_products(code);
        if (!(prods[0].is_identity() && prods[0].sign() > 0 && prods[1].is_identity() &&
              prods[1].sign() > 0))
            throw std::logic_error("stabilizer sign normalization failed");
    }

    // --- canonical logicals + gauge completion ---
    auto strings = canonical_logical_strings(code);
    for (std::size_t q = 0; q < strings.z_strings.size(); ++q) {
        LogicalPair pair;
        pair.z = string_to_pauli(code, strings.z_strings[q]);
        pair.x = string_to_pauli(code, strings.x_strings[q]);
        code.logicals.push_back(pair);
    }
    for (std::size_t q = 0; q < code.logicals.size(); ++q) {
        for (const auto& g : code.stabilizers.generators) {
            if (!commutes(code.logicals[q].x, g) || !commutes(code.logicals[q].z, g))
                throw std::logic_error("canonical logical fails stabilizer commutation");
        }
        if (commutes(code.logicals[q].x, code.logicals[q].z))
            throw std::logic_error("canonical pair does not anticommute");
        for (std::size_t r = 0; r < code.logicals.size(); ++r) {
            if (r == q) continue;
            if (!commutes(code.logicals[q].x, code.logicals[r].z) ||
                !commutes(code.logicals[q].x, code.logicals[r].x) ||
                !commutes(code.logicals[q].z, code.logicals[r].z))
                throw std::logic_error("canonical pairs not mutually commuting");
        }
    }

    // gauge: extract a full logical basis and project the canonical part out
    auto all_pairs = extract_logicals(code.stabilizers, code.stabilizers.n);
    auto project = [&](PauliOperator op) {
        for (const auto& lp : code.logicals) {
            if (!commutes(op, lp.z)) op = multiply(op, lp.x);
            if (!commutes(op, lp.x)) op = multiply(op, lp.z);
        }
        return op;
    };
    std::vector<PauliOperator> pool;
    for (const auto& lp : all_pairs) {
        pool.push_back(project(lp.x));
        pool.push_back(project(lp.z));
    }
    std::size_t want = all_pairs.size() - code.logicals.size();
    while (code.gauge_pairs.size() < want) {
        bool found = false;
        for (std::size_t i = 0; i < pool.size() && !found; ++i) {
            for (std::size_t j = i + 1; j < pool.size() && !found; ++j) {
                if (commutes(pool[i], pool[j])) continue;
                PauliOperator a = pool[i], b = pool[j];
                std::vector<PauliOperator> next;
                for (std::size_t m = 0; m < pool.size(); ++m) {
                    if (m == i || m == j) continue;
                    PauliOperator v = pool[m];
                    if (!commutes(v, b)) v = multiply(v, a);
                    if (!commutes(v, a)) v = multiply(v, b);
                    next.push_back(v);
                }
                pool = std::move(next);
                code.gauge_pairs.push_back({a, b});
                found = true;
            }
        }
        if (!found) break;
    }
    if (code.gauge_pairs.size() != want)
        throw std::logic_error("gauge completion rank mismatch");
    return code;
}

FaceClassification classify_faces(const ChargeTwistedCode& code) {
    FaceClassification out;
    for (const auto& [face, cls] : code.face_class) {
        switch (cls) {
            case FaceClass::Twist: out.twist_faces.push_back(face); break;
            case FaceClass::Wall: out.wall_faces.push_back(face); break;
            case FaceClass::Normal: out.normal_faces.push_back(face); break;
            case FaceClass::Outer: break;
        }
    }
    return out;
}

CodeParameters count_parameters(const ChargeTwistedCode& code) {
    CodeParameters p;
    p.n = code.n();
    std::size_t t = code.t();
    p.rank_stabilizers = rank(code.stabilizers);
    if (p.rank_stabilizers != p.n - t + 1)
        throw std::logic_error("stabilizer rank disagrees with v - t + 1");
    p.k = t - 1;
    p.logical = t / 3;
    p.gauge = p.k - p.logical;
    return p;
}

PauliOperator string_to_pauli(const ChargeTwistedCode& code, const ColorString& s) {
    const Lattice& lat = code.lat;
    if (s.faces.empty() || s.edges.empty()) throw std::invalid_argument("empty string");
    std::size_t nhops = s.edges.size();
    if (s.closed ? (nhops != s.faces.size()) : (nhops != s.faces.size() - 1))
        throw std::invalid_argument("string edge/face count mismatch");

    for (int f : s.faces) {
        if (code.face_class.at(f) == FaceClass::Outer)
            throw std::invalid_argument("string runs through the outer face");
    }

    auto endpoint_in_face = [&](int eid, int face) {
        const auto& e = lat.edges[std::size_t(eid)];
        if (lat.face_has_vertex(face, e.u)) return e.u;
        if (lat.face_has_vertex(face, e.v)) return e.v;
        throw std::invalid_argument("string edge does not touch its face");
    };

    PauliOperator op(lat.num_vertices());
    char flavor = s.flavor;
    auto flip = [&](char f) {
        if (f == 'X') return 'X';
        return f == 'Z' ? 'Y' : 'Z';
    };

    // Per hop: Pauli on the near endpoint, wall check on the edge, Pauli on
    // the far endpoint; between hops a within-face side check.
    for (std::size_t i = 0; i < nhops; ++i) {
        int face_from = s.faces[i];
        int eid = s.edges[i];
        int u = endpoint_in_face(eid, face_from);
        const auto& e = lat.edges[std::size_t(eid)];
        int v = (e.u == u) ? e.v : e.u;
        op.mul_pauli(std::size_t(u), flavor);
        if (code.wall_edges.count(eid)) flavor = flip(flavor);
        op.mul_pauli(std::size_t(v), flavor);
        std::size_t next_index = i + 1;
        if (next_index == nhops && !s.closed) break;
        int face_to = s.faces[(i + 1) % s.faces.size()];
        int next_e = s.edges[next_index % nhops];
        int w = endpoint_in_face(next_e, face_to);
        if (v != w && code.wall_separated_in_face(face_to, v, w)) flavor = flip(flavor);
    }
    if (s.closed && flavor != s.flavor)
        throw std::invalid_argument("closed string has inconsistent flavor (odd wall crossings)");
    return op;
}

std::optional<ColorString> find_enclosing_string(const ChargeTwistedCode& code, Color c,
                                                 const std::set<int>& enclosed_twists) {
    const Lattice& lat = code.lat;
    std::size_t t = code.t();
    if (t > 16) throw std::invalid_argument("too many twists for parity search");
    if (enclosed_twists.empty()) return std::nullopt;

    // parity cuts: any dual path from each twist to the outer face
    std::vector<std::set<int>> cut_edges(t);
    for (std::size_t j = 0; j < t; ++j) {
        int from = code.twists[j];
        std::map<int, std::pair<int, int>> prev;  // face -> (prev face, via edge)
        std::deque<int> q{from};
        prev[from] = {-1, -1};
        while (!q.empty()) {
            int f = q.front();
            q.pop_front();
            if (f == lat.outer_face) break;
            for (int e : lat.edges_of_face(f)) {
                const auto& fe = lat.faces_of_edge(e);
                int g = (fe[0] == f) ? fe[1] : fe[0];
                if (prev.count(g)) continue;
                prev[g] = {f, e};
                q.push_back(g);
            }
        }
        int cur = lat.outer_face;
        while (prev.at(cur).first >= 0) {
            cut_edges[j].insert(prev.at(cur).second);
            cur = prev.at(cur).first;
        }
    }

    uint32_t target = 0;
    for (std::size_t j = 0; j < t; ++j)
        if (enclosed_twists.count(code.twists[j])) target |= (1u << j);

    std::vector<int> nodes;
    for (const auto& f : lat.faces) {
        if (!f.alive || f.color != c) continue;
        if (f.id == lat.outer_face) continue;
        if (code.face_class.at(f.id) == FaceClass::Twist) continue;
        nodes.push_back(f.id);
    }
    std::map<int, std::vector<std::pair<int, int>>> adj;  // face -> (edge, face)
    {
        auto sh = shrunk(lat, c);
        std::set<int> allowed(nodes.begin(), nodes.end());
        for (const auto& l : sh.links) {
            if (!allowed.count(l[1]) || !allowed.count(l[2])) continue;
            adj[l[1]].push_back({l[0], l[2]});
            adj[l[2]].push_back({l[0], l[1]});
        }
    }

    auto edge_parity = [&](int eid) {
        uint32_t p = 0;
        for (std::size_t j = 0; j < t; ++j)
            if (cut_edges[j].count(eid)) p ^= (1u << j);
        return p;
    };

    std::vector<std::pair<int, int>> seeds;
    {
        auto dist0 = dual_distances(lat, *enclosed_twists.begin());
        for (int f : nodes) seeds.push_back({dist0[std::size_t(f)], f});
        std::sort(seeds.begin(), seeds.end());
    }

    for (const auto& [d0, seed] : seeds) {
        std::map<std::pair<int, uint32_t>, std::pair<std::pair<int, uint32_t>, int>> prev;
        std::deque<std::pair<int, uint32_t>> q;
        q.push_back({seed, 0});
        prev[{seed, 0}] = {{-1, 0}, -1};
        bool found = false;
        while (!q.empty() && !found) {
            auto [f, par] = q.front();
            q.pop_front();
            for (const auto& [eid, g] : adj[f]) {
                uint32_t np = par ^ edge_parity(eid);
                if (g == seed && np == target && target != 0) {
                    prev[{-2, 0}] = {{f, par}, eid};  // terminal sentinel
                    found = true;
                    break;
                }
                if (prev.count({g, np})) continue;
                prev[{g, np}] = {{f, par}, eid};
                q.push_back({g, np});
            }
        }
        if (!found) continue;
        std::vector<int> faces{seed};
        std::vector<int> edges;
        auto [state, eid] = prev.at({-2, 0});
        edges.push_back(eid);
        while (!(state.first == seed && state.second == 0)) {
            faces.push_back(state.first);
            auto [ps, pe] = prev.at(state);
            edges.push_back(pe);
            state = ps;
        }
        std::reverse(faces.begin() + 1, faces.end());
        std::reverse(edges.begin(), edges.end());
        ColorString s;
        s.color = c;
        s.flavor = 'Z';
        s.closed = true;
        s.faces = std::move(faces);
        s.edges = std::move(edges);
        try {
            (void)string_to_pauli(code, s);
        } catch (const std::invalid_argument&) {
            continue;  // odd wall crossings for this cycle; try another seed
        }
        return s;
    }
    return std::nullopt;
}

CanonicalStrings canonical_logical_strings(const ChargeTwistedCode& code) {
    CanonicalStrings out;
    std::size_t nq = code.t() / 3;
    for (std::size_t q = 0; q < nq; ++q) {
        std::size_t m = q / 2;
        bool second = (q % 2) != 0;
        std::size_t base = 6 * m;
        std::size_t a = base + (second ? 3 : 0);
        std::size_t b = a + 1, c = a + 2;
        int ta = code.twists[a], tb = code.twists[b], tc = code.twists[c];
        std::set<int> zset, xset;
        if (!second) {
            zset = {ta, tb};  // the created pair of the triple
            xset = {ta, tc};  // spans into the next created pair
        } else {
            zset = {tb, tc};  // (t5, t6)
            xset = {ta, tc};  // (t4, t6)
        }
        auto zs = find_enclosing_string(code, Color::B, zset);
        auto xs = find_enclosing_string(code, Color::G, xset);
        if (!zs || !xs)
            throw std::logic_error("canonical logical string construction failed for qubit " +
                                   std::to_string(q));
        out.z_strings.push_back(*zs);
        out.x_strings.push_back(*xs);
    }
    return out;
}

std::vector<DomainWallPath> plan_twist_row(const Lattice& lat, int pairs, int separation) {
    if (pairs < 1 || separation < 2) throw std::invalid_argument("need pairs >= 1, separation >= 2");
    // Twists need room for enclosing strings, so the row stays in the
    // interior core: faces at dual distance >= 2 from the unbounded face.
    auto dout = dual_distances(lat, lat.outer_face);
    std::vector<int> rim;
    for (const auto& f : lat.faces)
        if (f.alive && dout[std::size_t(f.id)] < 2) rim.push_back(f.id);
    auto core_dist = [&](int from) {
        std::vector<int> blocked = rim;
        blocked.erase(std::remove(blocked.begin(), blocked.end(), from), blocked.end());
        return dual_distances(lat, from, blocked);
    };
    int first = -1;
    for (const auto& f : lat.faces) {
        if (f.alive && dout[std::size_t(f.id)] >= 2) { first = f.id; break; }
    }
    if (first < 0) throw std::invalid_argument("lattice has no interior core for twists");
    auto d0 = core_dist(first);
    int best_a = first, best = 0;
    for (const auto& f : lat.faces) {
        if (!f.alive || dout[std::size_t(f.id)] < 2) continue;
        if (d0[std::size_t(f.id)] > best) {
            best = d0[std::size_t(f.id)];
            best_a = f.id;
        }
    }
    auto da = core_dist(best_a);
    int best_b = best_a;
    best = 0;
    for (const auto& f : lat.faces) {
        if (!f.alive || dout[std::size_t(f.id)] < 2) continue;
        if (da[std::size_t(f.id)] > best) {
            best = da[std::size_t(f.id)];
            best_b = f.id;
        }
    }
    std::set<int> rim_set(rim.begin(), rim.end());
    std::map<int, int> prev;
    std::deque<int> q{best_a};
    prev[best_a] = -1;
    while (!q.empty()) {
        int f = q.front();
        q.pop_front();
        if (f == best_b) break;
        for (int g : lat.adjacent_faces(f)) {
            if (rim_set.count(g) || prev.count(g)) continue;
            prev[g] = f;
            q.push_back(g);
        }
    }
    if (!prev.count(best_b)) throw std::invalid_argument("interior core is disconnected");
    std::vector<int> path;
    for (int cur = best_b; cur != -1; cur = prev.at(cur)) path.push_back(cur);
    std::reverse(path.begin(), path.end());

    std::size_t need = std::size_t(2 * pairs - 1) * std::size_t(separation) + 1;
    if (path.size() < need)
        throw std::invalid_argument("lattice too small for requested twist row (need path length " +
                                    std::to_string(need) + ", have " + std::to_string(path.size()) +
                                    ")");
    std::vector<DomainWallPath> out;
    std::size_t pos = 0;
    for (int p = 0; p < pairs; ++p) {
        DomainWallPath w;
        for (std::size_t i = pos; i <= pos + std::size_t(separation); ++i)
            w.dual_path.push_back(path[i]);
        out.push_back(w);
        pos += 2 * std::size_t(separation);
    }
    return out;
}

CommutationAudit commutation_audit(const ChargeTwistedCode& code) {
    CommutationAudit audit;
    const auto& gens = code.stabilizers.generators;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            int fi = code.stabilizer_face[i], fj = code.stabilizer_face[j];
            std::string label;
            if (fi == fj) {
                label = "same-face";
            } else if (code.lat.shared_edge(fi, fj) >= 0) {
                FaceClass ci = code.face_class.at(fi), cj = code.face_class.at(fj);
                auto norm = [](FaceClass c) {
                    return c == FaceClass::Outer ? FaceClass::Normal : c;
                };
                std::string a = class_name(norm(ci)), b = class_name(norm(cj));
                if (a > b) std::swap(a, b);
                label = a + "/" + b;
            } else {
                label = "nonadjacent";
            }
            audit.cases[label]++;
            if (!commutes(gens[i], gens[j]))
                audit.failures.push_back("generators on faces " + std::to_string(fi) + "," +
                                         std::to_string(fj) + " (" + label + ") anticommute");
        }
    }
    return audit;
}

std::vector<PauliOperator> dependency_products(const ChargeTwistedCode& code) {
    std::vector<PauliOperator> out;
    for (Color second : {Color::B, Color::G}) {
        PauliOperator prod = PauliOperator::identity(code.stabilizers.n);
        for (std::size_t i = 0; i < code.stabilizers.size(); ++i) {
            Color fc = code.lat.faces[std::size_t(code.stabilizer_face[i])].color;
            if (fc == Color::R || fc == second)
                prod = multiply(prod, code.stabilizers.generators[i]);
        }
        out.push_back(prod);
    }
    return out;
}

}  // namespace twistcc
