#include "twistcc/json_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace twistcc {

using ordered_json = nlohmann::ordered_json;

std::string lattice_to_json(const Lattice& lat) {
    ordered_json j;
    j["vertices"] = ordered_json::array();
    for (const auto& v : lat.vertices) {
        if (!v.alive) continue;
        j["vertices"].push_back({{"id", v.id}, {"x", v.x}, {"y", v.y}});
    }
    j["edges"] = ordered_json::array();
    for (const auto& e : lat.edges) {
        if (!e.alive) continue;
        j["edges"].push_back({{"id", e.id},
                              {"u", e.u},
                              {"v", e.v},
                              {"color", std::string(1, color_char(e.color))}});
    }
    j["faces"] = ordered_json::array();
    for (const auto& f : lat.faces) {
        if (!f.alive) continue;
        j["faces"].push_back({{"id", f.id},
                              {"vertices", f.vertices},
                              {"color", std::string(1, color_char(f.color))}});
    }
    j["outer_face"] = lat.outer_face;
    return j.dump(2) + "\n";
}

Lattice lattice_from_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    Lattice lat;
    int max_v = -1, max_e = -1, max_f = -1;
    for (const auto& v : j.at("vertices")) max_v = std::max(max_v, v.at("id").get<int>());
    for (const auto& e : j.at("edges")) max_e = std::max(max_e, e.at("id").get<int>());
    for (const auto& f : j.at("faces")) max_f = std::max(max_f, f.at("id").get<int>());
    lat.vertices.assign(std::size_t(max_v + 1), {});
    lat.edges.assign(std::size_t(max_e + 1), {});
    lat.faces.assign(std::size_t(max_f + 1), {});
    for (auto& v : lat.vertices) v.alive = false;
    for (auto& e : lat.edges) e.alive = false;
    for (auto& f : lat.faces) f.alive = false;

    for (const auto& v : j.at("vertices")) {
        int id = v.at("id").get<int>();
        lat.vertices[std::size_t(id)] = {id, v.at("x").get<double>(), v.at("y").get<double>(), true};
    }
    for (const auto& e : j.at("edges")) {
        int id = e.at("id").get<int>();
        auto c = color_from_char(e.at("color").get<std::string>().at(0));
        if (!c) throw std::invalid_argument("bad edge color");
        lat.edges[std::size_t(id)] = {id, e.at("u").get<int>(), e.at("v").get<int>(), *c, true};
    }
    for (const auto& f : j.at("faces")) {
        int id = f.at("id").get<int>();
        auto c = color_from_char(f.at("color").get<std::string>().at(0));
        if (!c) throw std::invalid_argument("bad face color");
        lat.faces[std::size_t(id)] = {id, f.at("vertices").get<std::vector<int>>(), *c, true};
    }
    lat.outer_face = j.at("outer_face").get<int>();
    lat.finalize();
    return lat;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

}  // namespace twistcc
