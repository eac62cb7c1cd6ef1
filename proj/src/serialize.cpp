#include "tileflip/serialize.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace tileflip {

using nlohmann::json;

Rat parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        long long n = std::stoll(text.substr(0, slash));
        long long d = std::stoll(text.substr(slash + 1));
        return Rat(n, d);
    }
    auto dot = text.find('.');
    if (dot == std::string::npos) return Rat(std::stoll(text));
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    long long den = 1;
    for (size_t i = dot + 1; i < text.size(); ++i) den *= 10;
    return Rat(std::stoll(digits), den);
}

std::string region_to_json(const Region& r) {
    json j;
    const RegionSpec& sp = r.spec();
    switch (sp.kind) {
        case RegionSpec::Kind::rectangle:
            j["kind"] = "rectangle";
            j["params"] = {{"w", sp.w}, {"h", sp.h}};
            break;
        case RegionSpec::Kind::torus:
            j["kind"] = "torus";
            j["params"] = {{"n", sp.n}};
            break;
        case RegionSpec::Kind::staircase_hexagon:
            j["kind"] = "staircase_hexagon";
            j["params"] = {{"size", sp.size}, {"m", sp.m}, {"s", sp.s}};
            break;
        case RegionSpec::Kind::explicit_cells: {
            j["kind"] = "explicit";
            j["params"] = json::object();
            json cells = json::array();
            for (Cell c : sp.cells) cells.push_back({c.x, c.y});
            j["cells"] = cells;
            break;
        }
    }
    if (!r.name().empty()) j["name"] = r.name();
    return j.dump();
}

RegionPtr region_from_json(const std::string& text) {
    json j = json::parse(text);
    RegionSpec sp;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "rectangle") {
        sp.kind = RegionSpec::Kind::rectangle;
        sp.w = j.at("params").at("w").get<int>();
        sp.h = j.at("params").at("h").get<int>();
    } else if (kind == "torus") {
        sp.kind = RegionSpec::Kind::torus;
        sp.n = j.at("params").at("n").get<int>();
    } else if (kind == "staircase_hexagon") {
        sp.kind = RegionSpec::Kind::staircase_hexagon;
        sp.size = j.at("params").at("size").get<int>();
        sp.m = j.at("params").at("m").get<int>();
        sp.s = j.at("params").at("s").get<int>();
    } else if (kind == "explicit") {
        sp.kind = RegionSpec::Kind::explicit_cells;
        for (const auto& c : j.at("cells"))
            sp.cells.push_back({c.at(0).get<int>(), c.at(1).get<int>()});
    } else {
        throw std::invalid_argument("unknown region kind: " + kind);
    }
    RegionPtr r = build_region(sp);
    if (j.contains("name"))
        const_cast<Region*>(r.get())->set_name(j["name"].get<std::string>());
    return r;
}

RegionPtr parse_region_spec(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("region spec must look like rect:WxH, torus:N or stairhex:SIZE,M,S");
    std::string kind = text.substr(0, colon);
    std::string rest = text.substr(colon + 1);
    RegionSpec sp;
    if (kind == "rect") {
        auto x = rest.find('x');
        if (x == std::string::npos) throw std::invalid_argument("rect spec needs WxH");
        sp.kind = RegionSpec::Kind::rectangle;
        sp.w = std::stoi(rest.substr(0, x));
        sp.h = std::stoi(rest.substr(x + 1));
    } else if (kind == "torus") {
        sp.kind = RegionSpec::Kind::torus;
        sp.n = std::stoi(rest);
    } else if (kind == "stairhex") {
        std::stringstream ss(rest);
        std::string a, b, c;
        if (!std::getline(ss, a, ',') || !std::getline(ss, b, ',') || !std::getline(ss, c, ','))
            throw std::invalid_argument("stairhex spec needs SIZE,M,S");
        sp.kind = RegionSpec::Kind::staircase_hexagon;
        sp.size = std::stoi(a);
        sp.m = std::stoi(b);
        sp.s = std::stoi(c);
    } else {
        throw std::invalid_argument("unknown region spec kind: " + kind);
    }
    return build_region(sp);
}

RegionPtr load_region_arg(const std::string& arg) {
    if (arg.find(':') != std::string::npos) return parse_region_spec(arg);
    return region_from_json(read_file(arg));
}

std::string tiling_to_json(const Tiling& t) {
    json j;
    j["region"] = json::parse(region_to_json(t.region()));
    j["m"] = t.m();
    j["s"] = t.s();
    json tiles = json::array();
    for (const Tile& tile : t.tiles())
        tiles.push_back({{"x", tile.anchor.x}, {"y", tile.anchor.y}, {"side", tile.side}});
    j["tiles"] = tiles;
    return j.dump();
}

Tiling tiling_from_json(const std::string& text) {
    json j = json::parse(text);
    RegionPtr region = region_from_json(j.at("region").dump());
    int m = j.at("m").get<int>(), s = j.at("s").get<int>();
    std::vector<Tile> tiles;
    for (const auto& e : j.at("tiles"))
        tiles.push_back({{e.at("x").get<int>(), e.at("y").get<int>()}, e.at("side").get<int>()});
    return Tiling::from_tiles(region, m, s, tiles);
}

std::string heightfield_to_json(const HeightField& f) {
    json j;
    j["base"] = {f.base().x, f.base().y};
    j["base_height"] = f.base_height();
    json hs = json::array();
    for (Vertex v : f.vertices()) hs.push_back({v.x, v.y, f.height(v)});
    j["heights"] = hs;
    return j.dump();
}

std::string graph_to_json(const TilingGraph& g, bool include_matrix) {
    json j;
    json verts = json::array();
    for (const Tiling& t : g.verts) {
        json tiles = json::array();
        for (const Tile& tile : t.tiles()) tiles.push_back({tile.anchor.x, tile.anchor.y, tile.side});
        verts.push_back(tiles);
    }
    j["vertices"] = verts;
    json edges = json::array();
    for (size_t i = 0; i < g.adj.size(); ++i)
        for (int k : g.adj[i])
            if (static_cast<int>(i) < k) edges.push_back({i, k});
    j["edges"] = edges;
    if (include_matrix) {
        json rows = json::array();
        for (size_t i = 0; i < g.rows.size(); ++i) {
            json row = json::object();
            for (const auto& [c, p] : g.rows[i]) row[std::to_string(c)] = p.str();
            rows.push_back(row);
        }
        j["matrix"] = rows;
    }
    return j.dump();
}

std::string occupancy_to_json(const OccupancyMap& m) {
    json j;
    j["origin"] = {m.ox, m.oy};
    j["w"] = m.w;
    j["h"] = m.h;
    j["samples"] = m.samples;
    json rows = json::array();
    for (int y = 0; y < m.h; ++y) {
        json row = json::array();
        for (int x = 0; x < m.w; ++x) row.push_back(m.frac[static_cast<size_t>(y) * m.w + x]);
        rows.push_back(row);
    }
    j["rows"] = rows;
    return j.dump();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

}  // namespace tileflip
