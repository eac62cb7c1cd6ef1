#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tileflip/geometry.hpp"

namespace tileflip {

enum class Topology { flat, torus };

struct RegionSpec {
    enum class Kind { rectangle, torus, staircase_hexagon, explicit_cells };
    Kind kind = Kind::rectangle;
    int w = 0, h = 0;           // rectangle
    int n = 0;                  // torus
    int size = 0, m = 0, s = 0; // staircase hexagon
    std::vector<Cell> cells;    // explicit
};

// A finite set of unit cells of Z^2 with flat or toroidal topology.
// Flat regions are checked to be simply connected (4-connected, no holes)
// at construction. Immutable after construction.
class Region {
public:
    static Region rectangle(int w, int h);
    static Region torus(int n);
    // Flattened diamond: horizontal bands of height m whose width shrinks
    // by s on each side per band away from the equator band of width
    // `size`; staircase top and bottom borders, vertical left/right sides,
    // symmetric under 180-degree rotation.
    static Region staircase_hexagon(int size, int m, int s);
    static Region explicit_cells(std::vector<Cell> cells);

    Topology topology() const { return topology_; }
    bool is_torus() const { return topology_ == Topology::torus; }
    int torus_n() const { return torus_n_; }

    // Bounding box [ox, ox+w) x [oy, oy+h).
    int origin_x() const { return ox_; }
    int origin_y() const { return oy_; }
    int bbox_w() const { return w_; }
    int bbox_h() const { return h_; }

    long long area() const { return cell_count_; }
    bool contains(Cell c) const;
    Cell wrap(Cell c) const;  // canonicalizes coordinates on a torus

    // Cells in row-major order (y, then x).
    std::vector<Cell> cells() const;

    // Lattice vertices strictly inside the region: incident to four region
    // cells on flat regions, every vertex on a torus. Row-major order.
    const std::vector<Vertex>& inner_vertices() const { return inner_vertices_; }

    // Lower-left boundary vertex, the base point for height functions.
    Vertex base_vertex() const { return base_vertex_; }

    // True if the vertex touches at least one region cell but not four.
    bool is_boundary_vertex(Vertex v) const;

    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }

    const RegionSpec& spec() const { return spec_; }

private:
    Region() = default;
    void finalize(bool check_simply_connected);
    int cells_at_vertex(Vertex v) const;

    Topology topology_ = Topology::flat;
    int torus_n_ = 0;
    int ox_ = 0, oy_ = 0, w_ = 0, h_ = 0;
    std::vector<uint8_t> inside_;
    long long cell_count_ = 0;
    std::vector<Vertex> inner_vertices_;
    Vertex base_vertex_{};
    std::string name_;
    RegionSpec spec_;
};

using RegionPtr = std::shared_ptr<const Region>;

RegionPtr build_region(const RegionSpec& spec);

}  // namespace tileflip
