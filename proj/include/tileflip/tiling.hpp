#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tileflip/region.hpp"

namespace tileflip {

struct Tile {
    Cell anchor;  // lower-left cell
    int side = 1;
    friend bool operator==(Tile a, Tile b) { return a.anchor == b.anchor && a.side == b.side; }
};

enum class FlipKind : uint8_t { central, horizontal, vertical, drag };
enum class FlipDir : uint8_t { down = 0, up = 1 };

inline FlipDir reverse(FlipDir d) { return d == FlipDir::up ? FlipDir::down : FlipDir::up; }

// A flip is identified by its block and a direction. For the two-square
// blocks the direction selects which of the block's two tilings we move to
// ("up" increases (total height, potential) lexicographically; in the
// degenerate m = 1 case "up" merges units into a big square or slides the
// big square toward larger coordinates). Drag flips (weighted (1,2) chain
// only) move a big square one step diagonally; axis 0 is the (+1,+1)
// diagonal on "up", axis 1 the (+1,-1) diagonal.
struct Flip {
    FlipKind kind = FlipKind::central;
    Cell block_origin{};
    FlipDir dir = FlipDir::up;
    uint8_t drag_axis = 0;

    friend bool operator==(const Flip& a, const Flip& b) {
        return a.kind == b.kind && a.block_origin == b.block_origin && a.dir == b.dir &&
               a.drag_axis == b.drag_axis;
    }
};

struct BlockDims {
    int hw, hh;  // horizontal block
    int vw, vh;  // vertical block
    int p;       // central block side, lcm(m, s)
};

BlockDims block_dimensions(int m, int s);

// A partition of a region's cells into axis-aligned m- and s-squares.
// Values are immutable from the outside; chains mutate their own copies
// through the in-place flip entry points.
class Tiling {
public:
    Tiling(RegionPtr region, int m, int s);

    static Tiling all_small(RegionPtr region, int m, int s);
    static Tiling greedy_big(RegionPtr region, int m, int s);
    // Builds from an explicit tile list; throws unless it partitions the region.
    static Tiling from_tiles(RegionPtr region, int m, int s, const std::vector<Tile>& tiles);

    const Region& region() const { return *region_; }
    const RegionPtr& region_ptr() const { return region_; }
    int m() const { return m_; }
    int s() const { return s_; }

    Tile tile_at(Cell c) const;
    bool has_anchor(Cell a, int side) const;
    bool is_unit_free(Cell origin, int w, int h) const;  // all covered by side-m=1 tiles
    bool block_in_region(Cell origin, int w, int h) const;

    long long count_side(int side) const { return side == m_ ? n_m_ : n_s_; }
    long long unit_count() const { return m_ == 1 ? n_m_ : 0; }
    long long big_count() const { return n_s_; }
    long long potential() const { return potential_; }
    uint64_t hash() const { return hash_; }

    // Sorted (x, y, side) triples; the canonical identity of a tiling.
    std::vector<int32_t> key() const;
    std::vector<Tile> tiles() const;

    bool valid_partition() const;

    friend bool operator==(const Tiling& a, const Tiling& b) {
        return a.m_ == b.m_ && a.s_ == b.s_ && a.grid_ == b.grid_;
    }

    // Block configuration probing. Returns 0 or 1 when the tiling restricted
    // to the block equals that legal configuration, -1 otherwise.
    int read_block_config(FlipKind kind, Cell origin) const;
    void write_block_config(FlipKind kind, Cell origin, int config);
    static std::vector<Tile> config_tiles(FlipKind kind, Cell origin, int config, int m, int s);
    std::pair<int, int> block_dims_of(FlipKind kind) const;

    // Drag support ((1,2) weighted chain).
    void move_big(Cell from_anchor, Cell to_anchor);

private:
    void place(Tile t);
    void remove(Tile t);
    size_t idx(Cell c) const;
    uint64_t tile_hash(Tile t) const;
    long long tile_potential(Tile t) const;

    RegionPtr region_;
    int m_, s_;
    struct CellRef {
        int8_t dx = 0, dy = 0;
        int16_t side = 0;  // 0 = outside region / unassigned
        friend bool operator==(CellRef a, CellRef b) {
            return a.dx == b.dx && a.dy == b.dy && a.side == b.side;
        }
    };
    std::vector<CellRef> grid_;
    long long n_m_ = 0, n_s_ = 0;
    long long potential_ = 0;
    uint64_t hash_ = 0;

    friend class ChainState;
};

// Flip discovery and application (definitions in flips.cpp).
class HeightField;

std::optional<Flip> find_flip(const Tiling& t, Vertex site, FlipDir dir);
std::optional<Flip> find_flip(const Tiling& t, Vertex site, FlipDir dir, const HeightField* field);
std::vector<Flip> enumerate_flips(const Tiling& t);
Tiling apply_flip(const Tiling& t, const Flip& f);
void apply_flip_inplace(Tiling& t, const Flip& f);
Tiling minimal_descent(const Tiling& t);

// Height/potential change of toggling the block at `origin` away from its
// current configuration. Requires a field for m > 1.
struct FlipDelta {
    long long dh = 0;
    long long dpot = 0;
    bool is_up() const { return dh > 0 || (dh == 0 && dpot > 0); }
};
FlipDelta flip_delta(const Tiling& t, FlipKind kind, Cell origin, const HeightField* field);

}  // namespace tileflip
