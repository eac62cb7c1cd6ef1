#pragma once

#include <cstdint>
#include <functional>

namespace tileflip {

// A unit cell of Z^2 addressed by its lower-left corner, and also a lattice
// vertex when used as one. Comparison order is (x, y).
struct Cell {
    int x = 0;
    int y = 0;

    friend bool operator==(Cell a, Cell b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(Cell a, Cell b) { return !(a == b); }
    friend bool operator<(Cell a, Cell b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    }
    Cell operator+(Cell o) const { return {x + o.x, y + o.y}; }
    Cell operator-(Cell o) const { return {x - o.x, y - o.y}; }
};

using Vertex = Cell;

inline uint64_t mix64(uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

struct CellHash {
    size_t operator()(Cell c) const {
        return static_cast<size_t>(
            mix64((static_cast<uint64_t>(static_cast<uint32_t>(c.x)) << 32) |
                  static_cast<uint32_t>(c.y)));
    }
};

}  // namespace tileflip
