#pragma once

#include <cstdint>
#include <vector>

namespace tileflip {

// Elements of the free product Z_m * Z_s generated by a (horizontal step)
// and b (vertical step), with relators a^m and b^s. The Cayley graph is an
// infinite tree of m-cycles and s-cycles glued at vertices.
//
// Canonical form: alternating factors c^e with c in {a,b} and exponent
// in [1, ord(c)-1]; consecutive factors always use different generators.

enum Gen : uint8_t { GenA = 0, GenB = 1 };

struct Factor {
    uint8_t gen;  // GenA or GenB
    int16_t exp;  // 1 .. ord-1
    friend bool operator==(Factor a, Factor b) { return a.gen == b.gen && a.exp == b.exp; }
};

struct GroupWord {
    std::vector<Factor> f;

    bool is_identity() const { return f.empty(); }

    // Right-multiplies by c^{+1} or c^{-1}, keeping canonical form.
    // A generator of order 1 is the identity and leaves the word unchanged.
    void mul(Gen g, int dir, int m, int s);

    friend bool operator==(const GroupWord& a, const GroupWord& b) { return a.f == b.f; }
};

// Vertex weights of the Cayley graph: the identity has weight 0; within
// each cycle every vertex carries the cycle level except one descending
// vertex one below it; a vertex joining two cycles descends in exactly one
// of them. The canonical word determines the weight by walking the tree of
// cycles factor by factor.
long long cayley_weight(const GroupWord& word, int m, int s);

}  // namespace tileflip
