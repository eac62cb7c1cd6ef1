#include "tileflip/cayley.hpp"

#include <cassert>

namespace tileflip {

namespace {
int order_of(Gen g, int m, int s) { return g == GenA ? m : s; }

int mod_pos(int v, int n) {
    v %= n;
    return v < 0 ? v + n : v;
}
}  // namespace

void GroupWord::mul(Gen g, int dir, int m, int s) {
    const int ord = order_of(g, m, s);
    if (ord == 1) return;  // generator is trivial
    if (!f.empty() && f.back().gen == g) {
        int e = mod_pos(f.back().exp + dir, ord);
        if (e == 0)
            f.pop_back();
        else
            f.back().exp = static_cast<int16_t>(e);
        return;
    }
    f.push_back({static_cast<uint8_t>(g), static_cast<int16_t>(mod_pos(dir, ord))});
}

// Each factor of a canonical word enters a cycle at its attachment vertex,
// so the descending position follows from the construction: the entry
// vertex descends there unless it already descended in the cycle it
// arrived along, in which case the descending vertex sits one inverse step
// from the entry. The base vertex descends in its a-cycle.
long long cayley_weight(const GroupWord& word, int m, int s) {
    if (m == 1 || s == 1) return 0;  // degenerate: the height is constant
    long long w = 0;
    bool have_prev = false;
    bool prev_desc = false;
    for (const Factor& fac : word.f) {
        const Gen g = static_cast<Gen>(fac.gen);
        const int ord = order_of(g, m, s);
        const int e = fac.exp;
        assert(e >= 1 && e < ord);
        int d;  // descending offset within this cycle, from the entry vertex
        if (!have_prev)
            d = g == GenA ? 0 : s - 1;  // identity: descends in its a-cycle
        else
            d = prev_desc ? ord - 1 : 0;
        const long long level = w + (d == 0 ? 1 : 0);
        w = level - (e == d ? 1 : 0);
        prev_desc = (e == d);
        have_prev = true;
    }
    return w;
}

}  // namespace tileflip
