#pragma once

// Convex regions of the (i, j) plane, with respect to the product partial
// order. Supported shapes: intersections of half-planes i <= a, i >= a,
// j <= b, j >= b, the Upsilon half-plane (1 - t/2) i + (t/2) j <= s with
// rational t and s, and bands lo <= max(i, j - s) <= hi (or min) which are
// order-convex even though they are not half-plane intersections.

#include <optional>

#include "rational.hpp"

namespace floerkit {

struct Region {
    std::optional<int> imin, imax, jmin, jmax;

    enum Band { NoBand, MaxBand, MinBand };
    Band band = NoBand;
    int band_s = 0;
    std::optional<int> band_lo, band_hi;

    bool ups = false;
    Rat ups_t;      // t in [0, 2]
    Rat ups_level;  // s

    bool contains(int i, int j) const {
        if (imin && i < *imin) return false;
        if (imax && i > *imax) return false;
        if (jmin && j < *jmin) return false;
        if (jmax && j > *jmax) return false;
        if (band != NoBand) {
            long long v = band == MaxBand ? std::max<long long>(i, (long long)j - band_s)
                                          : std::min<long long>(i, (long long)j - band_s);
            if (band_lo && v < *band_lo) return false;
            if (band_hi && v > *band_hi) return false;
        }
        if (ups) {
            // (1 - t/2) i + (t/2) j <= s, cleared of denominators:
            // lev_q * ((2 tq - tp) i + tp j) <= 2 tq lev_p
            long long lhs = ups_level.q * ((2 * ups_t.q - ups_t.p) * i + ups_t.p * j);
            long long rhs = 2 * ups_t.q * ups_level.p;
            if (lhs > rhs) return false;
        }
        return true;
    }

    static Region column() {  // {i = 0}
        Region r;
        r.imin = 0;
        r.imax = 0;
        return r;
    }
    static Region plus_flavor(int W) {  // {0 <= i <= W}
        Region r;
        r.imin = 0;
        r.imax = W;
        return r;
    }
    static Region hook_max(int s, int lo, int hi) {  // {lo <= max(i, j - s) <= hi}
        Region r;
        r.band = MaxBand;
        r.band_s = s;
        r.band_lo = lo;
        r.band_hi = hi;
        return r;
    }
    static Region hook_min(int s, int lo, int hi) {  // {lo <= min(i, j - s) <= hi}
        Region r;
        r.band = MinBand;
        r.band_s = s;
        r.band_lo = lo;
        r.band_hi = hi;
        return r;
    }
};

}  // namespace floerkit
