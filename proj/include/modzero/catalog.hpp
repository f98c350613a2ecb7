#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "modzero/surd.hpp"

namespace modzero {

using Cplx = std::complex<double>;

struct Cusp {
    Rat value;        // representative point on the real line
    Matrix2 leader;   // gamma with gamma(inf) = value, h = 1 normalization
    bool normalizes;  // gamma^-1 Gamma gamma == Gamma
    int c2;           // |c|^2 of the cusp's parabolic generator (horocycle scale)
};

struct Elliptic {
    Rat re;
    Quad im;
    int order;       // stabilizer order in PSL2
    Matrix2 stab;    // one nontrivial stabilizer element
};

struct ArcEnd {
    enum Kind { kNone, kCusp, kElliptic, kCorner } kind = kNone;
    Rat cusp_value;   // for kCusp (right-side representative, may mirror a listed cusp)
    int c2 = 0;       // horocycle normalizer at that cusp
    int ell_order = 0;
};

struct Arc {
    Rat center;            // real center of the circle (right-side representative)
    Quad radius;
    double theta_lo, theta_hi;  // inequivalent parameter range on the boundary
    ArcEnd lo, hi;
    Matrix2 pairing;       // boundary identification with j(gamma, z(t)) = e^{it}
    bool mirror_real;      // J takes real values on this arc
};

struct ImageSegment {
    enum Kind { kRealInterval, kRotatedRay, kBox } kind;
    int arc_index;              // which catalog arc realizes it
    double lo = 0, hi = 0;      // interval bounds / ray length in [0, len]
    Quad exact_lo, exact_hi;    // exact endpoints where known
    double base_re = 0, base_im = 0, angle = 0, len = 0;   // ray data
    double x0 = 0, x1 = 0, y0 = 0, y1 = 0;                 // box data
};

struct GroupDescriptor {
    std::string label;
    int level = 1;
    int width = 1;
    int genus = 0;
    Rat valence_factor;          // weighted zero count = factor * k
    std::vector<Matrix2> gens;   // includes T
    std::vector<Cusp> cusps;     // finite cusps only
    std::vector<Elliptic> elliptic;
    std::vector<Arc> arcs;
    bool real_on_lower_arcs = true;
    Quad image_min, image_max;   // declared hauptmodul interval (real groups)
    std::vector<ImageSegment> segments;
    std::string hauptmodul_recipe;
};

namespace catdata {

inline Quad rq(long p, long q) { return Quad(Rat(p, q)); }
inline Quad surd(long num_, long den_, int m) { return Quad(Rat(0), Rat(num_, den_), m); }

inline Matrix2 W(int N) {
    // (0, -1/sqrt N; sqrt N, 0) with entries in Q(sqrt N') for squarefree core
    switch (N) {
        case 4: return {rq(0, 1), rq(-1, 2), rq(2, 1), rq(0, 1)};
        case 9: return {rq(0, 1), rq(-1, 3), rq(3, 1), rq(0, 1)};
        case 8: return {rq(0, 1), surd(-1, 4, 2), surd(2, 1, 2), rq(0, 1)};
        case 12: return {rq(0, 1), surd(-1, 6, 3), surd(2, 1, 3), rq(0, 1)};
        default: return {rq(0, 1), surd(-1, N, N), surd(1, 1, N), rq(0, 1)};
    }
}

inline Matrix2 T() { return Matrix2::ints(1, 1, 0, 1); }

inline double th_at(const Rat& c, const Quad& r, const Rat& x) {
    double v = (static_cast<double>(x) - static_cast<double>(c)) / r.value();
    v = std::max(-1.0, std::min(1.0, v));
    return std::acos(v);
}

inline ArcEnd cuspE(Rat v, int c2) { return {ArcEnd::kCusp, std::move(v), c2, 0}; }
inline ArcEnd ellE(int n) { return {ArcEnd::kElliptic, Rat(0), 0, n}; }
inline ArcEnd cornerE() { return {ArcEnd::kCorner, Rat(0), 0, 0}; }

}  // namespace catdata

inline const std::map<std::string, GroupDescriptor>& catalog() {
    static const std::map<std::string, GroupDescriptor> table = [] {
        using namespace catdata;
        std::map<std::string, GroupDescriptor> m;
        const double PI = 3.14159265358979323846;

        auto add = [&](GroupDescriptor g) { m.emplace(g.label, std::move(g)); };
        auto arc = [&](Rat c, Quad r, double tlo, double thi, ArcEnd lo, ArcEnd hi,
                       Matrix2 pairing, bool real_arc) {
            Arc a{std::move(c), std::move(r), tlo, thi, std::move(lo), std::move(hi),
                  std::move(pairing), real_arc};
            return a;
        };
        auto seg_real = [&](int idx, Quad lo, Quad hi) {
            ImageSegment s{ImageSegment::kRealInterval, idx};
            s.exact_lo = lo; s.exact_hi = hi;
            s.lo = lo.value(); s.hi = hi.value();
            return s;
        };
        auto seg_ray = [&](int idx, double bre, double bim, double ang, double len) {
            ImageSegment s{ImageSegment::kRotatedRay, idx};
            s.base_re = bre; s.base_im = bim; s.angle = ang; s.len = len;
            return s;
        };
        auto seg_box = [&](int idx, double x0, double x1, double y0, double y1) {
            ImageSegment s{ImageSegment::kBox, idx};
            s.x0 = x0; s.x1 = x1; s.y0 = y0; s.y1 = y1;
            return s;
        };

        const Matrix2 S = Matrix2::ints(0, -1, 1, 0);

        {   // SL2(Z)
            GroupDescriptor g;
            g.label = "1"; g.level = 1; g.valence_factor = Rat(1, 12);
            g.gens = {T(), S};
            g.elliptic = {{Rat(0), rq(1, 1), 2, S},
                          {Rat(-1, 2), surd(1, 2, 3), 3, Matrix2::ints(0, -1, 1, 1)}};
            g.arcs = {arc(Rat(0), rq(1, 1), PI / 3, PI / 2, ellE(3), ellE(2), S, true)};
            g.image_min = rq(0, 1); g.image_max = rq(1728, 1);
            g.segments = {seg_real(0, g.image_min, g.image_max)};
            g.hauptmodul_recipe = "E4^3 / Delta";
            add(g);
        }
        {   // Gamma0*(2)
            GroupDescriptor g;
            g.label = "2+"; g.level = 2; g.valence_factor = Rat(1, 8);
            g.gens = {T(), W(2)};
            Matrix2 s2{surd(-1, 1, 2), surd(-1, 2, 2), surd(1, 1, 2), rq(0, 1)};
            g.elliptic = {{Rat(0), surd(1, 2, 2), 2, W(2)}, {Rat(-1, 2), rq(1, 2), 4, s2}};
            g.arcs = {arc(Rat(0), surd(1, 2, 2), PI / 4, PI / 2, ellE(4), ellE(2), W(2), true)};
            g.image_min = rq(0, 1); g.image_max = rq(256, 1);
            g.segments = {seg_real(0, g.image_min, g.image_max)};
            g.hauptmodul_recipe = "E4_2+^2 / Delta2";
            add(g);
        }
        {   // Gamma0(2)
            GroupDescriptor g;
            g.label = "2"; g.level = 2; g.valence_factor = Rat(1, 4);
            g.gens = {T(), Matrix2::ints(1, 0, 2, 1)};
            g.cusps = {{Rat(0), W(2), true, 2}};
            g.elliptic = {{Rat(-1, 2), rq(1, 2), 2, Matrix2::ints(-1, -1, 2, 1)}};
            g.arcs = {arc(Rat(1, 2), rq(1, 2), PI / 2, PI, ellE(2), cuspE(Rat(0), 2),
                          Matrix2::ints(-1, 0, 2, -1), true)};
            g.image_min = rq(-64, 1); g.image_max = rq(0, 1);
            g.segments = {seg_real(0, g.image_min, g.image_max)};
            g.hauptmodul_recipe = "Delta2^0 / Delta2^inf";
            add(g);
        }
        {   // Gamma0*(3)
            GroupDescriptor g;
            g.label = "3+"; g.level = 3; g.valence_factor = Rat(1, 6);
            g.gens = {T(), W(3)};
            Matrix2 s3{surd(-1, 1, 3), surd(-1, 3, 3), surd(1, 1, 3), rq(0, 1)};
            g.elliptic = {{Rat(0), surd(1, 3, 3), 2, W(3)}, {Rat(-1, 2), surd(1, 6, 3), 6, s3}};
            g.arcs = {arc(Rat(0), surd(1, 3, 3), PI / 6, PI / 2, ellE(6), ellE(2), W(3), true)};
            g.image_min = rq(0, 1); g.image_max = rq(108, 1);
            g.segments = {seg_real(0, g.image_min, g.image_max)};
            g.hauptmodul_recipe = "E2'_3^3 / Delta3";
            add(g);
        }
        {   // Gamma0(3)
            GroupDescriptor g;
            g.label = "3"; g.level = 3; g.valence_factor = Rat(1, 3);
            g.gens = {T(), Matrix2::ints(1, 0, 3, 1)};
            g.cusps = {{Rat(0), W(3), true, 3}};
            g.elliptic = {{Rat(-1, 2), surd(1, 6, 3), 3, Matrix2::ints(-2, -1, 3, 1)}};
            g.arcs = {arc(Rat(1, 3), rq(1, 3), PI / 3, PI, ellE(3), cuspE(Rat(0), 3),
                          Matrix2::ints(-1, 0, 3, -1), true)};
            g.image_min = rq(-27, 1); g.image_max = rq(0, 1);
            g.segments = {seg_real(0, g.image_min, g.image_max)};
            g.hauptmodul_recipe = "Delta3^0 / Delta3^inf";
            add(g);
        }
        {   // Gamma0*(4)
            GroupDescriptor g;
            g.label = "4+4"; g.level = 4; g.valence_factor = Rat(1, 4);
            g.gens = {T(), W(4)};
            Matrix2 lead{surd(-1, 2, 2), surd(-3, 4, 2), surd(1, 1, 2), surd(1, 2, 2)};
            g.cusps = {{Rat(-1, 2), lead, true, 2}};
            g.elliptic = {{Rat(0), rq(1, 2), 2, W(4)}};
            g.arcs = {arc(Rat(0), rq(1, 2), 0, PI / 2, cuspE(Rat(1, 2), 2), ellE(2), W(4), true)};
            g.image_min = rq(0, 1); g.image_max = rq(64, 1);
            g.segments = {seg_real(0, g.image_min, g.image_max)};
            g.hauptmodul_recipe = "Delta4+4^-1/2 / Delta4+4^inf";
            add(g);
        }
        {   // Gamma0(4)
            GroupDescriptor g;
            g.label = "4"; g.level = 4; g.valence_factor = Rat(1, 2);
            g.gens = {T(), Matrix2::ints(1, 0, 4, 1)};
            g.cusps = {{Rat(0), W(4), true, 4},
                       {Rat(-1, 2), Matrix2::ints(-1, -1, 2, 1), true, 4}};
            g.arcs = {arc(Rat(1, 4), rq(1, 4), 0, PI, cuspE(Rat(1, 2), 4), cuspE(Rat(0), 4),
                          Matrix2::ints(-1, 0, 4, -1), true)};
            g.image_min = rq(-16, 1); g.image_max = rq(0, 1);
            g.segments = {seg_real(0, g.image_min, g.image_max)};
            g.hauptmodul_recipe = "Delta4^0 / Delta4^inf";
            add(g);
        }
        {   // Gamma0*(5)
            GroupDescriptor g;
            g.label = "5+"; g.level = 5; g.valence_factor = Rat(1, 4);
            g.gens = {T(), W(5), Matrix2::ints(3, 1, 5, 2)};
            Matrix2 s51{surd(-1, 1, 5), surd(-3, 5, 5), surd(2, 1, 5), surd(1, 1, 5)};
            g.elliptic = {{Rat(0), surd(1, 5, 5), 2, W(5)},
                          {Rat(-1, 2), surd(1, 10, 5), 2, s51},
                          {Rat(-2, 5), rq(1, 5), 2, Matrix2::ints(-2, -1, 5, 2)}};
            Quad rA = surd(1, 5, 5), rB = surd(1, 10, 5);
            g.arcs = {arc(Rat(0), rA, th_at(Rat(0), rA, Rat(2, 5)), PI / 2, ellE(2), ellE(2), W(5), true),
                      arc(Rat(1, 2), rB, PI / 2, th_at(Rat(1, 2), rB, Rat(2, 5)), ellE(2), ellE(2),
                          Matrix2{surd(-1, 1, 5), surd(2, 5, 5), surd(2, 1, 5), surd(-1, 1, 5)}, true)};
            g.image_min = Quad(Rat(22), Rat(-10), 5); g.image_max = Quad(Rat(22), Rat(10), 5);
            g.segments = {seg_real(0, rq(0, 1), g.image_max), seg_real(1, g.image_min, rq(0, 1))};
            g.hauptmodul_recipe = "E2'_5^2 / Delta5";
            add(g);
        }
        {   // Gamma0(5)
            GroupDescriptor g;
            g.label = "5"; g.level = 5; g.valence_factor = Rat(1, 2);
            g.gens = {T(), Matrix2::ints(1, 0, 5, 1), Matrix2::ints(3, 1, 5, 2)};
            g.cusps = {{Rat(0), W(5), true, 5}};
            g.elliptic = {{Rat(-2, 5), rq(1, 5), 2, Matrix2::ints(-2, -1, 5, 2)},
                          {Rat(2, 5), rq(1, 5), 2, Matrix2::ints(2, -1, 5, -2)}};
            g.arcs = {arc(Rat(1, 5), rq(1, 5), th_at(Rat(1, 5), rq(1, 5), Rat(3, 10)), PI,
                          cornerE(), cuspE(Rat(0), 5), Matrix2::ints(-1, 0, 5, -1), true),
                      arc(Rat(2, 5), rq(1, 5), PI / 2, 2 * PI / 3, ellE(2), cornerE(),
                          Matrix2::ints(2, -1, 5, -2), false)};
            g.real_on_lower_arcs = false;
            g.image_min = Quad(Rat(-5), Rat(-2), 5); g.image_max = rq(0, 1);
            g.segments = {seg_real(0, g.image_min, rq(0, 1)),
                          seg_box(1, -11, -5 - 2 * std::sqrt(5.0), -2, 2)};
            g.hauptmodul_recipe = "Delta5^0 / Delta5^inf";
            add(g);
        }
        const Matrix2 W62{surd(-1, 1, 2), surd(-1, 2, 2), surd(3, 1, 2), surd(1, 1, 2)};
        const Matrix2 W63{surd(-1, 1, 3), surd(-2, 3, 3), surd(2, 1, 3), surd(1, 1, 3)};
        {   // Gamma0(6)+
            GroupDescriptor g;
            g.label = "6+"; g.level = 6; g.valence_factor = Rat(1, 4);
            g.gens = {T(), W(6), W63};
            g.elliptic = {{Rat(0), surd(1, 6, 6), 2, W(6)},
                          {Rat(-1, 2), surd(1, 6, 3), 2, W63},
                          {Rat(-1, 3), surd(1, 6, 2), 2, W62}};
            Quad rA = surd(1, 6, 6), rB = surd(1, 6, 3);
            g.arcs = {arc(Rat(0), rA, th_at(Rat(0), rA, Rat(1, 3)), PI / 2, ellE(2), ellE(2), W(6), true),
                      arc(Rat(1, 2), rB, PI / 2, th_at(Rat(1, 2), rB, Rat(1, 3)), ellE(2), ellE(2),
                          Matrix2::ints(-5, -3, 12, 7) * W63, true)};
            g.image_min = rq(-4, 1); g.image_max = rq(32, 1);
            g.segments = {seg_real(0, rq(0, 1), g.image_max), seg_real(1, g.image_min, rq(0, 1))};
            g.hauptmodul_recipe = "E2'_6+2^2 / Delta6";
            add(g);
        }
        {   // Gamma0*(6)
            GroupDescriptor g;
            g.label = "6+6"; g.level = 6; g.valence_factor = Rat(1, 2);
            g.gens = {T(), W(6), Matrix2::ints(5, 2, 12, 5)};
            Matrix2 s63{surd(-2, 1, 6), surd(-5, 6, 6), surd(5, 1, 6), surd(2, 1, 6)};
            g.cusps = {{Rat(-1, 2), W63, true, 12}};
            g.elliptic = {{Rat(0), surd(1, 6, 6), 2, W(6)}, {Rat(-2, 5), surd(1, 30, 6), 2, s63}};
            Quad rA = surd(1, 6, 6);
            g.arcs = {arc(Rat(0), rA, th_at(Rat(0), rA, Rat(2, 5)), PI / 2, ellE(2), ellE(2), W(6), true),
                      arc(Rat(5, 12), rq(1, 12), 0, th_at(Rat(5, 12), rq(1, 12), Rat(2, 5)),
                          cuspE(Rat(1, 2), 12), ellE(2), Matrix2::ints(-5, 2, 12, -5), true)};
            g.image_min = rq(0, 1); g.image_max = Quad(Rat(17), Rat(12), 2);
            g.segments = {seg_real(0, rq(0, 1), g.image_max), seg_real(1, rq(0, 1), g.image_max)};
            g.hauptmodul_recipe = "Delta6+6^-1/2 / Delta6+6^inf";
            add(g);
        }
        {   // Gamma0(6)+3
            GroupDescriptor g;
            g.label = "6+3"; g.level = 6; g.valence_factor = Rat(1, 2);
            g.gens = {T(), Matrix2::ints(1, 0, 6, 1), W63};
            Matrix2 s64{surd(-1, 1, 3), surd(-1, 3, 3), surd(4, 1, 3), surd(1, 1, 3)};
            g.cusps = {{Rat(0), W(6), true, 6}};
            g.elliptic = {{Rat(-1, 2), surd(1, 6, 3), 2, W63}, {Rat(-1, 4), surd(1, 12, 3), 2, s64}};
            Quad rB = surd(1, 6, 3);
            g.arcs = {arc(Rat(1, 6), rq(1, 6), PI / 3, PI, ellE(2), cuspE(Rat(0), 6),
                          Matrix2::ints(-1, 0, 6, -1), true),
                      arc(Rat(1, 2), rB, PI / 2, 5 * PI / 6, ellE(2), ellE(2),
                          Matrix2::ints(-5, -3, 12, 7) * W63, true)};
            g.image_min = rq(-16, 1); g.image_max = rq(0, 1);
            g.segments = {seg_real(0, g.image_min, g.image_max), seg_real(1, g.image_min, g.image_max)};
            g.hauptmodul_recipe = "Delta6+3^0 / Delta6+3^inf";
            add(g);
        }
        {   // Gamma0(6)+2
            GroupDescriptor g;
            g.label = "6+2"; g.level = 6; g.valence_factor = Rat(1, 2);
            g.gens = {T(), Matrix2::ints(1, 0, 6, 1), W62};
            Matrix2 s65{surd(1, 1, 2), surd(-1, 2, 2), surd(3, 1, 2), surd(-1, 1, 2)};
            g.cusps = {{Rat(0), W(6), true, 6}};
            g.elliptic = {{Rat(-1, 3), surd(1, 6, 2), 2, W62}, {Rat(1, 3), surd(1, 6, 2), 2, s65}};
            Quad rB = surd(1, 6, 2);
            g.arcs = {arc(Rat(1, 6), rq(1, 6), PI / 2, PI, cornerE(), cuspE(Rat(0), 6),
                          Matrix2::ints(-1, 0, 6, -1), true),
                      arc(Rat(1, 3), rB, PI / 2, 3 * PI / 4, ellE(2), cornerE(),
                          Matrix2::ints(5, 2, 12, 5) * W63, false)};
            g.real_on_lower_arcs = false;
            g.image_min = rq(-3, 1); g.image_max = rq(0, 1);
            g.segments = {seg_real(0, g.image_min, g.image_max),
                          seg_box(1, -7, -3, -4 * std::sqrt(2.0), 4 * std::sqrt(2.0))};
            g.hauptmodul_recipe = "Delta6+2^0 / Delta6+2^inf";
            add(g);
        }
        {   // Gamma0(6)
            GroupDescriptor g;
            g.label = "6"; g.level = 6; g.valence_factor = Rat(1);
            g.gens = {T(), Matrix2::ints(1, 0, 6, 1), Matrix2::ints(5, 2, 12, 5)};
            g.cusps = {{Rat(0), W(6), true, 6}, {Rat(-1, 2), W63, true, 12},
                       {Rat(-1, 3), W62, true, 18}};
            g.arcs = {arc(Rat(1, 6), rq(1, 6), 0, PI, cuspE(Rat(1, 3), 18), cuspE(Rat(0), 6),
                          Matrix2::ints(-1, 0, 6, -1), true),
                      arc(Rat(5, 12), rq(1, 12), 0, PI, cuspE(Rat(1, 2), 12), cuspE(Rat(1, 3), 18),
                          Matrix2::ints(-5, 2, 12, -5), true)};
            g.image_min = rq(-9, 1); g.image_max = rq(0, 1);
            g.segments = {seg_real(0, g.image_min, g.image_max), seg_real(1, g.image_min, g.image_max)};
            g.hauptmodul_recipe = "Delta6^0 / Delta6^inf";
            add(g);
        }
        {   // Gamma0*(7)
            GroupDescriptor g;
            g.label = "7+"; g.level = 7; g.valence_factor = Rat(1, 3);
            g.gens = {T(), W(7), Matrix2::ints(3, 1, 7, 2)};
            Matrix2 s71{surd(-1, 1, 7), surd(-4, 7, 7), surd(2, 1, 7), surd(1, 1, 7)};
            g.elliptic = {{Rat(0), surd(1, 7, 7), 2, W(7)},
                          {Rat(-1, 2), surd(1, 14, 7), 2, s71},
                          {Rat(-5, 14), surd(1, 14, 3), 3, Matrix2::ints(-3, -1, 7, 2)}};
            Quad rA = surd(1, 7, 7), rB = surd(1, 14, 7);
            g.arcs = {arc(Rat(0), rA, th_at(Rat(0), rA, Rat(5, 14)), PI / 2, ellE(3), ellE(2), W(7), true),
                      arc(Rat(1, 2), rB, PI / 2, th_at(Rat(1, 2), rB, Rat(5, 14)), ellE(2), ellE(3),
                          Matrix2::ints(-3, -1, 7, 2) * W(7), true)};
            g.image_min = rq(-1, 1); g.image_max = rq(27, 1);
            g.segments = {seg_real(0, rq(0, 1), g.image_max), seg_real(1, g.image_min, rq(0, 1))};
            g.hauptmodul_recipe = "E1'_7^3 / Delta7";
            add(g);
        }
        {   // Gamma0(7)
            GroupDescriptor g;
            g.label = "7"; g.level = 7; g.valence_factor = Rat(2, 3);
            g.gens = {T(), Matrix2::ints(-1, 0, 7, -1), Matrix2::ints(4, 1, 7, 2)};
            g.cusps = {{Rat(0), W(7), true, 7}};
            g.elliptic = {{Rat(-5, 14), surd(1, 14, 3), 3, Matrix2::ints(-3, -1, 7, 2)},
                          {Rat(5, 14), surd(1, 14, 3), 3, Matrix2::ints(3, -1, 7, -2)}};
            g.arcs = {arc(Rat(1, 7), rq(1, 7), PI / 3, PI, cornerE(), cuspE(Rat(0), 7),
                          Matrix2::ints(-1, 0, 7, -1), true),
                      arc(Rat(2, 7), rq(1, 7), PI / 3, 2 * PI / 3, ellE(3), cornerE(),
                          Matrix2::ints(-3, -1, 7, 2), false)};
            g.real_on_lower_arcs = false;
            g.image_min = Quad(Rat(1, 2), Rat(-2), 7); g.image_max = rq(0, 1);
            g.segments = {seg_real(0, g.image_min, g.image_max),
                          seg_box(1, -6.5, 0.5 - 2 * std::sqrt(7.0),
                                  -1.5 * std::sqrt(3.0), 1.5 * std::sqrt(3.0))};
            g.hauptmodul_recipe = "Delta7^0 / Delta7^inf";
            add(g);
        }
        {   // Gamma0*(8)
            GroupDescriptor g;
            g.label = "8+8"; g.level = 8; g.valence_factor = Rat(1, 2);
            g.gens = {T(), W(8), Matrix2::ints(3, 1, 8, 3)};
            Matrix2 lead{surd(-1, 1, 2), surd(-3, 4, 2), surd(2, 1, 2), surd(1, 1, 2)};
            Matrix2 s8{surd(-2, 1, 2), surd(-3, 4, 2), surd(6, 1, 2), surd(2, 1, 2)};
            g.cusps = {{Rat(-1, 2), lead, true, 8}};
            g.elliptic = {{Rat(0), surd(1, 4, 2), 2, W(8)}, {Rat(-1, 3), surd(1, 12, 2), 2, s8}};
            Quad rA = surd(1, 4, 2);
            g.arcs = {arc(Rat(0), rA, th_at(Rat(0), rA, Rat(1, 3)), PI / 2, ellE(2), ellE(2), W(8), true),
                      arc(Rat(3, 8), rq(1, 8), 0, th_at(Rat(3, 8), rq(1, 8), Rat(1, 3)),
                          cuspE(Rat(1, 2), 8), ellE(2), Matrix2::ints(-3, 1, 8, -3), true)};
            g.image_min = rq(0, 1); g.image_max = Quad(Rat(12), Rat(8), 2);
            g.segments = {seg_real(0, rq(0, 1), g.image_max), seg_real(1, rq(0, 1), g.image_max)};
            g.hauptmodul_recipe = "Delta8+8^-1/2 / Delta8+8^inf";
            add(g);
        }
        {   // Gamma0(8)
            GroupDescriptor g;
            g.label = "8"; g.level = 8; g.valence_factor = Rat(1);
            g.gens = {T(), Matrix2::ints(1, 0, 8, 1), Matrix2::ints(3, 1, 8, 3)};
            Matrix2 lead4{surd(-1, 1, 2), surd(-3, 4, 2), surd(2, 1, 2), surd(1, 1, 2)};
            g.cusps = {{Rat(0), W(8), true, 8}, {Rat(-1, 2), lead4, true, 8},
                       {Rat(-1, 4), Matrix2{rq(-1, 1), rq(-1, 2), rq(4, 1), rq(1, 1)}, true, 16}};
            g.arcs = {arc(Rat(1, 8), rq(1, 8), 0, PI, cuspE(Rat(1, 4), 16), cuspE(Rat(0), 8),
                          Matrix2::ints(-1, 0, 8, -1), true),
                      arc(Rat(3, 8), rq(1, 8), 0, PI, cuspE(Rat(1, 2), 8), cuspE(Rat(1, 4), 16),
                          Matrix2::ints(-3, 1, 8, -3), true)};
            g.image_min = rq(-8, 1); g.image_max = rq(0, 1);
            g.segments = {seg_real(0, g.image_min, g.image_max), seg_real(1, g.image_min, g.image_max)};
            g.hauptmodul_recipe = "Delta8^0 / Delta8^inf";
            add(g);
        }
        {   // Gamma0*(9)
            GroupDescriptor g;
            g.label = "9+9"; g.level = 9; g.valence_factor = Rat(1, 2);
            g.gens = {T(), W(9), Matrix2::ints(5, 1, 9, 2)};
            Matrix2 lead{rq(-1, 1), rq(-2, 3), rq(3, 1), rq(1, 1)};
            Matrix2 s9{rq(-3, 1), rq(-5, 3), rq(6, 1), rq(3, 1)};
            g.cusps = {{Rat(-1, 3), lead, true, 9}};
            g.elliptic = {{Rat(0), rq(1, 3), 2, W(9)}, {Rat(-1, 2), rq(1, 6), 2, s9}};
            g.arcs = {arc(Rat(0), rq(1, 3), 0, PI / 2, cuspE(Rat(1, 3), 9), ellE(2), W(9), true),
                      arc(Rat(1, 2), rq(1, 6), PI / 2, PI, ellE(2), cuspE(Rat(1, 3), 9),
                          Matrix2::ints(-4, -1, 9, 2) * W(9), true)};
            g.image_min = Quad(Rat(9), Rat(-6), 3); g.image_max = Quad(Rat(9), Rat(6), 3);
            g.segments = {seg_real(0, rq(0, 1), g.image_max), seg_real(1, g.image_min, rq(0, 1))};
            g.hauptmodul_recipe = "Delta9+9^-1/3 / Delta9+9^inf";
            add(g);
        }
        {   // Gamma0(9)
            GroupDescriptor g;
            g.label = "9"; g.level = 9; g.valence_factor = Rat(1);
            g.gens = {T(), Matrix2::ints(1, 0, 9, 1), Matrix2::ints(5, 1, 9, 2)};
            g.cusps = {{Rat(0), W(9), true, 9},
                       {Rat(-1, 3), Matrix2{rq(-1, 1), rq(-2, 3), rq(3, 1), rq(1, 1)}, true, 9},
                       {Rat(1, 3), Matrix2{rq(1, 1), rq(-2, 3), rq(3, 1), rq(-1, 1)}, true, 9}};
            g.arcs = {arc(Rat(1, 9), rq(1, 9), PI / 3, PI, cornerE(), cuspE(Rat(0), 9),
                          Matrix2::ints(-1, 0, 9, -1), true),
                      arc(Rat(4, 9), rq(1, 9), PI / 3, PI, cornerE(), cuspE(Rat(1, 3), 9),
                          Matrix2::ints(2, -1, 9, -4), false)};
            g.real_on_lower_arcs = false;
            g.image_min = rq(-6, 1); g.image_max = rq(0, 1);
            g.segments = {seg_real(0, g.image_min, g.image_max),
                          seg_ray(1, -3, 0, -2 * PI / 3, 3)};
            g.hauptmodul_recipe = "Delta9^0 / Delta9^inf";
            add(g);
        }
        const Matrix2 W102{surd(-1, 1, 2), surd(-1, 2, 2), surd(5, 1, 2), surd(2, 1, 2)};
        const Matrix2 W105{surd(-1, 1, 5), surd(-3, 5, 5), surd(2, 1, 5), surd(1, 1, 5)};
        {   // Gamma0(10)+
            GroupDescriptor g;
            g.label = "10+"; g.level = 10; g.valence_factor = Rat(3, 8);
            g.gens = {T(), W(10), W105};
            g.elliptic = {{Rat(0), surd(1, 10, 10), 2, W(10)},
                          {Rat(-1, 2), surd(1, 10, 5), 2, W105},
                          {Rat(-3, 10), rq(1, 10), 4, W102}};
            Quad rA = surd(1, 10, 10), rB = surd(1, 10, 5);
            g.arcs = {arc(Rat(0), rA, th_at(Rat(0), rA, Rat(3, 10)), PI / 2, ellE(4), ellE(2), W(10), true),
                      arc(Rat(1, 2), rB, PI / 2, th_at(Rat(1, 2), rB, Rat(3, 10)), ellE(2), ellE(4),
                          Matrix2::ints(-9, -5, 20, 11) * W105, true)};
            g.image_min = rq(-4, 1); g.image_max = rq(16, 1);
            g.segments = {seg_real(0, rq(0, 1), g.image_max), seg_real(1, g.image_min, rq(0, 1))};
            g.hauptmodul_recipe = "E2/3'_10^4 / Delta10";
            add(g);
        }
        {   // Gamma0*(10)
            GroupDescriptor g;
            g.label = "10+10"; g.level = 10; g.valence_factor = Rat(3, 4);
            g.gens = {T(), W(10), Matrix2::ints(-3, -1, 10, 3), Matrix2::ints(9, 4, 20, 9)};
            Matrix2 s103{surd(3, 1, 10), surd(13, 10, 10), surd(-7, 1, 10), surd(-3, 1, 10)};
            g.cusps = {{Rat(-1, 2), W105, true, 20}};
            g.elliptic = {{Rat(0), surd(1, 10, 10), 2, W(10)},
                          {Rat(-3, 10), rq(1, 10), 2, Matrix2::ints(-3, -1, 10, 3)},
                          {Rat(-3, 7), surd(1, 70, 10), 2, s103}};
            Quad rA = surd(1, 10, 10), rC = surd(1, 30, 10);
            g.arcs = {arc(Rat(0), rA, th_at(Rat(0), rA, Rat(3, 10)), PI / 2, ellE(2), ellE(2), W(10), true),
                      arc(Rat(1, 3), rC, th_at(Rat(1, 3), rC, Rat(3, 7)), th_at(Rat(1, 3), rC, Rat(3, 10)),
                          ellE(2), ellE(2), Matrix2::ints(-3, -1, 10, 3) * W(10), true),
                      arc(Rat(9, 20), rq(1, 20), 0, th_at(Rat(9, 20), rq(1, 20), Rat(3, 7)),
                          cuspE(Rat(1, 2), 20), ellE(2), Matrix2::ints(-9, 4, 20, -9), true)};
            g.image_min = rq(0, 1); g.image_max = Quad(Rat(9), Rat(4), 5);
            g.segments = {seg_real(0, rq(0, 1), g.image_max), seg_real(1, rq(0, 1), g.image_max),
                          seg_real(2, rq(0, 1), g.image_max)};
            g.hauptmodul_recipe = "Delta10+10^-1/2 / Delta10+10^inf";
            add(g);
        }
        {   // Gamma0(10)+5
            GroupDescriptor g;
            g.label = "10+5"; g.level = 10; g.valence_factor = Rat(3, 4);
            g.gens = {T(), W105, Matrix2::ints(1, 0, 10, 1), Matrix2::ints(-3, -1, 10, 3)};
            Matrix2 s104{surd(-1, 1, 5), surd(-1, 5, 5), surd(6, 1, 5), surd(1, 1, 5)};
            g.cusps = {{Rat(0), W(10), true, 10}};
            g.elliptic = {{Rat(-3, 10), rq(1, 10), 2, Matrix2::ints(-3, -1, 10, 3)},
                          {Rat(-1, 2), surd(1, 10, 5), 2, W105},
                          {Rat(-1, 6), surd(1, 30, 5), 2, s104}};
            Quad rB = surd(1, 20, 5), rC = surd(1, 10, 5);
            g.arcs = {arc(Rat(1, 10), rq(1, 10), th_at(Rat(1, 10), rq(1, 10), Rat(1, 6)), PI,
                          ellE(2), cuspE(Rat(0), 10), Matrix2::ints(-1, 0, 10, -1), true),
                      arc(Rat(1, 4), rB, th_at(Rat(1, 4), rB, Rat(3, 10)), th_at(Rat(1, 4), rB, Rat(1, 6)),
                          ellE(2), ellE(2), Matrix2::ints(-7, -4, 30, 17) * W105, true),
                      arc(Rat(1, 2), rC, PI / 2, th_at(Rat(1, 2), rC, Rat(3, 10)), ellE(2), ellE(2),
                          Matrix2::ints(-9, -5, 20, 11) * W105, true)};
            g.image_min = Quad(Rat(-6), Rat(-2), 5); g.image_max = rq(0, 1);
            g.segments = {seg_real(0, g.image_min, g.image_max), seg_real(1, g.image_min, g.image_max),
                          seg_real(2, g.image_min, g.image_max)};
            g.hauptmodul_recipe = "Delta10+5^0 / Delta10+5^inf";
            add(g);
        }
        {   // Gamma0(10)+2
            GroupDescriptor g;
            g.label = "10+2"; g.level = 10; g.valence_factor = Rat(3, 4);
            g.gens = {T(), W102, Matrix2::ints(1, 0, 10, 1), Matrix2::ints(9, 2, 40, 9)};
            Matrix2 s105{surd(2, 1, 2), surd(-1, 2, 2), surd(5, 1, 2), surd(-1, 1, 2)};
            g.cusps = {{Rat(0), W(10), true, 10}};
            g.elliptic = {{Rat(-3, 10), rq(1, 10), 4, W102}, {Rat(3, 10), rq(1, 10), 4, s105}};
            Quad rB = surd(1, 10, 2);
            g.arcs = {arc(Rat(1, 10), rq(1, 10), PI / 2, PI, cornerE(), cuspE(Rat(0), 10),
                          Matrix2::ints(-1, 0, 10, -1), true),
                      arc(Rat(1, 5), rB, PI / 4, 3 * PI / 4, ellE(4), cornerE(),
                          Matrix2::ints(-3, -1, 10, 3) * W105, false)};
            g.real_on_lower_arcs = false;
            g.image_min = rq(-1, 1); g.image_max = rq(0, 1);
            g.segments = {seg_real(0, g.image_min, g.image_max), seg_box(1, -3, -1, -4, 4)};
            g.hauptmodul_recipe = "Delta10+2^0 / Delta10+2^inf";
            add(g);
        }
        {   // Gamma0(10)
            GroupDescriptor g;
            g.label = "10"; g.level = 10; g.valence_factor = Rat(3, 2);
            g.gens = {T(), Matrix2::ints(1, 0, 10, 1), Matrix2::ints(-3, -1, 10, 3),
                      Matrix2::ints(3, -1, 10, -3), Matrix2::ints(9, 4, 20, 9)};
            g.cusps = {{Rat(0), W(10), true, 10}, {Rat(-1, 2), W105, true, 20},
                       {Rat(-1, 5), W102, true, 50}};
            g.elliptic = {{Rat(-3, 10), rq(1, 10), 2, Matrix2::ints(-3, -1, 10, 3)},
                          {Rat(3, 10), rq(1, 10), 2, Matrix2::ints(3, -1, 10, -3)}};
            g.arcs = {arc(Rat(1, 10), rq(1, 10), PI / 2, PI, cornerE(), cuspE(Rat(0), 10),
                          Matrix2::ints(-1, 0, 10, -1), true),
                      arc(Rat(3, 10), rq(1, 10), PI / 2, PI, ellE(2), cuspE(Rat(1, 5), 50),
                          Matrix2::ints(3, -1, 10, -3), false),
                      arc(Rat(9, 20), rq(1, 20), 0, PI, cuspE(Rat(1, 2), 20), cuspE(Rat(2, 5), 50),
                          Matrix2::ints(-9, 4, 20, -9), true)};
            g.real_on_lower_arcs = false;
            g.image_min = rq(-5, 1); g.image_max = rq(0, 1);
            g.segments = {seg_real(0, rq(-4, 1), rq(0, 1)), seg_real(2, rq(-5, 1), rq(-4, 1)),
                          seg_box(1, -4, -3.8, -2, 2)};
            g.hauptmodul_recipe = "Delta10^0 / Delta10^inf";
            add(g);
        }
        {   // Gamma0*(11)
            GroupDescriptor g;
            g.label = "11+"; g.level = 11; g.valence_factor = Rat(1, 2);
            g.gens = {T(), W(11), Matrix2::ints(4, 1, 11, 3), Matrix2::ints(3, 1, 11, 4)};
            Matrix2 s111{surd(-1, 1, 11), surd(-6, 11, 11), surd(2, 1, 11), surd(1, 1, 11)};
            Matrix2 s112{surd(-1, 1, 11), surd(-4, 11, 11), surd(3, 1, 11), surd(1, 1, 11)};
            Matrix2 s113{surd(1, 1, 11), surd(-4, 11, 11), surd(3, 1, 11), surd(-1, 1, 11)};
            g.elliptic = {{Rat(0), surd(1, 11, 11), 2, W(11)},
                          {Rat(-1, 2), surd(1, 22, 11), 2, s111},
                          {Rat(-1, 3), surd(1, 33, 11), 2, s112},
                          {Rat(1, 3), surd(1, 33, 11), 2, s113}};
            Quad rA = surd(1, 11, 11), rC = surd(1, 33, 11), rB = surd(1, 22, 11);
            g.arcs = {arc(Rat(0), rA, th_at(Rat(0), rA, Rat(19, 66)), PI / 2, cornerE(), ellE(2),
                          W(11), true),
                      arc(Rat(1, 3), rC, PI / 2, th_at(Rat(1, 3), rC, Rat(19, 66)), ellE(2), cornerE(),
                          s113, false),
                      arc(Rat(1, 2), rB, PI / 2, th_at(Rat(1, 2), rB, Rat(25, 66)), ellE(2), cornerE(),
                          Matrix2::ints(-5, -1, 11, 2) * W(11), true)};
            g.real_on_lower_arcs = false;
            g.image_min = rq(-8, 5); g.image_max = rq(152275, 10000);
            g.segments = {seg_real(0, Quad(Rat(22, 5), Rat(-2), 5), rq(152276, 10000)),
                          seg_real(2, rq(-8, 5), Quad(Rat(22, 5), Rat(-2), 5))};
            g.hauptmodul_recipe = "E2'_11 / Delta11";
            add(g);
        }
        {   // Gamma0(11), genus 1
            GroupDescriptor g;
            g.label = "11"; g.level = 11; g.genus = 1; g.valence_factor = Rat(1);
            g.gens = {T(), Matrix2::ints(4, 1, 11, 3), Matrix2::ints(3, 1, 11, 4)};
            g.cusps = {{Rat(0), W(11), true, 11}};
            g.real_on_lower_arcs = false;
            g.hauptmodul_recipe = "";
            add(g);
        }
        const Matrix2 W123{surd(-1, 1, 3), surd(-1, 3, 3), surd(4, 1, 3), surd(1, 1, 3)};
        const Matrix2 W124{rq(-2, 1), rq(1, 2), rq(6, 1), rq(-2, 1)};
        const Matrix2 W12p6{surd(-1, 2, 6), surd(-5, 12, 6), surd(1, 1, 6), surd(1, 2, 6)};
        const Matrix2 W12m6{surd(-1, 1, 3), surd(-2, 3, 3), surd(2, 1, 3), surd(1, 1, 3)};
        const Matrix2 W12p2{surd(-1, 2, 2), surd(-1, 4, 2), surd(3, 1, 2), surd(1, 2, 2)};
        const Matrix2 W12m2{rq(-1, 1), rq(0, 1), rq(6, 1), rq(-1, 1)};
        {   // Gamma0(12)+
            GroupDescriptor g;
            g.label = "12+"; g.level = 12; g.valence_factor = Rat(1, 2);
            g.gens = {T(), W(12), W124};
            g.cusps = {{Rat(-1, 2), W12p6, true, 6}};
            g.elliptic = {{Rat(0), surd(1, 6, 3), 2, W(12)}, {Rat(-1, 4), surd(1, 12, 3), 2, W123}};
            Quad rA = surd(1, 6, 3);
            g.arcs = {arc(Rat(0), rA, PI / 6, PI / 2, ellE(2), ellE(2), W(12), true),
                      arc(Rat(1, 3), rq(1, 6), 0, 2 * PI / 3, cuspE(Rat(1, 2), 6), ellE(2), W124, true)};
            g.image_min = rq(0, 1); g.image_max = rq(16, 1);
            g.segments = {seg_real(0, rq(0, 1), g.image_max), seg_real(1, rq(0, 1), g.image_max)};
            g.hauptmodul_recipe = "Delta12+^-1/2 / Delta12+^inf";
            add(g);
        }
        {   // Gamma0*(12)
            GroupDescriptor g;
            g.label = "12+12"; g.level = 12; g.valence_factor = Rat(1);
            g.gens = {T(), W(12), Matrix2::ints(5, 2, 12, 5), Matrix2::ints(7, 2, 24, 7)};
            Matrix2 s122{surd(-4, 1, 3), surd(-7, 6, 3), surd(14, 1, 3), surd(4, 1, 3)};
            g.cusps = {{Rat(-1, 3), W124, true, 36}, {Rat(-1, 2), W12m6, false, 12}};
            g.elliptic = {{Rat(0), surd(1, 6, 3), 2, W(12)}, {Rat(-2, 7), surd(1, 42, 3), 2, s122}};
            Quad rA = surd(1, 6, 3);
            g.arcs = {arc(Rat(0), rA, th_at(Rat(0), rA, Rat(2, 7)), PI / 2, ellE(2), ellE(2),
                          W(12), true),
                      arc(Rat(7, 24), rq(1, 24), 0, th_at(Rat(7, 24), rq(1, 24), Rat(2, 7)),
                          cuspE(Rat(1, 3), 36), ellE(2), Matrix2::ints(-7, 2, 24, -7), true),
                      arc(Rat(5, 12), rq(1, 12), 0, PI, cuspE(Rat(1, 2), 12), cuspE(Rat(1, 3), 36),
                          Matrix2::ints(-5, 2, 12, -5), true)};
            g.image_min = rq(-1, 1); g.image_max = Quad(Rat(7), Rat(4), 3);
            g.segments = {seg_real(0, rq(-1, 1), g.image_max), seg_real(1, rq(-1, 1), g.image_max),
                          seg_real(2, rq(-1, 1), g.image_max)};
            g.hauptmodul_recipe = "Delta12+12^-1/3 / Delta12+12^inf";
            add(g);
        }
        {   // Gamma0(12)+4
            GroupDescriptor g;
            g.label = "12+4"; g.level = 12; g.valence_factor = Rat(1);
            g.gens = {T(), W124, Matrix2::ints(1, 0, 12, 1)};
            g.cusps = {{Rat(0), W(12), true, 12}, {Rat(-1, 2), W12p6, true, 6},
                       {Rat(-1, 6), W12p2, true, 18}};
            g.arcs = {arc(Rat(1, 12), rq(1, 12), 0, PI, cuspE(Rat(1, 6), 18), cuspE(Rat(0), 12),
                          Matrix2::ints(-1, 0, 12, -1), true),
                      arc(Rat(1, 3), rq(1, 6), 0, PI, cuspE(Rat(1, 2), 6), cuspE(Rat(1, 6), 18),
                          W124, true)};
            g.image_min = rq(-9, 1); g.image_max = rq(0, 1);
            g.segments = {seg_real(0, g.image_min, g.image_max), seg_real(1, g.image_min, g.image_max)};
            g.hauptmodul_recipe = "Delta12+4^0 / Delta12+4^inf";
            add(g);
        }
        {   // Gamma0(12)+3
            GroupDescriptor g;
            g.label = "12+3"; g.level = 12; g.valence_factor = Rat(1);
            g.gens = {T(), W123, Matrix2::ints(1, 0, 12, 1), Matrix2::ints(5, 2, 12, 5)};
            Matrix2 s123{surd(1, 1, 3), surd(-1, 3, 3), surd(4, 1, 3), surd(-1, 1, 3)};
            g.cusps = {{Rat(0), W(12), true, 12}, {Rat(-1, 2), W12m6, true, 12}};
            g.elliptic = {{Rat(-1, 4), surd(1, 12, 3), 2, W123}, {Rat(1, 4), surd(1, 12, 3), 2, s123}};
            Quad rB = surd(1, 12, 3);
            g.arcs = {arc(Rat(1, 12), rq(1, 12), PI / 3, PI, cornerE(), cuspE(Rat(0), 12),
                          Matrix2::ints(-1, 0, 12, -1), true),
                      arc(Rat(1, 4), rB, PI / 2, 5 * PI / 6, ellE(2), cornerE(), s123, false),
                      arc(Rat(5, 12), rq(1, 12), 0, 2 * PI / 3, cuspE(Rat(1, 2), 12), cornerE(),
                          Matrix2::ints(-5, 2, 12, -5), true)};
            g.real_on_lower_arcs = false;
            g.image_min = rq(-4, 1); g.image_max = rq(0, 1);
            g.segments = {seg_real(0, rq(-2, 1), rq(0, 1)), seg_real(2, rq(-4, 1), rq(-2, 1)),
                          seg_ray(1, -2, 0, -PI / 2, 2 * std::sqrt(3.0))};
            g.hauptmodul_recipe = "Delta12+3^0 / Delta12+3^inf";
            add(g);
        }
        {   // Gamma0(12)
            GroupDescriptor g;
            g.label = "12"; g.level = 12; g.valence_factor = Rat(2);
            g.gens = {T(), Matrix2::ints(1, 0, 12, 1), Matrix2::ints(5, 2, 12, 5),
                      Matrix2::ints(5, 1, 24, 5), Matrix2::ints(7, 2, 24, 7)};
            g.cusps = {{Rat(0), W(12), true, 12}, {Rat(-1, 3), W124, true, 36},
                       {Rat(-1, 4), W123, true, 48}, {Rat(-1, 2), W12m6, true, 12},
                       {Rat(-1, 6), W12m2, true, 36}};
            g.arcs = {arc(Rat(1, 12), rq(1, 12), 0, PI, cuspE(Rat(1, 6), 36), cuspE(Rat(0), 12),
                          Matrix2::ints(-1, 0, 12, -1), true),
                      arc(Rat(5, 24), rq(1, 24), 0, PI, cuspE(Rat(1, 4), 48), cuspE(Rat(1, 6), 36),
                          Matrix2::ints(-5, 1, 24, -5), true),
                      arc(Rat(7, 24), rq(1, 24), 0, PI, cuspE(Rat(1, 3), 36), cuspE(Rat(1, 4), 48),
                          Matrix2::ints(-7, 2, 24, -7), true),
                      arc(Rat(5, 12), rq(1, 12), 0, PI, cuspE(Rat(1, 2), 12), cuspE(Rat(1, 3), 36),
                          Matrix2::ints(-5, 2, 12, -5), true)};
            g.image_min = rq(-6, 1); g.image_max = rq(0, 1);
            g.segments = {seg_real(0, g.image_min, g.image_max), seg_real(1, g.image_min, g.image_max),
                          seg_real(2, g.image_min, g.image_max), seg_real(3, g.image_min, g.image_max)};
            g.hauptmodul_recipe = "Delta12^0 / Delta12^inf";
            add(g);
        }
        return m;
    }();
    return table;
}

inline const GroupDescriptor& get_group(const std::string& label) {
    auto it = catalog().find(label);
    if (it == catalog().end()) throw SeriesError("UnknownGroup: " + label);
    return it->second;
}

inline std::vector<std::string> group_labels() {
    std::vector<std::string> v;
    for (auto& [k, g] : catalog()) v.push_back(k);
    return v;
}

// genus-zero groups in catalog order
inline std::vector<std::string> genus0_labels() {
    std::vector<std::string> v;
    for (auto& [k, g] : catalog())
        if (g.genus == 0) v.push_back(k);
    return v;
}

// greedy reduction into the closure of the fundamental domain
struct Reduction {
    Cplx z;
    Matrix2 gamma;   // gamma * z0 = z
    bool converged = true;
};

inline Reduction reduce_to_domain(const GroupDescriptor& g, Cplx z0) {
    Reduction red;
    red.z = z0;
    std::vector<Matrix2> moves;
    for (const auto& mg : g.gens) {
        moves.push_back(mg);
        moves.push_back(mg.inverse());
    }
    Cplx z = z0;
    Matrix2 acc;
    const int cap = 10000;
    int it = 0;
    for (; it < cap; ++it) {
        double n = std::floor(z.real() + 0.5);
        if (n != 0) {
            z -= n;
            Matrix2 tn = Matrix2::ints(1, -static_cast<long>(n), 0, 1);
            acc = tn * acc;
        }
        bool moved = false;
        for (const auto& mv : moves) {
            double cj = std::abs(mv.c.value());
            if (cj < 1e-12) continue;
            double jf = std::abs(mv.j_factor(z));
            if (jf < 1.0 - 1e-13) {
                z = mv.apply(z);
                acc = mv * acc;
                moved = true;
                break;
            }
        }
        if (!moved) break;
    }
    double n = std::floor(z.real() + 0.5);
    if (n != 0) {
        z -= n;
        acc = Matrix2::ints(1, -static_cast<long>(n), 0, 1) * acc;
    }
    red.z = z;
    red.gamma = acc;
    red.converged = it < cap;
    return red;
}

}  // namespace modzero
