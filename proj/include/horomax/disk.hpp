#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace horomax {

// Poincare disk model of the hyperbolic plane (curvature -1), floating
// point. Isometries are unit-determinant matrices [[a, b], [conj b, conj a]]
// acting by z -> (a z + b)/(conj(b) z + conj(a)), optionally precomposed
// with complex conjugation.

using cplx = std::complex<double>;

inline constexpr double kDiskBoundaryClamp = 1e-12;

inline double normalize_angle(double t) {
    constexpr double tau = 2.0 * std::numbers::pi;
    t = std::fmod(t, tau);
    if (t < 0) t += tau;
    return t;
}

// angular distance in [0, pi]
inline double angle_gap(double s, double t) {
    constexpr double tau = 2.0 * std::numbers::pi;
    double d = std::fabs(normalize_angle(s) - normalize_angle(t));
    return std::min(d, tau - d);
}

class DiskPoint {
public:
    DiskPoint() : z_(0.0, 0.0) {}
    explicit DiskPoint(cplx z) : z_(z) {
        if (std::abs(z) > 1.0 - kDiskBoundaryClamp)
            throw std::domain_error("disk point outside the clamped open disk");
    }
    DiskPoint(double re, double im) : DiskPoint(cplx(re, im)) {}

    cplx z() const { return z_; }

private:
    cplx z_;
};

class DiskIdeal {
public:
    DiskIdeal() : angle_(0.0) {}
    explicit DiskIdeal(double angle) : angle_(normalize_angle(angle)) {}

    double angle() const { return angle_; }
    cplx unit() const { return std::polar(1.0, angle_); }

private:
    double angle_;
};

class DiskIsometry {
public:
    DiskIsometry() : a_(1.0, 0.0), b_(0.0, 0.0), reversing_(false) {}

    DiskIsometry(cplx a, cplx b, bool reversing = false)
        : a_(a), b_(b), reversing_(reversing) {
        // Normalize to unit determinant only while |a|^2 - |b|^2 is computed
        // accurately. For long products the entries grow like e^{d/2} and the
        // determinant cancels catastrophically, while the analytic value
        // stays 1; rescaling by the garbage value would corrupt the matrix.
        double det = std::norm(a_) - std::norm(b_);
        if (std::norm(a_) + std::norm(b_) < 1e4) {
            if (det <= 0)
                throw std::invalid_argument("disk isometry must have |a|^2 - |b|^2 > 0");
            double s = std::sqrt(det);
            a_ /= s;
            b_ /= s;
        }
    }

    cplx a() const { return a_; }
    cplx b() const { return b_; }
    bool reversing() const { return reversing_; }
    double trace_re() const { return 2.0 * a_.real(); }

    cplx apply_raw(cplx z) const {
        cplx w = reversing_ ? std::conj(z) : z;
        return (a_ * w + b_) / (std::conj(b_) * w + std::conj(a_));
    }

    DiskIsometry inverse() const {
        if (!reversing_) return DiskIsometry(std::conj(a_), -b_, false);
        return DiskIsometry(a_, -std::conj(b_), true);
    }

    friend DiskIsometry operator*(const DiskIsometry& g, const DiskIsometry& h) {
        cplx ha = h.a_, hb = h.b_;
        if (g.reversing_) {
            ha = std::conj(ha);
            hb = std::conj(hb);
        }
        return DiskIsometry(g.a_ * ha + g.b_ * std::conj(hb),
                            g.a_ * hb + g.b_ * std::conj(ha),
                            g.reversing_ != h.reversing_);
    }

    static DiskIsometry rotation(double alpha) {
        return DiskIsometry(std::polar(1.0, alpha / 2.0), cplx(0.0, 0.0));
    }

    // z -> (z - p)/(1 - conj(p) z), sends p to the origin
    static DiskIsometry to_origin(cplx p) {
        return DiskIsometry(cplx(1.0, 0.0), -p);
    }

    // hyperbolic translation along the real axis moving o toward +1, of
    // translation length ell
    static DiskIsometry translation_x(double ell) {
        return DiskIsometry(cplx(std::cosh(ell / 2.0), 0.0), cplx(std::sinh(ell / 2.0), 0.0));
    }

private:
    cplx a_, b_;
    bool reversing_;
};

inline double disk_distance_raw(cplx z, cplx w) {
    double nz = (1.0 - std::abs(z)) * (1.0 + std::abs(z));
    double nw = (1.0 - std::abs(w)) * (1.0 + std::abs(w));
    return 2.0 * std::asinh(std::abs(z - w) / std::sqrt(nz * nw));
}

// Busemann function normalized at the origin:
// b^0_theta(z) = log(|xi - z|^2 / (1 - |z|^2))
inline double disk_busemann0(double theta, cplx z) {
    cplx xi = std::polar(1.0, theta);
    double n = (1.0 - std::abs(z)) * (1.0 + std::abs(z));
    return std::log(std::norm(xi - z) / n);
}

struct DiskModel {
    using Scalar = double;
    using Point = DiskPoint;
    using Ideal = DiskIdeal;
    using Isometry = DiskIsometry;
    using Direction = double;  // empirical boundary estimate: an angle

    static constexpr bool exact = false;
    static const char* name() { return "disk"; }
    static double tol_algebraic() { return 1e-9; }
    static double tol_limit() { return 1e-6; }

    static Point origin() { return DiskPoint(); }
    static double to_double(Scalar s) { return s; }

    static Scalar distance(const Point& x, const Point& y) {
        return disk_distance_raw(x.z(), y.z());
    }

    static bool point_eq(const Point& x, const Point& y) {
        return distance(x, y) <= tol_algebraic();
    }
    static bool ideal_eq(const Ideal& xi, const Ideal& eta) {
        return angle_gap(xi.angle(), eta.angle()) <= 1e-9;
    }

    static Scalar busemann(const Point& p, const Ideal& xi, const Point& x) {
        return disk_busemann0(xi.angle(), x.z()) - disk_busemann0(xi.angle(), p.z());
    }

    static Point apply(const Isometry& g, const Point& p) {
        return DiskPoint(g.apply_raw(p.z()));
    }
    static Ideal apply(const Isometry& g, const Ideal& xi) {
        return DiskIdeal(std::arg(g.apply_raw(xi.unit())));
    }

    static Isometry iso_identity() { return DiskIsometry(); }
    static Isometry iso_compose(const Isometry& g, const Isometry& h) { return g * h; }
    static Isometry iso_inverse(const Isometry& g) { return g.inverse(); }

    static bool iso_eq(const Isometry& g, const Isometry& h) {
        if (g.reversing() != h.reversing()) return false;
        // same Mobius map iff (a, b) = +-(a', b')
        double dp = std::abs(g.a() - h.a()) + std::abs(g.b() - h.b());
        double dm = std::abs(g.a() + h.a()) + std::abs(g.b() + h.b());
        return std::min(dp, dm) <= 1e-7;
    }

    static std::string iso_key(const Isometry& g) {
        // quantize to a 1e-6 integer grid; sign-canonicalize on the quantized
        // values and squash -0, so equal Mobius maps computed along different
        // word paths (and the +-identity pair) share one key
        double v[4] = {g.a().real(), g.a().imag(), g.b().real(), g.b().imag()};
        long long q[4];
        for (int i = 0; i < 4; ++i) {
            q[i] = std::llround(v[i] * 1e6);
            if (q[i] == 0) q[i] = 0;  // normalize -0
        }
        for (long long x : q) {
            if (x != 0) {
                if (x < 0)
                    for (long long& y : q) y = -y;
                break;
            }
        }
        char buf[112];
        std::snprintf(buf, sizeof buf, "%lld,%lld,%lld,%lld,%d", q[0], q[1], q[2], q[3],
                      g.reversing() ? 1 : 0);
        return buf;
    }

    struct Segment {
        Point a, b;
        Scalar length = 0;

        // Evaluated in extended precision: for endpoints far from o the
        // frame change cancels catastrophically in plain doubles.
        Point at(Scalar t) const {
            if (t < -1e-12 || t > length + 1e-12)
                throw std::invalid_argument("segment parameter out of range");
            if (t <= 0 || length == 0) return a;
            if (t >= length) return b;
            using cld = std::complex<long double>;
            cld x(a.z().real(), a.z().imag());
            cld y(b.z().real(), b.z().imag());
            cld wy = (y - x) / (cld(1) - std::conj(x) * y);
            cld p = std::polar(std::tanh(static_cast<long double>(t) / 2), std::arg(wy));
            cld z = (p + x) / (cld(1) + std::conj(x) * p);
            return DiskPoint(cplx(static_cast<double>(z.real()), static_cast<double>(z.imag())));
        }
    };

    static Segment segment(const Point& x, const Point& y) {
        return Segment{x, y, distance(x, y)};
    }

    struct Ray {
        Point origin;
        Ideal target;
        Isometry gamma;  // sends the origin of the ray to o
        double psi = 0;  // direction of gamma(target)

        Point at(Scalar t) const {
            if (t < 0) throw std::invalid_argument("ray parameter must be nonnegative");
            cplx w = std::polar(std::tanh(t / 2.0), psi);
            return DiskPoint(gamma.inverse().apply_raw(w));
        }

        // d(x, ray(t)), stable for arbitrarily large t
        Scalar distance_to(const Point& x, Scalar t) const {
            cplx u = gamma.apply_raw(x.z());
            cplx w = std::polar(std::tanh(t / 2.0), psi);
            double nu = (1.0 - std::abs(u)) * (1.0 + std::abs(u));
            double ch = std::cosh(t / 2.0);
            return 2.0 * std::asinh(std::abs(u - w) * ch / std::sqrt(nu));
        }
    };

    static Ray ray(const Point& origin, const Ideal& xi) {
        Ray r;
        r.origin = origin;
        r.target = xi;
        r.gamma = DiskIsometry::to_origin(origin.z());
        r.psi = apply(r.gamma, xi).angle();
        return r;
    }

    struct Line {
        Ideal plus, minus;
        double mu = 0;  // axis direction of the nearest point
        double c = 0;   // euclidean radius of the nearest point, signed
        Point base;

        // canonical(t) = e^{i mu} (i tanh(t/2) + c)/(1 + c i tanh(t/2)),
        // unit speed, canonical(0) = base, canonical(+inf) = plus
        Point at(Scalar t) const {
            cplx h(0.0, std::tanh(t / 2.0));
            cplx w = (h + c) / (1.0 + c * h);
            return DiskPoint(std::polar(1.0, mu) * w);
        }

        // d(x, at(t)), stable for arbitrarily large |t|; uses
        // |den|^2 - |num|^2 = (1 - tanh^2(t/2))(1 - c^2)
        Scalar distance_to(const Point& x, Scalar t) const {
            cplx u = std::polar(1.0, -mu) * x.z();
            cplx h(0.0, std::tanh(t / 2.0));
            cplx num = h + c;
            cplx den = 1.0 + c * h;
            double nu = (1.0 - std::abs(u)) * (1.0 + std::abs(u));
            double ch = std::cosh(t / 2.0);
            return 2.0 * std::asinh(std::abs(num - u * den) * ch /
                                    std::sqrt((1.0 - c * c) * nu));
        }
    };

    static Line line(const Ideal& plus, const Ideal& minus) {
        if (ideal_eq(plus, minus))
            throw std::invalid_argument("degenerate line: equal ideal endpoints");
        Line l;
        l.plus = plus;
        l.minus = minus;
        double delta = normalize_angle(plus.angle() - minus.angle()) / 2.0;  // in (0, pi)
        l.mu = plus.angle() - delta;
        l.c = std::tan(std::numbers::pi / 4.0 - delta / 2.0);
        l.base = DiskPoint(std::polar(1.0, l.mu) * cplx(l.c, 0.0));
        return l;
    }

    static Ideal line_plus(const Line& l) { return l.plus; }
    static Ideal line_minus(const Line& l) { return l.minus; }
    static Point line_base(const Line& l) { return l.base; }

    // Gromov product of distinct ideal points: closed form at the origin,
    // transported by an isometry for a general base.
    static Scalar gromov_ideal_finite(const Ideal& xi, const Ideal& eta, const Point& base) {
        Isometry g = DiskIsometry::to_origin(base.z());
        double a1 = apply(g, xi).angle();
        double a2 = apply(g, eta).angle();
        double half_chord = std::fabs(std::sin((a1 - a2) / 2.0));
        return -std::log(half_chord);
    }

    static double visual_ideal(const Ideal& xi, const Ideal& eta) {
        return angle_gap(xi.angle(), eta.angle());
    }
    static double visual_dir(Direction u, Direction v) { return angle_gap(u, v); }
    static double visual_dir_ideal(Direction u, const Ideal& xi) {
        return angle_gap(u, xi.angle());
    }
    static Direction direction_of(const Point& p) { return std::arg(p.z()); }

    // d(g x, o), stable for long words g (never materializes g x)
    static Scalar orbit_distance(const Isometry& g, const Point& x) {
        cplx u = g.reversing() ? std::conj(x.z()) : x.z();
        double nu = (1.0 - std::abs(u)) * (1.0 + std::abs(u));
        return 2.0 * std::asinh(std::abs(g.a() * u + g.b()) / std::sqrt(nu));
    }

    // d(g x, z), stable for long words g
    static Scalar orbit_distance_to(const Isometry& g, const Point& x, const Point& z) {
        cplx u = g.reversing() ? std::conj(x.z()) : x.z();
        cplx num = g.a() * u + g.b();
        cplx den = std::conj(g.b()) * u + std::conj(g.a());
        double nu = (1.0 - std::abs(u)) * (1.0 + std::abs(u));
        double nz = (1.0 - std::abs(z.z())) * (1.0 + std::abs(z.z()));
        return 2.0 * std::asinh(std::abs(num - z.z() * den) / std::sqrt(nu * nz));
    }

    static Direction orbit_direction(const Isometry& g, const Point& x) {
        cplx u = g.reversing() ? std::conj(x.z()) : x.z();
        cplx num = g.a() * u + g.b();
        cplx den = std::conj(g.b()) * u + std::conj(g.a());
        return std::arg(num) - std::arg(den);
    }

    // boundary-direction estimates of far ray/line points, computed on raw
    // complex values (never constructs a clamped point)
    static Direction ray_direction(const Ray& r, Scalar t) {
        cplx w = std::polar(std::tanh(t / 2.0), r.psi);
        return std::arg(r.gamma.inverse().apply_raw(w));
    }
    static Direction line_direction(const Line& l, Scalar t) {
        cplx h(0.0, std::tanh(t / 2.0));
        return std::arg(std::polar(1.0, l.mu) * (h + l.c) / (1.0 + l.c * h));
    }

    // d(r1(t1), r2(t2)), stable for arbitrarily large parameters: with
    // w_i = tanh(t_i/2) e^{i psi_i} in the respective origin frames and
    // h = gamma1 gamma2^{-1},
    // d = 2 asinh(|w1 den_h(w2) - num_h(w2)| cosh(t1/2) cosh(t2/2))
    static Scalar ray_ray_distance(const Ray& r1, Scalar t1, const Ray& r2, Scalar t2) {
        DiskIsometry h = r1.gamma * r2.gamma.inverse();
        cplx w1 = std::polar(std::tanh(t1 / 2.0), r1.psi);
        cplx w2 = std::polar(std::tanh(t2 / 2.0), r2.psi);
        cplx num = h.a() * w2 + h.b();
        cplx den = std::conj(h.b()) * w2 + std::conj(h.a());
        return 2.0 * std::asinh(std::abs(w1 * den - num) * std::cosh(t1 / 2.0) *
                                std::cosh(t2 / 2.0));
    }

    // midpoint of (r1(t1), r2(t2)), in extended precision throughout: the
    // midpoint itself is a well-conditioned function of the ray data, but
    // any double rounding of the far points costs ~1e-5 at t ~ 26
    static Point pair_midpoint(const Ray& r1, Scalar t1, const Ray& r2, Scalar t2) {
        using cld = std::complex<long double>;
        auto up = [](cplx z) { return cld(z.real(), z.imag()); };
        cld p1 = up(r1.origin.z()), p2 = up(r2.origin.z());
        // frame: z -> (z - p1)/(1 - conj(p1) z); ray directions recomputed
        // from the ideal targets in long double
        auto frame1 = [&](cld z) { return (z - p1) / (cld(1) - std::conj(p1) * z); };
        long double psi1 = std::arg(frame1(std::polar(1.0L, (long double)r1.target.angle())));
        long double psi2 = std::arg((std::polar(1.0L, (long double)r2.target.angle()) - p2) /
                                    (cld(1) - std::conj(p2) * std::polar(1.0L, (long double)r2.target.angle())));
        long double lt1 = t1, lt2 = t2;
        cld w1 = std::polar(std::tanh(lt1 / 2), psi1);
        cld w2 = std::polar(std::tanh(lt2 / 2), psi2);
        // h = frame1 . frame2^{-1}, unnormalized: [[A, B], [conj B, conj A]]
        cld A = cld(1) - p1 * std::conj(p2), B = p2 - p1;
        cld num = A * w2 + B, den = std::conj(B) * w2 + std::conj(A);
        long double rdet = std::sqrt(std::norm(A) - std::norm(B));
        long double L = 2 * std::asinh(std::abs(w1 * den - num) * std::cosh(lt1 / 2) *
                                       std::cosh(lt2 / 2) / rdet);
        // direction from w1 toward h(w2), then march L/2 from w1
        long double phi = std::arg((num - w1 * den) / (den - std::conj(w1) * num));
        cld pp = std::polar(std::tanh(L / 4), phi);
        cld mt = (pp + w1) / (cld(1) + std::conj(w1) * pp);
        cld m = (mt + p1) / (cld(1) + std::conj(p1) * mt);
        return DiskPoint(cplx(static_cast<double>(m.real()), static_cast<double>(m.imag())));
    }

    static bool is_hyperbolic(const Isometry& g) {
        return !g.reversing() && std::fabs(g.trace_re()) > 2.0 + 1e-12;
    }

    // attracting fixed angle of a hyperbolic isometry, by iterating the
    // boundary action
    static Ideal attracting_ideal(const Isometry& g) {
        if (!is_hyperbolic(g))
            throw std::invalid_argument("attracting ideal point needs a hyperbolic isometry");
        double theta = std::abs(g.b()) > 0 ? std::arg(g.apply_raw(cplx(0, 0)))
                                           : 0.0;
        for (int i = 0; i < 80; ++i) theta = apply(g, DiskIdeal(theta)).angle();
        return DiskIdeal(theta);
    }
};

}  // namespace horomax
