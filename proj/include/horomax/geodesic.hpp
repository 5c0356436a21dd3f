#pragma once

#include <stdexcept>

#include "horomax/product.hpp"

namespace horomax {

// Unit-speed parametrized geodesic: a model line plus a time offset, so
// reparametrization is arithmetic on the offset.
template <class M>
struct ParamGeodesic {
    typename M::Line line;
    typename M::Scalar offset{};

    typename M::Point at(const typename M::Scalar& t) const { return line.at(t + offset); }
    typename M::Point base() const { return line.at(offset); }
    typename M::Ideal plus() const { return M::line_plus(line); }
    typename M::Ideal minus() const { return M::line_minus(line); }
};

template <class M>
ParamGeodesic<M> make_geodesic(const typename M::Ideal& plus, const typename M::Ideal& minus,
                               typename M::Scalar offset) {
    return {M::line(plus, minus), std::move(offset)};
}

// b^o_minus(q) - b^o_plus(q): affine of slope +2 in the line parameter;
// used to locate points along a line and to coordinatize geodesics
template <class M>
typename M::Scalar busemann_gap(const typename M::Line& line, const typename M::Point& q) {
    const auto o = M::origin();
    return M::busemann(o, M::line_minus(line), q) - M::busemann(o, M::line_plus(line), q);
}

// parameter of a point q lying on the line (exact on the line; for general
// q, the parameter of the horospherical projection)
template <class M>
typename M::Scalar param_on_line(const typename M::Line& line, const typename M::Point& q) {
    return (busemann_gap<M>(line, q) - busemann_gap<M>(line, M::line_base(line))) / 2;
}

// geodesics -> regular boundary points: g -> lim (g(n), g(-n))
template <class M>
MaxBoundaryPoint<M> f_map(const ParamGeodesic<M>& g) {
    auto p = g.base();
    return renormalize<M>(g.plus(), p, g.minus(), p);
}

// inverse correspondence: the unique geodesic whose boundary coordinates
// are (plus, minus, r); solvable in closed form because the Busemann gap is
// affine of slope 2 along the line
template <class M>
ParamGeodesic<M> f_inverse(const typename M::Ideal& plus, const typename M::Ideal& minus,
                           const typename M::Scalar& r) {
    auto line = M::line(plus, minus);
    auto gap0 = busemann_gap<M>(line, M::line_base(line));
    return {line, (r - gap0) / 2};
}

// Hopf coordinates (g(+inf), g(-inf), b^{g(0)}_{g(+inf)}(o))
template <class M>
std::tuple<typename M::Ideal, typename M::Ideal, typename M::Scalar> hopf(
    const ParamGeodesic<M>& g) {
    return {g.plus(), g.minus(), M::busemann(g.base(), g.plus(), M::origin())};
}

// comparison map between Hopf coordinates and boundary coordinates:
// (xi+, xi-, r) -> (xi+, xi-, 2(r - (xi+|xi-)_o))
template <class M>
std::tuple<typename M::Ideal, typename M::Ideal, typename M::Scalar> h_map(
    const typename M::Ideal& plus, const typename M::Ideal& minus, const typename M::Scalar& r) {
    auto gp = gromov_product_ideal<M>(plus, minus, M::origin());
    if (gp.infinite)
        throw std::invalid_argument("h_map is undefined on the boundary diagonal");
    return {plus, minus, 2 * (r - gp.value)};
}

template <class M>
ParamGeodesic<M> apply(const typename M::Isometry& gamma, const ParamGeodesic<M>& g) {
    auto line = M::line(M::apply(gamma, g.plus()), M::apply(gamma, g.minus()));
    return {line, param_on_line<M>(line, M::apply(gamma, g.base()))};
}

// residuals of convergence of a structured sequence toward a geodesic:
// visual distance of the coordinate directions to g(+-inf), and the gap
// between d(x_n, o) - d(y_n, o) and its target constant
struct ConvergenceResiduals {
    double visual_plus = 0;
    double visual_minus = 0;
    double gap = 0;
};

template <class M>
ConvergenceResiduals converges_to(const StructuredSequence<M>& seq, const ParamGeodesic<M>& g,
                                  int n) {
    using S = typename M::Scalar;
    // d(x_n, o) - d(y_n, o) must tend to b^o_minus(g0) - b^o_plus(g0)
    S target = busemann_gap<M>(g.line, g.base());

    const auto o = M::origin();
    ConvergenceResiduals r;
    if (const auto* orb = std::get_if<OrbitSeq<M>>(&seq)) {
        auto gn = iso_power<M>(orb->gamma, n);
        r.visual_plus = M::visual_dir_ideal(M::orbit_direction(gn, orb->seed.x), g.plus());
        r.visual_minus = M::visual_dir_ideal(M::orbit_direction(gn, orb->seed.y), g.minus());
        S c = M::orbit_distance(gn, orb->seed.x) - M::orbit_distance(gn, orb->seed.y);
        r.gap = std::abs(M::to_double(c - target));
        return r;
    }
    if (const auto* rp = std::get_if<RayPair<M>>(&seq)) {
        S t1 = rp->speed1 * S(n), t2 = rp->speed2 * S(n);
        r.visual_plus = M::visual_dir_ideal(M::ray_direction(rp->ray1, t1), g.plus());
        r.visual_minus = M::visual_dir_ideal(M::ray_direction(rp->ray2, t2), g.minus());
        S c = rp->ray1.distance_to(o, t1) - rp->ray2.distance_to(o, t2);
        r.gap = std::abs(M::to_double(c - target));
        return r;
    }
    if (const auto* gp = std::get_if<GeodesicPair<M>>(&seq)) {
        S tp = S(n) + gp->offset, tm = S(-n) + gp->offset;
        r.visual_plus = M::visual_dir_ideal(M::line_direction(gp->line, tp), g.plus());
        r.visual_minus = M::visual_dir_ideal(M::line_direction(gp->line, tm), g.minus());
        S c = gp->line.distance_to(o, tp) - gp->line.distance_to(o, tm);
        r.gap = std::abs(M::to_double(c - target));
        return r;
    }
    auto p = sequence_at(seq, n);
    r.visual_plus = M::visual_dir_ideal(M::direction_of(p.x), g.plus());
    r.visual_minus = M::visual_dir_ideal(M::direction_of(p.y), g.minus());
    S c = M::distance(p.x, o) - M::distance(p.y, o);
    r.gap = std::abs(M::to_double(c - target));
    return r;
}

// nearest-point projection of X x X onto the diagonal: the midpoint
template <class M>
typename M::Point project_diagonal(const ProductPoint<M>& p) {
    return midpoint<M>(p.x, p.y);
}

template <class M>
typename M::Point rho_tilde(const ProductPoint<M>& p) {
    return project_diagonal<M>(p);
}

template <class M>
typename M::Point rho_tilde(const ParamGeodesic<M>& g) {
    return g.base();
}

}  // namespace horomax
