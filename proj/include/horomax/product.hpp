#pragma once

#include <algorithm>
#include <stdexcept>
#include <variant>
#include <vector>

#include "horomax/space.hpp"

namespace horomax {

// The product space (X x X, d_max) and its horofunction boundary. Boundary
// points are coordinate data, never function objects; evaluation goes
// through horofunction_eval.

template <class M>
struct ProductPoint {
    typename M::Point x, y;
};

template <class M>
ProductPoint<M> product_origin() {
    return {M::origin(), M::origin()};
}

template <class M>
typename M::Scalar d_max(const ProductPoint<M>& p, const ProductPoint<M>& q) {
    return std::max(M::distance(p.x, q.x), M::distance(p.y, q.y));
}

// Boundary point of (X x X, d_max), normalized at O = (o, o).
//
// Singular(1, xi):      class of b^o_xi(z)         (first factor)
// Singular(2, xi):      class of b^o_xi(z')        (second factor)
// Regular(xi, xi', c):  class of max{b^o_xi(z), b^o_xi'(z') - c}
//
// The regular coordinate c is the limit of d(x_n, o) - d(y_n, o) along any
// sequence converging to the class; equivalently, for the class of
// max{b^p_xi, b^p'_xi'}, c = b^o_xi'(p') - b^o_xi(p).
template <class M>
struct MaxBoundaryPoint {
    enum class Kind { singular, regular };

    Kind kind = Kind::singular;
    int factor = 1;  // singular only: 1 or 2
    typename M::Ideal xi;
    typename M::Ideal xi_prime;  // regular only
    typename M::Scalar c{};      // regular only

    static MaxBoundaryPoint singular(int factor, typename M::Ideal xi) {
        if (factor != 1 && factor != 2)
            throw std::invalid_argument("singular factor must be 1 or 2");
        MaxBoundaryPoint b;
        b.kind = Kind::singular;
        b.factor = factor;
        b.xi = std::move(xi);
        return b;
    }

    static MaxBoundaryPoint regular(typename M::Ideal xi, typename M::Ideal xi_prime,
                                    typename M::Scalar c) {
        MaxBoundaryPoint b;
        b.kind = Kind::regular;
        b.xi = std::move(xi);
        b.xi_prime = std::move(xi_prime);
        b.c = std::move(c);
        return b;
    }

    bool is_regular() const { return kind == Kind::regular; }
};

template <class M>
bool in_omega(const MaxBoundaryPoint<M>& b) {
    return b.is_regular() && !M::ideal_eq(b.xi, b.xi_prime);
}

// value at z of the horofunction of b, normalized so that the value at
// O = (o, o) is exactly 0
template <class M>
typename M::Scalar horofunction_eval(const MaxBoundaryPoint<M>& b, const ProductPoint<M>& z) {
    using S = typename M::Scalar;
    const auto o = M::origin();
    if (!b.is_regular()) {
        const auto& pt = b.factor == 1 ? z.x : z.y;
        return M::busemann(o, b.xi, pt);
    }
    S u = M::busemann(o, b.xi, z.x);
    S v = M::busemann(o, b.xi_prime, z.y) - b.c;
    S at_origin = std::max(S(0), S(-b.c));
    return std::max(u, v) - at_origin;
}

template <class M>
bool boundary_eq(const MaxBoundaryPoint<M>& a, const MaxBoundaryPoint<M>& b, double ctol) {
    if (a.kind != b.kind) return false;
    if (!a.is_regular()) return a.factor == b.factor && M::ideal_eq(a.xi, b.xi);
    return M::ideal_eq(a.xi, b.xi) && M::ideal_eq(a.xi_prime, b.xi_prime) &&
           std::abs(M::to_double(a.c) - M::to_double(b.c)) <= ctol;
}

// coordinate projections of the boundary (unpack/pack)

template <class M>
std::pair<int, typename M::Ideal> phi_sing(const MaxBoundaryPoint<M>& b) {
    if (b.is_regular()) throw std::invalid_argument("phi_sing needs a singular boundary point");
    return {b.factor, b.xi};
}

template <class M>
MaxBoundaryPoint<M> phi_sing_inverse(int factor, typename M::Ideal xi) {
    return MaxBoundaryPoint<M>::singular(factor, std::move(xi));
}

template <class M>
std::tuple<typename M::Ideal, typename M::Ideal, typename M::Scalar> phi_reg(
    const MaxBoundaryPoint<M>& b) {
    if (!b.is_regular()) throw std::invalid_argument("phi_reg needs a regular boundary point");
    return {b.xi, b.xi_prime, b.c};
}

template <class M>
MaxBoundaryPoint<M> phi_reg_inverse(typename M::Ideal xi, typename M::Ideal xi_prime,
                                    typename M::Scalar c) {
    return MaxBoundaryPoint<M>::regular(std::move(xi), std::move(xi_prime), std::move(c));
}

// the class of max{b^p_xi, b^p'_xi'} in the normalization at O
template <class M>
MaxBoundaryPoint<M> renormalize(const typename M::Ideal& xi, const typename M::Point& p,
                                const typename M::Ideal& xi_prime, const typename M::Point& p_prime) {
    const auto o = M::origin();
    typename M::Scalar c = M::busemann(o, xi_prime, p_prime) - M::busemann(o, xi, p);
    return MaxBoundaryPoint<M>::regular(xi, xi_prime, c);
}

// ---------------------------------------------------------------------------
// structured divergent sequences in (X x X, d_max)

// (r1(s1 n), r2(s2 n)) along two rays
template <class M>
struct RayPair {
    typename M::Ray ray1;
    typename M::Scalar speed1;
    typename M::Ray ray2;
    typename M::Scalar speed2;
};

// (L(n + s), L(-n + s)) along a geodesic line
template <class M>
struct GeodesicPair {
    typename M::Line line;
    typename M::Scalar offset;
};

// (g^n x, g^n y) along an isometry orbit
template <class M>
struct OrbitSeq {
    typename M::Isometry gamma;
    ProductPoint<M> seed;
};

// (x, r(n)) with frozen first coordinate
template <class M>
struct BoundedFirst {
    typename M::Point anchor;
    typename M::Ray ray2;
};

template <class M>
using StructuredSequence =
    std::variant<RayPair<M>, GeodesicPair<M>, OrbitSeq<M>, BoundedFirst<M>>;

template <class M>
typename M::Isometry iso_power(const typename M::Isometry& g, int n) {
    auto p = M::iso_identity();
    for (int i = 0; i < n; ++i) p = M::iso_compose(p, g);
    return p;
}

template <class M>
ProductPoint<M> sequence_at(const StructuredSequence<M>& seq, int n) {
    using S = typename M::Scalar;
    return std::visit(
        [&](const auto& v) -> ProductPoint<M> {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, RayPair<M>>) {
                return {v.ray1.at(v.speed1 * S(n)), v.ray2.at(v.speed2 * S(n))};
            } else if constexpr (std::is_same_v<T, GeodesicPair<M>>) {
                return {v.line.at(S(n) + v.offset), v.line.at(S(-n) + v.offset)};
            } else if constexpr (std::is_same_v<T, OrbitSeq<M>>) {
                auto g = iso_power<M>(v.gamma, n);
                return {M::apply(g, v.seed.x), M::apply(g, v.seed.y)};
            } else {
                return {v.anchor, v.ray2.at(S(n))};
            }
        },
        seq);
}

// d_max(seq_n, z) - d_max(seq_n, O), evaluated stably (orbit terms never
// materialize the far-out points)
template <class M>
typename M::Scalar sequence_normalized(const StructuredSequence<M>& seq, int n,
                                       const ProductPoint<M>& z) {
    using S = typename M::Scalar;
    const auto O = product_origin<M>();
    return std::visit(
        [&](const auto& v) -> S {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, RayPair<M>>) {
                S t1 = v.speed1 * S(n), t2 = v.speed2 * S(n);
                S dz = std::max(v.ray1.distance_to(z.x, t1), v.ray2.distance_to(z.y, t2));
                S d0 = std::max(v.ray1.distance_to(O.x, t1), v.ray2.distance_to(O.y, t2));
                return dz - d0;
            } else if constexpr (std::is_same_v<T, GeodesicPair<M>>) {
                S tp = S(n) + v.offset, tm = S(-n) + v.offset;
                S dz = std::max(v.line.distance_to(z.x, tp), v.line.distance_to(z.y, tm));
                S d0 = std::max(v.line.distance_to(O.x, tp), v.line.distance_to(O.y, tm));
                return dz - d0;
            } else if constexpr (std::is_same_v<T, OrbitSeq<M>>) {
                auto g = iso_power<M>(v.gamma, n);
                S dz = std::max(M::orbit_distance_to(g, v.seed.x, z.x),
                                M::orbit_distance_to(g, v.seed.y, z.y));
                S d0 = std::max(M::orbit_distance_to(g, v.seed.x, O.x),
                                M::orbit_distance_to(g, v.seed.y, O.y));
                return dz - d0;
            } else {
                S t = S(n);
                S dz = std::max(M::distance(v.anchor, z.x), v.ray2.distance_to(z.y, t));
                S d0 = std::max(M::distance(v.anchor, O.x), v.ray2.distance_to(O.y, t));
                return dz - d0;
            }
        },
        seq);
}

enum class SeqCase { I, II, III, Undetermined };

template <class M>
struct Classification {
    SeqCase seq_case = SeqCase::Undetermined;
    bool permuted = false;  // coordinates swapped relative to the canonical case
    MaxBoundaryPoint<M> limit;
};

namespace detail {

// limit of d(g^n x, o) - d(g^n y, o) for an orbit sequence; exact
// stabilization in the tree, empirical stabilization in the disk
template <class M>
Classification<M> classify_orbit(const OrbitSeq<M>& v) {
    Classification<M> r;
    if constexpr (M::exact) {
        if (v.gamma.empty())
            throw std::invalid_argument("orbit of the identity does not diverge");
        auto xi = M::attracting_ideal(v.gamma);
        int depth = static_cast<int>(v.seed.x.root_word().size() + v.seed.y.root_word().size() +
                                     2 * v.gamma.size() + 4);
        auto cn = [&](int n) {
            auto g = iso_power<M>(v.gamma, n);
            return M::orbit_distance(g, v.seed.x) - M::orbit_distance(g, v.seed.y);
        };
        auto c = cn(depth);
        if (c != cn(depth + 1)) {
            r.seq_case = SeqCase::Undetermined;
            return r;
        }
        r.seq_case = SeqCase::II;
        r.limit = MaxBoundaryPoint<M>::regular(xi, xi, c);
        return r;
    } else {
        if (!M::is_hyperbolic(v.gamma))
            throw std::invalid_argument("orbit classification needs a hyperbolic isometry");
        auto xi = M::attracting_ideal(v.gamma);
        auto cn = [&](int n) {
            auto g = iso_power<M>(v.gamma, n);
            return M::orbit_distance(g, v.seed.x) - M::orbit_distance(g, v.seed.y);
        };
        auto c = cn(40);
        if (std::abs(c - cn(41)) > 1e-7 || std::abs(c - cn(45)) > 1e-7) {
            r.seq_case = SeqCase::Undetermined;
            return r;
        }
        r.seq_case = SeqCase::II;
        r.limit = MaxBoundaryPoint<M>::regular(xi, xi, c);
        return r;
    }
}

}  // namespace detail

// Divergent sequences in (X x X, d_max) fall into three cases, read off
// analytically from the descriptor:
//   I   first coordinate bounded (or second, `permuted`): one-factor limit
//   II  d(x_n, o) - d(y_n, o) -> C: regular limit (xi, xi', C)
//   III difference -> +inf (or -inf, `permuted`): one-factor limit
template <class M>
Classification<M> classify(const StructuredSequence<M>& seq) {
    using S = typename M::Scalar;
    const auto o = M::origin();
    return std::visit(
        [&](const auto& v) -> Classification<M> {
            using T = std::decay_t<decltype(v)>;
            Classification<M> r;
            if constexpr (std::is_same_v<T, BoundedFirst<M>>) {
                r.seq_case = SeqCase::I;
                r.limit = MaxBoundaryPoint<M>::singular(2, v.ray2.target);
            } else if constexpr (std::is_same_v<T, GeodesicPair<M>>) {
                r.seq_case = SeqCase::II;
                auto p = v.line.at(v.offset);
                S c = M::busemann(o, M::line_minus(v.line), p) -
                      M::busemann(o, M::line_plus(v.line), p);
                r.limit = MaxBoundaryPoint<M>::regular(M::line_plus(v.line),
                                                       M::line_minus(v.line), c);
            } else if constexpr (std::is_same_v<T, RayPair<M>>) {
                if (v.speed1 < 0 || v.speed2 < 0)
                    throw std::invalid_argument("ray speeds must be nonnegative");
                if (v.speed1 == 0 && v.speed2 == 0)
                    throw std::invalid_argument("sequence with both speeds zero does not diverge");
                if (v.speed1 == 0) {
                    r.seq_case = SeqCase::I;
                    r.limit = MaxBoundaryPoint<M>::singular(2, v.ray2.target);
                } else if (v.speed2 == 0) {
                    r.seq_case = SeqCase::I;
                    r.permuted = true;
                    r.limit = MaxBoundaryPoint<M>::singular(1, v.ray1.target);
                } else if (v.speed1 == v.speed2) {
                    r.seq_case = SeqCase::II;
                    S c = M::busemann(o, v.ray2.target, v.ray2.origin) -
                          M::busemann(o, v.ray1.target, v.ray1.origin);
                    r.limit = MaxBoundaryPoint<M>::regular(v.ray1.target, v.ray2.target, c);
                } else if (v.speed1 > v.speed2) {
                    r.seq_case = SeqCase::III;
                    r.limit = MaxBoundaryPoint<M>::singular(1, v.ray1.target);
                } else {
                    r.seq_case = SeqCase::III;
                    r.permuted = true;
                    r.limit = MaxBoundaryPoint<M>::singular(2, v.ray2.target);
                }
            } else {
                r = detail::classify_orbit<M>(v);
            }
            return r;
        },
        seq);
}

// sup over the grid of |normalized distance at index n - horofunction value|
template <class M>
double empirical_limit_check(const StructuredSequence<M>& seq, const MaxBoundaryPoint<M>& b,
                             const std::vector<ProductPoint<M>>& grid, int n) {
    double sup = 0.0;
    for (const auto& z : grid) {
        auto err = sequence_normalized(seq, n, z) - horofunction_eval(b, z);
        sup = std::max(sup, std::abs(M::to_double(err)));
    }
    return sup;
}

}  // namespace horomax
