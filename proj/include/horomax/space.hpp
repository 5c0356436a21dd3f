#pragma once

#include <stdexcept>

#include "horomax/disk.hpp"
#include "horomax/tree.hpp"

namespace horomax {

// Generic quantities over a model space M (DiskModel or TreeModel). A model
// provides Point/Ideal/Isometry/Scalar/Direction, distance, busemann,
// segment/ray/line handles, gromov_ideal_finite, and an isometry action.

// extended nonnegative scalar: +infinity is a distinguished variant
template <class S>
struct Extended {
    bool infinite = false;
    S value{};

    static Extended inf() { return {true, S{}}; }
    static Extended finite(S v) { return {false, std::move(v)}; }

    S get() const {
        if (infinite) throw std::domain_error("extended value is infinite");
        return value;
    }
};

template <class M>
typename M::Scalar gromov_product(const typename M::Point& x, const typename M::Point& y,
                                  const typename M::Point& base) {
    return (M::distance(base, x) + M::distance(base, y) - M::distance(x, y)) / 2;
}

template <class M>
Extended<typename M::Scalar> gromov_product_ideal(const typename M::Ideal& xi,
                                                  const typename M::Ideal& eta,
                                                  const typename M::Point& base) {
    if (M::ideal_eq(xi, eta)) return Extended<typename M::Scalar>::inf();
    return Extended<typename M::Scalar>::finite(M::gromov_ideal_finite(xi, eta, base));
}

template <class M>
typename M::Point midpoint(const typename M::Point& x, const typename M::Point& y) {
    if (M::point_eq(x, y)) return x;
    auto seg = M::segment(x, y);
    return seg.at(seg.length / 2);
}

}  // namespace horomax
