#pragma once

#include <cstdio>
#include <string>

#include <json.hpp>

#include "horomax/geodesic.hpp"

namespace horomax {

using json = nlohmann::ordered_json;

// floats cross the wire as decimal strings with 17 significant digits,
// rationals as "p/q"
inline std::string double_to_string(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

template <class M>
std::string scalar_to_string(const typename M::Scalar& s) {
    if constexpr (M::exact)
        return rational_to_string(s);
    else
        return double_to_string(s);
}

template <class M>
typename M::Scalar scalar_from_string(const std::string& s) {
    if constexpr (M::exact)
        return parse_rational(s);
    else
        return std::stod(s);
}

template <class M>
std::string ideal_to_string(const typename M::Ideal& xi) {
    if constexpr (M::exact)
        return tree_ideal_to_string(xi);
    else
        return double_to_string(xi.angle());
}

template <class M>
typename M::Ideal ideal_from_string(const std::string& s) {
    if constexpr (M::exact)
        return parse_tree_ideal(s);
    else
        return DiskIdeal(std::stod(s));
}

template <class M>
std::string point_to_string(const typename M::Point& p) {
    if constexpr (M::exact)
        return tree_point_to_string(p);
    else
        return double_to_string(p.z().real()) + " " + double_to_string(p.z().imag());
}

template <class M>
typename M::Point point_from_string(const std::string& s) {
    if constexpr (M::exact) {
        return parse_tree_point(s);
    } else {
        auto sp = s.find(' ');
        if (sp == std::string::npos) return DiskPoint(cplx(std::stod(s), 0.0));
        return DiskPoint(cplx(std::stod(s.substr(0, sp)), std::stod(s.substr(sp + 1))));
    }
}

template <class M>
json boundary_to_json(const MaxBoundaryPoint<M>& b) {
    if (!b.is_regular())
        return json{{"kind", "singular"}, {"factor", b.factor}, {"xi", ideal_to_string<M>(b.xi)}};
    return json{{"kind", "regular"},
                {"xi", ideal_to_string<M>(b.xi)},
                {"xi_prime", ideal_to_string<M>(b.xi_prime)},
                {"c", scalar_to_string<M>(b.c)}};
}

template <class M>
MaxBoundaryPoint<M> boundary_from_json(const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "singular")
        return MaxBoundaryPoint<M>::singular(j.at("factor").get<int>(),
                                             ideal_from_string<M>(j.at("xi").get<std::string>()));
    if (kind != "regular") throw std::invalid_argument("unknown boundary point kind: " + kind);
    return MaxBoundaryPoint<M>::regular(ideal_from_string<M>(j.at("xi").get<std::string>()),
                                        ideal_from_string<M>(j.at("xi_prime").get<std::string>()),
                                        scalar_from_string<M>(j.at("c").get<std::string>()));
}

template <class M>
json geodesic_to_json(const ParamGeodesic<M>& g) {
    return json{{"xi_plus", ideal_to_string<M>(g.plus())},
                {"xi_minus", ideal_to_string<M>(g.minus())},
                {"offset", scalar_to_string<M>(g.offset)}};
}

template <class M>
ParamGeodesic<M> geodesic_from_json(const json& j) {
    auto plus = ideal_from_string<M>(j.at("xi_plus").get<std::string>());
    auto minus = ideal_from_string<M>(j.at("xi_minus").get<std::string>());
    return {M::line(plus, minus), scalar_from_string<M>(j.at("offset").get<std::string>())};
}

}  // namespace horomax
