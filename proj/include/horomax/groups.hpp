#pragma once

#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "horomax/geodesic.hpp"

namespace horomax {

// A discrete cocompact group acting on the model space, given by an
// explicit generator list closed under inversion, relators as generator
// index sequences, and a fundamental-domain membership test around o.
template <class M>
struct GroupPresentation {
    std::string name;
    std::vector<typename M::Isometry> gens;
    std::vector<std::string> labels;
    std::vector<int> inverse_index;
    std::vector<std::vector<int>> relators;
    std::function<bool(const typename M::Point&)> in_domain;
    double domain_radius = 0;     // covering radius of the domain
    double min_displacement = 0;  // min over generators of d(g o, o)
};

template <class M>
typename M::Isometry word_to_iso(const GroupPresentation<M>& G, const std::vector<int>& idx) {
    auto g = M::iso_identity();
    for (int i : idx) g = M::iso_compose(g, G.gens.at(static_cast<std::size_t>(i)));
    return g;
}

// Genus-2 surface group on the disk: side pairings of the regular octagon
// with vertex angle pi/4 centered at o. The four base generators are
// hyperbolic translations through opposite side midpoints (directions
// k pi/4), each of translation length 2 arccosh(1 + sqrt 2); that length is
// forced by the angle condition. The relator below multiplies to +identity.
inline GroupPresentation<DiskModel> octagon_group() {
    GroupPresentation<DiskModel> G;
    G.name = "octagon-genus2";
    const double ch = 1.0 + std::numbers::sqrt2;  // cosh(l/2)
    const double sh = std::sqrt(ch * ch - 1.0);
    for (int k = 0; k < 4; ++k)
        G.gens.emplace_back(cplx(ch, 0.0), std::polar(sh, k * std::numbers::pi / 4.0));
    for (int k = 0; k < 4; ++k) G.gens.push_back(G.gens[static_cast<std::size_t>(k)].inverse());
    G.labels = {"g1", "g2", "g3", "g4", "G1", "G2", "G3", "G4"};
    G.inverse_index = {4, 5, 6, 7, 0, 1, 2, 3};
    G.relators = {{0, 5, 2, 7, 4, 1, 6, 3}};
    G.domain_radius = std::acosh(3.0 + 2.0 * std::numbers::sqrt2);  // vertex radius
    G.min_displacement = 2.0 * std::acosh(ch);

    std::vector<cplx> neighbors;
    for (const auto& g : G.gens) neighbors.push_back(g.apply_raw(cplx(0, 0)));
    G.in_domain = [neighbors](const DiskPoint& x) {
        double d0 = disk_distance_raw(x.z(), cplx(0, 0));
        for (cplx v : neighbors)
            if (disk_distance_raw(x.z(), v) < d0 - 1e-12) return false;
        return true;
    };
    return G;
}

// F2 on its Cayley tree by left multiplication; fundamental domain: the
// star of o out to the edge midpoints
inline GroupPresentation<TreeModel> free_group_action() {
    GroupPresentation<TreeModel> G;
    G.name = "free-rank2";
    G.gens = {Word("a"), Word("b"), Word("A"), Word("B")};
    G.labels = {"a", "b", "A", "B"};
    G.inverse_index = {2, 3, 0, 1};
    G.domain_radius = 0.5;
    G.min_displacement = 1.0;
    G.in_domain = [](const TreePoint& x) {
        return TreeModel::distance(x, TreePoint()) <= Rational(1, 2);
    };
    return G;
}

template <class M>
GroupPresentation<M> default_group();
template <>
inline GroupPresentation<DiskModel> default_group<DiskModel>() { return octagon_group(); }
template <>
inline GroupPresentation<TreeModel> default_group<TreeModel>() { return free_group_action(); }

// all elements of word length <= R, deduplicated by isometry equality
template <class M>
std::vector<typename M::Isometry> ball(const GroupPresentation<M>& G, int R) {
    std::vector<typename M::Isometry> out{M::iso_identity()};
    std::set<std::string> seen{M::iso_key(out.front())};
    std::size_t lo = 0;
    for (int r = 1; r <= R; ++r) {
        std::size_t hi = out.size();
        for (std::size_t i = lo; i < hi; ++i) {
            for (const auto& g : G.gens) {
                auto h = M::iso_compose(out[i], g);
                if (seen.insert(M::iso_key(h)).second) out.push_back(h);
            }
        }
        lo = hi;
    }
    return out;
}

// the boundary action on the regular part, routed through geodesics:
// push the geodesic, not the horofunction coordinates
template <class M>
MaxBoundaryPoint<M> act_on_boundary(const typename M::Isometry& gamma,
                                    const MaxBoundaryPoint<M>& b) {
    if (!in_omega<M>(b))
        throw std::invalid_argument("boundary action is implemented on the ideal domain only");
    auto g = f_inverse<M>(b.xi, b.xi_prime, b.c);
    return f_map<M>(apply<M>(gamma, g));
}

// one emitted approximant of the orbit limit set
template <class M>
struct OrbitRecord {
    int n = 0;
    typename M::Direction dir1, dir2;
    double visual_gap = 0;
    typename M::Scalar c{};
};

// empirical limit-set triples for a stream of group elements (typically
// prefix products of a random word): boundary-direction estimates of the
// two orbit coordinates and the normalized distance difference
template <class M>
std::vector<OrbitRecord<M>> limit_set_sample(const std::vector<typename M::Isometry>& stream,
                                             const ProductPoint<M>& seed) {
    std::vector<OrbitRecord<M>> out;
    int n = 0;
    for (const auto& g : stream) {
        OrbitRecord<M> r;
        r.n = ++n;
        r.dir1 = M::orbit_direction(g, seed.x);
        r.dir2 = M::orbit_direction(g, seed.y);
        r.visual_gap = M::visual_dir(r.dir1, r.dir2);
        r.c = M::orbit_distance(g, seed.x) - M::orbit_distance(g, seed.y);
        out.push_back(std::move(r));
    }
    return out;
}

// seed whose orbit limit has third coordinate exactly c: the difference
// d(g^n x, o) - d(g^n y, o) tends to b^o_{xi-}(x) - b^o_{xi-}(y), where
// xi- is the repelling fixed point of g
template <class M>
ProductPoint<M> limit_target_seed(const typename M::Isometry& gamma,
                                  const typename M::Scalar& c) {
    auto repelling = M::attracting_ideal(M::iso_inverse(gamma));
    auto r = M::ray(M::origin(), repelling);
    if (c >= 0) return {M::origin(), r.at(c)};
    return {r.at(-c), M::origin()};
}

struct ProperDiscontinuityReport {
    std::set<std::string> survivors;  // isometry keys with gK meeting K
    long long examined = 0;
};

namespace detail {

template <class M>
void pd_search(const GroupPresentation<M>& G, const typename M::Isometry& w, int last, int depth,
               int R, double bound, ProperDiscontinuityReport& rep) {
    ++rep.examined;
    double disp = M::to_double(M::orbit_distance(w, M::origin()));
    if (disp <= bound + 1e-9) rep.survivors.insert(M::iso_key(w));
    if (depth == R) return;
    // one more letter changes the displacement by at most min_displacement
    // (all generators of both bundled groups displace o equally)
    if (disp > bound + (R - depth) * G.min_displacement + 1e-9) return;
    for (std::size_t j = 0; j < G.gens.size(); ++j) {
        if (last >= 0 && static_cast<int>(j) == G.inverse_index[static_cast<std::size_t>(last)])
            continue;
        pd_search<M>(G, M::iso_compose(w, G.gens[j]), static_cast<int>(j), depth + 1, R, bound,
                     rep);
    }
}

}  // namespace detail

// elements gamma of word length <= R with gamma K meeting K, where
// rho~(K) lies in the ball of radius `window_radius` around o: the survivor
// criterion is d(gamma o, o) <= 2 * window_radius
template <class M>
ProperDiscontinuityReport proper_discontinuity_report(const GroupPresentation<M>& G,
                                                      double window_radius, int R) {
    ProperDiscontinuityReport rep;
    detail::pd_search<M>(G, M::iso_identity(), -1, 0, R, 2.0 * window_radius, rep);
    return rep;
}

// greedily translate x toward the fundamental domain; true on success
template <class M>
bool dirichlet_reduce(const GroupPresentation<M>& G, typename M::Point& x, int max_steps) {
    const auto o = M::origin();
    for (int step = 0; step < max_steps; ++step) {
        if (G.in_domain(x)) return true;
        auto best = M::distance(x, o);
        int pick = -1;
        for (std::size_t j = 0; j < G.gens.size(); ++j) {
            auto cand = M::distance(M::apply(M::iso_inverse(G.gens[j]), x), o);
            if (cand < best) {
                best = cand;
                pick = static_cast<int>(j);
            }
        }
        if (pick < 0) break;
        x = M::apply(M::iso_inverse(G.gens[static_cast<std::size_t>(pick)]), x);
    }
    return G.in_domain(x);
}

// count of samples that cannot be translated into the fundamental window;
// geodesic samples enter through their base point (rho~)
template <class M>
int cocompactness_check(const GroupPresentation<M>& G,
                        const std::vector<ProductPoint<M>>& points,
                        const std::vector<ParamGeodesic<M>>& geodesics, int max_steps) {
    int failures = 0;
    for (const auto& p : points) {
        auto x = rho_tilde<M>(p);
        if (!dirichlet_reduce<M>(G, x, max_steps)) ++failures;
    }
    for (const auto& g : geodesics) {
        auto x = rho_tilde<M>(g);
        if (!dirichlet_reduce<M>(G, x, max_steps)) ++failures;
    }
    return failures;
}

}  // namespace horomax
