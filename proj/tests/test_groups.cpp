#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "horomax/sampling.hpp"

using namespace horomax;

namespace {
const TreeIdeal a_inf(Word(), Word("a"));
const TreeIdeal A_inf(Word(), Word("A"));
}  // namespace

TEST_CASE("octagon side pairings satisfy the surface relator") {
    auto G = octagon_group();
    REQUIRE(G.relators.size() == 1);
    auto m = word_to_iso<DiskModel>(G, G.relators[0]);
    double dev = std::min(std::abs(m.a() - cplx(1, 0)) + std::abs(m.b()),
                          std::abs(m.a() + cplx(1, 0)) + std::abs(m.b()));
    CHECK(dev < 1e-9);
    for (const auto& g : G.gens) CHECK(DiskModel::is_hyperbolic(g));
    DiskPoint o(0.0, 0.0);
    CHECK(DiskModel::distance(o, DiskModel::apply(G.gens[0], o)) ==
          doctest::Approx(G.min_displacement).epsilon(1e-12));
    CHECK(G.min_displacement ==
          doctest::Approx(2.0 * std::acosh(1.0 + std::numbers::sqrt2)).epsilon(1e-12));
}

TEST_CASE("deduplicated ball sizes in the octagon group") {
    auto G = octagon_group();
    CHECK(ball<DiskModel>(G, 1).size() == 9);
    CHECK(ball<DiskModel>(G, 2).size() == 65);
    CHECK(ball<DiskModel>(G, 3).size() == 457);
}

TEST_CASE("isometry keys identify equal elements") {
    auto G = octagon_group();
    auto rel = word_to_iso<DiskModel>(G, G.relators[0]);
    CHECK(DiskModel::iso_key(rel) == DiskModel::iso_key(DiskModel::iso_identity()));
    CHECK(DiskModel::iso_key(G.gens[0]) != DiskModel::iso_key(G.gens[1]));
    CHECK(DiskModel::iso_eq(rel, DiskModel::iso_identity()));
}

TEST_CASE("unit-window survivors") {
    auto T = free_group_action();
    auto rep = proper_discontinuity_report<TreeModel>(T, 1.0, 6);
    // brute force: words of length <= 2 displacing o by at most 2
    std::set<std::string> brute;
    for (const auto& w : ball<TreeModel>(T, 2))
        if (TreeModel::orbit_distance(w, TreePoint()) <= Rational(2))
            brute.insert(TreeModel::iso_key(w));
    CHECK(brute.size() == 17);
    CHECK(rep.survivors == brute);

    auto G = octagon_group();
    auto drep = proper_discontinuity_report<DiskModel>(G, 1.0, 6);
    CHECK(drep.survivors.size() == 1);  // systole exceeds the window bound
}

TEST_CASE("boundary action through the geodesic correspondence") {
    using M = TreeModel;
    auto b = MaxBoundaryPoint<M>::regular(a_inf, A_inf, Rational(0));
    auto moved = act_on_boundary<M>(Word("a"), b);
    CHECK(moved.xi == a_inf);
    CHECK(moved.xi_prime == A_inf);
    CHECK(moved.c == Rational(2));  // translation by 1 along the axis
    CHECK_THROWS_AS(act_on_boundary<M>(Word("a"), MaxBoundaryPoint<M>::singular(1, a_inf)),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        act_on_boundary<M>(Word("a"), MaxBoundaryPoint<M>::regular(a_inf, a_inf, Rational(0))),
        std::invalid_argument);
}

TEST_CASE("equivariance instance on the disk") {
    using M = DiskModel;
    auto G = octagon_group();
    ParamGeodesic<M> g{M::line(DiskIdeal(0.9), DiskIdeal(3.7)), 0.5};
    auto lhs = act_on_boundary<M>(G.gens[1], f_map<M>(g));
    auto rhs = f_map<M>(apply<M>(G.gens[1], g));
    CHECK(M::ideal_eq(lhs.xi, rhs.xi));
    CHECK(M::ideal_eq(lhs.xi_prime, rhs.xi_prime));
    CHECK(lhs.c == doctest::Approx(rhs.c).epsilon(1e-10));
}

TEST_CASE("orbit limit samples along the a-power stream") {
    using M = TreeModel;
    std::vector<Word> stream;
    for (int n = 1; n <= 15; ++n) stream.push_back(Word(std::string(n, 'a')));
    ProductPoint<M> seed{TreePoint(), TreePoint(Word("a"))};
    auto records = limit_set_sample<M>(stream, seed);
    REQUIRE(records.size() == 15);
    for (const auto& r : records) CHECK(r.c == Rational(-1));
    CHECK(records.back().visual_gap <= std::pow(2.0, -15));
}

TEST_CASE("limit targets are realized exactly on the tree") {
    using M = TreeModel;
    for (int target = -2; target <= 2; ++target) {
        auto seed = limit_target_seed<M>(Word("a"), Rational(target));
        std::vector<Word> stream;
        for (int n = 1; n <= 15; ++n) stream.push_back(Word(std::string(n, 'a')));
        auto records = limit_set_sample<M>(stream, seed);
        CHECK(records.back().c == Rational(target));
    }
}

TEST_CASE("dirichlet reduction lands in the fundamental domain") {
    auto T = free_group_action();
    TreePoint x(Word("abA"));
    CHECK(dirichlet_reduce<TreeModel>(T, x, 8));
    CHECK(T.in_domain(x));

    auto G = octagon_group();
    DiskPoint y(std::polar(std::tanh(1.0), 0.9));
    CHECK(dirichlet_reduce<DiskModel>(G, y, 8));
    CHECK(G.in_domain(y));
}

TEST_CASE("small cocompactness run has no failures") {
    auto T = free_group_action();
    Rng rng(7);
    std::vector<ProductPoint<TreeModel>> pts;
    for (int i = 0; i < 10; ++i) pts.push_back(random_product_point<TreeModel>(rng, 3));
    std::vector<ParamGeodesic<TreeModel>> geos;
    for (int i = 0; i < 5; ++i) geos.push_back(random_geodesic<TreeModel>(rng));
    CHECK(cocompactness_check<TreeModel>(T, pts, geos, 16) == 0);
}

TEST_CASE("rng streams are deterministic and sampler output valid") {
    Rng r1(42), r2(42);
    for (int i = 0; i < 8; ++i) CHECK(r1.bits() == r2.bits());
    Rng rng(99);
    for (int i = 0; i < 20; ++i) {
        auto p = random_point<DiskModel>(rng, 3.0);
        CHECK(std::abs(p.z()) < 1.0);
        auto q = random_point<TreeModel>(rng, 3.0);
        CHECK(q.root_length() <= Rational(3));
        auto xi = random_ideal<TreeModel>(rng);
        CHECK(!xi.cycle().empty());
    }
}
