#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "horomax/io.hpp"

using namespace horomax;

namespace {
const TreeIdeal a_inf(Word(), Word("a"));
const TreeIdeal A_inf(Word(), Word("A"));
const TreeIdeal b_inf(Word(), Word("b"));
}  // namespace

TEST_CASE("horofunction evaluation vanishes at the base point") {
    ProductPoint<TreeModel> O{TreePoint(), TreePoint()};
    auto s1 = MaxBoundaryPoint<TreeModel>::singular(1, a_inf);
    CHECK(horofunction_eval<TreeModel>(s1, O) == 0);
    for (int c = -2; c <= 2; ++c) {
        auto b = MaxBoundaryPoint<TreeModel>::regular(a_inf, b_inf, Rational(c));
        CHECK(horofunction_eval<TreeModel>(b, O) == 0);
    }
}

TEST_CASE("regular horofunction takes the larger branch") {
    auto b = MaxBoundaryPoint<TreeModel>::regular(a_inf, b_inf, Rational(1));
    // both coordinates one step toward their ideals: branches -1 and -2
    ProductPoint<TreeModel> z{TreePoint(Word("a")), TreePoint(Word("b"))};
    CHECK(horofunction_eval<TreeModel>(b, z) == Rational(-1));
    // second coordinate away: branch values -1 and 0
    ProductPoint<TreeModel> w{TreePoint(Word("a")), TreePoint(Word("B"))};
    CHECK(horofunction_eval<TreeModel>(b, w) == 0);
}

TEST_CASE("omega membership") {
    CHECK(in_omega<TreeModel>(MaxBoundaryPoint<TreeModel>::regular(a_inf, b_inf, Rational(0))));
    CHECK(!in_omega<TreeModel>(MaxBoundaryPoint<TreeModel>::regular(a_inf, a_inf, Rational(0))));
    CHECK(!in_omega<TreeModel>(MaxBoundaryPoint<TreeModel>::singular(1, a_inf)));
}

TEST_CASE("coordinate projections reject the wrong variant") {
    auto reg = MaxBoundaryPoint<TreeModel>::regular(a_inf, b_inf, Rational(0));
    auto sing = MaxBoundaryPoint<TreeModel>::singular(2, a_inf);
    CHECK_THROWS_AS(phi_sing<TreeModel>(reg), std::invalid_argument);
    CHECK_THROWS_AS(phi_reg<TreeModel>(sing), std::invalid_argument);
    CHECK_THROWS_AS(MaxBoundaryPoint<TreeModel>::singular(3, a_inf), std::invalid_argument);
}

TEST_CASE("sequence classification by case") {
    using M = TreeModel;
    auto r1 = M::ray(TreePoint(), a_inf);
    auto r2 = M::ray(TreePoint(), b_inf);

    auto fast = classify<M>(StructuredSequence<M>(RayPair<M>{r1, Rational(2), r2, Rational(1)}));
    CHECK(fast.seq_case == SeqCase::III);
    CHECK(!fast.permuted);
    CHECK(fast.limit.factor == 1);
    CHECK(fast.limit.xi == a_inf);

    auto frozen = classify<M>(StructuredSequence<M>(BoundedFirst<M>{TreePoint(Word("b")), r2}));
    CHECK(frozen.seq_case == SeqCase::I);
    CHECK(frozen.limit.factor == 2);
    CHECK(frozen.limit.xi == b_inf);

    auto line = M::line(a_inf, A_inf);
    auto both = classify<M>(StructuredSequence<M>(GeodesicPair<M>{line, Rational(0)}));
    CHECK(both.seq_case == SeqCase::II);
    CHECK(both.limit.is_regular());
    CHECK(both.limit.c == 0);

    CHECK_THROWS_AS(
        classify<M>(StructuredSequence<M>(RayPair<M>{r1, Rational(0), r2, Rational(0)})),
        std::invalid_argument);
}

TEST_CASE("classified limits match the empirical normalized distances") {
    using M = TreeModel;
    std::vector<ProductPoint<M>> grid{{TreePoint(), TreePoint()},
                                      {TreePoint(Word("a")), TreePoint(Word("B"))},
                                      {TreePoint(Word(), 'b', Rational(1, 2)), TreePoint()}};
    StructuredSequence<M> seq = GeodesicPair<M>{M::line(a_inf, A_inf), Rational(1, 2)};
    auto cls = classify<M>(seq);
    CHECK(cls.limit.c == Rational(1));
    CHECK(empirical_limit_check<M>(seq, cls.limit, grid, 12) == 0.0);
    auto wrong = MaxBoundaryPoint<M>::regular(a_inf, A_inf, Rational(2));
    CHECK(empirical_limit_check<M>(seq, wrong, grid, 12) > 0.5);
}

TEST_CASE("geodesic correspondence on the tree a-axis") {
    using M = TreeModel;
    auto g0 = f_inverse<M>(a_inf, A_inf, Rational(0));
    CHECK(g0.base() == TreePoint());
    CHECK(f_map<M>(g0).c == 0);

    ParamGeodesic<M> g1{M::line(a_inf, A_inf), Rational(1)};
    CHECK(g1.base() == TreePoint(Word("a")));
    CHECK(f_map<M>(g1).c == Rational(2));

    auto [hp, hm, hr] = hopf<M>(g1);
    CHECK(hr == Rational(1));
    auto [mp, mm, mc] = h_map<M>(hp, hm, hr);
    CHECK(mc == Rational(2));
    CHECK(mp == a_inf);
    CHECK(mm == A_inf);
}

TEST_CASE("h_map on the disk quarter-turn pair") {
    auto [p, q, c] = h_map<DiskModel>(DiskIdeal(0.0), DiskIdeal(std::numbers::pi / 2), 0.0);
    CHECK(c == doctest::Approx(-std::log(2.0)).epsilon(1e-12));
    CHECK_THROWS_AS(h_map<DiskModel>(DiskIdeal(1.0), DiskIdeal(1.0), 0.0),
                    std::invalid_argument);
}

TEST_CASE("offset recovery round trip") {
    using M = DiskModel;
    ParamGeodesic<M> g{M::line(DiskIdeal(0.3), DiskIdeal(2.8)), 0.75};
    auto b = f_map<M>(g);
    auto g2 = f_inverse<M>(b.xi, b.xi_prime, b.c);
    CHECK(g2.offset == doctest::Approx(g.offset).epsilon(1e-12));
    CHECK(param_on_line<M>(g.line, g.at(1.5)) == doctest::Approx(g.offset + 1.5).epsilon(1e-9));
}

TEST_CASE("diagonal projection is the coordinate midpoint") {
    ProductPoint<TreeModel> p{TreePoint(Word("a")), TreePoint(Word("B"))};
    CHECK(rho_tilde<TreeModel>(p) == TreePoint());
    ParamGeodesic<TreeModel> g{TreeModel::line(a_inf, A_inf), Rational(2)};
    CHECK(rho_tilde<TreeModel>(g) == TreePoint(Word("aa")));
}

TEST_CASE("normalized sequence distances agree with materialization") {
    using M = TreeModel;
    StructuredSequence<M> seq =
        RayPair<M>{M::ray(TreePoint(Word("b")), a_inf), Rational(1),
                   M::ray(TreePoint(), b_inf), Rational(1)};
    ProductPoint<M> z{TreePoint(Word("aB")), TreePoint(Word(), 'a', Rational(1, 4))};
    for (int n : {2, 7}) {
        auto p = sequence_at<M>(seq, n);
        Rational direct = std::max(M::distance(p.x, z.x), M::distance(p.y, z.y)) -
                          std::max(M::distance(p.x, TreePoint()), M::distance(p.y, TreePoint()));
        CHECK(sequence_normalized<M>(seq, n, z) == direct);
    }
}

TEST_CASE("boundary and geodesic JSON round trips") {
    auto b = MaxBoundaryPoint<TreeModel>::regular(TreeIdeal(Word("ab"), Word("ba")), A_inf,
                                                  Rational(-7, 2));
    auto back = boundary_from_json<TreeModel>(boundary_to_json<TreeModel>(b));
    CHECK(boundary_eq<TreeModel>(back, b, 0.0));

    auto s = MaxBoundaryPoint<DiskModel>::singular(2, DiskIdeal(1.234));
    auto back2 = boundary_from_json<DiskModel>(boundary_to_json<DiskModel>(s));
    CHECK(boundary_eq<DiskModel>(back2, s, 0.0));

    ParamGeodesic<DiskModel> g{DiskModel::line(DiskIdeal(0.4), DiskIdeal(3.0)), -1.25};
    auto g2 = geodesic_from_json<DiskModel>(geodesic_to_json<DiskModel>(g));
    CHECK(g2.offset == g.offset);
    CHECK(DiskModel::ideal_eq(g2.plus(), g.plus()));

    CHECK_THROWS(boundary_from_json<TreeModel>(json{{"kind", "mystery"}}));
}

TEST_CASE("address string formats") {
    TreePoint p(Word("ab"), 'a', Rational(1, 2));
    CHECK(tree_point_to_string(p) == "ab:a:1/2");
    CHECK(parse_tree_point("ab:a:1/2") == p);
    CHECK(parse_tree_point("e") == TreePoint());
    CHECK_THROWS_AS(parse_tree_point("ab:xx:1/2"), std::invalid_argument);

    CHECK(tree_ideal_to_string(TreeIdeal(Word("a"), Word("b"))) == "a,(b)");
    CHECK(parse_tree_ideal("a,(b)") == TreeIdeal(Word("a"), Word("b")));
    CHECK(parse_tree_ideal(",(ab)") == TreeIdeal(Word(), Word("ab")));
    CHECK_THROWS_AS(parse_tree_ideal("ab"), std::invalid_argument);

    // doubles survive the 17-digit decimal form exactly
    double v = 0.1234567890123456789;
    CHECK(std::stod(double_to_string(v)) == v);
}
