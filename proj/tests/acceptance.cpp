// Acceptance gate: one pass/fail line per criterion. Tolerances are pinned
// here and inside the corresponding checks; runtime bounds are enforced
// where stated.

#include <chrono>
#include <cstdio>
#include <iostream>

#include "horomax/checks.hpp"

using namespace horomax;

namespace {

int failed = 0;

void report(int idx, const std::string& desc, bool pass, const std::string& detail) {
    std::printf("criterion %2d %s  %s  [%s]\n", idx, pass ? "PASS" : "FAIL", desc.c_str(),
                detail.c_str());
    if (!pass) ++failed;
}

struct Timed {
    CheckResult result;
    double seconds;
};

template <class M>
Timed run(CheckResult (*fn)(const CheckConfig&), const CheckConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    auto r = fn(cfg);
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return {r, s};
}

std::string stats(const Timed& a, const Timed& b) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "disk stat %.3g, tree stat %.3g, %.2fs/%.2fs",
                  a.result.statistic, b.result.statistic, a.seconds, b.seconds);
    return buf;
}

}  // namespace

int main() {
    CheckConfig cfg;  // seed 20240801, samples 50, tolerances 1e-9 / 1e-6

    {
        auto d = run<DiskModel>(&check_busemann_limit<DiskModel>, cfg);
        report(1, "disk horofunction closed form vs ray-distance limit at T=30 (thr 2e-30+1e-8)",
               d.result.pass && d.seconds < 1.0, stats(d, d));
    }
    {
        auto t = run<TreeModel>(&check_busemann_limit<TreeModel>, cfg);
        report(2, "tree horofunction closed form equals truncation past merge depth, exactly",
               t.result.pass && t.seconds < 1.0, stats(t, t));
    }
    {
        auto d = run<DiskModel>(&check_classification<DiskModel>, cfg);
        auto t = run<TreeModel>(&check_classification<TreeModel>, cfg);
        report(3, "divergent-sequence classification, n=25 grid check (1e-5 disk / 0 tree)",
               d.result.pass && t.result.pass && d.seconds < 30.0 && t.seconds < 30.0,
               stats(d, t));
    }
    {
        auto d = run<DiskModel>(&check_roundtrips<DiskModel>, cfg);
        auto t = run<TreeModel>(&check_roundtrips<TreeModel>, cfg);
        report(4, "boundary coordinate projections round-trip 200 points (1e-9 disk / exact)",
               d.result.pass && t.result.pass, stats(d, t));
    }
    {
        auto d = run<DiskModel>(&check_bijection<DiskModel>, cfg);
        auto t = run<TreeModel>(&check_bijection<TreeModel>, cfg);
        report(5, "geodesic correspondence recovers offsets on 200 geodesics (1e-8 / exact)",
               d.result.pass && t.result.pass, stats(d, t));
    }
    {
        auto d = run<DiskModel>(&check_commuting_diagram<DiskModel>, cfg);
        auto t = run<TreeModel>(&check_commuting_diagram<TreeModel>, cfg);
        report(6, "Hopf comparison diagram commutes + Gromov rewrite, 200 g (1e-8 / exact)",
               d.result.pass && t.result.pass, stats(d, t));
    }
    {
        auto d = run<DiskModel>(&check_equivariance<DiskModel>, cfg);
        auto t = run<TreeModel>(&check_equivariance<TreeModel>, cfg);
        report(7, "boundary action commutes with the correspondence (1e-7 / exact)",
               d.result.pass && t.result.pass, stats(d, t));
    }
    {
        auto d = run<DiskModel>(&check_midpoint_optimality<DiskModel>, cfg);
        auto t = run<TreeModel>(&check_midpoint_optimality<TreeModel>, cfg);
        report(8, "midpoint beats 200 diagonal competitors per point (slack 1e-10 / 0)",
               d.result.pass && t.result.pass, stats(d, t));
    }
    {
        auto d = run<DiskModel>(&check_rho_continuity<DiskModel>, cfg);
        auto t = run<TreeModel>(&check_rho_continuity<TreeModel>, cfg);
        report(9, "diagonal projection continuous along 50 convergent sequences (1e-5 / 0)",
               d.result.pass && t.result.pass, stats(d, t));
    }
    {
        auto dm = run<DiskModel>(&check_limitset_merge<DiskModel>, cfg);
        auto tm = run<TreeModel>(&check_limitset_merge<TreeModel>, cfg);
        auto dt = run<DiskModel>(&check_limitset_targets<DiskModel>, cfg);
        auto tt = run<TreeModel>(&check_limitset_targets<TreeModel>, cfg);
        report(10,
               "orbit limit estimates merge (1e-4 / 2^-10) and realize targets C in {-2..2}",
               dm.result.pass && tm.result.pass && dt.result.pass && tt.result.pass,
               stats(dm, tm) + "; targets " + stats(dt, tt));
    }
    {
        auto dp = run<DiskModel>(&check_proper_discontinuity<DiskModel>, cfg);
        auto tp = run<TreeModel>(&check_proper_discontinuity<TreeModel>, cfg);
        auto dc = run<DiskModel>(&check_cocompactness<DiskModel>, cfg);
        auto tc = run<TreeModel>(&check_cocompactness<TreeModel>, cfg);
        bool in_time = dp.seconds + dc.seconds < 60.0 && tp.seconds + tc.seconds < 60.0;
        report(11,
               "survivors stable R=6 vs 8; 1000 samples translate into the window (R_max=8)",
               dp.result.pass && tp.result.pass && dc.result.pass && tc.result.pass && in_time,
               stats(dp, tp) + "; covering " + stats(dc, tc));
    }
    {
        auto d = run<DiskModel>(&check_group_certificate<DiskModel>, cfg);
        report(12,
               "octagon certificate: relator to +-I (1e-9), 8 hyperbolic gens, 500-point cover",
               d.result.pass, stats(d, d));
    }
    {
        auto ra1 = report_to_json(run_verify<DiskModel>(cfg, "octagon-genus2")).dump();
        auto ra2 = report_to_json(run_verify<DiskModel>(cfg, "octagon-genus2")).dump();
        auto rb1 = report_to_json(run_verify<TreeModel>(cfg, "free-rank2")).dump();
        auto rb2 = report_to_json(run_verify<TreeModel>(cfg, "free-rank2")).dump();
        report(13, "repeated verify runs with one seed emit byte-identical reports",
               ra1 == ra2 && rb1 == rb2,
               ra1 == ra2 ? (rb1 == rb2 ? "identical" : "tree differs") : "disk differs");
    }

    if (failed) {
        std::printf("%d criterion(s) failed\n", failed);
        return 1;
    }
    std::printf("all 13 criteria passed\n");
    return 0;
}
