// Command-line front end: verification suite, classification experiments,
// orbit limit-set sampling, cocompactness searches, boundary round-trip
// dumps. Exit codes: 0 pass, 1 check failure, 2 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "horomax/checks.hpp"

namespace {

using namespace horomax;

struct CliOptions {
    std::string model = "disk";
    std::string group;  // defaulted per model
    std::uint64_t seed = 20240801;
    double tol_algebraic = 1e-9;
    double tol_limit = 1e-6;
    int samples = 50;
    int rmax = 8;
    std::string format = "json";
    bool timing = false;
};

template <class M>
std::string default_group_name() {
    return default_group<M>().name;
}

template <class M>
CheckConfig to_check_config(const CliOptions& opt) {
    return {opt.seed, opt.samples, opt.tol_algebraic, opt.tol_limit, opt.rmax};
}

template <class M>
void validate(const CliOptions& opt) {
    if (opt.group != default_group_name<M>())
        throw CLI::ValidationError("--group", "unknown group for model " + opt.model + ": " +
                                                  opt.group);
    if (!M::exact && (opt.tol_algebraic <= 0 || opt.tol_limit <= 0))
        throw CLI::ValidationError("--tol", "tolerances must be positive for the disk model");
    if (opt.samples <= 0) throw CLI::ValidationError("--samples", "must be positive");
    if (opt.rmax < 0) throw CLI::ValidationError("--rmax", "must be nonnegative");
}

void emit(const Report& rep, const CliOptions& opt) {
    if (opt.format == "csv")
        std::cout << report_to_csv(rep, opt.timing);
    else
        std::cout << report_to_json(rep, opt.timing).dump(2) << "\n";
}

template <class M>
int cmd_verify(const CliOptions& opt) {
    validate<M>(opt);
    auto rep = run_verify<M>(to_check_config<M>(opt), opt.group);
    emit(rep, opt);
    return rep.all_pass() ? 0 : 1;
}

// ------------------------------------------------------------------ //

template <class M>
StructuredSequence<M> parse_sequence(const json& j) {
    using S = typename M::Scalar;
    std::string kind = j.at("kind").get<std::string>();
    auto scalar = [&](const char* key) {
        return scalar_from_string<M>(j.at(key).get<std::string>());
    };
    auto ideal = [&](const char* key) {
        return ideal_from_string<M>(j.at(key).get<std::string>());
    };
    auto point = [&](const char* key) -> typename M::Point {
        if (!j.contains(key)) return M::origin();
        return point_from_string<M>(j.at(key).get<std::string>());
    };
    if (kind == "geodesic-pair")
        return GeodesicPair<M>{M::line(ideal("xi_plus"), ideal("xi_minus")), scalar("offset")};
    if (kind == "ray-pair")
        return RayPair<M>{M::ray(point("origin1"), ideal("xi1")), scalar("speed1"),
                          M::ray(point("origin2"), ideal("xi2")), scalar("speed2")};
    if (kind == "bounded-first")
        return BoundedFirst<M>{point("anchor"), M::ray(point("origin2"), ideal("xi2"))};
    if (kind == "orbit") {
        auto G = default_group<M>();
        auto w = M::iso_identity();
        for (const auto& tok : j.at("word")) {
            std::string label = tok.get<std::string>();
            auto it = std::find(G.labels.begin(), G.labels.end(), label);
            if (it == G.labels.end())
                throw std::invalid_argument("unknown generator label: " + label);
            w = M::iso_compose(w, G.gens[static_cast<std::size_t>(it - G.labels.begin())]);
        }
        return OrbitSeq<M>{w, {point("seed_x"), point("seed_y")}};
    }
    throw std::invalid_argument("unknown sequence kind: " + kind);
}

template <class M>
int cmd_classify(const CliOptions& opt, const std::string& descriptor) {
    validate<M>(opt);
    auto seq = parse_sequence<M>(json::parse(descriptor));
    auto cls = classify<M>(seq);
    const char* case_name = cls.seq_case == SeqCase::I     ? "I"
                            : cls.seq_case == SeqCase::II  ? "II"
                            : cls.seq_case == SeqCase::III ? "III"
                                                           : "undetermined";
    Rng rng(opt.seed ^ fnv1a("cli.classify"));
    auto grid = standard_grid<M>(rng, 20);
    json residuals = json::array();
    for (int n : {1, 5, 10, 15, 20, 25})
        residuals.push_back(json{
            {"n", n},
            {"sup_error", double_to_string(empirical_limit_check<M>(seq, cls.limit, grid, n))}});
    json out{{"case", case_name},
             {"permuted", cls.permuted},
             {"limit", boundary_to_json<M>(cls.limit)},
             {"residuals", std::move(residuals)}};
    std::cout << out.dump(2) << "\n";
    return 0;
}

// ------------------------------------------------------------------ //

template <class M>
std::string direction_to_string(const typename M::Direction& d) {
    if constexpr (M::exact)
        return d.empty() ? "e" : d;
    else
        return double_to_string(d);
}

template <class M>
int cmd_orbit(const CliOptions& opt, const std::string& stream_spec, const std::string& seed_x,
              const std::string& seed_y, int length) {
    validate<M>(opt);
    if (length <= 0) throw CLI::ValidationError("--length", "must be positive");
    auto G = default_group<M>();
    std::vector<typename M::Isometry> stream;
    if (stream_spec == "random") {
        Rng rng(opt.seed ^ fnv1a("cli.orbit"));
        stream = random_word_stream<M>(rng, G, length);
    } else {
        // explicit word: comma-separated generator labels (single letters may
        // be run together, e.g. "abaB" on the tree)
        std::vector<std::string> labels;
        std::string tok;
        for (char c : stream_spec + ",") {
            if (c == ',') {
                if (!tok.empty()) labels.push_back(tok);
                tok.clear();
            } else {
                tok.push_back(c);
            }
        }
        if (labels.size() == 1 && labels[0].size() > 1 &&
            std::find(G.labels.begin(), G.labels.end(), labels[0]) == G.labels.end()) {
            std::string s = labels[0];
            labels.clear();
            for (char c : s) labels.emplace_back(1, c);
        }
        auto w = M::iso_identity();
        for (const auto& label : labels) {
            auto it = std::find(G.labels.begin(), G.labels.end(), label);
            if (it == G.labels.end())
                throw std::invalid_argument("unknown generator label: " + label);
            w = M::iso_compose(w, G.gens[static_cast<std::size_t>(it - G.labels.begin())]);
            stream.push_back(w);
        }
        while (static_cast<int>(stream.size()) < length)
            stream.push_back(M::iso_compose(stream.back(), w));
    }
    ProductPoint<M> seed{seed_x.empty() ? M::origin() : point_from_string<M>(seed_x),
                         seed_y.empty() ? M::origin() : point_from_string<M>(seed_y)};
    auto records = limit_set_sample<M>(stream, seed);
    std::cout << "n,xi_estimate_1,xi_estimate_2,visual_gap,c_estimate\n";
    for (const auto& rec : records)
        std::cout << rec.n << ',' << csv_escape(direction_to_string<M>(rec.dir1)) << ','
                  << csv_escape(direction_to_string<M>(rec.dir2)) << ','
                  << double_to_string(rec.visual_gap) << ',' << scalar_to_string<M>(rec.c)
                  << "\n";
    return 0;
}

// ------------------------------------------------------------------ //

template <class M>
int cmd_cocompact(const CliOptions& opt) {
    validate<M>(opt);
    auto G = default_group<M>();
    int R = opt.rmax;
    auto lo = proper_discontinuity_report<M>(G, 1.0, std::max(0, R - 2));
    auto hi = proper_discontinuity_report<M>(G, 1.0, R);
    bool stable = lo.survivors == hi.survivors;

    Rng rng(opt.seed ^ fnv1a("cli.cocompact"));
    std::vector<ProductPoint<M>> points;
    std::vector<ParamGeodesic<M>> geodesics;
    int n_points = (3 * opt.samples) / 5, n_geodesics = opt.samples - n_points;
    const auto o = M::origin();
    for (int i = 0; i < n_points; ++i) points.push_back(random_product_point<M>(rng, 5));
    while (static_cast<int>(geodesics.size()) < n_geodesics) {
        auto g = random_geodesic<M>(rng);
        if (M::to_double(M::distance(rho_tilde<M>(g), o)) <= 8.0) geodesics.push_back(g);
    }
    int failures = cocompactness_check<M>(G, points, geodesics, std::max(1, R));

    json out{{"model", std::string(M::name())},
             {"group", opt.group},
             {"rmax", R},
             {"survivors", static_cast<int>(hi.survivors.size())},
             {"survivors_stable", stable},
             {"words_examined", hi.examined},
             {"samples", opt.samples},
             {"failures", failures}};
    if (opt.format == "csv") {
        std::cout << "model,group,rmax,survivors,survivors_stable,words_examined,samples,"
                     "failures\n"
                  << M::name() << ',' << opt.group << ',' << R << ',' << hi.survivors.size()
                  << ',' << (stable ? "true" : "false") << ',' << hi.examined << ','
                  << opt.samples << ',' << failures << "\n";
    } else {
        std::cout << out.dump(2) << "\n";
    }
    return (stable && failures == 0) ? 0 : 1;
}

// ------------------------------------------------------------------ //

template <class M>
int cmd_boundary_map(const CliOptions& opt) {
    validate<M>(opt);
    Rng rng(opt.seed ^ fnv1a("cli.boundary-map"));
    json rows = json::array();
    bool all_match = true;
    for (int i = 0; i < opt.samples; ++i) {
        MaxBoundaryPoint<M> b;
        if (i % 2 == 0) {
            b = MaxBoundaryPoint<M>::singular(1 + rng.below(2), random_ideal<M>(rng));
            auto [factor, xi] = phi_sing<M>(b);
            auto back = phi_sing_inverse<M>(factor, xi);
            bool match = boundary_eq<M>(back, b, M::exact ? 0.0 : opt.tol_algebraic);
            all_match = all_match && match;
            rows.push_back(json{{"input", boundary_to_json<M>(b)},
                                {"projection", json{{"factor", factor},
                                                    {"xi", ideal_to_string<M>(xi)}}},
                                {"roundtrip", boundary_to_json<M>(back)},
                                {"match", match}});
        } else {
            auto xi = random_ideal<M>(rng);
            b = MaxBoundaryPoint<M>::regular(xi, random_ideal_distinct<M>(rng, xi),
                                             Sampler<M>::scalar(rng, -3.0, 3.0));
            auto [p, q, c] = phi_reg<M>(b);
            auto back = phi_reg_inverse<M>(p, q, c);
            bool match = boundary_eq<M>(back, b, M::exact ? 0.0 : opt.tol_algebraic);
            all_match = all_match && match;
            rows.push_back(json{{"input", boundary_to_json<M>(b)},
                                {"projection", json{{"xi", ideal_to_string<M>(p)},
                                                    {"xi_prime", ideal_to_string<M>(q)},
                                                    {"c", scalar_to_string<M>(c)}}},
                                {"roundtrip", boundary_to_json<M>(back)},
                                {"match", match}});
        }
    }
    std::cout << json{{"model", std::string(M::name())}, {"all_match", all_match},
                      {"points", std::move(rows)}}
                     .dump(2)
              << "\n";
    return all_match ? 0 : 1;
}

template <class DiskFn, class TreeFn>
int dispatch(const std::string& model, DiskFn disk_fn, TreeFn tree_fn) {
    if (model == "disk") return disk_fn();
    if (model == "tree") return tree_fn();
    throw CLI::ValidationError("--model", "must be 'disk' or 'tree'");
}

void add_common(CLI::App* cmd, CliOptions& opt, std::string& config_path) {
    cmd->add_option("--model", opt.model, "model space: disk | tree")
        ->check(CLI::IsMember({"disk", "tree"}));
    cmd->add_option("--group", opt.group, "acting group (octagon-genus2 | free-rank2)");
    cmd->add_option("--seed", opt.seed, "RNG seed (64-bit)");
    cmd->add_option("--tol", opt.tol_limit, "limit tolerance (disk)");
    cmd->add_option("--tol-algebraic", opt.tol_algebraic, "algebraic tolerance (disk)");
    cmd->add_option("--samples", opt.samples, "sample count per randomized check");
    cmd->add_option("--rmax", opt.rmax, "maximum word length for group searches");
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_flag("--timing", opt.timing, "include wall times (breaks byte determinism)");
    cmd->add_option("--config", config_path, "key=value config file (flags override)");
}

// key=value config; a key is applied only when the matching flag was not
// given on the command line, so flags override the file
void load_config(const std::string& path, CliOptions& opt, const CLI::App* cmd) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("--config", "cannot open config file: " + path);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto eq = line.find('=');
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (eq == std::string::npos)
            throw CLI::ValidationError("--config", "malformed config line: " + line);
        auto trim = [](std::string s) {
            auto b = s.find_first_not_of(" \t\r");
            auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
        auto given = [&](const char* flag) { return cmd->count(flag) > 0; };
        if (key == "model") {
            if (!given("--model")) opt.model = value;
        } else if (key == "group") {
            if (!given("--group")) opt.group = value;
        } else if (key == "seed") {
            if (!given("--seed")) opt.seed = std::stoull(value);
        } else if (key == "tol" || key == "tol_limit") {
            if (!given("--tol")) opt.tol_limit = std::stod(value);
        } else if (key == "tol_algebraic") {
            if (!given("--tol-algebraic")) opt.tol_algebraic = std::stod(value);
        } else if (key == "samples") {
            if (!given("--samples")) opt.samples = std::stoi(value);
        } else if (key == "rmax") {
            if (!given("--rmax")) opt.rmax = std::stoi(value);
        } else if (key == "format") {
            if (!given("--format")) opt.format = value;
        } else if (key == "timing") {
            if (!given("--timing")) opt.timing = value == "true" || value == "1";
        } else {
            throw CLI::ValidationError("--config", "unknown config key: " + key);
        }
    }
    if (opt.model != "disk" && opt.model != "tree")
        throw CLI::ValidationError("--model", "must be 'disk' or 'tree'");
    if (opt.format != "json" && opt.format != "csv")
        throw CLI::ValidationError("--format", "must be 'json' or 'csv'");
}

void fill_group_default(CliOptions& opt) {
    if (!opt.group.empty()) return;
    opt.group = opt.model == "tree" ? default_group_name<TreeModel>()
                                    : default_group_name<DiskModel>();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"horofunction boundary toolkit for the hyperbolic disk and the rank-2 tree"};
    app.require_subcommand(1);

    CliOptions opt;
    std::string config_path, descriptor, stream_spec = "random", seed_x, seed_y;
    int length = 20;

    auto* verify = app.add_subcommand("verify", "run the full property-check suite");
    add_common(verify, opt, config_path);

    auto* classify_cmd =
        app.add_subcommand("classify", "classify a structured divergent sequence");
    add_common(classify_cmd, opt, config_path);
    classify_cmd->add_option("descriptor", descriptor, "JSON sequence descriptor")->required();

    auto* orbit = app.add_subcommand("orbit", "sample orbit limit-set approximants (CSV)");
    add_common(orbit, opt, config_path);
    orbit->add_option("--stream", stream_spec,
                      "'random' or an explicit generator word (labels, comma-separated)");
    orbit->add_option("--seed-x", seed_x, "first seed coordinate (default o)");
    orbit->add_option("--seed-y", seed_y, "second seed coordinate (default o)");
    orbit->add_option("--length", length, "stream length");

    auto* cocompact = app.add_subcommand("cocompact", "survivor-set and covering experiments");
    add_common(cocompact, opt, config_path);

    auto* bmap = app.add_subcommand("boundary-map", "boundary coordinate round-trip dump");
    add_common(bmap, opt, config_path);

    try {
        app.parse(argc, argv);
        if (!config_path.empty())
            for (auto* cmd : {verify, classify_cmd, orbit, cocompact, bmap})
                if (cmd->parsed()) load_config(config_path, opt, cmd);
        fill_group_default(opt);
        if (verify->parsed())
            return dispatch(opt.model, [&] { return cmd_verify<DiskModel>(opt); },
                            [&] { return cmd_verify<TreeModel>(opt); });
        if (classify_cmd->parsed())
            return dispatch(opt.model,
                            [&] { return cmd_classify<DiskModel>(opt, descriptor); },
                            [&] { return cmd_classify<TreeModel>(opt, descriptor); });
        if (orbit->parsed())
            return dispatch(
                opt.model,
                [&] { return cmd_orbit<DiskModel>(opt, stream_spec, seed_x, seed_y, length); },
                [&] { return cmd_orbit<TreeModel>(opt, stream_spec, seed_x, seed_y, length); });
        if (cocompact->parsed())
            return dispatch(opt.model, [&] { return cmd_cocompact<DiskModel>(opt); },
                            [&] { return cmd_cocompact<TreeModel>(opt); });
        if (bmap->parsed())
            return dispatch(opt.model, [&] { return cmd_boundary_map<DiskModel>(opt); },
                            [&] { return cmd_boundary_map<TreeModel>(opt); });
        std::cerr << "no subcommand selected\n";
        return 2;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
