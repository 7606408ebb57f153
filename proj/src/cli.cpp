#include "elnet/cli.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "CLI11.hpp"

#include "elnet/electrical.hpp"
#include "elnet/errors.hpp"
#include "elnet/io.hpp"
#include "elnet/orthogonal.hpp"

namespace elnet::cli {

Rat Sampler::next() {
    std::uniform_int_distribution<long> d(1, 1000);
    const long p = d(eng_);
    const long q = d(eng_);
    return Rat(p, q);
}

std::vector<Rat> Sampler::next(int count) {
    std::vector<Rat> out;
    for (int i = 0; i < count; ++i) out.push_back(next());
    return out;
}

namespace {

// Anything thrown while reading inputs.
struct InputError {
    std::string message;
};

template <class F>
auto load(F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const std::exception& e) {
        throw InputError{e.what()};
    }
}

DiskGraph load_graph(const std::string& arg) {
    return load([&] {
        if (arg.rfind("builtin", 0) == 0) {
            const std::string digits = arg.substr(7);
            if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 2)
                throw ParseError("expected builtinN, got '" + arg + "'");
            return builtin_graph(std::stoi(digits));
        }
        return graph_from_json(read_json_file(arg));
    });
}

Network load_network(const DiskGraph& g, const std::string& cond_path) {
    return load([&] {
        Network net{g, conductances_from_json(read_json_file(cond_path), g)};
        validate_network(net);
        return net;
    });
}

void require_well_connected(const DiskGraph& g) {
    const WellConnectedVerdict v = check_well_connected(g);
    if (!v.well_connected) {
        std::string msg = "graph is not well connected";
        if (!v.violations.empty()) msg += ": " + v.violations.front();
        throw InputError{msg};
    }
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

RatFormat format_of(int decimal) { return decimal >= 0 ? RatFormat{decimal} : RatFormat{}; }

// ---- verify ----

struct Suite {
    explicit Suite(std::string n) : name(std::move(n)) {}
    std::string name;
    int checks = 0;
    int failures = 0;
    std::string first_failure;

    void record(bool ok, const std::string& what) {
        ++checks;
        if (!ok) {
            if (failures++ == 0) first_failure = what;
        }
    }
    void attempt(const std::string& what, const std::function<bool()>& f) {
        try {
            record(f(), what);
        } catch (const std::exception& e) {
            record(false, what + ": " + e.what());
        }
    }
};

std::vector<YDeltaSite> y_sites(const DiskGraph& g) {
    std::vector<YDeltaSite> out;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (!g.is_boundary(v) && g.rotation_edges(v).size() == 3) out.push_back(YDeltaSite::at_vertex(g.vertex_id(v)));
    return out;
}

Json run_verify(const DiskGraph& g, const std::string& graph_name, int trials, std::uint64_t seed, bool& passed) {
    const int n = g.n();
    Sampler rng(seed);
    Suite wc{"well_connected"}, resp{"response_invariants"}, iso{"isotropy_positivity"},
        point_rt{"point_roundtrip"}, resp_rt{"response_roundtrip"}, cartan{"cartan_relations_pfaffians"},
        torus{"torus_invariance"}, twist{"twist_inverse"}, moves{"y_delta_compatibility"};

    const WellConnectedVerdict verdict = check_well_connected(g);
    wc.record(verdict.well_connected,
              verdict.violations.empty() ? "graph is not well connected" : verdict.violations.front());
    const std::vector<YDeltaSite> sites = y_sites(g);

    if (verdict.well_connected) {
        for (int t = 0; t < trials; ++t) {
            const std::string tag = "trial " + std::to_string(t + 1);
            const Network net{g, rng.next(g.num_edges())};
            std::optional<Mat> l, x;
            std::optional<CartanVector> s;
            resp.attempt(tag, [&] {
                l = response_matrix(net);
                return response_violations(*l).empty();
            });
            iso.attempt(tag, [&] {
                x = forward_point(net);
                return omega_check(*x) && plucker(*x).all_positive();
            });
            if (x) {
                point_rt.attempt(tag, [&] { return invert_response(MatrixPoint{*x, true}, g) == net.conductance; });
                cartan.attempt(tag, [&] {
                    s = electrical_left_twist(*x, g);
                    return satisfies_cartan_relations(*s) && pfaffian_check(*s, skew_pair_from_cartan(*s));
                });
            }
            if (l && n <= 3) resp_rt.attempt(tag, [&] { return invert_response(*l, g) == net.conductance; });
            if (s) {
                const std::vector<Rat> ts = rng.next(n);
                const Rat scale = rng.next();
                torus.attempt(tag, [&] {
                    const BVariables b = psi_g(*s, g);
                    return q_g(torus_action(scale, ts, b, g), g) == q_g(b, g);
                });
                twist.attempt(tag, [&] {
                    return proportionality(plucker(electrical_right_twist(*s, g)), plucker(*x)).has_value();
                });
            }
            if (l && !sites.empty()) {
                const YDeltaSite& site = sites[static_cast<size_t>(t) % sites.size()];
                moves.attempt(tag, [&] {
                    const YDeltaMove mv = y_delta_graph(g, site);
                    const Conductances moved = y_delta_conductances(net.conductance, mv);
                    if (!(response_matrix({mv.after, moved}) == *l)) return false;
                    if (medial(mv.after).pairing != medial(g).pairing) return false;
                    if (!s) return true;
                    const BVariables b = psi_g(*s, g);
                    return q_g(cube_recurrence_move(b, mv), mv.after) == y_delta_conductances(q_g(b, g), mv);
                });
            }
        }
    }

    Json report = Json::object();
    report["graph"] = graph_name;
    report["n"] = n;
    report["seed"] = seed;
    report["trials"] = trials;
    Json list = Json::array();
    passed = true;
    for (const Suite* su : {&wc, &resp, &iso, &point_rt, &resp_rt, &cartan, &torus, &twist, &moves}) {
        Json e = Json::object();
        e["name"] = su->name;
        e["checks"] = su->checks;
        e["failures"] = su->failures;
        if (su->checks == 0) {
            e["status"] = "skipped";
        } else {
            e["status"] = su->failures == 0 ? "passed" : "failed";
            if (su->failures) e["first_failure"] = su->first_failure;
        }
        if (su->failures) passed = false;
        list.push_back(std::move(e));
    }
    report["suites"] = std::move(list);
    report["passed"] = passed;
    return report;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact forward and inverse maps for planar electrical networks", "elnet"};
    app.require_subcommand(1);

    int n = 0, trials = 10, decimal = -1;
    std::uint64_t seed = 0;
    std::string graph_arg, cond_path, response_path, point_path;

    auto add_decimal = [&](CLI::App* sub) {
        sub->add_option("--decimal", decimal, "Render rationals as k-digit decimals")->check(CLI::Range(0, 1000));
    };

    CLI::App* graph_cmd = app.add_subcommand("graph", "Emit a builtin well-connected graph");
    graph_cmd->add_option("--n", n, "Number of boundary vertices")->required();

    CLI::App* respond = app.add_subcommand("respond", "Emit the response matrix");
    CLI::App* forward = app.add_subcommand("forward", "Emit the Plucker vector of the measured point");
    CLI::App* roundtrip = app.add_subcommand("roundtrip", "Forward then inverse; exit 0 iff exact");
    for (CLI::App* sub : {respond, forward, roundtrip}) {
        sub->add_option("--graph", graph_arg, "Graph JSON file or builtinN")->required();
        sub->add_option("--cond", cond_path, "Conductance JSON file")->required();
        add_decimal(sub);
    }

    CLI::App* invert = app.add_subcommand("invert", "Recover conductances");
    invert->add_option("--graph", graph_arg, "Graph JSON file or builtinN")->required();
    CLI::Option* resp_opt = invert->add_option("--response", response_path, "ResponseMatrix JSON file");
    CLI::Option* point_opt = invert->add_option("--point", point_path, "MatrixPoint JSON file");
    resp_opt->excludes(point_opt);
    add_decimal(invert);

    CLI::App* verify = app.add_subcommand("verify", "Run the invariant suites on sampled conductances");
    verify->add_option("--graph", graph_arg, "Graph JSON file or builtinN")->required();
    verify->add_option("--trials", trials, "Number of sampled assignments")->check(CLI::Range(0, 1000000));
    verify->add_option("--seed", seed, "Sampler seed");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? Ok : ValidationFailure;
    }
    if (*invert && !*resp_opt && !*point_opt) {
        err << "invert needs --response or --point\n";
        return ValidationFailure;
    }

    const RatFormat fmt = format_of(decimal);
    try {
        if (*graph_cmd) {
            const DiskGraph g = load([&] { return builtin_graph(n); });
            emit(out, graph_to_json(g));
            return Ok;
        }
        const DiskGraph g = load_graph(graph_arg);
        if (*respond) {
            const Network net = load_network(g, cond_path);
            emit(out, response_to_json(response_matrix(net), fmt));
            return Ok;
        }
        if (*forward) {
            const Network net = load_network(g, cond_path);
            emit(out, plucker_to_json(plucker(forward_point(net)), fmt));
            return Ok;
        }
        if (*invert) {
            require_well_connected(g);
            InverseInput input;
            if (*resp_opt) {
                const Mat l = load([&] { return response_from_json(read_json_file(response_path)); });
                if (l.rows() != g.n()) throw InputError{"response matrix and graph disagree on n"};
                const std::vector<std::string> bad = response_violations(l);
                if (!bad.empty()) throw InputError{bad.front()};
                input = l;
            } else {
                const MatrixPoint p = load([&] { return point_from_json(read_json_file(point_path)); });
                if (p.matrix.rows() != g.n() + 1 || p.matrix.cols() != 2 * g.n())
                    throw InputError{"point must be (n+1) x 2n for the graph"};
                input = p;
            }
            emit(out, conductances_to_json(invert_response(input, g), g, fmt));
            return Ok;
        }
        if (*roundtrip) {
            require_well_connected(g);
            const Network net = load_network(g, cond_path);
            Json report = Json::object();
            report["input"] = conductances_to_json(net.conductance, g, fmt);
            const Conductances by_point = invert_response(MatrixPoint{forward_point(net), true}, g);
            report["point_path"] = conductances_to_json(by_point, g, fmt);
            bool exact = by_point == net.conductance;
            if (g.n() <= 3) {
                const Conductances by_response = invert_response(response_matrix(net), g);
                report["response_path"] = conductances_to_json(by_response, g, fmt);
                exact = exact && by_response == net.conductance;
            }
            report["exact"] = exact;
            emit(out, report);
            return exact ? Ok : ValidationFailure;
        }
        if (*verify) {
            bool passed = false;
            emit(out, run_verify(g, graph_arg, trials, seed, passed));
            return passed ? Ok : ValidationFailure;
        }
    } catch (const InputError& e) {
        err << "error: " << e.message << '\n';
        return ValidationFailure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return PipelineError;
    }
    return ValidationFailure;
}

}  // namespace elnet::cli
