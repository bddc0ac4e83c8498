#include "selfaffine/cli.hpp"
#include "selfaffine/errors.hpp"
#include "selfaffine/serialize.hpp"

#include <CLI11.hpp>

#include <sstream>
#include <stdexcept>

namespace selfaffine {

namespace {

/// Missing or malformed options; reported like a parse error.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string N = "1";
    std::string a;
    std::string x;
    std::string beta;
    std::string w;
    unsigned depth = 0;
    double tol = 1e-12;
    std::size_t cap = 0;
    unsigned points = 200;
    unsigned prefix = 2;
    unsigned period = 3;
    unsigned count_depth = 60;
    bool csv = false;
    bool json = false;
};

/// "3", "1..10", "1..10,100".
std::vector<int> parse_N_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream items(text);
    std::string item;
    auto to_int = [&](const std::string& s) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != s.size()) {
            throw UsageError("bad value for --N: '" + text + "'");
        }
        if (v < 1) {
            throw DomainError("N must be a positive integer");
        }
        return v;
    };
    while (std::getline(items, item, ',')) {
        const auto dots = item.find("..");
        if (dots == std::string::npos) {
            out.push_back(to_int(item));
        } else {
            const int lo = to_int(item.substr(0, dots));
            const int hi = to_int(item.substr(dots + 2));
            for (int n = lo; n <= hi; ++n) out.push_back(n);
        }
    }
    if (out.empty()) {
        throw UsageError("--N is empty");
    }
    return out;
}

int single_N(const Options& o) {
    const auto Ns = parse_N_list(o.N);
    if (Ns.size() != 1) {
        throw DomainError("this command takes a single --N");
    }
    return Ns[0];
}

Real require_a(const Options& o) {
    if (o.a.empty()) {
        throw UsageError("--a is required");
    }
    return resolve_parameter(o.a, ParameterKind::A);
}

Json real_json(const Real& r) {
    return r.value;
}

std::string describe(const Real& r) {
    return r.is_exact() ? r.exact->to_string() : format_number(r.value);
}

void emit(std::ostream& out, const Json& j) {
    out << dump_json(j) << '\n';
}

void cmd_eval(const Options& o, std::ostream& out) {
    const int N = single_N(o);
    const Params p = make_params(N, require_a(o));
    if (o.x.empty()) {
        throw UsageError("--x is required");
    }
    Json j;
    j["N"] = N;
    j["a"] = real_json(p.a);
    if (o.x.find('(') != std::string::npos) {
        const DigitSeq d = DigitSeq::parse(o.x, N);
        j["x"] = to_string(d.value());
        j["F"] = eval_F(p, d, o.tol);
    } else {
        const Rational x = parse_rational(o.x);
        if (x < 0 || x > 1) {
            throw DomainError("x must lie in [0,1]");
        }
        j["x"] = to_string(x);
        j["F"] = eval_F(p, x, o.tol);
    }
    emit(out, j);
}

void cmd_classify(const Options& o, std::ostream& out) {
    const int N = single_N(o);
    const Params p = make_params(N, require_a(o));
    if (o.x.empty()) {
        throw UsageError("--x is required");
    }
    const DigitSeq d = o.x.find('(') != std::string::npos ? DigitSeq::parse(o.x, N)
                                                           : digits_of_rational(parse_rational(o.x), N);
    const Rational x = d.value();
    if (o.csv) {
        out << probe_csv(finite_difference_probe(p, x, o.depth ? o.depth : 12));
        return;
    }
    Json j = to_json(classify_derivative(p, d));
    j["x"] = to_string(x);
    j["digits"] = d.to_string();
    if (o.depth > 0) {
        j["probe"] = to_json(finite_difference_probe(p, x, o.depth));
    }
    emit(out, j);
}

void cmd_thresholds(const Options& o, std::ostream& out) {
    std::vector<Thresholds> rows;
    for (int N : parse_N_list(o.N)) rows.push_back(thresholds(N, o.tol));
    if (o.csv) {
        out << thresholds_csv(rows);
        return;
    }
    Json arr = Json::array();
    for (const auto& t : rows) arr.push_back(to_json(t));
    emit(out, arr);
}

void cmd_dim_d0(const Options& o, std::ostream& out) {
    const int N = single_N(o);
    if (o.a.empty()) {
        const auto curve = dimension_curve(N, o.points);
        if (o.csv) {
            out << curve_csv(curve);
        } else {
            Json arr = Json::array();
            for (const auto& [a, d] : curve) arr.push_back(Json::array({a, d}));
            emit(out, arr);
        }
        return;
    }
    emit(out, to_json(dim_D0(N, require_a(o))));
}

void cmd_dim_dinf(const Options& o, std::ostream& out) {
    const int N = single_N(o);
    emit(out, to_json(dim_Dinf(N, require_a(o), o.depth ? o.depth : 20)));
}

void cmd_graph(const Options& o, std::ostream& out) {
    const int N = single_N(o);
    const Params p = make_params(N, require_a(o));
    const GraphSample g = sample_graph(p, o.depth, o.cap ? o.cap : 10'000'000);
    if (o.csv) {
        out << graph_csv(g);
    } else {
        emit(out, to_json(g));
    }
}

void cmd_beta(const Options& o, std::ostream& out) {
    const int N = single_N(o);
    if (o.beta.empty()) {
        throw UsageError("--beta is required");
    }
    const Real beta = resolve_parameter(o.beta, ParameterKind::Beta);
    const unsigned depth = o.depth ? o.depth : 20;
    Json j;
    j["N"] = N;
    j["beta"] = real_json(beta);
    j["beta_exact"] = describe(beta);
    j["quasi_greedy_one"] = to_json(quasi_greedy_one(N, beta, std::max(64u, 4 * depth)));
    if (beta.value < N + 1) {
        j["entropy"] = to_json(univoque_entropy_bounds(N, beta, depth, o.cap ? o.cap : 50'000'000));
    }
    if (!o.w.empty()) {
        const OmegaSeq w = OmegaSeq::parse(o.w, N);
        const std::uint64_t cap = o.cap ? o.cap : 2;
        Json s;
        s["w"] = w.to_string();
        ExpansionCount count;
        if (beta.is_exact()) {
            const Surd x = pi_beta(w, *beta.exact);
            s["pi"] = x.to_double();
            count = count_expansions(x, N, *beta.exact, cap, o.count_depth);
        } else {
            const double x = pi_beta(w, beta.value);
            s["pi"] = x;
            count = count_expansions(static_cast<long double>(x), N, static_cast<long double>(beta.value), cap,
                                     o.count_depth);
        }
        s["univoque"] = is_univoque(w, N, beta);
        s["expansions"] = {{"count", count.count}, {"saturated", count.saturated}};
        j["sequence"] = s;
    }
    emit(out, j);
}

void cmd_enumerate(const Options& o, std::ostream& out) {
    const int N = single_N(o);
    const DinfEnumeration e = enumerate_Dinf_points(N, require_a(o), o.prefix, o.period);
    if (o.csv) {
        out << dinf_csv(e);
    } else {
        emit(out, to_json(e));
    }
}

void cmd_asymptotics(const Options& o, std::ostream& out) {
    const AsymptoticReport r = asymptotic_check(parse_N_list(o.N));
    if (o.csv) {
        out << asymptotics_csv(r);
    } else {
        emit(out, to_json(r));
    }
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Computations with the self-affine functions F_{N,a}", "selfaffine"};
    app.require_subcommand(1);

    auto common = [&o](CLI::App* cmd) {
        cmd->add_option("--N", o.N, "N, or a list such as 1..10,100 where accepted");
        cmd->add_flag("--csv", o.csv, "CSV output for tabular results");
        cmd->add_flag("--json", o.json, "JSON output (default)");
        cmd->add_option("--tol", o.tol, "absolute tolerance")->check(CLI::PositiveNumber);
        cmd->add_option("--cap", o.cap, "resource cap");
    };
    auto with_a = [&o](CLI::App* cmd) {
        cmd->add_option("--a", o.a, "a as p/q, a decimal, or a0tilde:N, a0star:N, amin:N, kl:N, gr:N");
    };

    auto* eval = app.add_subcommand("eval", "F_{N,a}(x)");
    common(eval);
    with_a(eval);
    eval->add_option("--x", o.x, "x as p/q, a decimal, or digits \"0.1 (0 2)\"");

    auto* classify = app.add_subcommand("classify", "classify F'(x) at an eventually periodic x");
    common(classify);
    with_a(classify);
    classify->add_option("--x", o.x, "x as p/q, a decimal, or digits \"0.1 (0 2)\"");
    classify->add_option("--depth", o.depth, "also run the finite-difference probe to this level");

    auto* thresh = app.add_subcommand("thresholds", "a_min, a0_tilde, a0_star, a_inf_hat, a_inf_star");
    common(thresh);

    auto* d0 = app.add_subcommand("dim-d0", "dim_H D_0(a), or the curve a -> h_N(phi_N(a)) without --a");
    common(d0);
    with_a(d0);
    d0->add_option("--points", o.points, "curve points")->check(CLI::PositiveNumber);

    auto* dinf = app.add_subcommand("dim-dinf", "dim_H D_inf(a) with regime");
    common(dinf);
    with_a(dinf);
    dinf->add_option("--depth", o.depth, "window depth of the entropy bounds");

    auto* graph = app.add_subcommand("graph", "graph sample of F_{N,a} on the level-depth grid");
    common(graph);
    with_a(graph);
    graph->add_option("--depth", o.depth, "grid level")->required();

    auto* beta = app.add_subcommand("beta", "beta-expansion data for base beta");
    common(beta);
    beta->add_option("--beta", o.beta, "beta as p/q, a decimal, or kl:N, gr:N");
    beta->add_option("--depth", o.depth, "window depth of the entropy bounds");
    beta->add_option("--w", o.w, "sequence \"d1 d2 (p1 p2)\" to test for uniqueness");
    beta->add_option("--count-depth", o.count_depth, "depth of the expansion count");

    auto* enumerate = app.add_subcommand("enumerate-dinf", "points of D_inf(a) from univoque sequences");
    common(enumerate);
    with_a(enumerate);
    enumerate->add_option("--prefix", o.prefix, "maximal prefix length");
    enumerate->add_option("--period", o.period, "maximal period length")->check(CLI::PositiveNumber);

    auto* asym = app.add_subcommand("asymptotics", "N times each threshold, against the large-N limits");
    common(asym);

    std::vector<std::string> storage{"selfaffine"};
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : storage) argv.push_back(s.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 1;
    }

    try {
        if (*eval) cmd_eval(o, out);
        else if (*classify) cmd_classify(o, out);
        else if (*thresh) cmd_thresholds(o, out);
        else if (*d0) cmd_dim_d0(o, out);
        else if (*dinf) cmd_dim_dinf(o, out);
        else if (*graph) cmd_graph(o, out);
        else if (*beta) cmd_beta(o, out);
        else if (*enumerate) cmd_enumerate(o, out);
        else if (*asym) cmd_asymptotics(o, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 1;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << '\n';
        return 2;
    } catch (const PrecisionError& e) {
        err << "precision error: " << e.what() << '\n';
        return 3;
    } catch (const ConvergenceError& e) {
        err << "convergence error: " << e.what() << '\n';
        return 3;
    } catch (const ResourceError& e) {
        err << "resource error: " << e.what() << '\n';
        return 4;
    } catch (const std::domain_error& e) {
        err << "domain error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

} // namespace selfaffine
