#include "treeq/cli_app.hpp"

#include <fstream>

#include <CLI11.hpp>

#include "treeq/dot_export.hpp"
#include "treeq/json_io.hpp"
#include "treeq/quantum.hpp"
#include "treeq/simplicial.hpp"

namespace treeq::cli {

namespace {

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    Json j = Json::parse(in, nullptr, false);
    if (j.is_discarded()) throw InvalidArgument("invalid JSON in " + path);
    return j;
}

StateVector state_from_amps(const std::vector<double>& amps) {
    if (amps.empty()) throw InvalidArgument("--amps needs at least one amplitude");
    std::vector<Complex> amplitudes(amps.begin(), amps.end());
    return StateVector::normalized(amplitudes);
}

std::vector<StateVector> standard_basis(int dim) {
    std::vector<StateVector> basis;
    basis.reserve(dim);
    for (int k = 0; k < dim; ++k) basis.push_back(StateVector::basis(dim, k));
    return basis;
}

struct GenSiteArgs {
    GenerationConfig config;
    std::string rule = "descendant";
    std::uint64_t seed = 0;
    std::string format = "json";
};

std::string run_gen_site(const GenSiteArgs& a) {
    GenerationConfig config = a.config;
    if (a.rule == "descendant") {
        config.rule = PrecedenceRule::DescendantOnly;
    } else if (a.rule == "all-earlier-cohorts") {
        config.rule = PrecedenceRule::AllEarlierCohorts;
    } else {
        throw InvalidArgument("unknown precedence rule \"" + a.rule + "\"");
    }
    const CausalSite site = generate_site(config, a.seed);
    if (a.format == "dot") return to_dot(site);
    return to_json(site).dump() + "\n";
}

std::string run_site_metric(const std::string& path, NodeId from, NodeId to) {
    const CausalSite site = causal_site_from_json(load_json(path));
    const auto d = metric(site, from, to);
    Json j;
    j["from"] = from;
    j["to"] = to;
    j["reachable"] = d.has_value();
    j["distance"] = d ? Json(*d) : Json(nullptr);
    return j.dump() + "\n";
}

std::string run_site_verify(const std::string& path) {
    const CausalSite site = causal_site_from_json(load_json(path));
    const auto report = verify_orders(site);
    Json j;
    j["ok"] = report.ok();
    j["violations"] = report.violations;
    return j.dump() + "\n";
}

std::string run_euler(const std::string& preset) {
    SimplicialComplex complex = preset == "s1" ? make_s1_preset() : make_s2_preset();
    Json j;
    j["V"] = complex.count(0);
    j["E"] = complex.count(1);
    j["F"] = complex.count(2);
    j["chi"] = euler_characteristic(complex);
    return j.dump() + "\n";
}

std::string run_collapse(const std::vector<double>& amps, std::uint64_t trials,
                         std::uint64_t seed, unsigned threads) {
    const StateVector state = state_from_amps(amps);
    const auto basis = standard_basis(state.dim());
    const auto counts = collapse_counts(state, basis, seed, trials, threads);
    const auto expected = born_probabilities(state, basis);
    Json j;
    j["counts"] = counts;
    j["expected"] = expected;
    return j.dump() + "\n";
}

std::string run_premeasure(const std::vector<double>& amps, double overlap,
                           const std::string& report) {
    if (overlap < 0.0 || overlap > 1.0) {
        throw InvalidArgument("--overlap must lie in [0, 1]");
    }
    const StateVector system = state_from_amps(amps);
    const StateVector ready = StateVector::basis(2, 0);
    const StateVector branch1 = StateVector::basis(2, 0);
    const StateVector branch2{Complex(overlap, 0.0),
                              Complex(std::sqrt(1.0 - overlap * overlap), 0.0)};
    const BipartiteState joint = premeasure(system, ready, branch1, branch2);
    Json j;
    if (report == "schmidt") {
        const auto values = joint.schmidt_values();
        j["schmidt_rank"] = schmidt_rank(joint);
        j["schmidt_values"] = std::vector<double>(values.data(), values.data() + values.size());
    } else if (report == "reduced") {
        const Eigen::MatrixXcd reduced = joint.reduced_first();
        Json rows = Json::array();
        for (Eigen::Index r = 0; r < reduced.rows(); ++r) {
            Json row = Json::array();
            for (Eigen::Index c = 0; c < reduced.cols(); ++c) {
                row.push_back(complex_to_json(reduced(r, c)));
            }
            rows.push_back(std::move(row));
        }
        j["reduced"] = std::move(rows);
        j["offdiag_abs"] = std::abs(reduced(0, 1));
    } else {
        throw InvalidArgument("--report must be schmidt or reduced");
    }
    return j.dump() + "\n";
}

std::string run_landauer(double temp, double bits) {
    Json j;
    j["joules"] = landauer_cost(temp, bits);
    return j.dump() + "\n";
}

std::string run_hier_inner(const std::string& path_a, const std::string& path_b) {
    const auto a = hierarchic_state_from_json(load_json(path_a));
    const auto b = hierarchic_state_from_json(load_json(path_b));
    Json j;
    j["inner"] = complex_to_json(hier_inner(a, b));
    return j.dump() + "\n";
}

std::string run_hier_measure(const std::string& state_path, const std::string& alts_path,
                             std::uint64_t trials, std::uint64_t seed, unsigned threads) {
    const auto state = hierarchic_state_from_json(load_json(state_path));
    HierAlternatives parts;
    std::vector<std::uint64_t> counts;
    if (alts_path.empty()) {
        parts = decompose_alternatives(state);
        counts = hier_measure_counts(state, seed, trials, threads);
    } else {
        const Json doc = load_json(alts_path);
        if (!doc.is_array()) throw InvalidArgument("--alts expects a JSON array of states");
        std::vector<HierarchicState> alternatives;
        for (const auto& item : doc) alternatives.push_back(hierarchic_state_from_json(item));
        parts = decompose_alternatives(state, alternatives);
        counts = hier_measure_counts(state, alternatives, seed, trials, threads);
    }
    Json j;
    j["trials"] = trials;
    j["outcomes"] = Json::array();
    for (std::size_t i = 0; i < counts.size(); ++i) {
        Json o;
        o["digits"] = parts.labels[i].digits();
        o["count"] = counts[i];
        o["probability"] = parts.probabilities[i];
        j["outcomes"].push_back(std::move(o));
    }
    return j.dump() + "\n";
}

std::string run_zp_integrate(const std::string& profile, std::uint32_t p, std::uint32_t depth,
                             unsigned threads) {
    std::function<double(const PAdicLabel&)> f;
    if (profile == "one") {
        f = [](const PAdicLabel&) { return 1.0; };
    } else if (profile == "norm") {
        f = [](const PAdicLabel& x) { return norm(x).value(); };
    } else if (profile == "norm-sqrt") {
        f = [](const PAdicLabel& x) { return scale_profile(x); };
    } else {
        throw InvalidArgument("--profile must be one, norm or norm-sqrt");
    }
    Json j;
    j["p"] = p;
    j["K"] = depth;
    j["profile"] = profile;
    j["value"] = zp_integrate(f, p, depth, threads);
    return j.dump() + "\n";
}

std::string run_op_expect(const std::string& op_path, const std::string& state_path) {
    const auto tree = operator_tree_from_json(load_json(op_path));
    const auto state = hierarchic_state_from_json(load_json(state_path));
    Json j;
    j["expectation"] = operator_tree_expect(tree, state);
    return j.dump() + "\n";
}

std::string run_export_dot(const std::string& site_path, const std::string& state_path) {
    if (site_path.empty() == state_path.empty()) {
        throw InvalidArgument("export-dot needs exactly one of --site or --state");
    }
    if (!site_path.empty()) return to_dot(causal_site_from_json(load_json(site_path)));
    return to_dot(hierarchic_state_from_json(load_json(state_path)));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"causal sites, quantum collapse and hierarchic p-adic states"};
    app.require_subcommand(1);
    app.fallthrough();  // --out is valid before or after the subcommand
    std::string out_path;
    app.add_option("--out", out_path, "write the payload to a file instead of stdout")
        ->capture_default_str();

    GenSiteArgs gen;
    auto* gen_cmd = app.add_subcommand("gen-site", "run the multiplicative tree process");
    gen_cmd->add_option("--branching", gen.config.branching, "children per continuing node")
        ->check(CLI::PositiveNumber);
    gen_cmd->add_option("--steps", gen.config.steps, "number of creation steps");
    gen_cmd->add_option("--halt-prob", gen.config.halt_prob,
                        "per-node halt probability at every step");
    gen_cmd->add_option("--halt-schedule", gen.config.halt_schedule,
                        "comma-separated per-step halt probabilities (last repeats)")
        ->delimiter(',');
    gen_cmd->add_option("--seed", gen.seed, "generator seed");
    gen_cmd->add_option("--rule", gen.rule, "precedence wiring: descendant or all-earlier-cohorts");
    gen_cmd->add_option("--format", gen.format, "json or dot")
        ->check(CLI::IsMember({"json", "dot"}));

    std::string metric_in;
    NodeId metric_from = 0, metric_to = 0;
    auto* metric_cmd = app.add_subcommand("site-metric", "shortest chi-path between two nodes");
    metric_cmd->add_option("--in", metric_in, "site JSON file")->required();
    metric_cmd->add_option("--from", metric_from, "source node id")->required();
    metric_cmd->add_option("--to", metric_to, "target node id")->required();

    std::string verify_in;
    auto* verify_cmd = app.add_subcommand("site-verify", "check the order axioms of a site");
    verify_cmd->add_option("--in", verify_in, "site JSON file")->required();

    std::string euler_preset;
    auto* euler_cmd = app.add_subcommand("euler", "face counts of the sphere presets");
    euler_cmd->add_option("--preset", euler_preset, "s1 or s2")
        ->required()
        ->check(CLI::IsMember({"s1", "s2"}));

    std::vector<double> collapse_amps;
    std::uint64_t collapse_trials = 1, collapse_seed = 0;
    unsigned collapse_threads = 1;
    auto* collapse_cmd = app.add_subcommand("collapse", "projective measurement statistics");
    collapse_cmd->add_option("--amps", collapse_amps, "real amplitudes, comma separated")
        ->required()
        ->delimiter(',');
    collapse_cmd->add_option("--trials", collapse_trials, "number of measurements");
    collapse_cmd->add_option("--seed", collapse_seed, "generator seed");
    collapse_cmd->add_option("--threads", collapse_threads, "worker threads");

    std::vector<double> pre_amps;
    double pre_overlap = 0.0;
    std::string pre_report = "schmidt";
    auto* pre_cmd = app.add_subcommand("premeasure", "system-pointer correlation report");
    pre_cmd->add_option("--amps", pre_amps, "two real system amplitudes")
        ->required()
        ->delimiter(',');
    pre_cmd->add_option("--overlap", pre_overlap, "pointer branch overlap in [0, 1]");
    pre_cmd->add_option("--report", pre_report, "schmidt or reduced");

    double landauer_temp = 300.0, landauer_bits = 1.0;
    auto* landauer_cmd = app.add_subcommand("landauer", "heat cost of erasing information");
    landauer_cmd->add_option("--temp", landauer_temp, "temperature in kelvin")->required();
    landauer_cmd->add_option("--bits", landauer_bits, "erased bits")->required();

    std::string inner_a, inner_b;
    auto* inner_cmd = app.add_subcommand("hier-inner", "level-weighted inner product");
    inner_cmd->add_option("--a", inner_a, "first state JSON file")->required();
    inner_cmd->add_option("--b", inner_b, "second state JSON file")->required();

    std::string hm_state, hm_alts;
    std::uint64_t hm_trials = 1, hm_seed = 0;
    unsigned hm_threads = 1;
    auto* hm_cmd = app.add_subcommand("hier-measure", "hierarchic collapse statistics");
    hm_cmd->add_option("--state", hm_state, "state JSON file")->required();
    hm_cmd->add_option("--alts", hm_alts, "JSON array of alternative states (optional)");
    hm_cmd->add_option("--trials", hm_trials, "number of measurements");
    hm_cmd->add_option("--seed", hm_seed, "generator seed");
    hm_cmd->add_option("--threads", hm_threads, "worker threads");

    std::string zp_profile = "norm";
    std::uint32_t zp_p = 2, zp_depth = 1;
    unsigned zp_threads = 1;
    auto* zp_cmd = app.add_subcommand("zp-integrate", "Haar quadrature over truncated Z_p");
    zp_cmd->add_option("--profile", zp_profile, "one, norm or norm-sqrt");
    zp_cmd->add_option("--p", zp_p, "prime base")->required();
    zp_cmd->add_option("--K", zp_depth, "truncation depth")->required();
    zp_cmd->add_option("--threads", zp_threads, "worker threads");

    std::string op_path, op_state_path;
    auto* op_cmd = app.add_subcommand("op-expect", "operator tree expectation value");
    op_cmd->add_option("--op", op_path, "operator tree JSON file")->required();
    op_cmd->add_option("--state", op_state_path, "state JSON file")->required();

    std::string dot_site, dot_state;
    auto* dot_cmd = app.add_subcommand("export-dot", "Graphviz rendering of a site or state");
    dot_cmd->add_option("--site", dot_site, "site JSON file");
    dot_cmd->add_option("--state", dot_state, "state JSON file");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        std::string payload;
        if (gen_cmd->parsed()) {
            payload = run_gen_site(gen);
        } else if (metric_cmd->parsed()) {
            payload = run_site_metric(metric_in, metric_from, metric_to);
        } else if (verify_cmd->parsed()) {
            payload = run_site_verify(verify_in);
        } else if (euler_cmd->parsed()) {
            payload = run_euler(euler_preset);
        } else if (collapse_cmd->parsed()) {
            payload = run_collapse(collapse_amps, collapse_trials, collapse_seed, collapse_threads);
        } else if (pre_cmd->parsed()) {
            payload = run_premeasure(pre_amps, pre_overlap, pre_report);
        } else if (landauer_cmd->parsed()) {
            payload = run_landauer(landauer_temp, landauer_bits);
        } else if (inner_cmd->parsed()) {
            payload = run_hier_inner(inner_a, inner_b);
        } else if (hm_cmd->parsed()) {
            payload = run_hier_measure(hm_state, hm_alts, hm_trials, hm_seed, hm_threads);
        } else if (zp_cmd->parsed()) {
            payload = run_zp_integrate(zp_profile, zp_p, zp_depth, zp_threads);
        } else if (op_cmd->parsed()) {
            payload = run_op_expect(op_path, op_state_path);
        } else if (dot_cmd->parsed()) {
            payload = run_export_dot(dot_site, dot_state);
        } else {
            err << "usage error: missing subcommand\n";
            return 2;
        }

        if (!out_path.empty()) {
            std::ofstream file(out_path);
            if (!file) throw Error("cannot write " + out_path);
            file << payload;
        } else {
            out << payload;
        }
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace treeq::cli
