#include "catmix/cli_config.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <sstream>

#include "catmix/errors.hpp"
#include "catmix/io.hpp"

namespace catmix {

std::string ExperimentConfig::echo_json() const {
    std::ostringstream os;
    os << "{\"subcommand\":\"" << subcommand << "\",\"n\":" << n;
    if (k >= 0) os << ",\"k\":" << k;
    os << ",\"model\":\"" << model << "\",\"sweeps\":" << sweeps << ",\"trials\":" << trials
       << ",\"seed\":" << seed;
    if (!scheme.empty()) os << ",\"scheme\":\"" << scheme << "\"";
    os << ",\"eps\":" << fmt_double(eps) << ",\"delta\":" << fmt_double(delta);
    if (!thetas.empty()) {
        os << ",\"thetas\":[";
        for (size_t i = 0; i < thetas.size(); ++i) os << (i ? "," : "") << fmt_double(thetas[i]);
        os << "]";
    }
    if (tmax > 0) os << ",\"tmax\":" << tmax;
    if (projection > 0) os << ",\"projection\":" << projection;
    if (stride > 1) os << ",\"stride\":" << stride;
    if (start > 0) os << ",\"start\":" << start;
    if (!kind.empty()) os << ",\"kind\":\"" << kind << "\"";
    os << ",\"format\":\"" << format << "\",\"units\":\"" << units << "\"}";
    return os.str();
}

ExperimentConfig parse_config(const std::vector<std::string>& args) {
    ExperimentConfig cfg;
    CLI::App app{"catmix: systematic-scan shuffle simulation and exact analysis"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub, bool need_n = true) {
        auto* n_opt = sub->add_option("--n", cfg.n, "deck / line size");
        if (need_n) n_opt->required();
        sub->add_option("--seed", cfg.seed, "master seed (fixed default, never clock-derived)");
        sub->add_option("--out", cfg.out, "output path (default stdout)");
        sub->add_option("--format", cfg.format, "csv | jsonl | json")
            ->check(CLI::IsMember({"csv", "jsonl", "json"}));
    };

    auto* sim = app.add_subcommand("simulate", "sample trajectories and observables");
    add_common(sim);
    sim->add_option("--model", cfg.model, "cat | monotone | single | at")
        ->check(CLI::IsMember({"cat", "monotone", "single", "at"}));
    sim->add_option("--sweeps", cfg.sweeps, "sweeps per trial")->required();
    sim->add_option("--trials", cfg.trials, "independent trials");
    sim->add_option("--scheme", cfg.scheme, "censoring scheme spec");
    sim->add_option("--stride", cfg.stride, "record every stride-th sweep");

    auto* tv = app.add_subcommand("tv-exact", "exact TV-to-uniform curve on S_n");
    add_common(tv);
    tv->add_option("--model", cfg.model)->check(CLI::IsMember({"cat", "monotone", "single", "at"}));
    tv->add_option("--sweeps", cfg.sweeps, "curve length")->required();
    tv->add_option("--eps", cfg.eps, "also report the exact mixing time at eps");
    tv->add_option("--projection", cfg.projection, "block count: add projected TV columns");

    auto* cen = app.add_subcommand("censor-check", "exact censored vs plain TV");
    add_common(cen);
    cen->add_option("--sweeps", cfg.sweeps)->required();
    cen->add_option("--scheme", cfg.scheme, "censoring scheme spec")->required();

    auto* spec = app.add_subcommand("spectrum", "closed-form killed-walk eigensystem report");
    add_common(spec);

    auto* surv = app.add_subcommand("survival", "killed-walk survival / hitting tails");
    add_common(surv);
    surv->add_option("--kind", cfg.kind, "exact | hitting")->check(CLI::IsMember({"exact", "hitting"}));
    surv->add_option("--tmax", cfg.tmax, "steps for the exact curve (0 = 10 n^2)");
    surv->add_option("--trials", cfg.trials, "trials for the hitting tail");
    surv->add_option("--start", cfg.start, "tagged-card start position (0-based)");
    surv->add_option("--thetas", cfg.thetas, "theta grid for the hitting tail");
    surv->add_option("--stride", cfg.stride, "row thinning for the exact curve");

    auto* dec = app.add_subcommand("decay", "height decay recursions vs envelope");
    add_common(dec);
    dec->add_option("--sweeps", cfg.sweeps)->required();
    dec->add_option("--delta", cfg.delta, "envelope slack");
    dec->add_option("--stride", cfg.stride);

    auto* wil = app.add_subcommand("wilson", "assembled mixing-time lower bound");
    add_common(wil);
    wil->add_option("--eps", cfg.eps);
    wil->add_option("--units", cfg.units, "sweeps | steps")->check(CLI::IsMember({"sweeps", "steps"}));

    auto* exc = app.add_subcommand("excl", "particle-system analysis");
    add_common(exc);
    exc->add_option("--k", cfg.k, "particle count")->required();
    exc->add_option("--kind", cfg.kind, "tv | bound")->check(CLI::IsMember({"tv", "bound"}));
    exc->add_option("--sweeps", cfg.sweeps, "curve length for --kind tv");
    exc->add_option("--eps", cfg.eps);

    auto* cpl = app.add_subcommand("couple", "two-chain coupling tail (particles)");
    add_common(cpl);
    cpl->add_option("--k", cfg.k, "particle count")->required();
    cpl->add_option("--sweeps", cfg.sweeps, "tail horizon in sweeps")->required();
    cpl->add_option("--trials", cfg.trials);
    cpl->add_option("--stride", cfg.stride, "grid spacing");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend()); // CLI11 parses reversed
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        throw usage_error(e.what());
    }
    cfg.subcommand = app.get_subcommands().front()->get_name();
    if (cfg.subcommand == "survival" && cfg.kind.empty()) cfg.kind = "exact";
    if (cfg.subcommand == "excl" && cfg.kind.empty()) cfg.kind = "tv";
    if (cfg.subcommand == "wilson") cfg.format = "json";
    if (cfg.subcommand == "spectrum") cfg.format = "json";
    if (cfg.subcommand == "excl" && cfg.kind == "bound") cfg.format = "json";
    if (cfg.n < 2) throw usage_error("--n must be at least 2");
    return cfg;
}

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        ExperimentConfig cfg = parse_config(args);
        if (cfg.out.empty()) {
            run_experiment(cfg, out);
        } else {
            std::ofstream f(cfg.out, std::ios::binary);
            if (!f) throw usage_error("cannot open output path: " + cfg.out);
            run_experiment(cfg, f);
        }
        return 0;
    } catch (const usage_error& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const capacity_error& e) {
        err << "capacity error: " << e.what() << "\n";
        return 3;
    } catch (const invariant_error& e) {
        err << "invariant violation: " << e.what() << "\n";
        return 4;
    }
}

} // namespace catmix
