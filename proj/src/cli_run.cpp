#include <algorithm>
#include <cmath>
#include <sstream>

#include "catmix/cli_config.hpp"
#include "catmix/decay.hpp"
#include "catmix/errors.hpp"
#include "catmix/exact_kernel.hpp"
#include "catmix/exclusion.hpp"
#include "catmix/io.hpp"
#include "catmix/observables.hpp"
#include "catmix/parallel.hpp"
#include "catmix/version.hpp"
#include "catmix/walks.hpp"
#include "catmix/wilson.hpp"

namespace catmix {

namespace {

SweepModel model_from(const std::string& name) {
    if (name == "cat") return SweepModel::CAT;
    if (name == "monotone") return SweepModel::MonotoneCAT;
    if (name == "single") return SweepModel::SingleDirectional;
    if (name == "at") return SweepModel::ATStep;
    throw usage_error("unknown model: " + name);
}

void meta_lines(CsvWriter& w, const ExperimentConfig& cfg, const std::string& units) {
    w.meta("catmix", kVersion);
    w.meta("config", cfg.echo_json());
    w.meta("units", units);
}

void run_simulate(const ExperimentConfig& cfg, std::ostream& os) {
    CensoringScheme scheme = CensoringScheme::parse(cfg.scheme, cfg.n);
    bool jsonl = cfg.format == "jsonl";
    std::string units = cfg.model == "at" ? "steps" : "sweeps";

    // one trial at a time; rows buffered per trial so parallel trials would
    // not interleave (trials here are cheap enough to run serially in order)
    CsvWriter csv(os, {"trial", "sweep", "phi", "height_l2", "height_max"});
    if (!jsonl) {
        meta_lines(csv, cfg, units);
        csv.start_rows();
    }
    for (std::int64_t trial = 0; trial < cfg.trials; ++trial) {
        Permutation sigma = Permutation::identity(cfg.n);
        for (std::int64_t s = 0; s <= cfg.sweeps; ++s) {
            if (s % cfg.stride == 0) {
                HeightField h = height_profile(sigma);
                double phi = wilson_statistic(h);
                if (jsonl) {
                    os << "{\"trial\":" << trial << ",\"sweep\":" << s << ",\"state\":" << sigma.to_string()
                       << ",\"phi\":" << fmt_double(phi) << ",\"height_l2\":" << fmt_double(h.l2())
                       << ",\"height_max\":" << fmt_double(h.max_abs()) << "}\n";
                } else {
                    csv.row().col(trial).col(s).col(phi).col(h.l2()).col(h.max_abs());
                }
            }
            if (s == cfg.sweeps) break;
            rng::Stream st = rng::Stream::at(cfg.seed, trial, s);
            if (cfg.model == "at") {
                sigma = at_step(sigma, st);
            } else {
                auto r = SweepRandomness::draw(cfg.n, st);
                if (cfg.model == "monotone") sigma = monotone_sweep(sigma, r);
                else if (cfg.model == "single") sigma = single_directional_sweep(sigma, r.bits);
                else if (!cfg.scheme.empty()) sigma = censored_sweep(sigma, r, scheme, s);
                else sigma = sweep(sigma, r);
            }
        }
    }
}

void run_tv_exact(const ExperimentConfig& cfg, std::ostream& os) {
    SweepModel model = model_from(cfg.model);
    if (cfg.n > 6) throw capacity_error("tv-exact needs n <= 6 (exact rational kernel); n is the limit");
    SweepOperator op(cfg.n, model);
    auto nu = Distribution<Rational>::point_mass(Permutation::identity(cfg.n));
    auto uni = Distribution<Rational>::uniform(cfg.n);

    bool project = cfg.projection > 0;
    std::vector<std::string> hdr = {"sweep", "tv"};
    if (project) { hdr.push_back("tv_hat"); hdr.push_back("tv_bar"); hdr.push_back("tv_u"); }
    CsvWriter csv(os, hdr);
    meta_lines(csv, cfg, cfg.model == "at" ? "steps" : "sweeps");
    csv.start_rows();
    BlockPartition part(cfg.n, project ? cfg.projection : 1);
    for (std::int64_t s = 0; s <= cfg.sweeps; ++s) {
        auto row = csv.row();
        row.col(s).col(to_double(total_variation(nu, uni)));
        if (project) {
            ProjectedTv p = projected_tv(nu, part);
            row.col(to_double(p.tv_hat)).col(to_double(p.tv_bar)).col(to_double(p.tv_u));
        }
        if (s == cfg.sweeps) break;
        nu = op.apply(nu);
    }
}

void run_censor_check(const ExperimentConfig& cfg, std::ostream& os) {
    CensoringScheme scheme = CensoringScheme::parse(cfg.scheme, cfg.n);
    auto rows = censoring_compare(cfg.n, scheme, cfg.sweeps);
    CsvWriter csv(os, {"sweep", "tv_plain", "tv_censored"});
    meta_lines(csv, cfg, "sweeps");
    bool ok = true;
    for (const auto& r : rows) ok = ok && r.tv_censored >= r.tv_plain;
    csv.meta("censored_never_below_plain", ok ? "true" : "false");
    csv.start_rows();
    for (const auto& r : rows)
        csv.row().col(r.sweep).col(to_double(r.tv_plain)).col(to_double(r.tv_censored));
    if (!ok) throw invariant_error("censored TV fell below the plain TV");
}

void run_spectrum(const ExperimentConfig& cfg, std::ostream& os) {
    SpectrumReport rep = killed_srw_spectrum(cfg.n);
    os << "{\"meta\":{\"catmix\":\"" << kVersion << "\",\"units\":\"steps\"},\"config\":"
       << cfg.echo_json() << ",\"rows\":[{\"n\":" << rep.n << ",\"eigenvalues\":[";
    for (int j = 0; j < rep.n; ++j) os << (j ? "," : "") << fmt_double(rep.modes[j].eigenvalue);
    os << "],\"gram_residual\":" << fmt_double(rep.gram_offdiag_max)
       << ",\"gram_diag_err\":" << fmt_double(rep.gram_diag_err)
       << ",\"eigen_residual_max\":" << fmt_double(rep.eigen_residual_max) << "}]}\n";
}

void run_survival(const ExperimentConfig& cfg, std::ostream& os) {
    if (cfg.kind == "hitting") {
        TailCurve c = hitting_time_right(cfg.n, cfg.start, cfg.trials, cfg.seed, cfg.thetas);
        CsvWriter csv(os, {"theta", "t_sweeps", "tail"});
        meta_lines(csv, cfg, "sweeps");
        csv.start_rows();
        for (size_t i = 0; i < c.theta.size(); ++i)
            csv.row().col(c.theta[i]).col(c.t[i]).col(c.tail[i]);
        return;
    }
    std::int64_t tmax = cfg.tmax > 0 ? cfg.tmax : std::int64_t(10) * cfg.n * cfg.n;
    auto curve = survival_curve(killed_srw_kernel(cfg.n), 0, tmax);
    CsvWriter csv(os, {"t", "survival"});
    meta_lines(csv, cfg, "steps");
    csv.start_rows();
    for (std::int64_t t = 0; t <= tmax; t += cfg.stride) csv.row().col(t).col(curve[t]);
}

void run_decay(const ExperimentConfig& cfg, std::ostream& os) {
    auto rep = decay::decay_bound_check(cfg.n, cfg.sweeps, cfg.delta, std::max<std::int64_t>(1, cfg.stride));
    CsvWriter csv(os, {"s", "d_mass", "u_inf", "envelope", "ratio"});
    meta_lines(csv, cfg, "sweeps");
    csv.meta("final_margin_log", fmt_double(rep.final_margin));
    csv.start_rows();
    for (const auto& r : rep.rows)
        csv.row().col(r.s).col(r.d_mass).col(r.u_inf).col(r.envelope).col(r.ratio);
}

void run_wilson(const ExperimentConfig& cfg, std::ostream& os) {
    LowerBoundReport rep = cat_mixing_lower_bound(cfg.n, cfg.eps);
    double t = cfg.units == "steps" ? rep.t_steps : rep.t_sweeps;
    os << "{\"meta\":{\"catmix\":\"" << kVersion << "\",\"units\":\"" << cfg.units
       << "\"},\"config\":" << cfg.echo_json() << ",\"rows\":[{\"t_lower\":" << fmt_double(t)
       << ",\"gamma\":" << fmt_double(rep.inputs.gamma) << ",\"delta\":" << fmt_double(rep.inputs.delta)
       << ",\"R\":" << fmt_double(rep.inputs.R) << ",\"phi0\":" << fmt_double(rep.inputs.phi0)
       << ",\"phi_sup\":" << fmt_double(rep.inputs.phi_sup) << ",\"eps\":" << fmt_double(rep.inputs.eps)
       << "}]}\n";
}

void run_excl(const ExperimentConfig& cfg, std::ostream& os) {
    if (cfg.kind == "bound") {
        LowerBoundReport rep = excl_mixing_lower_bound(cfg.n, cfg.k, cfg.eps);
        os << "{\"meta\":{\"catmix\":\"" << kVersion << "\",\"units\":\"sweeps\"},\"config\":"
           << cfg.echo_json() << ",\"rows\":[{\"t_lower\":" << fmt_double(rep.t_sweeps)
           << ",\"gamma\":" << fmt_double(rep.inputs.gamma) << ",\"delta\":" << fmt_double(rep.inputs.delta)
           << ",\"R\":" << fmt_double(rep.inputs.R) << ",\"phi0\":" << fmt_double(rep.inputs.phi0)
           << ",\"phi_sup\":" << fmt_double(rep.inputs.phi_sup) << ",\"eps\":" << fmt_double(rep.inputs.eps)
           << "}]}\n";
        return;
    }
    if (cfg.sweeps <= 0) throw usage_error("excl --kind tv needs --sweeps");
    auto curve = excl_exact_tv(cfg.n, cfg.k, cfg.sweeps);
    CsvWriter csv(os, {"sweep", "tv"});
    meta_lines(csv, cfg, "sweeps");
    csv.start_rows();
    for (std::int64_t s = 0; s < std::int64_t(curve.size()); ++s)
        csv.row().col(s).col(to_double(curve[s]));
}

void run_couple(const ExperimentConfig& cfg, std::ostream& os) {
    std::vector<std::int64_t> grid;
    std::int64_t step = std::max<std::int64_t>(1, cfg.stride);
    for (std::int64_t s = step; s <= cfg.sweeps; s += step) grid.push_back(s);
    if (grid.empty() || grid.back() != cfg.sweeps) grid.push_back(cfg.sweeps);
    auto tail = excl_coupling_time(cfg.n, cfg.k, cfg.trials, cfg.seed, grid);
    CsvWriter csv(os, {"sweep", "uncoupled"});
    meta_lines(csv, cfg, "sweeps");
    csv.start_rows();
    for (size_t i = 0; i < tail.sweeps.size(); ++i)
        csv.row().col(tail.sweeps[i]).col(tail.uncoupled[i]);
}

} // namespace

void run_experiment(const ExperimentConfig& cfg, std::ostream& os) {
    if (cfg.subcommand == "simulate") return run_simulate(cfg, os);
    if (cfg.subcommand == "tv-exact") return run_tv_exact(cfg, os);
    if (cfg.subcommand == "censor-check") return run_censor_check(cfg, os);
    if (cfg.subcommand == "spectrum") return run_spectrum(cfg, os);
    if (cfg.subcommand == "survival") return run_survival(cfg, os);
    if (cfg.subcommand == "decay") return run_decay(cfg, os);
    if (cfg.subcommand == "wilson") return run_wilson(cfg, os);
    if (cfg.subcommand == "excl") return run_excl(cfg, os);
    if (cfg.subcommand == "couple") return run_couple(cfg, os);
    throw usage_error("unknown subcommand: " + cfg.subcommand);
}

} // namespace catmix
