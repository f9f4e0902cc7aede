#include "qmat/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"
#include "qmat/ame.hpp"
#include "qmat/bell.hpp"
#include "qmat/chm.hpp"
#include "qmat/defect.hpp"
#include "qmat/io.hpp"

namespace qmat::cli {

namespace {

struct Context {
    ToleranceConfig tol;
    std::uint64_t seed = 1;
    std::string out_path;
    std::string data_dir;
    unsigned jobs = 1;
    int exit_code = Success;
    // Commands whose product is a matrix send it to --out and keep the report on stdout.
    bool out_is_product = false;
    std::string command;
    std::function<json()> action;
    std::vector<std::shared_ptr<void>> keep;
};

int exit_code_for(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::Capacity: return CapacityExceeded;
    case ErrorKind::NonConvergence: return NonConvergence;
    default: return ContractViolation;
    }
}

json tolerances_json(const ToleranceConfig& tol)
{
    return {{"unitarity_tol", tol.unitarity_tol},
            {"rank_gap_tol", tol.rank_gap_tol},
            {"phase_cluster_tol", tol.phase_cluster_tol},
            {"convergence_tol", tol.convergence_tol}};
}

json real_matrix_json(const RealMatrix& m)
{
    return matrix_to_json(m.cast<cplx>());
}

RealMatrix read_real_matrix(const std::string& path)
{
    return bell::real_core(read_matrix(path));
}

json defect_json(const defect::RestrictedDefectReport& r)
{
    json j{{"tau", r.tau}, {"f", r.f}, {"z", r.z}, {"r", r.r}, {"delta", r.delta},
           {"equations", r.equations}};
    const auto& s = r.singular_values;
    // The two smallest singular values above the rank threshold set the robustness scale.
    j["smallest_nonzero_singular_values"] = json::array();
    for (std::size_t i = r.r > 2 ? r.r - 2 : 0; i < r.r && i < s.size(); ++i) {
        j["smallest_nonzero_singular_values"].push_back(s[i]);
    }
    return j;
}

json outcome_json(const chm::SearchOutcome& o, const ToleranceConfig& tol)
{
    json j{{"converged", o.converged},
           {"deviation", o.best.deviation},
           {"iterations", o.iterations},
           {"is_chm", o.best.matrix.size() > 0 && chm::is_chm(o.best.matrix, tol)}};
    if (!o.note.empty()) {
        j["note"] = o.note;
    }
    return j;
}

bool is_vector_set(const std::string& path)
{
    const std::string text = read_file(path);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos || text[first] != '{') {
        return false;
    }
    try {
        return json::parse(text).contains("vectors");
    } catch (const json::parse_error&) {
        return false;
    }
}

void write_csv(const std::string& path, const std::string& header,
               const std::vector<ame::EpGtPoint>& points)
{
    std::ostringstream os;
    os.precision(17);
    os << header << "\n";
    for (std::size_t i = 0; i < points.size(); ++i) {
        os << i << "," << points[i].e_p << "," << points[i].g_t << "\n";
    }
    write_file(path, os.str());
}

struct ChmOptions {
    std::string method = "sinkhorn";
    std::size_t n = 0;
    std::size_t max_iters = 10000;
    std::size_t restarts = 1;
    bool symmetric = false;
    std::string cert_file{};
    int q_max = 1 << 16;
    std::string cat_name{};
    std::optional<double> gamma{};
    std::optional<std::size_t> cat_n{};
    std::size_t circ_n = 0;
    std::size_t ln_n = 0;
};

void add_chm(CLI::App& app, Context& ctx)
{
    auto st = std::make_shared<ChmOptions>();
    ctx.keep.push_back(st);
    auto* chm_app = app.add_subcommand("chm", "Complex Hadamard matrices");
    chm_app->require_subcommand(1);

    auto* gen = chm_app->add_subcommand("gen", "Search for a complex Hadamard matrix");
    gen->add_option("--method", st->method)->check(CLI::IsMember({"sinkhorn", "walk"}));
    gen->add_option("--n", st->n)->required()->check(CLI::Range(2, 64));
    gen->add_option("--max-iters", st->max_iters);
    gen->add_option("--restarts", st->restarts);
    gen->add_flag("--symmetric", st->symmetric);
    gen->callback([&ctx, st] {
        ctx.command = "chm gen";
        ctx.out_is_product = true;
        ctx.action = [&ctx, st] {
            chm::SearchOutcome o;
            if (st->method == "sinkhorn") {
                o = chm::sinkhorn_chm(st->n, ctx.seed, st->max_iters, ctx.tol);
            } else {
                chm::WalkOptions opt;
                opt.symmetric = st->symmetric;
                opt.restarts = st->restarts;
                o = chm::random_walk_chm(st->n, ctx.seed, opt, ctx.tol);
            }
            if (!o.converged) {
                ctx.exit_code = NonConvergence;
            }
            json j = outcome_json(o, ctx.tol);
            j["method"] = st->method;
            j["n"] = st->n;
            j["matrix"] = matrix_to_json(o.best.matrix);
            return j;
        };
    });

    auto* cert = chm_app->add_subcommand("cert", "Certify a matrix: CHM test, defect, invariants");
    cert->add_option("file", st->cert_file)->required();
    cert->add_option("--q-max", st->q_max);
    cert->callback([&ctx, st] {
        ctx.command = "chm cert";
        ctx.action = [&ctx, st] {
            const ComplexMatrix m = read_matrix(st->cert_file);
            require_square(m, "chm cert");
            json j;
            j["n"] = m.rows();
            j["is_chm"] = chm::is_chm(m, ctx.tol);
            j["deviation"] = chm::deviation(m);
            try {
                const auto d = chm::unitary_defect(m, ctx.tol);
                j["defect"] = d.defect;
                j["defect_rank"] = d.rank;
            } catch (const Error& e) {
                j["defect"] = nullptr;
                j["defect_note"] = e.what();
            }
            if (j["is_chm"].get<bool>()) {
                j["haagerup"] = chm::haagerup_card(m, ctx.tol).cardinality;
            } else {
                j["haagerup"] = nullptr;
            }
            const auto b = chm::butson_fit(m, st->q_max, ctx.tol);
            j["butson"] = {{"is_butson", b.is_butson},
                           {"q", b.q ? json(*b.q) : json(nullptr)},
                           {"q_max", st->q_max},
                           {"max_phase_residual", b.max_phase_residual}};
            return j;
        };
    });

    auto* cat = chm_app->add_subcommand("catalogue", "Emit a catalogued matrix");
    cat->add_option("name", st->cat_name)->required();
    cat->add_option("--gamma", st->gamma);
    cat->add_option("--n", st->cat_n);
    cat->callback([&ctx, st] {
        ctx.command = "chm catalogue";
        ctx.out_is_product = true;
        ctx.action = [&ctx, st] {
            std::vector<double> params;
            if (st->gamma) {
                params.push_back(*st->gamma);
            }
            if (st->cat_n) {
                params.push_back(static_cast<double>(*st->cat_n));
            }
            const ComplexMatrix m = chm::catalogue(st->cat_name, params);
            return json{{"name", st->cat_name},
                        {"is_chm", chm::is_chm(m, ctx.tol)},
                        {"deviation", chm::deviation(m)},
                        {"matrix", matrix_to_json(m)}};
        };
    });

    auto* circ = chm_app->add_subcommand("circulant", "Solve the circulant unitarity constraints");
    circ->add_option("--n", st->circ_n)->required()->check(CLI::Range(3, 64));
    circ->callback([&ctx, st] {
        ctx.command = "chm circulant";
        ctx.out_is_product = true;
        ctx.action = [&ctx, st] {
            const auto o = chm::circulant_chm_solve(st->circ_n, ctx.seed, ctx.tol);
            if (!o.converged) {
                ctx.exit_code = NonConvergence;
            }
            json j = outcome_json(o, ctx.tol);
            if (o.converged) {
                j["defect"] = chm::unitary_defect(o.best.matrix, ctx.tol).defect;
                j["haagerup"] = chm::haagerup_card(o.best.matrix, ctx.tol).cardinality;
            }
            j["matrix"] = matrix_to_json(o.best.matrix);
            return j;
        };
    });

    auto* ln = chm_app->add_subcommand("ln", "Solve the block-circulant L_N pattern");
    ln->add_option("--n", st->ln_n)->required();
    ln->callback([&ctx, st] {
        ctx.command = "chm ln";
        ctx.out_is_product = true;
        ctx.action = [&ctx, st] {
            const auto o = chm::solve_LN(st->ln_n, ctx.seed, ctx.tol);
            if (!o.converged) {
                ctx.exit_code = NonConvergence;
            }
            json j = outcome_json(o, ctx.tol);
            if (o.converged) {
                j["defect"] = chm::unitary_defect(o.best.matrix, ctx.tol).defect;
                j["haagerup"] = chm::haagerup_card(o.best.matrix, ctx.tol).cardinality;
            }
            j["matrix"] = matrix_to_json(o.best.matrix);
            return j;
        };
    });
}

struct DefectOptions {
    std::string gram_file{};
    std::string delta_file{};
    std::size_t p = 2;
    std::size_t m = 2;
    std::size_t k = 2;
    double sic_gamma = std::numbers::pi;
    std::string ds_name{};
    std::size_t bd = 2;
    std::size_t bn = 8;
    double sigma1 = 1.0;
    double s = 1.0;
};

void add_defect(CLI::App& app, Context& ctx)
{
    auto st = std::make_shared<DefectOptions>();
    ctx.keep.push_back(st);
    auto* def = app.add_subcommand("defect", "Restricted defect of measurement Gram matrices");
    def->require_subcommand(1);

    auto* gram = def->add_subcommand("gram", "Gram matrix of a vector set");
    gram->add_option("file", st->gram_file)->required();
    gram->callback([&ctx, st] {
        ctx.command = "defect gram";
        ctx.action = [st] {
            const auto set = defect::dataset_load(st->gram_file);
            const auto g = defect::gram_from_vectors(set);
            return json{{"n", set.size()},
                        {"d", set.d},
                        {"valid_povm", defect::is_valid_povm_gram(g.G, set.size(), set.d)},
                        {"gram", matrix_to_json(g.G)}};
        };
    });

    auto* delta = def->add_subcommand("delta", "Restricted defect of a vector set or Hermitian matrix");
    delta->add_option("file", st->delta_file)->required();
    delta->callback([&ctx, st] {
        ctx.command = "defect delta";
        ctx.action = [&ctx, st] {
            if (is_vector_set(st->delta_file)) {
                return defect_json(defect::restricted_defect_of_set(defect::dataset_load(st->delta_file), ctx.tol));
            }
            return defect_json(defect::restricted_defect(read_matrix(st->delta_file), ctx.tol));
        };
    });

    auto* mub = def->add_subcommand("mub", "Prime-dimension MUB subset");
    mub->add_option("--p", st->p)->required();
    mub->add_option("--m", st->m)->required();
    mub->callback([&ctx, st] {
        ctx.command = "defect mub";
        ctx.action = [&ctx, st] {
            const auto set = defect::bases_to_set(defect::mub_prime(st->p), st->m);
            json j = defect_json(defect::restricted_defect_of_set(set, ctx.tol));
            j["p"] = st->p;
            j["m"] = st->m;
            return j;
        };
    });

    auto* etf = def->add_subcommand("etf", "Hermitian Fourier matrix of order k^2");
    etf->add_option("--k", st->k)->required();
    etf->callback([&ctx, st] {
        ctx.command = "defect etf";
        ctx.action = [&ctx, st] {
            json j = defect_json(defect::restricted_defect(defect::etf_hermitian_fourier(st->k), ctx.tol));
            j["k"] = st->k;
            return j;
        };
    });

    auto* sic = def->add_subcommand("sic3", "Weyl-Heisenberg SIC family in dimension 3");
    sic->add_option("--gamma", st->sic_gamma);
    sic->callback([&ctx, st] {
        ctx.command = "defect sic3";
        ctx.action = [&ctx, st] {
            json j = defect_json(defect::restricted_defect_of_set(defect::sic_d3(st->sic_gamma), ctx.tol));
            j["gamma"] = st->sic_gamma;
            return j;
        };
    });

    auto* ds = def->add_subcommand("dataset", "Restricted defect of a bundled vector set");
    ds->add_option("name", st->ds_name)->required();
    ds->callback([&ctx, st] {
        ctx.command = "defect dataset";
        ctx.action = [&ctx, st] {
            const std::string dir = resolve_data_dir(ctx.data_dir);
            const std::string path = dataset_path(dir, st->ds_name);
            require(!path.empty(), ErrorKind::Input,
                    "dataset '" + st->ds_name + "' is not present or fails its checksum in " + dir);
            const auto set = defect::dataset_load(path);
            json j = defect_json(defect::restricted_defect_of_set(set, ctx.tol));
            j["dataset"] = st->ds_name;
            j["n"] = set.size();
            j["d"] = set.d;
            return j;
        };
    });

    auto* bound = def->add_subcommand("bound", "Robustness bound for the restricted defect");
    bound->add_option("--d", st->bd)->required();
    bound->add_option("--n", st->bn)->required();
    bound->add_option("--sigma1", st->sigma1)->required();
    bound->add_option("--s", st->s);
    bound->callback([&ctx, st] {
        ctx.command = "defect bound";
        ctx.action = [st] {
            const auto b = defect::robustness_bound(st->bd, st->bn, st->sigma1, st->s);
            return json{{"sigma1", b.sigma1},
                        {"f_dN", b.f_dN},
                        {"s_max", b.s_max},
                        {"perturbation", b.perturbation(st->s)}};
        };
    });
}

struct AmeOptions {
    std::string file{};
    std::size_t d = 0;
    std::string kind = "P36";
    std::vector<double> phases{};
    std::string seed_perm{};
    std::size_t haar_d = 0;
    double eps = 0.05;
    std::uint64_t rng = 1;
    std::size_t max_iters = 10000;
    std::string trajectory{};
    std::size_t sample_n = 100;
    std::size_t iso_n = 2048;
};

void add_ame(CLI::App& app, Context& ctx)
{
    auto st = std::make_shared<AmeOptions>();
    ctx.keep.push_back(st);
    auto* ame_app = app.add_subcommand("ame", "Realignments, entangling power and AME matrices");
    ame_app->require_subcommand(1);


    auto* epgt = ame_app->add_subcommand("epgt", "Entangling power and gate typicality");
    epgt->add_option("file", st->file)->required();
    epgt->add_option("--d", st->d)->required();
    epgt->callback([&ctx, st] {
        ctx.command = "ame epgt";
        ctx.action = [st] {
            const auto b = ame::BipartiteMatrix::make(read_matrix(st->file), st->d);
            const auto p = ame::ep_gt(b);
            return json{{"e_p", p.e_p}, {"g_t", p.g_t}};
        };
    });

    auto* verify = ame_app->add_subcommand("verify", "2-unitarity report");
    verify->add_option("file", st->file)->required();
    verify->add_option("--d", st->d)->required();
    verify->callback([&ctx, st] {
        ctx.command = "ame verify";
        ctx.action = [&ctx, st] {
            const auto b = ame::BipartiteMatrix::make(read_matrix(st->file), st->d);
            const auto r = ame::realign(b, ame::Realignment::R);
            const auto g = ame::realign(b, ame::Realignment::Gamma);
            const auto p = ame::ep_gt(b);
            return json{{"two_unitary", ame::is_two_unitary(b, ctx.tol.unitarity_tol)},
                        {"deviation", gram_deviation(b.M)},
                        {"deviation_R", gram_deviation(r.M)},
                        {"deviation_Gamma", gram_deviation(g.M)},
                        {"e_p", p.e_p},
                        {"g_t", p.g_t}};
        };
    });

    auto* golden = ame_app->add_subcommand("golden", "The golden AME(4,6) matrix");
    golden->callback([&ctx, st] {
        ctx.command = "ame golden";
        ctx.out_is_product = true;
        ctx.action = [&ctx, st] {
            const auto a = ame::golden_ame();
            const auto p = ame::ep_gt(a);
            std::size_t nonzero = 0;
            for (Eigen::Index i = 0; i < a.M.size(); ++i) {
                nonzero += std::abs(a.M.data()[i]) > 0.0 ? 1 : 0;
            }
            return json{{"d", 6},
                        {"two_unitary", ame::is_two_unitary(a, ctx.tol.unitarity_tol)},
                        {"e_p", p.e_p},
                        {"g_t", p.g_t},
                        {"nonzero", nonzero},
                        {"matrix", matrix_to_json(a.M)}};
        };
    });

    auto* build = ame_app->add_subcommand("build", "P36, AME(4,3), Q, V or W matrices");
    build->add_option("--kind", st->kind)->check(CLI::IsMember({"P36", "AME43", "Q", "V", "W"}));
    build->add_option("--w", st->phases, "Phases in radians; V and W default to the printed optima");
    build->callback([&ctx, st] {
        ctx.command = "ame build";
        ctx.out_is_product = true;
        ctx.action = [st] {
            ame::BipartiteMatrix b;
            if (st->kind == "P36") {
                b = ame::permutation_P36();
            } else if (st->kind == "AME43") {
                b = ame::ame43();
            } else if (st->kind == "Q") {
                const auto w = st->phases.empty()
                                   ? std::vector<double>{5.0 * std::numbers::pi / 6.0, std::numbers::pi / 6.0}
                                   : st->phases;
                require(w.size() == 2, ErrorKind::Contract, "ame build: Q takes two phases");
                b = ame::build_Q(w[0], w[1]);
            } else if (st->kind == "V") {
                b = ame::build_V(st->phases.empty() ? ame::v_star_phases() : st->phases);
            } else {
                b = ame::build_W(st->phases.empty() ? ame::w_star_phases() : st->phases);
            }
            const auto p = ame::ep_gt(b);
            return json{{"kind", st->kind}, {"d", b.d}, {"e_p", p.e_p}, {"g_t", p.g_t},
                        {"matrix", matrix_to_json(b.M)}};
        };
    });

    auto* run_cmd = ame_app->add_subcommand("run", "Iterate the dynamical map from a seed");
    run_cmd->add_option("--seed-perm", st->seed_perm, "Permutation matrix file, disturbed by exp(i eps G)");
    run_cmd->add_option("--haar", st->haar_d, "Start from a Haar-random unitary of local dimension D");
    run_cmd->add_option("--eps", st->eps);
    auto* rng_opt = run_cmd->add_option("--rng", st->rng, "Seed of the disturbance or Haar draw; defaults to --seed");
    run_cmd->add_option("--max-iters", st->max_iters);
    run_cmd->add_option("--trajectory", st->trajectory);
    run_cmd->callback([&ctx, st, rng_opt] {
        ctx.command = "ame run";
        ctx.action = [&ctx, st, rng_opt] {
            if (rng_opt->count() == 0) {
                st->rng = ctx.seed;
            }
            ame::BipartiteMatrix m0;
            if (!st->seed_perm.empty()) {
                const auto p = ame::BipartiteMatrix::infer(read_matrix(st->seed_perm));
                m0 = ame::seed_m0(p, st->eps, st->rng);
            } else {
                require(st->haar_d >= 2, ErrorKind::Contract, "ame run: give --seed-perm FILE or --haar D");
                Rng gen(st->rng);
                m0 = {st->haar_d, haar_unitary(st->haar_d * st->haar_d, gen)};
            }
            ame::MapOptions opt;
            opt.max_iters = st->max_iters;
            const auto rec = ame::dynamical_map_run(m0, opt);
            if (!st->trajectory.empty()) {
                write_csv(st->trajectory, "iter,e_p,g_t", rec.trajectory);
            }
            if (rec.outcome == ame::MapOutcome::Exhausted) {
                ctx.exit_code = NonConvergence;
            }
            json j{{"outcome", ame::to_string(rec.outcome)},
                   {"iterations", rec.iterations},
                   {"e_p", rec.trajectory.back().e_p},
                   {"g_t", rec.trajectory.back().g_t},
                   {"rng", st->rng},
                   {"eps", st->eps}};
            if (!rec.note.empty()) {
                j["note"] = rec.note;
            }
            return j;
        };
    });

    auto* sample = ame_app->add_subcommand("sample", "Haar sample of (e_p, g_t) points");
    sample->add_option("--d", st->d)->required();
    sample->add_option("--n", st->sample_n)->required();
    sample->callback([&ctx, st] {
        ctx.command = "ame sample";
        ctx.out_is_product = true;
        ctx.action = [&ctx, st] {
            const auto pts = ame::ep_gt_sample(st->d, st->sample_n, ctx.seed);
            if (!ctx.out_path.empty()) {
                write_csv(ctx.out_path, "sample,e_p,g_t", pts);
            }
            double ep = 0.0, gt = 0.0;
            for (const auto& p : pts) {
                ep += p.e_p;
                gt += p.g_t;
            }
            return json{{"d", st->d},
                        {"n", st->sample_n},
                        {"mean_e_p", ep / static_cast<double>(pts.size())},
                        {"mean_g_t", gt / static_cast<double>(pts.size())}};
        };
    });

    auto* iso = ame_app->add_subcommand("iso", "Linear entropy statistics of the isoentropic map");
    iso->add_option("--d", st->d)->required();
    iso->add_option("--n", st->iso_n);
    iso->callback([&ctx, st] {
        ctx.command = "ame iso";
        ctx.action = [&ctx, st] {
            const auto s = ame::iso_random_stats(st->d, st->iso_n, ctx.seed);
            return json{{"d", st->d}, {"n", st->iso_n}, {"mean", s.mean}, {"stddev", s.stddev}};
        };
    });
}

struct BellOptions {
    std::string file{};
    std::size_t q = 0;
    std::size_t m = 0;
    std::size_t n = 0;
};

void add_bell(CLI::App& app, Context& ctx)
{
    auto st = std::make_shared<BellOptions>();
    ctx.keep.push_back(st);
    auto* bell_app = app.add_subcommand("bell", "Excess-based Bell inequality analysis");
    bell_app->require_subcommand(1);

    auto* lhv = bell_app->add_subcommand("lhv", "Classical (LHV) value");
    lhv->add_option("file", st->file)->required();
    lhv->add_option("--q", st->q);
    lhv->add_option("--m", st->m);
    lhv->callback([&ctx, st] {
        ctx.command = "bell lhv";
        ctx.action = [st] {
            if (st->q != 0 || st->m != 0) {
                const auto cm = bell::CorrelationMatrix::make({st->q, st->m}, read_matrix(st->file));
                const auto r = bell::max_excess_q(cm);
                return json{{"classical", r.value},
                            {"witnesses", {{"left_labels", r.left_labels}, {"right_labels", r.right_labels}}}};
            }
            const auto r = bell::lhv_value(read_real_matrix(st->file));
            return json{{"classical", r.value}, {"witnesses", {{"assignment", r.assignment}}}};
        };
    });

    auto* bounds = bell_app->add_subcommand("bounds", "Numerical radius, singular and taxicab bounds");
    bounds->add_option("file", st->file)->required();
    bounds->callback([&ctx, st] {
        ctx.command = "bell bounds";
        ctx.action = [st] {
            const auto b = bell::bounds(read_matrix(st->file));
            return json{{"bounds",
                         {{"c_radius", b.c_radius}, {"q_singular", b.q_singular}, {"c_taxicab", b.c_taxicab}}},
                        {"numerical_radius", b.numerical_radius},
                        {"sigma_max", b.sigma_max},
                        {"nu", b.nu}};
        };
    });

    auto* circ = bell_app->add_subcommand("circulant", "Circulant family M_n");
    circ->add_option("--n", st->n)->required()->check(CLI::Range(3, 24));
    circ->callback([&ctx, st] {
        ctx.command = "bell circulant";
        ctx.action = [st] {
            const RealMatrix core = bell::circulant_bell(st->n);
            const auto classical = bell::lhv_value(core);
            const double quantum = bell::circulant_quantum_value(st->n);
            const auto [alpha, beta] = bell::circulant_optimal_phases(st->n);
            const auto op = bell::qubit_bell_operator(core, alpha, beta);
            return json{{"n", st->n},
                        {"classical", classical.value},
                        {"quantum", quantum},
                        {"ratio", quantum / classical.value},
                        {"operator_max_eigenvalue", op.max_eigenvalue},
                        {"core", real_matrix_json(core)},
                        {"witnesses", {{"assignment", classical.assignment}, {"alpha", alpha}, {"beta", beta}}}};
        };
    });

    auto* tight = bell_app->add_subcommand("tight", "Tightness of the correlation inequality");
    tight->add_option("file", st->file)->required();
    tight->callback([&ctx, st] {
        ctx.command = "bell tight";
        ctx.action = [st] {
            const auto t = bell::tightness(read_real_matrix(st->file));
            return json{{"classical", t.classical_value},
                        {"vertex_count", t.vertex_count},
                        {"affine_rank", t.affine_rank},
                        {"is_tight", t.is_tight}};
        };
    });

    auto* unbiased = bell_app->add_subcommand("unbiased", "Sign vectors unbiased to every row");
    unbiased->add_option("file", st->file)->required();
    unbiased->callback([&ctx, st] {
        ctx.command = "bell unbiased";
        ctx.action = [st] {
            const auto v = bell::unbiased_vectors(read_real_matrix(st->file));
            return json{{"count", v.size()}, {"witnesses", v}};
        };
    });
}

void add_datasets(CLI::App& app, Context& ctx)
{
    auto* ds = app.add_subcommand("datasets", "Bundled vector-set assets");
    ds->require_subcommand(1);
    auto* list = ds->add_subcommand("list", "Inventory with checksum status");
    list->callback([&ctx] {
        ctx.command = "datasets list";
        ctx.action = [&ctx] {
            const std::string dir = resolve_data_dir(ctx.data_dir);
            json items = json::array();
            for (const auto& e : dataset_list(dir)) {
                items.push_back({{"name", e.name},
                                 {"file", e.file},
                                 {"d", e.d},
                                 {"vectors", e.vectors},
                                 {"sha256", e.sha256},
                                 {"status", e.status}});
            }
            return json{{"dir", dir}, {"datasets", items}};
        };
    });
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Context ctx;
    CLI::App app{"Structured unitary matrices: Hadamard, defect, AME and Bell tools", "qmat"};
    app.fallthrough();
    app.require_subcommand(1);
    app.set_version_flag("--version", QMAT_VERSION);
    app.add_option("--tol", ctx.tol.unitarity_tol, "Unitarity tolerance");
    app.add_option("--rank-tol", ctx.tol.rank_gap_tol, "Relative rank threshold");
    app.add_option("--phase-tol", ctx.tol.phase_cluster_tol, "Phase clustering tolerance");
    app.add_option("--conv-tol", ctx.tol.convergence_tol, "Convergence tolerance");
    app.add_option("--seed", ctx.seed, "Random seed");
    app.add_option("--out", ctx.out_path, "Output file");
    app.add_option("--jobs", ctx.jobs, "Worker cap")->check(CLI::PositiveNumber);
    app.add_option("--data-dir", ctx.data_dir, "Dataset directory");

    add_chm(app, ctx);
    add_defect(app, ctx);
    add_ame(app, ctx);
    add_bell(app, ctx);
    add_datasets(app, ctx);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return Success;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return Success;
    } catch (const CLI::CallForVersion&) {
        out << QMAT_VERSION << "\n";
        return Success;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << app.help();
        return Usage;
    }
    if (!ctx.action) {
        err << app.help();
        return Usage;
    }

    json report;
    try {
        ctx.tol.validate();
        const auto start = std::chrono::steady_clock::now();
        json results = ctx.action();
        const auto stop = std::chrono::steady_clock::now();
        report["command"] = ctx.command;
        report["args"] = args;
        report["timing_ms"] = std::chrono::duration<double, std::milli>(stop - start).count();
        report["results"] = std::move(results);
        report["provenance"] = {{"version", QMAT_VERSION},
                                {"seed", ctx.seed},
                                {"jobs", ctx.jobs},
                                {"tolerances", tolerances_json(ctx.tol)}};
    } catch (const Error& e) {
        err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return ContractViolation;
    }

    if (ctx.out_is_product && !ctx.out_path.empty()) {
        if (report["results"].contains("matrix")) {
            write_file(ctx.out_path, report["results"]["matrix"].dump() + "\n");
            report["results"]["matrix"] = ctx.out_path;
        }
        out << report.dump(2) << "\n";
    } else if (!ctx.out_path.empty()) {
        write_file(ctx.out_path, report.dump(2) + "\n");
    } else {
        out << report.dump(2) << "\n";
    }
    return ctx.exit_code;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err)
{
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) {
        args.emplace_back(argv[i]);
    }
    return run(args, out, err);
}

} // namespace qmat::cli
