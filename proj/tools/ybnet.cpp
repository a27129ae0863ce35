// Command-line front end: list the catalogs, evaluate single matrices,
// run the verification suites.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ybnet/network.hpp"
#include "ybnet/report.hpp"
#include "ybnet/suite.hpp"

namespace {

using namespace ybnet;

void print_matrix(const Mat4& m, int precision) {
    for (int i = 0; i < 4; ++i) {
        std::printf("  [");
        for (int j = 0; j < 4; ++j) {
            const cplx v = m(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
            std::printf(" %+.*f%+.*fi", precision, v.real(), precision, v.imag());
        }
        std::printf(" ]\n");
    }
}

std::map<std::string, cplx> parse_kv(const std::vector<std::string>& args) {
    std::map<std::string, cplx> kv;
    for (const auto& a : args) {
        const auto eq = a.find('=');
        if (eq == std::string::npos) throw std::runtime_error("expected key=value, got " + a);
        const std::string key = a.substr(0, eq);
        const std::string val = a.substr(eq + 1);
        // accept "x", "x+yi", "(x,y)"
        double re = 0, im = 0;
        if (val.front() == '(') {
            if (std::sscanf(val.c_str(), "(%lf,%lf)", &re, &im) != 2)
                throw std::runtime_error("bad complex literal " + val);
        } else {
            char tail = 0;
            if (std::sscanf(val.c_str(), "%lf%lf%c", &re, &im, &tail) == 3 && (tail == 'i' || tail == 'j')) {
                // re+imi form
            } else {
                im = 0;
                if (std::sscanf(val.c_str(), "%lf", &re) != 1)
                    throw std::runtime_error("bad numeric literal " + val);
            }
        }
        kv[key] = cplx(re, im);
    }
    return kv;
}

int cmd_list(const std::string& kind) {
    if (kind == "algebras") {
        for (AlgebraId id : all_algebras()) {
            std::printf("%-16s [%s]  params:", algebra_name(id).c_str(), algebra_tag(id).c_str());
            for (const auto& p : required_params(id)) std::printf(" %s", p.c_str());
            std::printf("%s\n", is_dynamical(id) ? "  (dynamical)" : "");
        }
        return 0;
    }
    if (kind == "twists") {
        for (TwistId id : all_twists()) {
            const char* sk = "constant in the spectral parameter";
            if (id == TwistId::K || id == TwistId::Id) sk = "rigid";
            if (twist_spectral(id) == SpectralKind::multiplicative) sk = "z-dependent";
            if (twist_spectral(id) == SpectralKind::additive) sk = "beta-dependent";
            std::printf("%-10s [%s]\n", twist_name(id).c_str(), sk);
        }
        return 0;
    }
    if (kind == "edges") {
        for (const TwistEdge& e : network())
            std::printf("%-36s [%s]%s\n", e.name().c_str(), kind_name(e.kind).c_str(),
                        e.gated ? "" : " (informational)");
        return 0;
    }
    if (kind == "limits") {
        for (const LimitEdge& e : standard_edges())
            std::printf("%-28s %s\n", e.name.c_str(), e.description.c_str());
        return 0;
    }
    std::fprintf(stderr, "unknown listing '%s' (algebras|twists|edges|limits)\n", kind.c_str());
    return 2;
}

int cmd_eval(const std::string& target, const std::vector<std::string>& kvargs, int precision) {
    const auto kv = parse_kv(kvargs);
    ParamPoint pt = ParamPoint::from_map(kv);
    if (auto alg = algebra_by_name(target)) {
        const auto val = eval_r(*alg, pt);
        std::printf("scalar_norm = %+.*f%+.*fi%s\n", precision, val.scalar_norm.real(), precision,
                    val.scalar_norm.imag(), val.singular_scalar ? "  (singular)" : "");
        std::printf("core:\n");
        print_matrix(val.core, precision);
        return 0;
    }
    for (TwistId id : all_twists()) {
        if (twist_name(id) != target) continue;
        std::optional<cplx> arg;
        if (twist_spectral(id) == SpectralKind::multiplicative) arg = pt.Z();
        if (twist_spectral(id) == SpectralKind::additive) arg = pt.Beta();
        const auto val = eval_twist(id, arg, pt);
        std::printf("scalar_norm = %+.*f%+.*fi\n", precision, val.scalar_norm.real(), precision,
                    val.scalar_norm.imag());
        std::printf("core:\n");
        print_matrix(val.core, precision);
        return 0;
    }
    std::fprintf(stderr, "unknown target '%s'\n", target.c_str());
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"evaluated R-matrix network: evaluation and identity verification"};
    app.require_subcommand(1);

    std::string list_kind;
    auto* list = app.add_subcommand("list", "list catalog entries");
    list->add_option("kind", list_kind, "algebras|twists|edges|limits")->required();

    std::string eval_target;
    std::vector<std::string> eval_params;
    int precision = 6;
    auto* ev = app.add_subcommand("eval", "evaluate one R-matrix or twist");
    ev->add_option("target", eval_target, "catalog name, e.g. Aqp or K")->required();
    ev->add_option("params", eval_params, "key=value parameters (complex: re+imi or (re,im))");
    ev->add_option("--precision", precision, "printed digits");

    ybnet::SuiteConfig cfg;
    std::vector<std::string> suites;
    std::string report_path, config_path;
    auto* vf = app.add_subcommand("verify", "run verification suites");
    vf->add_option("--suite", suites,
                   "all|specfun|ybe|dybe|twists|homothety|structural|sklyanin|limits|finite");
    vf->add_option("--points", cfg.points, "random points per check");
    vf->add_option("--seed", cfg.seed, "sampling seed");
    vf->add_option("--tol", cfg.tol_override, "override every tolerance");
    vf->add_option("--jobs", cfg.jobs, "worker threads (0 = hardware)");
    vf->add_option("--report", report_path, "write the report to this path");
    vf->add_option("--format", cfg.format, "json|markdown");
    vf->add_option("--config", config_path, "read a JSON config file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (list->parsed()) return cmd_list(list_kind);
        if (ev->parsed()) return cmd_eval(eval_target, eval_params, precision);

        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in) {
                std::fprintf(stderr, "cannot read config %s\n", config_path.c_str());
                return 2;
            }
            ybnet::json j;
            try {
                in >> j;
            } catch (const std::exception& e) {
                std::fprintf(stderr, "malformed config: %s\n", e.what());
                return 2;
            }
            if (j.contains("suites")) suites = j["suites"].get<std::vector<std::string>>();
            cfg.points = j.value("points", cfg.points);
            cfg.seed = j.value("seed", cfg.seed);
            cfg.tol_override = j.value("tol", cfg.tol_override);
            cfg.jobs = j.value("jobs", cfg.jobs);
            cfg.format = j.value("format", cfg.format);
            if (j.contains("tolerances"))
                for (const auto& [k, v] : j["tolerances"].items())
                    cfg.suite_tols[k] = v.get<double>();
            if (j.contains("truncation")) {
                cfg.trunc.max_terms = j["truncation"].value("max_terms", cfg.trunc.max_terms);
                cfg.trunc.term_tolerance =
                    j["truncation"].value("term_tolerance", cfg.trunc.term_tolerance);
            }
            if (j.contains("grid")) {
                // values are numbers or [re, im] pairs
                for (const auto& [k, vals] : j["grid"].items()) {
                    std::vector<ybnet::cplx> vs;
                    for (const auto& v : vals)
                        vs.push_back(v.is_array() ? ybnet::cplx(v[0].get<double>(), v[1].get<double>())
                                                  : ybnet::cplx(v.get<double>(), 0.0));
                    cfg.grid[k] = std::move(vs);
                }
            }
        }
        if (!suites.empty()) cfg.suites = {suites.begin(), suites.end()};
        if (cfg.points < 1 || cfg.format.empty() ||
            (cfg.format != "json" && cfg.format != "markdown")) {
            std::fprintf(stderr, "invalid configuration\n");
            return 2;
        }
        for (const auto& s : cfg.suites) {
            static const std::set<std::string> known = {"all",       "specfun",  "ybe",
                                                        "dybe",      "twists",   "homothety",
                                                        "structural", "sklyanin", "limits",
                                                        "finite"};
            if (!known.count(s)) {
                std::fprintf(stderr, "unknown suite '%s'\n", s.c_str());
                return 2;
            }
        }

        ybnet::RunReport rep;
        const int rc = ybnet::run_verify(cfg, rep);
        const ybnet::json payload = rep.payload(ybnet::shift_convention());
        const std::string body =
            cfg.format == "json" ? payload.dump(2) : ybnet::render_markdown(payload);
        if (!report_path.empty()) {
            std::ofstream out(report_path);
            out << body << "\n";
        } else {
            std::cout << body << "\n";
        }
        std::fprintf(stderr, "pass %d  fail %d  informational %d\n", rep.pass, rep.fail, rep.info);
        return rc;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
