#include "cli.hpp"

#include <webrank/csv.hpp>
#include <webrank/damping.hpp>
#include <webrank/errors.hpp>
#include <webrank/pagerank.hpp>
#include <webrank/perturbation.hpp>
#include <webrank/spectral.hpp>
#include <webrank/structure.hpp>

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

namespace webrank::cli {

namespace {

struct RunConfig {
    std::string input;
    std::string command;
    double c = 0.85;
    std::string grid = "0:1:0.01";
    double tolerance = DEFAULT_TOL;
    std::size_t maxIterations = 0;
    std::size_t terms = DEFAULT_TERMS;
    std::string output;
    std::string histogram;
    std::string decomposition;
    std::string coefficients;
    std::string fromScalars;
    bool fairness = false;
};

class UsageFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Writes through a temporary sibling and renames, so a failed run leaves no partial file.
void commit(const std::string &path, const std::string &content, std::ostream &fallback) {
    if (path.empty()) {
        fallback << content;
        return;
    }
    const std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f)
            throw IoFailure("cannot write " + tmp);
        f << content;
        f.flush();
        if (!f) {
            std::filesystem::remove(tmp);
            throw IoFailure("write failed for " + tmp);
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw IoFailure("cannot rename " + tmp + " to " + path + ": " + ec.message());
    }
}

WebGraph load(const RunConfig &cfg) {
    if (cfg.input.empty())
        throw UsageFailure("an input edge list is required");
    std::ifstream in(cfg.input, std::ios::binary);
    if (!in)
        throw IoFailure("cannot open " + cfg.input);
    return readEdgeList(in);
}

std::vector<double> parseGrid(const std::string &spec) {
    std::vector<double> parts;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ':')) {
        try {
            std::size_t used = 0;
            parts.push_back(std::stod(item, &used));
            if (used != item.size())
                throw std::invalid_argument(item);
        } catch (const std::exception &) {
            throw UsageFailure("bad --grid component '" + item + "'");
        }
    }
    if (parts.size() == 1)
        parts = {parts[0], parts[0], 1.0};
    if (parts.size() != 3)
        throw UsageFailure("--grid expects lo:hi:step");
    const double lo = parts[0], hi = parts[1], step = parts[2];
    if (!(lo >= 0.0 && hi <= 1.0 && lo <= hi && step > 0.0))
        throw UsageFailure("--grid needs 0 <= lo <= hi <= 1 and step > 0");
    std::vector<double> grid;
    for (std::size_t i = 0;; ++i) {
        const double c = lo + static_cast<double>(i) * step;
        if (c > hi + 1e-9 * step)
            break;
        grid.push_back(std::min(c, hi));
    }
    return grid;
}

void validate(const RunConfig &cfg) {
    if (!(cfg.c >= 0.0 && cfg.c < 1.0))
        throw UsageFailure("--c must lie in [0, 1)");
    if (!(cfg.tolerance > 0.0))
        throw UsageFailure("--tol must be positive");
    if (cfg.terms < 1)
        throw UsageFailure("--K must be at least 1");
    parseGrid(cfg.grid);
}

void cmdCensus(const RunConfig &cfg, std::ostream &out) {
    const WebGraph g = load(cfg);
    const StructureDecomposition dec = decompose(g);
    std::ostringstream table, hist, blocks;
    csv::writeCensus(table, census(g));
    if (!cfg.histogram.empty())
        csv::writePureOutHistogram(hist, pureOutSccSizes(g, dec));
    if (!cfg.decomposition.empty())
        csv::writeDecomposition(blocks, dec);
    if (!cfg.histogram.empty())
        commit(cfg.histogram, hist.str(), out);
    if (!cfg.decomposition.empty())
        commit(cfg.decomposition, blocks.str(), out);
    commit(cfg.output, table.str(), out);
}

void cmdPagerank(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    const WebGraph g = load(cfg);
    std::ostringstream body;
    if (cfg.fairness) {
        csv::writeFairness(body, fairnessAt(g, decompose(g), cfg.c, cfg.tolerance));
    } else {
        const PageRankVector pr = pagerank(TransitionOperator(g, cfg.c), cfg.tolerance,
                                           cfg.maxIterations);
        err << "pagerank: c=" << cfg.c << " iterations=" << pr.iterations
            << " residual=" << pr.residual << '\n';
        csv::writePagerank(body, pr);
    }
    commit(cfg.output, body.str(), out);
}

struct Analysis {
    StructureDecomposition dec;
    MassCurve curve;
    SpectralSummary spec;
};

Analysis analyse(const WebGraph &g, const RunConfig &cfg) {
    Analysis a;
    a.dec = decompose(g);
    a.curve = esccMassCurve(g, a.dec, cfg.terms);
    if (a.curve.coefficients.size() < 2)
        throw DegenerateStructure("mass curve too short for spectral estimates");
    a.spec = lambdaSequence(a.curve);
    return a;
}

void cmdMasscurve(const RunConfig &cfg, std::ostream &out) {
    const std::vector<double> grid = parseGrid(cfg.grid);
    const WebGraph g = load(cfg);
    const Analysis a = analyse(g, cfg);
    std::ostringstream body, coeffs;
    csv::writeMassCurve(body, a.curve, a.spec, grid);
    if (!cfg.coefficients.empty()) {
        csv::writeCoefficients(coeffs, a.curve);
        commit(cfg.coefficients, coeffs.str(), out);
    }
    commit(cfg.output, body.str(), out);
}

void cmdLimit(const RunConfig &cfg, std::ostream &out) {
    const WebGraph g = load(cfg);
    const StructureDecomposition dec = decompose(g);
    const LimitVector lv = limitPagerank(g, dec);
    std::ostringstream body;
    csv::writeClassMasses(body, dec, lv);
    commit(cfg.output, body.str(), out);
}

void cmdCstar(const RunConfig &cfg, std::ostream &out) {
    std::ostringstream table, body;
    if (!cfg.fromScalars.empty()) {
        std::vector<double> v;
        std::stringstream ss(cfg.fromScalars);
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                v.push_back(std::stod(item));
            } catch (const std::exception &) {
                throw UsageFailure("bad --from-scalars value '" + item + "'");
            }
        }
        if (v.size() != 3)
            throw UsageFailure("--from-scalars expects alpha,p1,lambda1");
        const double alpha = v[0], p1 = v[1], lambda1 = v[2];
        if (!(alpha > 0.0 && alpha <= 1.0 && p1 > 0.0 && p1 <= 1.0 && lambda1 > 0.0
              && lambda1 <= 1.0 && p1 * lambda1 < 1.0))
            throw UsageFailure("--from-scalars needs 0 < alpha, p1, lambda1 <= 1 and p1*lambda1 < 1");
        const DampingBounds b = dampingBounds(p1, lambda1);
        csv::printDampingBounds(table, b, p1, lambda1);
        csv::writeDampingBounds(body, b, p1, lambda1);
    } else {
        const WebGraph g = load(cfg);
        const Analysis a = analyse(g, cfg);
        if (a.dec.ergodicClasses.empty())
            throw DegenerateStructure("no Pure OUT ergodic classes: escc mass is identically "
                                      + csv::formatDouble(a.curve.alpha) + ", c* undefined");
        if (a.dec.esccClosed(g))
            throw DegenerateStructure("escc is closed: its mass never decreases, c* undefined");
        const std::vector<DampingReport> reports{solveCstarQuasi(a.spec, a.curve),
                                                 solveCstarUniform(a.spec, a.curve),
                                                 solveCstarPagerank(a.spec, a.curve)};
        csv::printDampingReports(table, reports);
        csv::writeDampingReports(body, reports);
    }
    out << table.str();
    if (!cfg.output.empty())
        commit(cfg.output, body.str(), out);
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    RunConfig cfg;
    CLI::App app{"Ergodic structure, PageRank mass and damping-factor analysis of web graphs",
                 "webrank"};
    app.require_subcommand(1);

    auto common = [&](CLI::App *sub, bool inputRequired) {
        auto *opt = sub->add_option("input", cfg.input, "edge-list file");
        if (inputRequired)
            opt->required();
        sub->add_option("--out", cfg.output, "write the main CSV here instead of stdout");
    };

    auto *census = app.add_subcommand("census", "component census (CSV component,size)");
    common(census, true);
    census->add_option("--histogram", cfg.histogram, "Pure OUT SCC sizes CSV");
    census->add_option("--decomposition", cfg.decomposition, "node_id,block_label CSV");

    auto *pr = app.add_subcommand("pagerank", "PageRank vector by power iteration");
    common(pr, true);
    pr->add_option("--c", cfg.c, "damping factor in [0,1)");
    pr->add_option("--tol", cfg.tolerance, "L1 residual tolerance");
    pr->add_option("--max-iter", cfg.maxIterations, "iteration cap (0: derived from c and tol)");
    pr->add_flag("--fairness", cfg.fairness, "emit mass / node-share ratios instead");

    auto *mc = app.add_subcommand("masscurve", "escc mass, bounds and r(c) over a grid of c");
    common(mc, true);
    mc->add_option("--grid", cfg.grid, "lo:hi:step within [0,1]");
    mc->add_option("--K", cfg.terms, "maximum series terms");
    mc->add_option("--coefficients", cfg.coefficients, "k,a_k,lambda_k CSV");

    auto *lim = app.add_subcommand("limit", "per-class mass of the c -> 1 limit");
    common(lim, true);

    auto *cs = app.add_subcommand("cstar", "fair damping factors with their bounds");
    common(cs, false);
    cs->add_option("--K", cfg.terms, "maximum series terms");
    cs->add_option("--from-scalars", cfg.fromScalars, "alpha,p1,lambda1: bound formulas only");

    std::vector<const char *> argv;
    for (const auto &a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? Success : UsageError;
    }

    try {
        validate(cfg);
        if (census->parsed())
            cmdCensus(cfg, out);
        else if (pr->parsed())
            cmdPagerank(cfg, out, err);
        else if (mc->parsed())
            cmdMasscurve(cfg, out);
        else if (lim->parsed())
            cmdLimit(cfg, out);
        else if (cs->parsed())
            cmdCstar(cfg, out);
        return Success;
    } catch (const UsageFailure &e) {
        err << "usage error: " << e.what() << '\n';
        return UsageError;
    } catch (const IoFailure &e) {
        err << "i/o error: " << e.what() << '\n';
        return InputError;
    } catch (const ParseError &e) {
        err << "parse error: " << e.what() << '\n';
        return InputError;
    } catch (const FormatError &e) {
        err << "format error: " << e.what() << '\n';
        return InputError;
    } catch (const RangeError &e) {
        err << "range error: " << e.what() << '\n';
        return InputError;
    } catch (const ConvergenceError &e) {
        err << "convergence failure: " << e.what() << '\n';
        return ConvergenceFailure;
    } catch (const DegenerateStructure &e) {
        err << "degenerate structure: " << e.what() << '\n';
        return DegenerateInput;
    } catch (const DomainError &e) {
        err << "usage error: " << e.what() << '\n';
        return UsageError;
    }
}

} // namespace webrank::cli
