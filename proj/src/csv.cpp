#include <webrank/csv.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <iomanip>

namespace webrank::csv {

std::string formatDouble(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return ec == std::errc() ? std::string(buf, ptr) : std::string("nan");
}

void writeCensus(std::ostream &out, const Census &c) {
    out << "component,size\n"
        << "total," << c.total << '\n'
        << "scc," << c.scc << '\n'
        << "in," << c.in << '\n'
        << "out," << c.out << '\n'
        << "escc," << c.escc << '\n'
        << "pure_out," << c.pureOut << '\n'
        << "sccs_in_out," << c.sccsInOut << '\n'
        << "sccs_in_pure_out," << c.sccsInPureOut << '\n';
}

void writePureOutHistogram(std::ostream &out, const std::vector<std::pair<node, count>> &rows) {
    out << "component,size\n";
    for (const auto &[id, size] : rows)
        out << id << ',' << size << '\n';
}

void writeDecomposition(std::ostream &out, const StructureDecomposition &dec) {
    const auto labels = blockLabels(dec);
    out << "node_id,block_label\n";
    for (std::size_t u = 0; u < labels.size(); ++u)
        out << u << ',' << labels[u] << '\n';
}

void writePagerank(std::ostream &out, const PageRankVector &pr) {
    out << "node_id,pagerank\n";
    for (std::size_t u = 0; u < pr.values.size(); ++u)
        out << u << ',' << formatDouble(pr.values[u]) << '\n';
}

void writeFairness(std::ostream &out, const std::vector<FairnessRow> &rows) {
    out << "set,size,mass,ratio\n";
    for (const auto &r : rows)
        out << r.set << ',' << r.size << ',' << formatDouble(r.mass) << ','
            << formatDouble(r.ratio) << '\n';
}

void writeMassCurve(std::ostream &out, const MassCurve &curve, const SpectralSummary &spec,
                    std::span<const double> grid) {
    out << "c,mass,lower_bound,upper_bound,truncation_bound,r_of_c\n";
    for (double c : grid) {
        const MassValue m = evaluateMass(curve, c);
        const MassBounds b = massBounds(curve.alpha, spec.p1, spec.lambda1, c);
        out << formatDouble(c) << ',' << formatDouble(m.value) << ',' << formatDouble(b.lower)
            << ',' << formatDouble(b.upper) << ',' << formatDouble(m.truncationBound) << ','
            << formatDouble(pagerankCriterion(curve.alpha, c)) << '\n';
    }
}

void writeCoefficients(std::ostream &out, const MassCurve &curve) {
    const auto &a = curve.coefficients;
    out << "k,a_k,lambda_k\n";
    for (std::size_t k = 0; k < a.size(); ++k) {
        out << k << ',' << formatDouble(a[k]) << ',';
        if (k > 0 && a[k - 1] > 0.0)
            out << formatDouble(a[k] / a[k - 1]);
        out << '\n';
    }
}

void writeClassMasses(std::ostream &out, const StructureDecomposition &dec, const LimitVector &limit) {
    const double n = static_cast<double>(dec.numberOfNodes());
    out << "class_id,size,mu_entropy,limit_mass,fair_share,ratio\n";
    for (std::size_t i = 0; i < dec.ergodicClasses.size(); ++i) {
        const auto &cls = dec.ergodicClasses[i];
        const double mass = limit.perClassMass[i];
        double entropy = 0.0;
        for (node u : cls) {
            const double mu = limit.values[u] / mass;
            if (mu > 0.0)
                entropy -= mu * std::log(mu);
        }
        const double fair = static_cast<double>(cls.size()) / n;
        out << 'Q' << i + 1 << ',' << cls.size() << ',' << formatDouble(entropy) << ','
            << formatDouble(mass) << ',' << formatDouble(fair) << ',' << formatDouble(mass / fair)
            << '\n';
    }
}

namespace {

struct Row {
    std::string v, bound;
    double value;
};

std::vector<Row> reportRows(const std::vector<DampingReport> &reports) {
    std::vector<Row> rows;
    for (const auto &r : reports) {
        const std::string v = toString(r.choice);
        rows.push_back({v, r.lowerName, r.lowerBound});
        rows.push_back({v, r.upperName, r.upperBound});
        rows.push_back({v, "c_star", r.cStar});
    }
    return rows;
}

std::vector<Row> boundRows(const DampingBounds &b, double p1, double lambda1) {
    return {{"quasi_stationary", "c1", b.c1},
            {"quasi_stationary", "c2", b.c2},
            {"uniform", "c3", b.c3},
            {"uniform", "c4", b.c4},
            {"normalized_pagerank", "1/(1+lambda1)", 1.0 / (1.0 + lambda1)},
            {"normalized_pagerank", "1/(1+p1)", 1.0 / (1.0 + p1)}};
}

void writeRows(std::ostream &out, const std::vector<Row> &rows) {
    out << "v,bound,value\n";
    for (const auto &r : rows)
        out << r.v << ',' << r.bound << ',' << formatDouble(r.value) << '\n';
}

void printRows(std::ostream &out, const std::vector<Row> &rows) {
    out << std::left << std::setw(22) << "v" << std::setw(16) << "c" << "value\n";
    std::string last;
    for (const auto &r : rows) {
        char value[32];
        std::snprintf(value, sizeof value, "%.4f", r.value);
        out << std::setw(22) << (r.v == last ? "" : r.v) << std::setw(16) << r.bound << value
            << '\n';
        last = r.v;
    }
}

} // namespace

void writeDampingReports(std::ostream &out, const std::vector<DampingReport> &reports) {
    writeRows(out, reportRows(reports));
}

void writeDampingBounds(std::ostream &out, const DampingBounds &b, double p1, double lambda1) {
    writeRows(out, boundRows(b, p1, lambda1));
}

void printDampingReports(std::ostream &out, const std::vector<DampingReport> &reports) {
    printRows(out, reportRows(reports));
    for (const auto &r : reports) {
        out << toString(r.choice) << ": bound hypotheses "
            << (r.hypotheses.hold() ? "hold" : "not established");
        if (r.degenerate)
            out << " (degenerate: lambda1 = 1)";
        out << '\n';
    }
}

void printDampingBounds(std::ostream &out, const DampingBounds &b, double p1, double lambda1) {
    printRows(out, boundRows(b, p1, lambda1));
}

} // namespace webrank::csv
