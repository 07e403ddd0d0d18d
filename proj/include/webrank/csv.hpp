#pragma once

// Report writers. CSV dialect: comma separated, '.' decimal point, one
// header row, LF line endings, doubles in shortest round-trip form.

#include <webrank/damping.hpp>
#include <webrank/pagerank.hpp>
#include <webrank/perturbation.hpp>
#include <webrank/spectral.hpp>
#include <webrank/structure.hpp>

#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace webrank::csv {

std::string formatDouble(double value);

void writeCensus(std::ostream &out, const Census &c);
void writePureOutHistogram(std::ostream &out, const std::vector<std::pair<node, count>> &rows);
void writeDecomposition(std::ostream &out, const StructureDecomposition &dec);

void writePagerank(std::ostream &out, const PageRankVector &pr);
void writeFairness(std::ostream &out, const std::vector<FairnessRow> &rows);

/// c, mass, lower_bound, upper_bound, truncation_bound, r_of_c over the grid.
void writeMassCurve(std::ostream &out, const MassCurve &curve, const SpectralSummary &spec,
                    std::span<const double> grid);

/// k, a_k, lambda_k (lambda_0 left empty).
void writeCoefficients(std::ostream &out, const MassCurve &curve);

/// class_id, size, mu_entropy, limit_mass, fair_share, ratio.
void writeClassMasses(std::ostream &out, const StructureDecomposition &dec, const LimitVector &limit);

/// v, bound, value.
void writeDampingReports(std::ostream &out, const std::vector<DampingReport> &reports);
void writeDampingBounds(std::ostream &out, const DampingBounds &b, double p1, double lambda1);

/// Aligned text tables in the same layout.
void printDampingReports(std::ostream &out, const std::vector<DampingReport> &reports);
void printDampingBounds(std::ostream &out, const DampingBounds &b, double p1, double lambda1);

} // namespace webrank::csv
