#pragma once

#include <webrank/graph.hpp>
#include <webrank/structure.hpp>

#include <cstddef>
#include <vector>

namespace webrank {

/// Stationary distribution of P restricted to ergodic class @a i (0-based), by lazy power iteration.
std::vector<double> classStationary(const WebGraph &graph, const StructureDecomposition &dec,
                                    std::size_t i);

/// Limit mass of one ergodic class and its absorption probabilities.
struct Absorption {
    double classMass = 0.0;          // n_i/n + (1/n) 1^T [I - T~]^{-1} R~_i 1
    std::vector<double> probability; // phi_i over the transient block, ascending node order
};

/**
 * Solves [I - T~] phi = R~_i 1 by Neumann series, where T~ is P on
 * escc + transient Pure OUT. Throws DegenerateStructure when the escc is closed.
 */
Absorption absorptionMass(const WebGraph &graph, const StructureDecomposition &dec, std::size_t i);

/// lim_{c -> 1} pi(c).
struct LimitVector {
    std::vector<double> values;
    std::vector<double> perClassMass;
};

LimitVector limitPagerank(const WebGraph &graph, const StructureDecomposition &dec);

/**
 * The m-class aggregated chain of the c -> 1 limit. generator holds
 * D = M C Q with C = (1/n) 1 1^T - P, evaluated by applying P to each mu_i
 * rather than by forming M or Q.
 */
struct AggregatedChain {
    std::vector<std::vector<double>> classDistributions; // mu_i
    std::vector<std::vector<double>> absorptionVectors;  // phi_i over transientBlock()
    std::vector<double> aggregatedStationary;            // nu, from the row formula
    std::vector<std::vector<double>> generator;          // D, m x m
};

AggregatedChain aggregatedGenerator(const WebGraph &graph, const StructureDecomposition &dec);

/// Row vector 1^T [I - T~]^{-1} over the transient block; the shared ingredient of every nu_i.
std::vector<double> expectedVisits(const WebGraph &graph, const StructureDecomposition &dec);

} // namespace webrank
