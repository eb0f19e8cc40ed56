#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "nipa/attack_solution.hpp"
#include "nipa/graph.hpp"

namespace nipa {

/// Fraction of the original N nodes in the largest cluster after the attack.
double s_of_q(const Graph& g, const AttackSolution& solution);

struct CurvePoint {
    std::size_t removed = 0;  // Q
    double q = 0.0;
    double s = 0.0;

    friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

/// S(Q) samples of one strategy on one graph. Q strictly increasing; S need
/// not be monotone unless the attack sets are nested.
struct AttackCurve {
    std::string strategy;
    std::uint64_t seed = 0;
    std::size_t n = 0;
    std::vector<CurvePoint> points;

    /// Appends (Q, S); throws InvalidCurve if Q does not increase or S is outside [0, 1].
    void add(std::size_t removed, double s);
    /// True when the points are exactly Q = 0, 1, ..., N.
    bool complete() const;

    friend bool operator==(const AttackCurve&, const AttackCurve&) = default;
};

/// R = sum_{Q=0..N} S(Q) / (N + 1). Requires a complete curve.
double robustness_r(const AttackCurve& curve);

/// R from a coarse curve spanning Q = 0 and Q = N, with missing Q filled by
/// linear interpolation between neighbouring samples. Equals robustness_r on
/// complete curves.
double robustness_r_interpolated(const AttackCurve& curve);

enum class CollapseCriterion {
    Kappa,          // kappa <= 2
    SizeThreshold,  // S <= s_min
};

struct CollapseOptions {
    CollapseCriterion criterion = CollapseCriterion::Kappa;
    double s_min = 0.05;
    /// Hand the previous Q's solution to the strategy for extension.
    bool warm_start = false;
};

bool collapsed(const Graph& g, const AttackSolution& solution, const CollapseOptions& options);

/// Produces the strategy's attack set for a given Q. `previous` is the
/// solution at Q - 1 in warm-start mode, otherwise null.
using AttackFunction = std::function<AttackSolution(std::size_t removed, const AttackSolution* previous)>;

struct CriticalFraction {
    double qc = 1.0;
    std::size_t removed = 0;
    AttackSolution solution;
    AttackCurve curve;  // every Q evaluated on the way, from Q = 0
};

/// Smallest q = Q/N whose attack leaves a collapsed network, scanning Q = 0, 1, ...
/// Q = 0 is reported when the intact graph already qualifies.
CriticalFraction critical_fraction(const Graph& g, const AttackFunction& strategy,
                                   const CollapseOptions& options = {});

/// CSV with header `strategy,seed,N,Q,q,S`.
void write_curves_csv(std::span<const AttackCurve> curves, std::ostream& out);
std::vector<AttackCurve> read_curves_csv(std::istream& in);

}  // namespace nipa
