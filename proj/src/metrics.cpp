#include "nipa/metrics.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include <fmt/format.h>

#include "nipa/error.hpp"

namespace nipa {

double s_of_q(const Graph& g, const AttackSolution& solution) {
    if (solution.size() != g.node_count()) throw InvalidInput("solution length does not match node count");
    if (g.node_count() == 0) return 0.0;
    thread_local ClusterScanner scanner;
    return static_cast<double>(scanner.largest_size(g, solution.mask())) / static_cast<double>(g.node_count());
}

void AttackCurve::add(std::size_t removed, double s) {
    if (!points.empty() && removed <= points.back().removed) {
        throw InvalidCurve("curve points must have strictly increasing Q");
    }
    if (removed > n) throw InvalidCurve("Q exceeds N");
    if (!(s >= 0.0 && s <= 1.0)) throw InvalidCurve("S outside [0, 1]");
    points.push_back({removed, n == 0 ? 0.0 : static_cast<double>(removed) / static_cast<double>(n), s});
}

bool AttackCurve::complete() const {
    if (points.size() != n + 1) return false;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].removed != i) return false;
    }
    return true;
}

double robustness_r(const AttackCurve& curve) {
    if (!curve.complete()) {
        throw InvalidCurve("robustness R needs exactly the points Q = 0..N (N = " + std::to_string(curve.n) +
                           ", got " + std::to_string(curve.points.size()) + ")");
    }
    double sum = 0.0;
    for (const auto& p : curve.points) sum += p.s;
    return sum / static_cast<double>(curve.n + 1);
}

double robustness_r_interpolated(const AttackCurve& curve) {
    const auto& pts = curve.points;
    if (pts.empty() || pts.front().removed != 0 || pts.back().removed != curve.n) {
        throw InvalidCurve("interpolated R needs samples at Q = 0 and Q = N");
    }
    double sum = pts.front().s;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        const auto& a = pts[i - 1];
        const auto& b = pts[i];
        const auto span = static_cast<double>(b.removed - a.removed);
        for (std::size_t q = a.removed + 1; q < b.removed; ++q) {
            const double t = static_cast<double>(q - a.removed) / span;
            sum += a.s + t * (b.s - a.s);
        }
        sum += b.s;
    }
    return sum / static_cast<double>(curve.n + 1);
}

bool collapsed(const Graph& g, const AttackSolution& solution, const CollapseOptions& options) {
    if (solution.attack_count() == g.node_count()) return true;
    if (options.criterion == CollapseCriterion::Kappa) return kappa(g, solution.mask()) <= 2.0;
    return s_of_q(g, solution) <= options.s_min;
}

CriticalFraction critical_fraction(const Graph& g, const AttackFunction& strategy, const CollapseOptions& options) {
    const std::size_t n = g.node_count();
    CriticalFraction result;
    result.curve.n = n;

    AttackSolution current = AttackSolution::all_present(n);
    result.curve.add(0, s_of_q(g, current));
    if (n == 0 || collapsed(g, current, options)) {
        result.qc = 0.0;
        result.solution = current;
        return result;
    }
    for (std::size_t removed = 1; removed <= n; ++removed) {
        current = strategy(removed, options.warm_start ? &current : nullptr);
        if (current.size() != n || current.attack_count() != removed) {
            throw InvalidInput("strategy returned a solution with the wrong attack count");
        }
        result.curve.add(removed, s_of_q(g, current));
        if (collapsed(g, current, options)) {
            result.removed = removed;
            result.qc = static_cast<double>(removed) / static_cast<double>(n);
            result.solution = current;
            return result;
        }
    }
    // unreachable: Q = N always collapses
    throw InvalidInput("critical fraction search did not terminate");
}

void write_curves_csv(std::span<const AttackCurve> curves, std::ostream& out) {
    out << "strategy,seed,N,Q,q,S\n";
    for (const auto& c : curves) {
        for (const auto& p : c.points) {
            out << fmt::format("{},{},{},{},{},{}\n", c.strategy, c.seed, c.n, p.removed, p.q, p.s);
        }
    }
    if (!out) throw IoError("failed writing curve CSV");
}

std::vector<AttackCurve> read_curves_csv(std::istream& in) {
    std::string line;
    std::size_t line_no = 1;
    if (!std::getline(in, line) || line != "strategy,seed,N,Q,q,S") {
        throw ParseError(line_no, "missing curve CSV header");
    }
    std::vector<AttackCurve> curves;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) fields.push_back(field);
        if (fields.size() != 6) throw ParseError(line_no, "expected 6 fields");
        try {
            const std::uint64_t seed = std::stoull(fields[1]);
            const std::size_t n = std::stoull(fields[2]);
            const std::size_t removed = std::stoull(fields[3]);
            const double s = std::stod(fields[5]);
            if (curves.empty() || curves.back().strategy != fields[0] || curves.back().seed != seed ||
                curves.back().n != n) {
                curves.push_back({fields[0], seed, n, {}});
            }
            curves.back().add(removed, s);
        } catch (const InvalidCurve& e) {
            throw ParseError(line_no, e.what());
        } catch (const std::logic_error&) {
            throw ParseError(line_no, "malformed number");
        }
    }
    return curves;
}

}  // namespace nipa
