#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qwalk/coin.hpp"

namespace qwalk {

// One paired comparison between a finite-time quantity and its predicted
// value. `statement` names the limit statement the row instantiates:
// g-moment, Thm2-R, Thm2-I, Lemma1, LemA1-r0, LemA1-r, ThmA2-R, ThmA2-I,
// or "evidence" for the plumbing scenarios (localization floor, cross-term
// decay).
struct ReportRow {
  std::string id;
  std::string statement;
  cplx finite{0.0, 0.0};
  cplx limit{0.0, 0.0};
  double abs_error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct ConvergencePoint {
  long t = 0;
  double abs_error = 0.0;
};

struct ComparisonReport {
  std::string scenario;
  std::vector<ReportRow> rows;
  std::vector<ConvergencePoint> convergence;
  // Trend flag for sweeps: error at max(t) <= error at min(t), allowing
  // slack of the quadrature tolerance so that values indistinguishable from
  // zero compare as non-increasing.
  std::optional<bool> trend_non_increasing;

  bool all_pass() const;
};

// Finite-t comparison of Theorem 2 (and the g-moments plus the Lemma 1
// relation) for a 2-state walk started at the origin. Requires t >= 100.
ComparisonReport check_theorem2(const CoinSpec& coin, cplx alpha, cplx beta,
                                long t, int r_max, double quad_tol = 1e-10);

// Finite-t comparison of Theorem A.2 plus the Lemma A.1 moment relations and
// the closed-form vs quadrature Delta agreement, Grover walk from the origin.
// Requires t >= 100.
ComparisonReport check_theoremA2(cplx alpha, cplx beta, cplx gamma, long t,
                                 int r_max, double quad_tol = 1e-10);

// Named scenarios runnable from the CLI and the acceptance suite.
//   thm2-fig2           2-state family A, theta = pi/4, (1/sqrt2, i/sqrt2)
//   thmA2-fig45         Grover, (1/sqrt3, i/sqrt3, i/sqrt3)
//   grover-localization min over t in [100,150] of P(X_t = 0) vs the floor
//   crossterm-decay     cross-term magnitude sweep over t = 125..1000
std::vector<std::string> scenario_names();
ComparisonReport run_scenario(const std::string& name, long t = 0,
                              int r_max = 0, double quad_tol = 1e-10);

// Error-vs-t sweep of a single quantity of a named scenario. Quantity ids
// follow the row ids of the scenario report (e.g. "Thm2-I:r=0",
// "g-moment:r=2", "crossterm:r=0"). An empty t list yields an empty report.
ComparisonReport convergence_sweep(const std::string& scenario,
                                   const std::vector<long>& t_list,
                                   const std::string& quantity_id,
                                   double quad_tol = 1e-10);

// JSON serialization: {scenario, rows[], convergence[]} with every floating
// value rendered as a decimal string with 17 significant digits.
std::string report_to_json(const ComparisonReport& report);

// Writes report JSON without mutating prior files (numbered sibling on
// collision); returns the path written.
std::string write_report_json(const ComparisonReport& report,
                              const std::string& path);

// Parse a report file, recomputing each row's abs_error from the stored
// finite and limit values; throws std::runtime_error if the stored error is
// inconsistent with the recomputation.
ComparisonReport load_report_json(const std::string& path);

}  // namespace qwalk
