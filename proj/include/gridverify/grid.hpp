#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace gridverify {

struct Bus {
  int id = 0;
  bool is_substation = false;
  std::string label;  // identifier from the input file; defaults to the id
};

struct Line {
  int id = 0;  // index into the line indicator vector b
  int from_bus = 0;
  int to_bus = 0;
  double r = 0.0;  // per-unit resistance, strictly positive
  double x = 0.0;  // per-unit reactance, strictly positive
  std::optional<double> prior;  // probability the line is energized
  std::string label;
};

/// Sparse view of one row of the reduced incidence matrix: column index of
/// each endpoint, or -1 when the endpoint is a substation (column dropped).
/// The from endpoint carries +1, the to endpoint -1.
struct ReducedRow {
  int from_col = -1;
  int to_col = -1;
};

/// Candidate line infrastructure. Immutable after construction; constructor
/// validates ids, impedances, priors, and that every bus can reach a
/// substation through candidate lines.
class GridModel {
 public:
  GridModel(std::vector<Bus> buses, std::vector<Line> lines);

  int bus_count() const { return static_cast<int>(buses_.size()); }
  int line_count() const { return static_cast<int>(lines_.size()); }
  /// Number of non-substation buses.
  int n() const { return static_cast<int>(reduced_bus_ids_.size()); }

  const std::vector<Bus>& buses() const { return buses_; }
  const std::vector<Line>& lines() const { return lines_; }
  const std::vector<int>& substations() const { return substations_; }

  /// Reduced-matrix column of a bus, -1 for substations.
  int reduced_col(int bus_id) const { return reduced_col_[bus_id]; }
  /// Bus id behind each reduced column, in column order.
  const std::vector<int>& reduced_bus_ids() const { return reduced_bus_ids_; }
  const ReducedRow& reduced_row(int line_id) const {
    return reduced_rows_[line_id];
  }

 private:
  std::vector<Bus> buses_;
  std::vector<Line> lines_;
  std::vector<int> substations_;
  std::vector<int> reduced_col_;
  std::vector<int> reduced_bus_ids_;
  std::vector<ReducedRow> reduced_rows_;
};

/// Branch-bus incidence over all candidate lines: +1 at from_bus, -1 at
/// to_bus. Every row sums to zero.
Eigen::MatrixXd incidence_full(const GridModel& grid);

/// Incidence with all substation columns dropped; columns follow
/// non-substation bus id order.
Eigen::MatrixXd incidence_reduced(const GridModel& grid);

/// True iff the lines with b[l] > tol connect every non-substation bus to
/// some substation, i.e. the reduced incidence restricted to the support has
/// full column rank. Implemented as an exact union-find connectivity check.
bool support_rank_ok(const GridModel& grid, const Eigen::VectorXd& b,
                     double tol = 1e-9);

}  // namespace gridverify
