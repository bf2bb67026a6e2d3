#include "gridverify/grid.hpp"

#include <numeric>
#include <string>
#include <vector>

#include "gridverify/errors.hpp"

namespace gridverify {

namespace {

// Union-find over bus ids with path halving.
class DisjointSet {
 public:
  explicit DisjointSet(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  bool merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

GridModel::GridModel(std::vector<Bus> buses, std::vector<Line> lines)
    : buses_(std::move(buses)), lines_(std::move(lines)) {
  const int n_total = static_cast<int>(buses_.size());
  if (n_total == 0) throw InvalidInput("grid: no buses");

  for (int i = 0; i < n_total; ++i) {
    Bus& bus = buses_[i];
    if (bus.id != i)
      throw InvalidInput("grid: bus ids must be contiguous 0..N_total-1; got " +
                         std::to_string(bus.id) + " at position " +
                         std::to_string(i));
    if (bus.label.empty()) bus.label = std::to_string(bus.id);
    if (bus.is_substation) substations_.push_back(i);
  }
  if (substations_.empty()) throw InvalidInput("grid: no substation bus");

  reduced_col_.assign(n_total, -1);
  for (int i = 0; i < n_total; ++i) {
    if (!buses_[i].is_substation) {
      reduced_col_[i] = static_cast<int>(reduced_bus_ids_.size());
      reduced_bus_ids_.push_back(i);
    }
  }

  const int le = static_cast<int>(lines_.size());
  for (int l = 0; l < le; ++l) {
    Line& line = lines_[l];
    if (line.id != l)
      throw InvalidInput("grid: line ids must be contiguous 0..Le-1; got " +
                         std::to_string(line.id) + " at position " +
                         std::to_string(l));
    if (line.label.empty()) line.label = std::to_string(line.id);
    if (line.from_bus < 0 || line.from_bus >= n_total || line.to_bus < 0 ||
        line.to_bus >= n_total)
      throw InvalidInput("grid: line " + line.label +
                         " references an unknown bus");
    if (line.from_bus == line.to_bus)
      throw InvalidInput("grid: line " + line.label + " is a self-loop");
    if (!(line.r > 0.0) || !(line.x > 0.0))
      throw InvalidInput("grid: line " + line.label +
                         " must have strictly positive r and x");
    if (line.prior && (*line.prior < 0.0 || *line.prior > 1.0))
      throw InvalidInput("grid: line " + line.label + " prior outside [0,1]");
    reduced_rows_.push_back(
        {reduced_col_[line.from_bus], reduced_col_[line.to_bus]});
  }

  if (le < n())
    throw InvalidInput("grid: fewer candidate lines than non-substation buses");

  // Every bus must be able to reach a substation through candidate lines,
  // or it could never be energized.
  DisjointSet components(n_total);
  for (const Line& line : lines_) components.merge(line.from_bus, line.to_bus);
  const int sub_root = components.find(substations_.front());
  for (int s : substations_) components.merge(sub_root, s);
  for (int i = 0; i < n_total; ++i) {
    if (components.find(i) != components.find(sub_root))
      throw InvalidInput("grid: bus " + buses_[i].label +
                         " cannot reach any substation via candidate lines");
  }
}

Eigen::MatrixXd incidence_full(const GridModel& grid) {
  Eigen::MatrixXd a =
      Eigen::MatrixXd::Zero(grid.line_count(), grid.bus_count());
  for (const Line& line : grid.lines()) {
    a(line.id, line.from_bus) = 1.0;
    a(line.id, line.to_bus) = -1.0;
  }
  return a;
}

Eigen::MatrixXd incidence_reduced(const GridModel& grid) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(grid.line_count(), grid.n());
  for (const Line& line : grid.lines()) {
    const ReducedRow& row = grid.reduced_row(line.id);
    if (row.from_col >= 0) a(line.id, row.from_col) = 1.0;
    if (row.to_col >= 0) a(line.id, row.to_col) = -1.0;
  }
  return a;
}

bool support_rank_ok(const GridModel& grid, const Eigen::VectorXd& b,
                     double tol) {
  if (b.size() != grid.line_count())
    throw LengthMismatch("support_rank_ok: b has length " +
                         std::to_string(b.size()) + ", expected " +
                         std::to_string(grid.line_count()));
  DisjointSet components(grid.bus_count());
  for (const Line& line : grid.lines()) {
    if (b[line.id] > tol) components.merge(line.from_bus, line.to_bus);
  }
  const int sub_root = components.find(grid.substations().front());
  for (int s : grid.substations()) components.merge(sub_root, s);
  for (int bus : grid.reduced_bus_ids()) {
    if (components.find(bus) != components.find(sub_root)) return false;
  }
  return true;
}

}  // namespace gridverify
