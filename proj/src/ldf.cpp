#include "gridverify/ldf.hpp"

#include <string>
#include <utility>

#include "gridverify/errors.hpp"
#include "gridverify/linalg.hpp"

namespace gridverify {

namespace {

void check_b(const GridModel& grid, const Eigen::VectorXd& b) {
  if (b.size() != grid.line_count())
    throw LengthMismatch("ldf: b has length " + std::to_string(b.size()) +
                         ", expected " + std::to_string(grid.line_count()));
}

// a_l as a dense reduced column vector.
Eigen::VectorXd reduced_column(const GridModel& grid, int line) {
  Eigen::VectorXd a = Eigen::VectorXd::Zero(grid.n());
  const ReducedRow& row = grid.reduced_row(line);
  if (row.from_col >= 0) a[row.from_col] = 1.0;
  if (row.to_col >= 0) a[row.to_col] = -1.0;
  return a;
}

SpdFactor factor_or_throw(const Eigen::MatrixXd& h, const char* what) {
  auto f = SpdFactor::compute(h);
  if (!f)
    throw SingularTopology(std::string(what) +
                           ": support factorization failed (disconnected or "
                           "near-singular line indicator)");
  return *std::move(f);
}

}  // namespace

Eigen::MatrixXd weighted_laplacian(const GridModel& grid,
                                   const Eigen::VectorXd& weights) {
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(grid.n(), grid.n());
  for (const Line& line : grid.lines()) {
    const double w = weights[line.id];
    if (w == 0.0) continue;
    const ReducedRow& row = grid.reduced_row(line.id);
    if (row.from_col >= 0) h(row.from_col, row.from_col) += w;
    if (row.to_col >= 0) h(row.to_col, row.to_col) += w;
    if (row.from_col >= 0 && row.to_col >= 0) {
      h(row.from_col, row.to_col) -= w;
      h(row.to_col, row.from_col) -= w;
    }
  }
  return h;
}

LdfMatrices rx_radial(const GridModel& grid, const Eigen::VectorXd& b) {
  check_b(grid, b);
  Eigen::VectorXd wr(grid.line_count());
  Eigen::VectorXd wx(grid.line_count());
  for (const Line& line : grid.lines()) {
    wr[line.id] = 0.5 * b[line.id] / line.r;
    wx[line.id] = 0.5 * b[line.id] / line.x;
  }
  LdfMatrices out;
  out.mode = LdfMode::radial;
  out.R = factor_or_throw(weighted_laplacian(grid, wr), "rx_radial").inverse();
  out.X = factor_or_throw(weighted_laplacian(grid, wx), "rx_radial").inverse();
  return out;
}

namespace {

struct MeshedParts {
  Eigen::MatrixXd g, btilde;  // conductance / susceptance Laplacians
  SpdFactor g_factor, b_factor;
};

MeshedParts meshed_parts(const GridModel& grid, const Eigen::VectorXd& b) {
  check_b(grid, b);
  Eigen::VectorXd wg(grid.line_count());
  Eigen::VectorXd wb(grid.line_count());
  for (const Line& line : grid.lines()) {
    const double z2 = line.r * line.r + line.x * line.x;
    wg[line.id] = b[line.id] * line.r / z2;
    wb[line.id] = b[line.id] * line.x / z2;
  }
  Eigen::MatrixXd g = weighted_laplacian(grid, wg);
  Eigen::MatrixXd bt = weighted_laplacian(grid, wb);
  SpdFactor gf = factor_or_throw(g, "rx_meshed (G)");
  SpdFactor bf = factor_or_throw(bt, "rx_meshed (B)");
  return {std::move(g), std::move(bt), std::move(gf), std::move(bf)};
}

}  // namespace

LdfMatrices rx_meshed(const GridModel& grid, const Eigen::VectorXd& b) {
  MeshedParts parts = meshed_parts(grid, b);
  const Eigen::MatrixXd mr =
      parts.g + parts.btilde * parts.g_factor.solve(parts.btilde);
  const Eigen::MatrixXd mx =
      parts.btilde + parts.g * parts.b_factor.solve(parts.g);
  LdfMatrices out;
  out.mode = LdfMode::meshed;
  out.R = 2.0 * factor_or_throw(mr, "rx_meshed (R)").inverse();
  out.X = 2.0 * factor_or_throw(mx, "rx_meshed (X)").inverse();
  return out;
}

MeshedWorkspace meshed_workspace(const GridModel& grid,
                                 const Eigen::VectorXd& b) {
  MeshedParts parts = meshed_parts(grid, b);
  const Eigen::MatrixXd mr =
      parts.g + parts.btilde * parts.g_factor.solve(parts.btilde);
  const Eigen::MatrixXd mx =
      parts.btilde + parts.g * parts.b_factor.solve(parts.g);
  MeshedWorkspace w;
  w.R = 2.0 * factor_or_throw(mr, "rx_meshed (R)").inverse();
  w.X = 2.0 * factor_or_throw(mx, "rx_meshed (X)").inverse();
  w.RBGi = w.R * parts.g_factor.solve(parts.btilde).transpose();
  w.XGBi = w.X * parts.b_factor.solve(parts.g).transpose();
  return w;
}

std::pair<Eigen::MatrixXd, Eigen::MatrixXd> drx_radial(
    const GridModel& grid, const Eigen::VectorXd& b, int line) {
  const LdfMatrices ldf = rx_radial(grid, b);
  const Eigen::VectorXd a = reduced_column(grid, line);
  const Eigen::VectorXd ra = ldf.R * a;
  const Eigen::VectorXd xa = ldf.X * a;
  const Line& ln = grid.lines()[line];
  return {(-0.5 / ln.r) * (ra * ra.transpose()),
          (-0.5 / ln.x) * (xa * xa.transpose())};
}

std::pair<Eigen::MatrixXd, Eigen::MatrixXd> drx_meshed_from(
    const MeshedWorkspace& w, const GridModel& grid, int line) {
  const Eigen::VectorXd a = reduced_column(grid, line);
  const Line& ln = grid.lines()[line];
  const double z2 = ln.r * ln.r + ln.x * ln.x;
  const double g = ln.r / z2;
  const double s = ln.x / z2;

  // dR/db_l = -1/2 R dM R with M = G + B G^{-1} B; the rank-2 expansion uses
  // u = R a and z = R B G^{-1} a.
  const Eigen::VectorXd u = w.R * a;
  const Eigen::VectorXd z = w.RBGi * a;
  Eigen::MatrixXd dr = -0.5 * (g * (u * u.transpose() - z * z.transpose()) +
                               s * (u * z.transpose() + z * u.transpose()));

  const Eigen::VectorXd ux = w.X * a;
  const Eigen::VectorXd zx = w.XGBi * a;
  Eigen::MatrixXd dx = -0.5 * (s * (ux * ux.transpose() - zx * zx.transpose()) +
                               g * (ux * zx.transpose() + zx * ux.transpose()));
  return {std::move(dr), std::move(dx)};
}

std::pair<Eigen::MatrixXd, Eigen::MatrixXd> drx_meshed(
    const GridModel& grid, const Eigen::VectorXd& b, int line) {
  return drx_meshed_from(meshed_workspace(grid, b), grid, line);
}

}  // namespace gridverify
