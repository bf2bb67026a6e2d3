#pragma once

#include <string>

#include <Eigen/Dense>

#include "gridverify/grid.hpp"
#include "gridverify/stats.hpp"

namespace gridverify {

/// Grid CSV with a `#buses` section (bus_id,is_substation) and a `#lines`
/// section (line_id,from,to,r,x[,prior]). Bus and line ids may be arbitrary
/// labels; they are mapped to contiguous indices in file order and kept as
/// labels on the model. Unknown columns are rejected.
GridModel load_grid(const std::string& path);

/// Stats JSON: sigma_p/sigma_q/sigma_pq as diagonal vectors or full
/// matrices, sigma_n2, optional alpha (default: median r/x of the grid).
InjectionStatistics load_stats(const std::string& path, const GridModel& grid);

/// Voltage CSV: one row per timestamp, one column per non-substation bus,
/// per-unit magnitudes. An optional header names the bus labels; columns are
/// reordered to the grid's reduced order.
Eigen::MatrixXd load_voltages(const std::string& path, const GridModel& grid);
void save_voltages(const std::string& path, const GridModel& grid,
                   const Eigen::MatrixXd& raw_magnitudes);

/// Line-status CSV (line_id,status): every candidate line must appear.
Eigen::VectorXd load_line_statuses(const std::string& path,
                                   const GridModel& grid);

/// Prior CSV (line_id,prior); lines absent from the file fall back to the
/// grid-file prior, then to 1/2.
Eigen::VectorXd load_priors(const std::string& path, const GridModel& grid);

/// Priors from the grid file alone (missing -> 1/2).
Eigen::VectorXd grid_priors(const GridModel& grid);

/// FNV-1a hash of the file bytes, as "fnv1a:<hex>".
std::string file_digest(const std::string& path);

}  // namespace gridverify
