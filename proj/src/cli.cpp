#include "qdmaps/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

#include "qdmaps/mapfile.hpp"

namespace qdmaps::cli {

namespace {

const char* bool_name(bool b) { return b ? "true" : "false"; }

void require_positive_tols(const RunConfig& cfg) {
  if (!(cfg.cp_tol > 0.0)) throw InvalidConfig("cp-tol must be > 0");
  if (!(cfg.singular_tol > 0.0)) throw InvalidConfig("singular-tol must be > 0");
}

// Temp file + rename: the output path either holds the previous content or
// the complete new file, never a truncated one.
void write_text_atomic(const std::string& path, const std::string& text) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw IOError("cannot open '" + tmp + "' for writing");
    os << text;
    os.flush();
    if (!os) throw IOError("write to '" + tmp + "' failed");
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw IOError("cannot move '" + tmp + "' to '" + path + "'");
}

}  // namespace

std::string fmt12(double x) {
  if (std::isnan(x)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::string(buf);
}

std::vector<double> linspace(double t_start, double t_end, int steps) {
  if (steps < 2) throw InvalidConfig("steps must be >= 2");
  if (!(t_start >= 0.0)) throw InvalidConfig("t-start must be >= 0");
  if (!(t_end > t_start)) throw InvalidConfig("t-end must exceed t-start");
  std::vector<double> grid(static_cast<std::size_t>(steps));
  const double h = (t_end - t_start) / (steps - 1);
  for (int i = 0; i < steps; ++i) grid[static_cast<std::size_t>(i)] = t_start + h * i;
  grid.back() = t_end;
  return grid;
}

PFunction make_pfunction(const RunConfig& cfg) {
  if (cfg.model == "werner-exp") return PFunction::exponential(cfg.alpha);
  if (cfg.model == "werner-stretched") return PFunction::stretched(cfg.alpha, cfg.beta);
  if (cfg.model == "werner-cospower") return PFunction::cospower(cfg.a, cfg.n);
  throw InvalidConfig("model '" + cfg.model + "' has no p(t) family");
}

ModelFamily make_family(const RunConfig& cfg) {
  if (cfg.model == "spinstar") return ModelFamily::spinstar(SpinStarModel{cfg.g, cfg.n});
  if (cfg.model == "sigmazx") return ModelFamily::sigmazx(SigmaZXModel{cfg.omega});
  if (cfg.model == "werner-exp" || cfg.model == "werner-stretched" ||
      cfg.model == "werner-cospower")
    return ModelFamily::werner(make_pfunction(cfg));
  throw InvalidConfig("unknown model '" + cfg.model + "'");
}

int run_check(const RunConfig& cfg, std::ostream& os) {
  try {
    require_positive_tols(cfg);
    if (cfg.map_file.empty()) throw InvalidConfig("check requires a map file");
    const MapFile mf = read_map_file(cfg.map_file);
    const MapDiagnostics diag = diagnose(mf.as_amap(), cfg.cp_tol, 10000, cfg.seed);
    os << "d " << mf.d << "\n";
    os << "kind " << (mf.kind == MapKind::A ? "A" : "B") << "\n";
    os << "tp_defect " << fmt12(diag.tp_defect) << "\n";
    os << "herm_defect " << fmt12(diag.herm_defect) << "\n";
    os << "min_choi_eig " << fmt12(diag.min_choi_eig) << "\n";
    os << "block_pos_min " << fmt12(diag.block_pos_min) << "\n";
    os << "tp " << bool_name(diag.is_tp) << "\n";
    os << "cp " << bool_name(diag.is_cp) << "\n";
    os << "verdict " << (diag.is_cp ? "CP" : "NCP") << "\n";
    return diag.is_cp ? 0 : 2;
  } catch (const Error& e) {
    os << "error: " << e.what() << "\n";
    return 1;
  }
}

int run_model(const RunConfig& cfg, std::ostream& os) {
  try {
    require_positive_tols(cfg);
    if (cfg.out.empty()) throw InvalidConfig("model requires --out");
    const ModelFamily fam = make_family(cfg);
    if (cfg.t1 && cfg.t2) {
      if (!(*cfg.t1 >= 0.0) || !(*cfg.t2 > *cfg.t1))
        throw InvalidConfig("model intermediate needs t2 > t1 >= 0");
      const BMap b = fam.intermediate_bmap_at(*cfg.t1, *cfg.t2, cfg.singular_tol);
      write_map_file(cfg.out, b);
      os << "wrote " << cfg.out << " (B map, d=" << b.d << ")\n";
    } else if (cfg.t1) {
      if (!(*cfg.t1 >= 0.0)) throw InvalidConfig("model needs t1 >= 0");
      const AMap a = fam.amap_at(*cfg.t1);
      write_map_file(cfg.out, a);
      os << "wrote " << cfg.out << " (A map, d=" << a.d << ")\n";
    } else {
      throw InvalidConfig("model needs --t1 (map from 0) or --t1 and --t2 (intermediate)");
    }
    return 0;
  } catch (const Error& e) {
    os << "error: " << e.what() << "\n";
    return 1;
  }
}

int run_scan(const RunConfig& cfg, std::ostream& os) {
  try {
    require_positive_tols(cfg);
    if (cfg.out.empty()) throw InvalidConfig("scan requires --out");
    if (!(cfg.t_start > 0.0)) throw InvalidConfig("scan grid must start at t > 0");
    const std::vector<double> grid = linspace(cfg.t_start, cfg.t_end, cfg.steps);
    const ScanResult res = scan_divisibility(make_family(cfg), grid, cfg.cp_tol,
                                             cfg.singular_tol);
    std::string text = "t1,t2,min_choi_eig,cp,semigroup_defect\n";
    bool any_ncp = false;
    for (const ScanRow& row : res.rows) {
      text += fmt12(row.t1);
      text += ',';
      text += fmt12(row.t2);
      text += ',';
      text += fmt12(row.min_choi_eig);
      text += ',';
      if (row.cp) {
        text += bool_name(*row.cp);
        if (!*row.cp) any_ncp = true;
      }
      text += ',';
      text += fmt12(row.semigroup_defect);
      text += '\n';
    }
    write_text_atomic(cfg.out, text);
    os << "wrote " << cfg.out << " (" << res.rows.size() << " pairs, "
       << (any_ncp ? "NCP found" : "all CP") << ")\n";
    return any_ncp ? 2 : 0;
  } catch (const Error& e) {
    os << "error: " << e.what() << "\n";
    return 1;
  }
}

int run_concurrence(const RunConfig& cfg, std::ostream& os) {
  try {
    require_positive_tols(cfg);
    if (cfg.out.empty()) throw InvalidConfig("concurrence requires --out");
    const std::vector<double> grid = linspace(cfg.t_start, cfg.t_end, cfg.steps);
    const ConcurrenceTrajectory traj = concurrence_trajectory(make_pfunction(cfg), grid);
    std::string text = "t,p,concurrence\n";
    for (const ConcurrencePoint& pt : traj.rows) {
      text += fmt12(pt.t);
      text += ',';
      text += fmt12(pt.p);
      text += ',';
      text += fmt12(pt.concurrence);
      text += '\n';
    }
    write_text_atomic(cfg.out, text);
    os << "wrote " << cfg.out << " (" << traj.rows.size() << " samples)\n";
    return 0;
  } catch (const Error& e) {
    os << "error: " << e.what() << "\n";
    return 1;
  }
}

int run_classify(const RunConfig& cfg, std::ostream& os) {
  try {
    require_positive_tols(cfg);
    if (!cfg.t1 || !cfg.t2) throw InvalidConfig("classify requires --t1 and --t2");
    const double t1 = *cfg.t1;
    const double t2 = *cfg.t2;
    if (!(t1 > 0.0) || !(t2 > t1)) throw InvalidConfig("classify needs t2 > t1 > 0");
    const ModelFamily fam = make_family(cfg);
    const AMap a1 = fam.amap_at(t1);
    const AMap a2 = fam.amap_at(t2);
    const double eig1 = min_choi_eigenvalue(a1);
    const double eig2 = min_choi_eigenvalue(a2);
    double eig_int = 0.0;
    try {
      eig_int = min_choi_eigenvalue(intermediate_amap(a2, a1, cfg.singular_tol));
    } catch (const SingularIntermediateMap& e) {
      os << "intermediate undefined at t1 = " << fmt12(t1) << ": " << e.what() << "\n";
      return 1;
    }
    const ClassificationRecord rec =
        classify(eig1 >= -cfg.cp_tol, eig2 >= -cfg.cp_tol, eig_int >= -cfg.cp_tol);
    os << "min_choi_eig_t1 " << fmt12(eig1) << "\n";
    os << "min_choi_eig_t2 " << fmt12(eig2) << "\n";
    os << "min_choi_eig_intermediate " << fmt12(eig_int) << "\n";
    os << "cp_t1 " << bool_name(rec.cp_t1) << "\n";
    os << "cp_t2 " << bool_name(rec.cp_t2) << "\n";
    os << "cp_intermediate "
       << (rec.cp_intermediate ? bool_name(*rec.cp_intermediate) : "absent") << "\n";
    os << "verdict " << verdict_name(rec.verdict) << "\n";
    return rec.verdict == Verdict::Markov ? 0 : 2;
  } catch (const Error& e) {
    os << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace qdmaps::cli
