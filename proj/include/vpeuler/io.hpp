#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "vpeuler/entropy.hpp"
#include "vpeuler/fv_oracle.hpp"
#include "vpeuler/limit_analysis.hpp"
#include "vpeuler/wave_fan.hpp"

namespace vpeuler {

enum class OutputFormat { csv, json };

/// Key-value run description echoed into every output file.
using Meta = std::vector<std::pair<std::string, std::string>>;

/// Uniform sampling grid of a profile: n points across [x_min, x_max] at
/// fixed time t.
struct SampleGrid {
    double t = 1.0;
    double x_min = -1.0;
    double x_max = 1.0;
    int n = 201;
};

struct ProfileRow {
    double x = 0.0;
    double t = 0.0;
    double u = 0.0;
    double rho = 0.0;
    std::string region_tag;  // "<kind>:<segment index>"
};

std::vector<ProfileRow> build_profile(const WaveFan& fan,
                                      const SampleGrid& grid);

/// Sampled profile. CSV columns: x,t,u,rho,region_tag; fans containing
/// delta waves append a side-table speed,w0,carried_u. JSON mirrors the
/// schema under keys {meta, profile, waves}.
void emit_profile(std::ostream& os, const WaveFan& fan, const SampleGrid& grid,
                  OutputFormat format, const Meta& meta);

/// Wave-structure table only ({meta, waves} in JSON).
void emit_waves(std::ostream& os, const WaveFan& fan, OutputFormat format,
                const Meta& meta);

/// Sweep table. CSV header (bit-exact):
/// eps,u_star,log_rho_star,eps_p_rho_star,s1,s2,d_coeff,err_u,err_l,err_w
void emit_sweep(std::ostream& os, const std::vector<SweepRecord>& records,
                OutputFormat format, const Meta& meta);

/// Entropy-production table:
/// eps,production1,production2,total,cross_term,err_total
void emit_entropy(std::ostream& os,
                  const std::vector<EntropySweepRecord>& records,
                  OutputFormat format, const Meta& meta);

/// Limit descriptor: kind,speed,w0,carried_u.
void emit_limit(std::ostream& os, const LimitSolution& limit,
                OutputFormat format, const Meta& meta);

/// Finite-volume cells against the exact profile, plus error summary.
void emit_oracle(std::ostream& os, const GridSolution& sol,
                 const WaveFan& exact, OutputFormat format, const Meta& meta);

/// 17-significant-digit decimal form (round-trips double exactly).
std::string format_double(double v);

}  // namespace vpeuler
