#include "vpeuler/io.hpp"

#include <cstdio>
#include <ostream>

#include <json.hpp>

namespace vpeuler {

using nlohmann::json;

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

json meta_json(const Meta& meta) {
    json m = json::object();
    for (const auto& [k, v] : meta) m[k] = v;
    return m;
}

json state_json(const State& s) { return json{{"u", s.u}, {"rho", s.rho}}; }

json wave_json(const Segment& seg) {
    json w;
    w["kind"] = std::string(wave_kind(seg.wave));
    w["xi_lo"] = seg.xi_lo;
    w["xi_hi"] = seg.xi_hi;
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, ConstantSegment>) {
                w["state"] = state_json(v.state);
            } else if constexpr (std::is_same_v<T, ShockSegment>) {
                w["speed"] = v.jump.speed;
                w["family"] = v.jump.family;
                w["left"] = state_json(v.jump.left);
                w["right"] = state_json(v.jump.right);
            } else if constexpr (std::is_same_v<T, RarefactionSegment>) {
                w["family"] = v.family;
                w["outer"] = state_json(v.outer);
                w["inner"] = state_json(v.inner);
            } else if constexpr (std::is_same_v<T, ContactSegment>) {
                w["speed"] = v.speed;
                w["left"] = state_json(v.left);
                w["right"] = state_json(v.right);
            } else if constexpr (std::is_same_v<T, DeltaSegment>) {
                w["speed"] = v.speed;
                w["w0"] = v.weight_coefficient;
                w["carried_u"] = v.carried_u;
                w["eps_correction"] = v.eps_correction;
            }
        },
        seg.wave);
    return w;
}

json waves_json(const WaveFan& fan) {
    json arr = json::array();
    for (const Segment& seg : fan.segments) arr.push_back(wave_json(seg));
    return arr;
}

std::vector<const DeltaSegment*> delta_segments(const WaveFan& fan) {
    std::vector<const DeltaSegment*> out;
    for (const Segment& seg : fan.segments) {
        if (const auto* d = std::get_if<DeltaSegment>(&seg.wave)) {
            out.push_back(d);
        }
    }
    return out;
}

void csv_wave_row(std::ostream& os, const Segment& seg) {
    os << wave_kind(seg.wave) << ',' << format_double(seg.xi_lo) << ','
       << format_double(seg.xi_hi);
    os << '\n';
}

}  // namespace

std::vector<ProfileRow> build_profile(const WaveFan& fan,
                                      const SampleGrid& grid) {
    if (!(grid.t > 0.0)) {
        throw std::domain_error("profile grid: t must be > 0");
    }
    if (grid.n < 2 || !(grid.x_max > grid.x_min)) {
        throw std::domain_error("profile grid: need n >= 2 and x_min < x_max");
    }
    std::vector<ProfileRow> rows;
    rows.reserve(grid.n);
    const double dx = (grid.x_max - grid.x_min) / (grid.n - 1);
    for (int i = 0; i < grid.n; ++i) {
        const double x = grid.x_min + i * dx;
        const SampledPoint p = sample_tagged(fan, x, grid.t);
        rows.push_back(ProfileRow{x, grid.t, p.state.u, p.state.rho,
                                  std::string(p.region) + ":" +
                                      std::to_string(p.segment_index)});
    }
    return rows;
}

void emit_profile(std::ostream& os, const WaveFan& fan, const SampleGrid& grid,
                  OutputFormat format, const Meta& meta) {
    const auto rows = build_profile(fan, grid);
    if (format == OutputFormat::csv) {
        os << "x,t,u,rho,region_tag\n";
        for (const auto& r : rows) {
            os << format_double(r.x) << ',' << format_double(r.t) << ','
               << format_double(r.u) << ',' << format_double(r.rho) << ','
               << r.region_tag << '\n';
        }
        const auto deltas = delta_segments(fan);
        if (!deltas.empty()) {
            os << "\nspeed,w0,carried_u\n";
            for (const auto* d : deltas) {
                os << format_double(d->speed) << ','
                   << format_double(d->weight_coefficient) << ','
                   << format_double(d->carried_u) << '\n';
            }
        }
        return;
    }
    json j;
    j["meta"] = meta_json(meta);
    j["profile"] = json::array();
    for (const auto& r : rows) {
        j["profile"].push_back(json{{"x", r.x},
                                    {"t", r.t},
                                    {"u", r.u},
                                    {"rho", r.rho},
                                    {"region_tag", r.region_tag}});
    }
    j["waves"] = waves_json(fan);
    os << j.dump(2) << '\n';
}

void emit_waves(std::ostream& os, const WaveFan& fan, OutputFormat format,
                const Meta& meta) {
    if (format == OutputFormat::csv) {
        os << "kind,xi_lo,xi_hi\n";
        for (const Segment& seg : fan.segments) csv_wave_row(os, seg);
        const auto deltas = delta_segments(fan);
        if (!deltas.empty()) {
            os << "\nspeed,w0,carried_u\n";
            for (const auto* d : deltas) {
                os << format_double(d->speed) << ','
                   << format_double(d->weight_coefficient) << ','
                   << format_double(d->carried_u) << '\n';
            }
        }
        return;
    }
    json j;
    j["meta"] = meta_json(meta);
    j["waves"] = waves_json(fan);
    os << j.dump(2) << '\n';
}

void emit_sweep(std::ostream& os, const std::vector<SweepRecord>& records,
                OutputFormat format, const Meta& meta) {
    if (records.empty()) {
        throw std::domain_error("emit_sweep: empty record list");
    }
    if (format == OutputFormat::csv) {
        os << "eps,u_star,log_rho_star,eps_p_rho_star,s1,s2,d_coeff,err_u,"
              "err_l,err_w\n";
        for (const auto& r : records) {
            os << format_double(r.eps) << ',' << format_double(r.u_star) << ','
               << format_double(r.log_rho_star) << ','
               << format_double(r.eps_p_rho_star) << ','
               << format_double(r.s1) << ',' << format_double(r.s2) << ','
               << format_double(r.d_coeff) << ',' << format_double(r.err_u)
               << ',' << format_double(r.err_l) << ','
               << format_double(r.err_w) << '\n';
        }
        return;
    }
    json j;
    j["meta"] = meta_json(meta);
    j["records"] = json::array();
    for (const auto& r : records) {
        j["records"].push_back(json{{"eps", r.eps},
                                    {"u_star", r.u_star},
                                    {"log_rho_star", r.log_rho_star},
                                    {"eps_p_rho_star", r.eps_p_rho_star},
                                    {"s1", r.s1},
                                    {"s2", r.s2},
                                    {"d_coeff", r.d_coeff},
                                    {"err_u", r.err_u},
                                    {"err_l", r.err_l},
                                    {"err_w", r.err_w}});
    }
    os << j.dump(2) << '\n';
}

void emit_entropy(std::ostream& os,
                  const std::vector<EntropySweepRecord>& records,
                  OutputFormat format, const Meta& meta) {
    if (records.empty()) {
        throw std::domain_error("emit_entropy: empty record list");
    }
    if (format == OutputFormat::csv) {
        os << "eps,production1,production2,total,cross_term,err_total\n";
        for (const auto& r : records) {
            os << format_double(r.eps) << ',' << format_double(r.production1)
               << ',' << format_double(r.production2) << ','
               << format_double(r.total) << ',' << format_double(r.cross_term)
               << ',' << format_double(r.err_total) << '\n';
        }
        return;
    }
    json j;
    j["meta"] = meta_json(meta);
    j["records"] = json::array();
    for (const auto& r : records) {
        j["records"].push_back(json{{"eps", r.eps},
                                    {"production1", r.production1},
                                    {"production2", r.production2},
                                    {"total", r.total},
                                    {"cross_term", r.cross_term},
                                    {"err_total", r.err_total}});
    }
    os << j.dump(2) << '\n';
}

void emit_limit(std::ostream& os, const LimitSolution& limit,
                OutputFormat format, const Meta& meta) {
    const char* kind = limit.kind == LimitKind::delta_shock ? "delta_shock"
                       : limit.kind == LimitKind::contact   ? "contact"
                                                            : "vacuum";
    if (format == OutputFormat::csv) {
        os << "kind,speed,w0,carried_u\n";
        os << kind << ',' << format_double(limit.delta.speed) << ','
           << format_double(limit.delta.weight_coefficient) << ','
           << format_double(limit.delta.carried_u) << '\n';
        return;
    }
    json j;
    j["meta"] = meta_json(meta);
    j["limit"] = json{{"kind", kind},
                      {"speed", limit.delta.speed},
                      {"w0", limit.delta.weight_coefficient},
                      {"carried_u", limit.delta.carried_u},
                      {"left", state_json(limit.data.left)},
                      {"right", state_json(limit.data.right)}};
    os << j.dump(2) << '\n';
}

void emit_oracle(std::ostream& os, const GridSolution& sol,
                 const WaveFan& exact, OutputFormat format, const Meta& meta) {
    const auto [eu, erho] = compare_l1(exact, sol);
    const auto [nu, nrho] = exact_l1_norms(exact, sol);
    const double eu_rel = eu / (nu + 1e-300);
    const double erho_rel = erho / (nrho + 1e-300);

    if (format == OutputFormat::csv) {
        os << "x,u,rho,u_exact,rho_exact\n";
        for (std::size_t i = 0; i < sol.x.size(); ++i) {
            const State s = sample(exact, sol.x[i], sol.t_end);
            os << format_double(sol.x[i]) << ',' << format_double(sol.u[i])
               << ',' << format_double(sol.rho[i]) << ','
               << format_double(s.u) << ',' << format_double(s.rho) << '\n';
        }
        os << "\nu_l1,rho_l1,u_l1_rel,rho_l1_rel,mass_balance_error,"
              "u_balance_error\n";
        os << format_double(eu) << ',' << format_double(erho) << ','
           << format_double(eu_rel) << ',' << format_double(erho_rel) << ','
           << format_double(sol.mass_balance_error) << ','
           << format_double(sol.u_balance_error) << '\n';
        return;
    }
    json j;
    j["meta"] = meta_json(meta);
    j["cells"] = json::array();
    for (std::size_t i = 0; i < sol.x.size(); ++i) {
        const State s = sample(exact, sol.x[i], sol.t_end);
        j["cells"].push_back(json{{"x", sol.x[i]},
                                  {"u", sol.u[i]},
                                  {"rho", sol.rho[i]},
                                  {"u_exact", s.u},
                                  {"rho_exact", s.rho}});
    }
    j["errors"] = json{{"u_l1", eu},
                       {"rho_l1", erho},
                       {"u_l1_rel", eu_rel},
                       {"rho_l1_rel", erho_rel},
                       {"mass_balance_error", sol.mass_balance_error},
                       {"u_balance_error", sol.u_balance_error}};
    os << j.dump(2) << '\n';
}

}  // namespace vpeuler
