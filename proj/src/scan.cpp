#include "pendsim/scan.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <optional>
#include <thread>

namespace pendsim {

namespace {

constexpr double kEscalationW = 10.0;     // converge_jmax kicks in above this
constexpr double kEscalationTol = 1e-10;  // tolerance handed to converge_jmax

double parse_double(const std::string& text, const std::string& what) {
  try {
    size_t used = 0;
    double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(what + ": cannot parse number '" + text + "'");
  }
}

int effective_jmax(double w, int jmax) {
  if (w <= kEscalationW) return jmax;
  return std::max(jmax, converge_jmax(w, kEscalationTol));
}

void check_finite_axis(const AxisSpec& axis, const std::string& name) {
  if (!std::isfinite(axis.lo) || !std::isfinite(axis.hi)) {
    throw ConfigError(name + ": bounds must be finite");
  }
  if (axis.count < 1) throw ConfigError(name + ": count must be >= 1");
  if (axis.is_range() && axis.count < 2) throw ConfigError(name + ": range count must be >= 2");
}

void check_nonnegative_axis(const AxisSpec& axis, const std::string& name) {
  if (axis.lo < 0.0 || axis.hi < 0.0) throw ConfigError(name + ": values must be >= 0");
}

void validate(const ScanConfig& cfg, bool for_limit) {
  if (cfg.n != 2 && cfg.n != 3) throw ConfigError("n must be 2 or 3");

  const bool named3 = cfg.initial.kind != InitialStateSpec::Kind::amplitudes;
  if (named3 && cfg.n != 3) throw ConfigError("initial state '" + cfg.initial.label() + "' needs n = 3");
  if (!named3 && cfg.n != 2) throw ConfigError("amplitude initial state needs n = 2");

  if (cfg.observable == Observable::negativity3 && cfg.n != 3) {
    throw ConfigError("negativity3 needs n = 3");
  }
  if (cfg.observable == Observable::fidelity && cfg.n != 2) {
    throw ConfigError("fidelity needs n = 2");
  }

  check_finite_axis(cfg.gamma, "gamma");
  check_finite_axis(cfg.w, "w");
  check_finite_axis(cfg.omega, "omega");
  check_nonnegative_axis(cfg.gamma, "gamma");
  check_nonnegative_axis(cfg.w, "w");
  check_nonnegative_axis(cfg.omega, "omega");

  const int ranges = (cfg.gamma.is_range() ? 1 : 0) + (cfg.w.is_range() ? 1 : 0) +
                     (cfg.omega.is_range() ? 1 : 0);
  if (ranges > 1) throw ConfigError("at most one of gamma/w/omega may be a range");

  if (cfg.alpha < 0.0 || cfg.alpha > 3.14159265358979323846 + 1e-12) {
    throw ConfigError("alpha must lie in [0, pi]");
  }
  if (cfg.jmax < 2 || cfg.jmax > kMaxJmax) {
    throw ConfigError("jmax must lie in [2, " + std::to_string(kMaxJmax) + "]");
  }
  if (cfg.threads < 0) throw ConfigError("threads must be >= 0");

  if (for_limit) {
    if (ranges != 0) throw ConfigError("limit takes fixed parameters only");
    if (!(cfg.gamma.lo > 0.0)) throw ConfigError("limit needs gamma > 0");
    if (cfg.observable == Observable::populations) {
      throw ConfigError("populations is not a scalar observable; use a scan");
    }
  } else {
    check_finite_axis(cfg.t_grid, "t");
    check_nonnegative_axis(cfg.t_grid, "t");
  }
}

DensityMatrix resolve_rho_in(RhoIn kind, const DensityMatrix& rho0) {
  switch (kind) {
    case RhoIn::initial:
      return rho0;
    case RhoIn::psi_minus:
      return DensityMatrix::pure(bell_states()[0]);
    case RhoIn::phi_plus:
      return DensityMatrix::pure(bell_states()[2]);
  }
  throw ConfigError("unknown rho_in kind");
}

double scalar_observable(Observable obs, const DensityMatrix& rho,
                         const DensityMatrix& rho_in) {
  switch (obs) {
    case Observable::negativity3:
      return tripartite_negativity(rho);
    case Observable::fidelity:
      return teleport_fidelity(rho, rho_in);
    case Observable::purity:
      return (rho.matrix() * rho.matrix()).trace().real();
    default:
      throw std::logic_error("scalar_observable: not a scalar observable");
  }
}

void check_bounds(Observable obs, double value) {
  if (!std::isfinite(value)) throw std::logic_error("scan produced a non-finite value");
  if (obs == Observable::negativity3 || obs == Observable::fidelity) {
    if (value < 0.0 || value > 1.0 + 1e-9) {
      throw std::logic_error("scan value " + std::to_string(value) + " outside [0, 1]");
    }
  }
}

}  // namespace

std::string observable_name(Observable o) {
  switch (o) {
    case Observable::negativity3: return "negativity3";
    case Observable::fidelity: return "fidelity";
    case Observable::purity: return "purity";
    case Observable::populations: return "populations";
  }
  return "?";
}

Observable parse_observable(const std::string& text) {
  if (text == "negativity3") return Observable::negativity3;
  if (text == "fidelity") return Observable::fidelity;
  if (text == "purity") return Observable::purity;
  if (text == "populations") return Observable::populations;
  throw ConfigError("unknown observable '" + text + "'");
}

RhoIn parse_rho_in(const std::string& text) {
  if (text == "initial") return RhoIn::initial;
  if (text == "psi-") return RhoIn::psi_minus;
  if (text == "phi+") return RhoIn::phi_plus;
  throw ConfigError("unknown rho-in '" + text + "' (expected psi-|phi+|initial)");
}

InitialStateSpec InitialStateSpec::amplitudes(double a, double b) {
  InitialStateSpec spec{Kind::amplitudes, a, b};
  if (std::abs(a * a + b * b - 1.0) > 1e-12) {
    throw ConfigError("amplitudes must satisfy a^2 + b^2 = 1 (got " +
                      format_significant(a * a + b * b) + ")");
  }
  return spec;
}

InitialStateSpec InitialStateSpec::parse(const std::string& text) {
  if (text == "ghz") return ghz();
  if (text == "w") return w();
  if (text == "sep001") return sep001();
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw ConfigError("unknown initial state '" + text + "' (expected ghz|w|sep001|a,b)");
  }
  const double a = parse_double(text.substr(0, comma), "initial");
  const double b = parse_double(text.substr(comma + 1), "initial");
  return amplitudes(a, b);
}

std::string InitialStateSpec::label() const {
  switch (kind) {
    case Kind::ghz: return "ghz";
    case Kind::w_state: return "w";
    case Kind::sep001: return "sep001";
    case Kind::amplitudes:
      return format_significant(a) + ":" + format_significant(b);
  }
  return "?";
}

AxisSpec AxisSpec::parse(const std::string& text) {
  const auto first = text.find(':');
  if (first == std::string::npos) return fixed(parse_double(text, "axis"));
  const auto second = text.find(':', first + 1);
  if (second == std::string::npos || text.find(':', second + 1) != std::string::npos) {
    throw ConfigError("axis '" + text + "' must be <v> or <lo>:<hi>:<count>");
  }
  const double lo = parse_double(text.substr(0, first), "axis lo");
  const double hi = parse_double(text.substr(first + 1, second - first - 1), "axis hi");
  const double count_raw = parse_double(text.substr(second + 1), "axis count");
  const int count = static_cast<int>(count_raw);
  if (count_raw != count || count < 1) {
    throw ConfigError("axis count must be a positive integer in '" + text + "'");
  }
  if (count == 1) return fixed(lo);
  return range(lo, hi, count);
}

double AxisSpec::at(int i) const {
  if (i < 0 || i >= count) throw std::out_of_range("AxisSpec::at");
  if (count == 1) return lo;
  if (i == count - 1) return hi;
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
}

DensityMatrix initial_state(const InitialStateSpec& spec, int n) {
  const bool named3 = spec.kind != InitialStateSpec::Kind::amplitudes;
  if (named3 && n != 3) {
    throw ConfigError("initial state '" + spec.label() + "' needs n = 3");
  }
  if (!named3 && n != 2) {
    throw ConfigError("amplitude initial state needs n = 2");
  }
  switch (spec.kind) {
    case InitialStateSpec::Kind::ghz: {
      ComplexVector psi = ComplexVector::Zero(8);
      psi[0] = 1.0;
      psi[7] = 1.0;
      return DensityMatrix::pure(psi);
    }
    case InitialStateSpec::Kind::w_state: {
      ComplexVector psi = ComplexVector::Zero(8);
      psi[1] = 1.0;
      psi[2] = 1.0;
      psi[4] = 1.0;
      return DensityMatrix::pure(psi);
    }
    case InitialStateSpec::Kind::sep001: {
      ComplexVector psi = ComplexVector::Zero(8);
      psi[1] = 1.0;
      return DensityMatrix::pure(psi);
    }
    case InitialStateSpec::Kind::amplitudes: {
      if (std::abs(spec.a * spec.a + spec.b * spec.b - 1.0) > 1e-12) {
        throw ConfigError("amplitudes must satisfy a^2 + b^2 = 1");
      }
      ComplexVector psi = ComplexVector::Zero(4);
      psi[1] = spec.a;  // |01>
      psi[2] = spec.b;  // |10>
      return DensityMatrix::pure(psi);
    }
  }
  throw ConfigError("unknown initial state kind");
}

std::vector<ScanRecord> run_scan(const ScanConfig& cfg) {
  validate(cfg, /*for_limit=*/false);

  const AxisSpec* sweep = nullptr;
  if (cfg.gamma.is_range()) sweep = &cfg.gamma;
  if (cfg.w.is_range()) sweep = &cfg.w;
  if (cfg.omega.is_range()) sweep = &cfg.omega;
  const int sweep_count = sweep ? sweep->count : 1;
  const int t_count = cfg.t_grid.count;
  const int per_point = cfg.observable == Observable::populations ? (1 << cfg.n) : 1;

  const DensityMatrix rho0 = initial_state(cfg.initial, cfg.n);
  const std::optional<DensityMatrix> rho_in =
      cfg.observable == Observable::fidelity
          ? std::optional<DensityMatrix>(resolve_rho_in(cfg.rho_in, rho0))
          : std::nullopt;
  const std::string initial_label = cfg.initial.label();
  const std::string observable_label = observable_name(cfg.observable);

  // The molecule solve and the chain assembly only depend on (w, omega);
  // hoist whichever is not being swept.
  std::optional<PendularQubit> fixed_qubit;
  if (!cfg.w.is_range()) fixed_qubit = solve_qubit(cfg.w.lo, effective_jmax(cfg.w.lo, cfg.jmax));
  std::optional<SystemHamiltonian> fixed_system;
  if (fixed_qubit && !cfg.omega.is_range()) {
    fixed_system = build_hamiltonian(*fixed_qubit, {cfg.n, cfg.omega.lo, cfg.alpha});
  }

  std::vector<ScanRecord> records(static_cast<size_t>(sweep_count) * t_count * per_point);

  auto run_point = [&](int s) {
    const double gamma = cfg.gamma.is_range() ? cfg.gamma.at(s) : cfg.gamma.lo;
    const double w = cfg.w.is_range() ? cfg.w.at(s) : cfg.w.lo;
    const double omega = cfg.omega.is_range() ? cfg.omega.at(s) : cfg.omega.lo;

    const PendularQubit qubit =
        fixed_qubit ? *fixed_qubit : solve_qubit(w, effective_jmax(w, cfg.jmax));
    const SystemHamiltonian system =
        fixed_system ? *fixed_system : build_hamiltonian(qubit, {cfg.n, omega, cfg.alpha});
    const MilburnPropagator prop(system.spectral, gamma);

    for (int ti = 0; ti < t_count; ++ti) {
      const double t = cfg.t_grid.at(ti);
      const DensityMatrix rho_t = evolve(rho0, prop, t);
      const size_t base = (static_cast<size_t>(s) * t_count + ti) * per_point;
      if (cfg.observable == Observable::populations) {
        for (int k = 0; k < per_point; ++k) {
          const double value = rho_t.matrix()(k, k).real();
          check_bounds(cfg.observable, value);
          records[base + k] = ScanRecord{initial_label, gamma,
                                         w,             omega,
                                         cfg.alpha,     t,
                                         "pop" + std::to_string(k), value};
        }
      } else {
        const double value = scalar_observable(cfg.observable, rho_t, rho_in ? *rho_in : rho0);
        check_bounds(cfg.observable, value);
        records[base] = ScanRecord{initial_label, gamma,     w,    omega,
                                   cfg.alpha,     t,         observable_label, value};
      }
    }
  };

  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  const int n_threads =
      std::min<int>(cfg.threads > 0 ? cfg.threads : static_cast<int>(hw), sweep_count);

  if (n_threads <= 1) {
    for (int s = 0; s < sweep_count; ++s) run_point(s);
  } else {
    std::atomic<int> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto worker = [&] {
      for (int s = next.fetch_add(1); s < sweep_count; s = next.fetch_add(1)) {
        try {
          run_point(s);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
          return;
        }
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (int k = 0; k < n_threads; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
  }
  return records;
}

double long_time_value(const ScanConfig& cfg) {
  validate(cfg, /*for_limit=*/true);

  const DensityMatrix rho0 = initial_state(cfg.initial, cfg.n);
  const PendularQubit qubit = solve_qubit(cfg.w.lo, effective_jmax(cfg.w.lo, cfg.jmax));
  const SystemHamiltonian system = build_hamiltonian(qubit, {cfg.n, cfg.omega.lo, cfg.alpha});
  const MilburnPropagator prop(system.spectral, cfg.gamma.lo);
  const DensityMatrix rho_inf = dephased_limit(rho0, prop);
  const DensityMatrix rho_in =
      cfg.observable == Observable::fidelity ? resolve_rho_in(cfg.rho_in, rho0) : rho0;
  const double value = scalar_observable(cfg.observable, rho_inf, rho_in);
  check_bounds(cfg.observable, value);
  return value;
}

std::string format_significant(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

void write_csv(const std::vector<ScanRecord>& records, const std::string& path) {
  if (records.empty()) {
    throw std::invalid_argument("write_csv: refusing to write an empty record set");
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("write_csv: cannot open '" + path + "'");
  out << "# pendular-sim v1\n";
  out << "initial,gamma,w,omega,alpha,t,observable,value\n";
  for (const ScanRecord& r : records) {
    out << r.initial << ',' << format_significant(r.gamma) << ',' << format_significant(r.w)
        << ',' << format_significant(r.omega) << ',' << format_significant(r.alpha) << ','
        << format_significant(r.t) << ',' << r.observable << ',' << format_significant(r.value)
        << '\n';
  }
  out.flush();
  if (!out) throw std::runtime_error("write_csv: write failed for '" + path + "'");
}

}  // namespace pendsim
