#pragma once

#include <string>
#include <vector>

#include "pendsim/entanglement.hpp"
#include "pendsim/manybody.hpp"
#include "pendsim/milburn.hpp"
#include "pendsim/pendular.hpp"
#include "pendsim/teleport.hpp"

namespace pendsim {

/// Invalid sweep configuration or malformed CLI value.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Observable { negativity3, fidelity, purity, populations };
enum class RhoIn { initial, psi_minus, phi_plus };

std::string observable_name(Observable o);
Observable parse_observable(const std::string& text);
RhoIn parse_rho_in(const std::string& text);

/// Initial pure state: one of the named 3-qubit states, or a|01> + b|10>
/// for the 2-qubit system (a, b real, |a|^2 + |b|^2 = 1 to 1e-12).
struct InitialStateSpec {
  enum class Kind { ghz, w_state, sep001, amplitudes };
  Kind kind = Kind::ghz;
  double a = 0.0;
  double b = 0.0;

  static InitialStateSpec ghz() { return {Kind::ghz}; }
  static InitialStateSpec w() { return {Kind::w_state}; }
  static InitialStateSpec sep001() { return {Kind::sep001}; }
  static InitialStateSpec amplitudes(double a, double b);
  /// "ghz" | "w" | "sep001" | "<a>,<b>"
  static InitialStateSpec parse(const std::string& text);

  std::string label() const;
};

/// One sweep axis: a single value (count == 1) or a uniform grid.
struct AxisSpec {
  double lo = 0.0;
  double hi = 0.0;
  int count = 1;

  static AxisSpec fixed(double v) { return {v, v, 1}; }
  static AxisSpec range(double lo, double hi, int count) { return {lo, hi, count}; }
  /// "<v>" or "<lo>:<hi>:<count>"
  static AxisSpec parse(const std::string& text);

  bool is_range() const { return count > 1; }
  double at(int i) const;
};

struct ScanConfig {
  int n = 3;
  InitialStateSpec initial = InitialStateSpec::ghz();
  AxisSpec gamma = AxisSpec::fixed(0.0);
  AxisSpec w = AxisSpec::fixed(0.0);
  AxisSpec omega = AxisSpec::fixed(0.0);
  double alpha = kDefaultAlpha;
  AxisSpec t_grid = AxisSpec::fixed(0.0);
  Observable observable = Observable::negativity3;
  int jmax = kDefaultJmax;
  RhoIn rho_in = RhoIn::initial;
  int threads = 0;  // 0 = hardware concurrency
};

/// One output row. `observable` repeats the observable name ("pop<k>" rows
/// for populations); `value` is the measured number.
struct ScanRecord {
  std::string initial;
  double gamma = 0.0;
  double w = 0.0;
  double omega = 0.0;
  double alpha = 0.0;
  double t = 0.0;
  std::string observable;
  double value = 0.0;
};

DensityMatrix initial_state(const InitialStateSpec& spec, int n);

/// Evaluate the observable over the full (swept axis) x (time) grid.
/// Records come back in row-major grid order (swept axis outer, time
/// inner, basis index innermost for populations) regardless of how many
/// threads executed the sweep.
std::vector<ScanRecord> run_scan(const ScanConfig& config);

/// Observable on the dephased infinite-time state. All axes must be fixed
/// and gamma > 0; `populations` is not a scalar and is rejected.
double long_time_value(const ScanConfig& config);

/// CSV layout: "# pendular-sim v1", a header line, then one row per
/// record, floats at 12 significant digits. Identical records always
/// produce identical bytes.
void write_csv(const std::vector<ScanRecord>& records, const std::string& path);

/// %.12g rendering used by the CSV writer and the CLI.
std::string format_significant(double v);

}  // namespace pendsim
