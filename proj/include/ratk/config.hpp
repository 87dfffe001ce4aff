#pragma once

namespace ratk {

/// Numerical tolerances. Values are contracts, not knobs: tests and the
/// acceptance suite pin behavior at these defaults.
struct Tolerances {
  double poly_trim = 1e-12;        // relative; trailing-coefficient truncation
  double root_cluster = 1e-8;      // absolute, after coefficient normalization
  double root_residual = 1e-10;    // target residual for simple roots
  double coincidence = 1e-8;       // shared-root detection for P, Q
  double chart_switch = 1e8;       // |z| beyond which the 1/z chart is used
  double orbit = 1e-6;             // chordal; cycle membership validation
  double cycle_merge = 1e-7;       // chordal; distinct-cycle merging
  double unit_circle = 1e-9;       // |.|lambda| - 1| band for neutral cycles
  double superattracting = 1e-8;   // |lambda| below this is superattracting
  double rational_snap = 1e-9;     // parabolic rotation-number snap
  int max_snap_denominator = 64;
  int cf_depth = 20;               // continued-fraction certificate depth
  int cf_max_quotient = 10;        // bounded-type partial-quotient cap
};

struct Budgets {
  long max_iter = 10000;
  long periodic_point_cap = 20000;  // d^n cap for periodic-point solves
  int shift_level_cap = 12;
  int aberth_max_iter = 400;
  int recurrence_max_period = 64;   // orbit-tail cycle search
  int direct_scan_max_period = 8;   // small-period cycle solve in the classifier
};

struct Config {
  Tolerances tol;
  Budgets budget;
};

}  // namespace ratk
