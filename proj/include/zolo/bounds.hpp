#pragma once

#include "zolo/conformal.hpp"

namespace zolo {

struct GeometryConstants {
  double h = 2;
  double rotE = 1, rotF = 1;
  bool convex = true;
  Variant variant = Variant::A1;
};

struct BoundValue {
  int n = 0;
  double lower = 1;
  double upper = 1;
  bool upper_valid = false;
  bool clamped = true;  // upper was replaced by 1
  double raw = 0;       // the formula value before clamping (may be infinite)
  double mEF = 0, mFE = 0;  // M_n(E,F), M_n(F,E), or the tilde variants in case A2
  double x0 = 0, N0 = 0;
};

// 2 rotE + 2 h^-n rotF + 1 + h^-n
double m_n(double rotE, double rotF, double h, int n);
// 2 rotE + 2 h^-n rotF
double tilde_m_n(double rotE, double rotF, double h, int n);

struct ValidityConstants {
  double x0, N0;
};
ValidityConstants validity_constants(double rotE, double rotF, double h, Variant variant = Variant::A1);

// Upper and lower bounds on Z_n(E, F). Convex A1 input goes through the simplified convex
// expression; everything else through the general one with measured rotations.
BoundValue zolotarev_upper(const GeometryConstants& gc, int n);

// Unclamped bound expressions. general_bound takes M_n(E,F) and M_n(F,E) explicitly, so the
// same routine serves both variants; it returns +inf when the denominator vanishes.
double general_bound(double mEF, double mFE, double h, int n);
double convex_bound(double h, int n);

// (2 rotE + 1)(2 rotF + 1) in case A1, 4 rotE rotF in case A2.
double asymptotic_constant(double rotE, double rotF, Variant variant = Variant::A1);

double zolotarev_lower(double h, int n);

// sup over E of |R_n| is at most M_n(E,F) / (1 - h^-2n).
double rn_bound_on_E(double rotE, double rotF, double h, int n);
// sup over F of |1/r_n|, with C = 1 + sup over E of |R_n|.
double inv_rn_bound_on_F(double rotE, double rotF, double h, int n, double C);
// inf over E of |1/r_n| (may be negative, i.e. trivial).
double inv_rn_lower_on_E(double rotE, double rotF, double h, int n, double C);

// f(alpha) = 4(1 - alpha) C / (alpha (1 - alpha)^n h^n ((1 - alpha)^n h^n - C)) and the
// closed-form bound 32 n h^n C / ((h^n - C)^2 (h^n + C)) on its constrained minimum.
double witness_f(double alpha, double C, double h, int n);
double witness_bound(double C, double h, int n);

}  // namespace zolo
