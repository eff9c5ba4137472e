#pragma once

// Every inequality of the suite evaluated as an InequalityReport with both
// sides, the deficit, and equality detection. Deficit orientation is fixed:
// the report's (lhs, rhs) are assigned so the inequality reads lhs <= rhs,
// deficit = rhs - lhs, and deficit >= -tol*scale means it holds.
//
// Equality is detected on the spectral tail mass (tail/total of the relevant
// recentered function), not on the deficit, which can be cancellation noise.

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "quermass/convex.hpp"

namespace quermass {

inline constexpr double kDefaultTol = 1e-9;
inline constexpr double kEqualityTailTol = 1e-8;

enum class Convexity { Certified, Uncertified, Failed };

std::string to_string(Convexity c);

struct InequalityReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double deficit = 0.0;  // rhs - lhs
  bool holds = false;
  bool equality = false;
  double tolerance = kDefaultTol;
  Convexity convexity = Convexity::Uncertified;
  std::map<std::string, double> terms;
};

nlohmann::json to_json(const InequalityReport& r);

/// CSV surface: columns name,lhs,rhs,deficit,holds,equality,convexity_flag,term.<key>...
std::vector<std::string> union_term_keys(const std::vector<InequalityReport>& reports);
std::string csv_header(const std::vector<std::string>& term_keys,
                       const std::string& leading_column = "");
std::string csv_row(const InequalityReport& r, const std::vector<std::string>& term_keys,
                    const std::string& leading_value = "");

/// 17-significant-digit float formatting used by the CSV surface.
std::string format_float(double v);

// ---- spectral checkers (sphere eigenvalues from d) ----

/// <F,-Lap F> >= (d-1)<F,F> for mean-zero F; equality iff F = F_1.
InequalityReport check_poincare(const HarmonicSpectrum& F, int d, double tol = kDefaultTol);

/// 2d(d-1)<F,F> - (3d-1)<F,-Lap F> + <F,Lap^2 F> >= 0 for mean-zero F;
/// equality iff F = F_1 + F_2. The product-form value is carried in terms.
InequalityReport check_order2(const HarmonicSpectrum& F, int d, double tol = kDefaultTol);

/// -<F, Lap F + (d-1)F> >= (d+1)<F,F> for F with no degree-0,1 harmonics;
/// equality iff F = F_2.
InequalityReport check_gap(const HarmonicSpectrum& F, int d, double tol = kDefaultTol);

/// |Lap F + (d-1)F|^2 >= (d+1)<F, [-Lap-(d-1)]F> for mean-zero F;
/// equality iff F = F_1 + F_2.
InequalityReport check_order2_shifted(const HarmonicSpectrum& F, int d, double tol = kDefaultTol);

/// |[Lap+(d-1)]F|^2 + 2(d+1)(d+2)|F|^2 >= (3d+5)<F, [-Lap-(d-1)]F> for F with
/// no degree-0,1 harmonics; equality iff F = F_2 + F_3.
InequalityReport check_order3_shifted(const HarmonicSpectrum& F, int d, double tol = kDefaultTol);

// ---- body theorems ----

/// int H_{d-3} + (d+1)/(d-1) delta2(K,B(K))^2 <= (int H_{d-2})^2 / |S^{d-1}|.
/// terms carry the classical (no-delta2) deficit as well.
InequalityReport minkowski_stability(const SupportBody& body, double tol = kDefaultTol);

/// Classical Minkowski: int H_{d-3} <= (int H_{d-2})^2 / |S^{d-1}|.
InequalityReport minkowski_classical(const SupportBody& body, double tol = kDefaultTol);

/// Upper bound for the Minkowski deficit:
/// (int H_{d-2})^2/|S| - int H_{d-3} <= (d-1)/(d+1) [ ros - (int H_{d-2})^2/|S| ].
InequalityReport deficit_upper_bound(const SupportBody& body, double tol = kDefaultTol);

/// Reverse bound: the deficit-bound slack dominates 2(d+2)/(d+1) times the
/// delta2-strengthened Minkowski slack.
InequalityReport reverse_comparison(const SupportBody& body, double tol = kDefaultTol);

/// Order-m form <P(h - hbar), h - hbar> >= 0, P = prod_{n=1}^m (B - gamma_n),
/// evaluated (a) by spectral products and (b) through the expanded
/// c_i / coeff1 / coeff2 identity; both paths are reported.
InequalityReport higher_order(const SupportBody& body, int m, double tol = kDefaultTol);

/// Reverse Aleksandrov-Fenchel bound for a pair (re-centered internally so
/// both Steiner points sit at the origin).
InequalityReport mixed_reverse(const SupportBody& K, const SupportBody& L,
                               double tol = kDefaultTol);

/// Aleksandrov-Fenchel lower bound W_{d-2}(K) W_{d-2}(L) <= V(K,L)^2.
InequalityReport aleksandrov_fenchel(const SupportBody& K, const SupportBody& L,
                                     double tol = kDefaultTol);

}  // namespace quermass
