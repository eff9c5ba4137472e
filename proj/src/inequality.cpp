#include "quermass/inequality.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <initializer_list>
#include <stdexcept>

namespace quermass {

std::string to_string(Convexity c) {
  switch (c) {
    case Convexity::Certified: return "certified";
    case Convexity::Uncertified: return "uncertified";
    case Convexity::Failed: return "failed";
  }
  throw std::logic_error("to_string: unknown Convexity");
}

std::string format_float(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

nlohmann::json to_json(const InequalityReport& r) {
  nlohmann::json j;
  j["name"] = r.name;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["deficit"] = r.deficit;
  j["holds"] = r.holds;
  j["equality"] = r.equality;
  j["tolerance"] = r.tolerance;
  j["convexity_flag"] = to_string(r.convexity);
  nlohmann::json terms = nlohmann::json::object();
  for (const auto& [k, v] : r.terms) terms[k] = v;
  j["terms"] = terms;
  return j;
}

std::vector<std::string> union_term_keys(const std::vector<InequalityReport>& reports) {
  std::map<std::string, int> seen;
  for (const auto& r : reports)
    for (const auto& [k, v] : r.terms) seen.emplace(k, 0);
  std::vector<std::string> keys;
  for (const auto& [k, v] : seen) keys.push_back(k);
  return keys;
}

std::string csv_header(const std::vector<std::string>& term_keys,
                       const std::string& leading_column) {
  std::string line;
  if (!leading_column.empty()) line += leading_column + ",";
  line += "name,lhs,rhs,deficit,holds,equality,convexity_flag";
  for (const auto& k : term_keys) line += ",term." + k;
  return line;
}

std::string csv_row(const InequalityReport& r, const std::vector<std::string>& term_keys,
                    const std::string& leading_value) {
  std::string line;
  if (!leading_value.empty()) line += leading_value + ",";
  line += r.name + "," + format_float(r.lhs) + "," + format_float(r.rhs) + "," +
          format_float(r.deficit) + "," + (r.holds ? "true" : "false") + "," +
          (r.equality ? "true" : "false") + "," + to_string(r.convexity);
  for (const auto& k : term_keys) {
    line += ",";
    auto it = r.terms.find(k);
    if (it != r.terms.end()) line += format_float(it->second);
  }
  return line;
}

namespace {

double scale_of(double lhs, double rhs) {
  return std::max({std::abs(lhs), std::abs(rhs), 1.0});
}

InequalityReport finish(std::string name, double lhs, double rhs, double tol,
                        bool equality, Convexity conv,
                        std::map<std::string, double> terms) {
  InequalityReport r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.deficit = rhs - lhs;
  r.tolerance = tol;
  r.holds = r.deficit >= -tol * scale_of(lhs, rhs);
  r.equality = equality;
  r.convexity = conv;
  r.terms = std::move(terms);
  return r;
}

void require_vanishing_below(const HarmonicSpectrum& F, int first_kept, const char* who) {
  for (int n = 0; n < first_kept; ++n)
    if (!F.block_vanishes(n))
      throw std::invalid_argument(std::string(who) + ": nonzero harmonics below degree " +
                                  std::to_string(first_kept));
}

Convexity body_flag(const SupportBody& body) {
  if (!body.certificate.has_value()) return Convexity::Uncertified;
  return body.certificate->positive() ? Convexity::Certified : Convexity::Failed;
}

// sum_n lambda_n^k |F_n|^2 with sphere eigenvalues
double moment(const HarmonicSpectrum& F, int d, int k) {
  long double acc = 0.0L;
  for (int n = 0; n <= F.band_limit(); ++n) {
    long double t = F.block_norm_sq(n);
    if (t == 0.0L) continue;
    for (int i = 0; i < k; ++i) t *= sphere_eigenvalue(n, d);
    acc += t;
  }
  return static_cast<double>(acc);
}

// sum_n prod_{j in roots} (lambda_n - lambda_j) |F_n|^2
double product_sum(const HarmonicSpectrum& F, int d, std::initializer_list<int> roots) {
  long double acc = 0.0L;
  for (int n = 0; n <= F.band_limit(); ++n) {
    long double t = F.block_norm_sq(n);
    if (t == 0.0L) continue;
    for (int j : roots)
      t *= static_cast<double>(sphere_eigenvalue(n, d) - sphere_eigenvalue(j, d));
    acc += t;
  }
  return static_cast<double>(acc);
}

HarmonicSpectrum drop_low_blocks(const HarmonicSpectrum& h, int below) {
  HarmonicSpectrum F = h;
  for (int n = 0; n < std::min(below, F.band_limit() + 1); ++n)
    std::fill(F.block(n).begin(), F.block(n).end(), 0.0);
  return F;
}

}  // namespace

InequalityReport check_poincare(const HarmonicSpectrum& F, int d, double tol) {
  require_vanishing_below(F, 1, "check_poincare");
  const double m0 = moment(F, d, 0), m1 = moment(F, d, 1);
  const double lhs = (d - 1.0) * m0;
  const double rhs = m1;
  const bool eq = F.tail_fraction_outside(1, 1) <= kEqualityTailTol;
  return finish("poincare", lhs, rhs, tol, eq, Convexity::Uncertified,
                {{"norm_sq", m0}, {"dirichlet", m1}});
}

InequalityReport check_order2(const HarmonicSpectrum& F, int d, double tol) {
  require_vanishing_below(F, 1, "check_order2");
  const double m0 = moment(F, d, 0), m1 = moment(F, d, 1), m2 = moment(F, d, 2);
  const double lhs = (3.0 * d - 1.0) * m1;
  const double rhs = 2.0 * d * (d - 1.0) * m0 + m2;
  const bool eq = F.tail_fraction_outside(1, 2) <= kEqualityTailTol;
  return finish("order2", lhs, rhs, tol, eq, Convexity::Uncertified,
                {{"product_form", product_sum(F, d, {1, 2})}});
}

InequalityReport check_gap(const HarmonicSpectrum& F, int d, double tol) {
  require_vanishing_below(F, 2, "check_gap");
  const double m0 = moment(F, d, 0), m1 = moment(F, d, 1);
  const double lhs = (d + 1.0) * m0;
  const double rhs = m1 - (d - 1.0) * m0;
  const bool eq = F.tail_fraction_outside(2, 2) <= kEqualityTailTol;
  return finish("gap", lhs, rhs, tol, eq, Convexity::Uncertified,
                {{"product_form", product_sum(F, d, {2})}});
}

InequalityReport check_order2_shifted(const HarmonicSpectrum& F, int d, double tol) {
  require_vanishing_below(F, 1, "check_order2_shifted");
  long double bnorm = 0.0L, blin = 0.0L;
  for (int n = 0; n <= F.band_limit(); ++n) {
    const double g = static_cast<double>(sphere_eigenvalue(n, d) - sphere_eigenvalue(1, d));
    bnorm += static_cast<long double>(g) * g * F.block_norm_sq(n);
    blin += static_cast<long double>(g) * F.block_norm_sq(n);
  }
  const double lhs = (d + 1.0) * static_cast<double>(blin);
  const double rhs = static_cast<double>(bnorm);
  const bool eq = F.tail_fraction_outside(1, 2) <= kEqualityTailTol;
  return finish("order2_shifted", lhs, rhs, tol, eq, Convexity::Uncertified,
                {{"product_form", product_sum(F, d, {1, 2})}});
}

InequalityReport check_order3_shifted(const HarmonicSpectrum& F, int d, double tol) {
  require_vanishing_below(F, 2, "check_order3_shifted");
  long double bnorm = 0.0L, blin = 0.0L, m0 = 0.0L;
  for (int n = 0; n <= F.band_limit(); ++n) {
    const double g = static_cast<double>(sphere_eigenvalue(n, d) - sphere_eigenvalue(1, d));
    const double nsq = F.block_norm_sq(n);
    bnorm += static_cast<long double>(g) * g * nsq;
    blin += static_cast<long double>(g) * nsq;
    m0 += nsq;
  }
  const double lhs = (3.0 * d + 5.0) * static_cast<double>(blin);
  const double rhs =
      static_cast<double>(bnorm) + 2.0 * (d + 1.0) * (d + 2.0) * static_cast<double>(m0);
  const bool eq = F.tail_fraction_outside(2, 3) <= kEqualityTailTol;
  return finish("order3_shifted", lhs, rhs, tol, eq, Convexity::Uncertified,
                {{"product_form", product_sum(F, d, {2, 3})}});
}

InequalityReport minkowski_stability(const SupportBody& body, double tol) {
  const int d = body.dim();
  const auto ci = curvature_integrals(body);
  const double mean_sq = ci.int_H_dm2 * ci.int_H_dm2 / unit_sphere_area(d);
  const HarmonicSpectrum F = drop_low_blocks(body.support, 2);  // h - h_{B(K)}
  const double d2sq = F.total_norm_sq();
  const double lhs = ci.int_H_dm3 + (d + 1.0) / (d - 1.0) * d2sq;
  const double rhs = mean_sq;
  const bool eq = F.tail_fraction_outside(2, 2) <= kEqualityTailTol;
  auto r = finish("minkowski_stability", lhs, rhs, tol, eq, body_flag(body),
                  {{"int_H_dm2", ci.int_H_dm2},
                   {"int_H_dm3", ci.int_H_dm3},
                   {"mean_term", mean_sq},
                   {"delta2_sq", d2sq},
                   {"classical_deficit", mean_sq - ci.int_H_dm3}});
  return r;
}

InequalityReport minkowski_classical(const SupportBody& body, double tol) {
  const int d = body.dim();
  const auto ci = curvature_integrals(body);
  const double mean_sq = ci.int_H_dm2 * ci.int_H_dm2 / unit_sphere_area(d);
  const HarmonicSpectrum F = drop_low_blocks(body.support, 2);
  const double total = body.support.total_norm_sq();
  const bool eq = total == 0.0 || F.total_norm_sq() <= kEqualityTailTol * total;
  return finish("minkowski_classical", ci.int_H_dm3, mean_sq, tol, eq, body_flag(body),
                {{"int_H_dm2", ci.int_H_dm2}, {"int_H_dm3", ci.int_H_dm3}});
}

InequalityReport deficit_upper_bound(const SupportBody& body, double tol) {
  const int d = body.dim();
  const auto ci = curvature_integrals(body);
  const double mean_sq = ci.int_H_dm2 * ci.int_H_dm2 / unit_sphere_area(d);
  const double lhs = mean_sq - ci.int_H_dm3;
  const double rhs = (d - 1.0) / (d + 1.0) * (ci.int_ros - mean_sq);
  const HarmonicSpectrum F = drop_low_blocks(body.support, 1);  // h - hbar
  const bool eq = F.tail_fraction_outside(1, 2) <= kEqualityTailTol;
  return finish("deficit_upper_bound", lhs, rhs, tol, eq, body_flag(body),
                {{"int_H_dm2", ci.int_H_dm2},
                 {"int_H_dm3", ci.int_H_dm3},
                 {"int_ros", ci.int_ros},
                 {"mean_term", mean_sq}});
}

InequalityReport reverse_comparison(const SupportBody& body, double tol) {
  const int d = body.dim();
  const auto ci = curvature_integrals(body);
  const double mean_sq = ci.int_H_dm2 * ci.int_H_dm2 / unit_sphere_area(d);
  const HarmonicSpectrum F = drop_low_blocks(body.support, 2);
  const double d2sq = F.total_norm_sq();
  const double classical = mean_sq - ci.int_H_dm3;
  // displayed: bound_slack >= 2(d+2)/(d+1) * strengthened_slack
  const double rhs = (d - 1.0) / (d + 1.0) * (ci.int_ros - mean_sq) - classical;
  const double lhs = 2.0 * (d + 2.0) / (d + 1.0) * (classical - (d + 1.0) / (d - 1.0) * d2sq);
  const bool eq = F.tail_fraction_outside(2, 3) <= kEqualityTailTol;
  return finish("reverse_comparison", lhs, rhs, tol, eq, body_flag(body),
                {{"int_H_dm2", ci.int_H_dm2},
                 {"int_H_dm3", ci.int_H_dm3},
                 {"int_ros", ci.int_ros},
                 {"delta2_sq", d2sq},
                 {"classical_deficit", classical}});
}

InequalityReport higher_order(const SupportBody& body, int m, double tol) {
  if (m < 2) throw std::invalid_argument("higher_order: need m >= 2");
  const int d = body.dim();
  const auto& h = body.support;

  // Path (a): direct spectral products over the shifted roots.
  long double path_a = 0.0L;
  for (int n = m + 1; n <= h.band_limit(); ++n) {
    long double t = h.block_norm_sq(n);
    if (t == 0.0L) continue;
    for (int j = 1; j <= m; ++j)
      t *= static_cast<double>(sphere_eigenvalue(n, d) - sphere_eigenvalue(j, d));
    path_a += t;
  }

  // Path (b): c_i <Lap^i rho, rho> plus the two closed-form boundary terms.
  const auto ci = curvature_integrals(body);
  const double mean_sq = ci.int_H_dm2 * ci.int_H_dm2 / unit_sphere_area(d);
  const double sign_m = (m % 2 == 0) ? 1.0 : -1.0;
  const auto cs = laplacian_power_coefficients(m, d);
  long double path_b = 0.0L;
  for (int i = 1; i <= m - 2; ++i) {
    // <Lap^i rho, rho> = sum (-lambda_n)^i (1 - lambda_n/(d-1))^2 |h_n|^2
    long double mom = 0.0L;
    for (int n = 0; n <= h.band_limit(); ++n) {
      const double lam = static_cast<double>(sphere_eigenvalue(n, d));
      long double t = h.block_norm_sq(n);
      if (t == 0.0L) continue;
      const double rmult = 1.0 - lam / (d - 1.0);
      t *= rmult * rmult;
      for (int p = 0; p < i; ++p) t *= -lam;
      mom += t;
    }
    path_b += sign_m * static_cast<double>(cs[i - 1]) * mom;
  }
  const double cf1 = static_cast<double>(closed_form_coeff1(m, d));
  const double cf2 = static_cast<double>(closed_form_coeff2(m, d));
  path_b += sign_m * cf1 * (static_cast<long double>(ci.int_ros) - mean_sq);
  path_b += -sign_m * cf2 * (static_cast<long double>(mean_sq) - ci.int_H_dm3);

  const HarmonicSpectrum F = drop_low_blocks(h, 1);
  const bool eq = F.tail_fraction_outside(1, m) <= kEqualityTailTol;
  return finish("higher_order_m" + std::to_string(m), 0.0, static_cast<double>(path_a), tol, eq,
                body_flag(body),
                {{"path_product", static_cast<double>(path_a)},
                 {"path_expanded", static_cast<double>(path_b)},
                 {"coeff1", cf1},
                 {"coeff2", cf2},
                 {"order", static_cast<double>(m)}});
}

namespace {

SupportBody recentered(const SupportBody& body) {
  SupportBody out = body;
  if (out.support.band_limit() >= 1)
    std::fill(out.support.block(1).begin(), out.support.block(1).end(), 0.0);
  return out;
}

}  // namespace

InequalityReport mixed_reverse(const SupportBody& K, const SupportBody& L, double tol) {
  if (K.dim() != L.dim()) throw std::invalid_argument("mixed_reverse: dimension mismatch");
  const int d = K.dim();
  const SupportBody Kc = recentered(K);
  const SupportBody Lc = recentered(L);
  const double wK = mean_width(Kc), wL = mean_width(Lc);
  if (!(wL > 0.0)) throw std::invalid_argument("mixed_reverse: mean width of L must be positive");
  if (!(wK > 0.0)) throw std::invalid_argument("mixed_reverse: mean width of K must be positive");
  const double r = wK / wL;

  const double V = mixed_volume(Kc, Lc);
  const double WK = quermassintegrals(Kc).w_dm2;
  const double WL = quermassintegrals(Lc).w_dm2;
  const double lhs = V * V - WK * WL;

  // int (rho_K - r rho_L)^2 dtheta
  HarmonicSpectrum rho_diff = rho_spectrum(Kc.support) - r * rho_spectrum(Lc.support);
  const double rho_mismatch = rho_diff.total_norm_sq();

  // delta_2(K~, L)^2 with K~ = (wL/wK) K; the bound carries it scaled by r^2,
  // which is delta_2(K, rL)^2 (width-matched pairs: the two coincide).
  HarmonicSpectrum tilde_diff = (1.0 / r) * Kc.support - Lc.support;
  const double d2t_sq = tilde_diff.total_norm_sq();

  const double rhs =
      (r * WL - V) * (r * WL - V) +
      WL * ((d - 1.0) / ((3.0 * d + 5.0) * d) * rho_mismatch +
            2.0 * (d + 1.0) * (d + 2.0) / (d * (3.0 * d + 5.0) * (d - 1.0)) * r * r * d2t_sq);

  const bool eq = tilde_diff.tail_fraction_outside(2, 3) <= kEqualityTailTol;
  const Convexity conv = std::max(body_flag(K), body_flag(L),
                                  [](Convexity a, Convexity b) {
                                    return static_cast<int>(a) < static_cast<int>(b);
                                  });
  return finish("mixed_reverse", lhs, rhs, tol, eq, conv,
                {{"mixed_volume", V},
                 {"w_dm2_K", WK},
                 {"w_dm2_L", WL},
                 {"width_ratio", r},
                 {"rho_mismatch", rho_mismatch},
                 {"delta2_tilde_sq", d2t_sq},
                 {"delta2_tilde_sq_scaled", r * r * d2t_sq},
                 {"af_deficit", lhs}});
}

InequalityReport aleksandrov_fenchel(const SupportBody& K, const SupportBody& L, double tol) {
  if (K.dim() != L.dim()) throw std::invalid_argument("aleksandrov_fenchel: dimension mismatch");
  const double V = mixed_volume(K, L);
  const double WK = quermassintegrals(K).w_dm2;
  const double WL = quermassintegrals(L).w_dm2;
  const SupportBody Kc = recentered(K);
  const SupportBody Lc = recentered(L);
  const double wK = mean_width(Kc), wL = mean_width(Lc);
  bool eq = false;
  if (wK > 0.0 && wL > 0.0) {
    HarmonicSpectrum diff = (wL / wK) * Kc.support - Lc.support;
    eq = diff.total_norm_sq() <= kEqualityTailTol * Lc.support.total_norm_sq();
  }
  const Convexity conv = std::max(body_flag(K), body_flag(L),
                                  [](Convexity a, Convexity b) {
                                    return static_cast<int>(a) < static_cast<int>(b);
                                  });
  return finish("aleksandrov_fenchel", WK * WL, V * V, tol, eq, conv,
                {{"mixed_volume", V}, {"w_dm2_K", WK}, {"w_dm2_L", WL}});
}

}  // namespace quermass
