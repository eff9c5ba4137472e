#include "quermass/gallery.hpp"

#include <cmath>
#include <stdexcept>

namespace quermass::gallery {

std::string to_string(BodyKind kind) {
  switch (kind) {
    case BodyKind::Ball: return "ball";
    case BodyKind::TranslatedBall: return "translated_ball";
    case BodyKind::HarmonicPerturbation: return "harmonic_perturbation";
    case BodyKind::Ellipsoid: return "ellipsoid";
    case BodyKind::MinkowskiSum: return "minkowski_sum";
    case BodyKind::CustomSpectrum: return "custom_spectrum";
  }
  throw std::logic_error("to_string: unknown BodyKind");
}

BodyKind body_kind_from_string(const std::string& s) {
  if (s == "ball") return BodyKind::Ball;
  if (s == "translated_ball") return BodyKind::TranslatedBall;
  if (s == "harmonic_perturbation") return BodyKind::HarmonicPerturbation;
  if (s == "ellipsoid") return BodyKind::Ellipsoid;
  if (s == "minkowski_sum") return BodyKind::MinkowskiSum;
  if (s == "custom_spectrum") return BodyKind::CustomSpectrum;
  throw std::invalid_argument("unknown body kind: " + s);
}

BodySpec spec_from_json(const nlohmann::json& j) {
  BodySpec spec;
  spec.kind = body_kind_from_string(j.at("kind").get<std::string>());
  spec.dim = j.value("d", 3);
  const nlohmann::json params = j.value("params", nlohmann::json::object());
  switch (spec.kind) {
    case BodyKind::Ball:
      spec.radius = params.value("radius", 1.0);
      break;
    case BodyKind::TranslatedBall:
      spec.radius = params.value("radius", 1.0);
      spec.center = params.at("center").get<std::vector<double>>();
      break;
    case BodyKind::HarmonicPerturbation: {
      spec.radius = params.value("radius", 1.0);
      for (const auto& t : params.at("terms")) {
        HarmonicTerm term;
        term.degree = t.at("degree").get<int>();
        term.slot = t.value("slot", 0);
        term.amplitude = t.at("amplitude").get<double>();
        spec.terms.push_back(term);
      }
      break;
    }
    case BodyKind::Ellipsoid:
      spec.semi_axes = params.at("semi_axes").get<std::vector<double>>();
      break;
    case BodyKind::MinkowskiSum:
      for (const auto& sub : params.at("summands")) spec.summands.push_back(spec_from_json(sub));
      break;
    case BodyKind::CustomSpectrum:
      spec.blocks = params.at("blocks").get<std::vector<std::vector<double>>>();
      break;
  }
  return spec;
}

nlohmann::json spec_to_json(const BodySpec& spec) {
  nlohmann::json j;
  j["kind"] = to_string(spec.kind);
  j["d"] = spec.dim;
  nlohmann::json params = nlohmann::json::object();
  switch (spec.kind) {
    case BodyKind::Ball:
      params["radius"] = spec.radius;
      break;
    case BodyKind::TranslatedBall:
      params["radius"] = spec.radius;
      params["center"] = spec.center;
      break;
    case BodyKind::HarmonicPerturbation: {
      params["radius"] = spec.radius;
      nlohmann::json terms = nlohmann::json::array();
      for (const auto& t : spec.terms)
        terms.push_back({{"degree", t.degree}, {"slot", t.slot}, {"amplitude", t.amplitude}});
      params["terms"] = terms;
      break;
    }
    case BodyKind::Ellipsoid:
      params["semi_axes"] = spec.semi_axes;
      break;
    case BodyKind::MinkowskiSum: {
      nlohmann::json subs = nlohmann::json::array();
      for (const auto& sub : spec.summands) subs.push_back(spec_to_json(sub));
      params["summands"] = subs;
      break;
    }
    case BodyKind::CustomSpectrum:
      params["blocks"] = spec.blocks;
      break;
  }
  j["params"] = params;
  return j;
}

namespace {

HarmonicSpectrum ball_spectrum(int d, double radius, int band_limit) {
  HarmonicSpectrum h(d, band_limit);
  h.coeff(0, 0) = radius * std::sqrt(unit_sphere_area(d));
  return h;
}

HarmonicSpectrum ellipsoid_spectrum(const BodySpec& spec, const BuildOptions& opts,
                                    double* tail_out) {
  const int d = spec.dim;
  if (static_cast<int>(spec.semi_axes.size()) != d)
    throw std::invalid_argument("ellipsoid: need d semi-axes");
  for (double a : spec.semi_axes)
    if (!(a > 0.0)) throw std::invalid_argument("ellipsoid: semi-axes must be positive");
  if (d != 2 && d != 3)
    throw std::invalid_argument("ellipsoid: sampling is available only for d = 2, 3");

  const auto grid = QuadratureGrid::for_band_limit(d, opts.band_limit);
  GridFunction f(grid);
  const auto& a = spec.semi_axes;
  if (d == 2) {
    for (int j = 0; j < grid.n_angles(); ++j) {
      const double c = std::cos(grid.angle(j)), s = std::sin(grid.angle(j));
      f[j] = std::sqrt(a[0] * a[0] * c * c + a[1] * a[1] * s * s);
    }
  } else {
    for (int i = 0; i < grid.n_theta(); ++i)
      for (int j = 0; j < grid.n_phi(); ++j) {
        const double st = grid.sin_theta(i), ct = grid.cos_theta(i);
        const double cp = std::cos(grid.phi(j)), sp = std::sin(grid.phi(j));
        const double x = st * cp, y = st * sp, z = ct;
        f[static_cast<std::size_t>(i) * grid.n_phi() + j] =
            std::sqrt(a[0] * a[0] * x * x + a[1] * a[1] * y * y + a[2] * a[2] * z * z);
      }
  }
  HarmonicSpectrum h = forward(f, opts.band_limit);
  const double grid_norm = inner_product(f, f);
  const double spectral_norm = h.total_norm_sq();
  const double tail = std::max(0.0, grid_norm - spectral_norm) / grid_norm;
  *tail_out = tail;
  if (tail > opts.max_tail_rel)
    throw std::invalid_argument(
        "ellipsoid: spectral tail energy above threshold; raise the band limit");
  return h;
}

}  // namespace

SupportBody build(const BodySpec& spec, const BuildOptions& opts) {
  const int d = spec.dim;
  if (d < 2) throw std::invalid_argument("build: d must be >= 2");
  HarmonicSpectrum h;
  double tail = 0.0;
  switch (spec.kind) {
    case BodyKind::Ball:
      if (!(spec.radius > 0.0)) throw std::invalid_argument("ball: radius must be positive");
      h = ball_spectrum(d, spec.radius, 0);
      break;
    case BodyKind::TranslatedBall: {
      if (!(spec.radius > 0.0)) throw std::invalid_argument("ball: radius must be positive");
      h = ball_spectrum(d, spec.radius, 1);
      h.block(1) = degree1_from_vector(spec.center, d);
      break;
    }
    case BodyKind::HarmonicPerturbation: {
      int nmax = 0;
      for (const auto& t : spec.terms) nmax = std::max(nmax, t.degree);
      h = ball_spectrum(d, spec.radius, nmax);
      for (const auto& t : spec.terms) {
        if (t.degree < 0) throw std::invalid_argument("harmonic term: degree must be >= 0");
        if (t.slot < 0 || t.slot >= static_cast<int>(h.block(t.degree).size()))
          throw std::invalid_argument("harmonic term: slot out of range for degree");
        h.coeff(t.degree, t.slot) += t.amplitude;
      }
      break;
    }
    case BodyKind::Ellipsoid:
      h = ellipsoid_spectrum(spec, opts, &tail);
      break;
    case BodyKind::MinkowskiSum: {
      if (spec.summands.empty()) throw std::invalid_argument("minkowski_sum: no summands");
      bool first = true;
      for (const auto& sub : spec.summands) {
        BodySpec s = sub;
        s.dim = d;  // summands share the outer dimension
        SupportBody part = build(s, opts);
        if (first) {
          h = std::move(part.support);
          first = false;
        } else {
          h += part.support;
        }
        tail = std::max(tail, part.spectral_tail);
      }
      break;
    }
    case BodyKind::CustomSpectrum: {
      if (spec.blocks.empty()) throw std::invalid_argument("custom_spectrum: no blocks");
      h = HarmonicSpectrum(d, static_cast<int>(spec.blocks.size()) - 1);
      for (std::size_t n = 0; n < spec.blocks.size(); ++n) {
        auto& blk = h.block(static_cast<int>(n));
        if (spec.blocks[n].size() > blk.size()) blk.resize(spec.blocks[n].size(), 0.0);
        std::copy(spec.blocks[n].begin(), spec.blocks[n].end(), blk.begin());
      }
      break;
    }
  }
  SupportBody body = make_body(std::move(h));
  body.spectral_tail = tail;
  if (opts.require_convex) {
    if (!body.certificate.has_value())
      throw std::invalid_argument("require_convex: no certificate available for this dimension");
    if (!body.certificate->positive())
      throw std::invalid_argument("require_convex: body failed convexity certification");
  }
  return body;
}

}  // namespace quermass::gallery
