#pragma once

// Constructors for canonical test bodies with analytically known
// functionals. BodySpec doubles as the JSON schema consumed by the CLI:
//   {"kind": "...", "d": ..., "params": {...}}

#include <string>
#include <vector>

#include <json.hpp>

#include "quermass/convex.hpp"

namespace quermass::gallery {

enum class BodyKind {
  Ball,
  TranslatedBall,
  HarmonicPerturbation,
  Ellipsoid,
  MinkowskiSum,
  CustomSpectrum,
};

std::string to_string(BodyKind kind);
BodyKind body_kind_from_string(const std::string& s);

struct HarmonicTerm {
  int degree = 2;
  int slot = 0;
  double amplitude = 0.0;
};

struct BodySpec {
  BodyKind kind = BodyKind::Ball;
  int dim = 3;
  double radius = 1.0;                       // ball, translated_ball, harmonic_perturbation base
  std::vector<double> center;                // translated_ball
  std::vector<HarmonicTerm> terms;           // harmonic_perturbation
  std::vector<double> semi_axes;             // ellipsoid
  std::vector<BodySpec> summands;            // minkowski_sum
  std::vector<std::vector<double>> blocks;   // custom_spectrum
};

BodySpec spec_from_json(const nlohmann::json& j);
nlohmann::json spec_to_json(const BodySpec& spec);

struct BuildOptions {
  int band_limit = 64;
  bool require_convex = false;
  double max_tail_rel = 1e-9;  // sampled kinds must resolve to this tail energy
};

/// Builds the body. Exact kinds get sparse spectra; the ellipsoid is sampled
/// and forward-transformed, with the truncated tail energy recorded.
SupportBody build(const BodySpec& spec, const BuildOptions& opts = {});

}  // namespace quermass::gallery
