#pragma once

#include "assoc/equations.hpp"

#include <map>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace assoc {

enum class BuildMode { full, pentagon_only };

BuildMode parse_build_mode(std::string_view text);
std::string_view to_string(BuildMode mode);

/// One degree of the construction: the linear system solved for the
/// Lyndon coordinates of the correction, and the coordinates fixed to zero.
struct GaugeRecord {
  int degree = 0;
  std::size_t unknowns = 0;
  std::size_t equations = 0;
  std::size_t rank = 0;
  std::size_t nullity = 0;
  /// Lyndon words of the free columns set to zero (empty when a gauge
  /// choice was supplied).
  std::vector<Word> zeroed;
};

/// Phi = exp(log_phi) with log_phi primitive by construction.
struct BuildState {
  Series log_phi;
  int degree_reached = 0;
  BuildMode mode = BuildMode::full;
  std::vector<GaugeRecord> gauge_log;

  Series phi() const { return exp(log_phi); }
};

/// The degree-step linear system has no solution. Lifting is always
/// possible, so this signals a fault in the evaluators.
class InconsistentExtension : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

BuildState initial_state(BuildMode mode);

/// Solves for the primitive degree-(m+1) correction and re-verifies every
/// imposed equation through degree m+1. Throws InconsistentExtension when
/// the system is unsolvable and std::logic_error when re-verification fails.
/// `gauge` gives coefficients along the kernel basis of the step system
/// (empty means all zero; otherwise its size must equal the nullity).
BuildState extend(const BuildState& state, const ChordAlgebras& algebras, const std::vector<Rational>& gauge = {});

struct BuildResult {
  BuildState state;
  Series phi;
};

/// Builds a rational associator through degree n (pentagon and hexagons in
/// full mode; pentagon plus c2 = 1/24 in pentagon-only mode). `gauge` maps
/// a degree to the free-direction coefficients passed to extend().
BuildResult build_associator(int n, BuildMode mode, const ChordAlgebras& algebras,
                             const std::map<int, std::vector<Rational>>& gauge = {});

struct AssociatorReport {
  EquationReport equations;
  bool grouplike = false;
  Rational c2{0};
  bool abelianization_trivial = false;

  bool holds() const { return equations.holds() && grouplike && abelianization_trivial; }
};

/// Pentagon and hexagon residuals of phi read as a polynomial truncated at
/// degree n, plus group-likeness, c2 and the abelianization check.
AssociatorReport verify_associator(const Series& phi, int n, const ChordAlgebras& algebras);

}  // namespace assoc
