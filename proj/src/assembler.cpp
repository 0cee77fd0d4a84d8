#include "assoc/assembler.hpp"

#include <algorithm>
#include <string>

namespace assoc {

BuildMode parse_build_mode(std::string_view text) {
  if (text == "full") return BuildMode::full;
  if (text == "pentagon-only") return BuildMode::pentagon_only;
  throw std::invalid_argument("unknown build mode '" + std::string(text) + "'");
}

std::string_view to_string(BuildMode mode) { return mode == BuildMode::full ? "full" : "pentagon-only"; }

BuildState initial_state(BuildMode mode) {
  BuildState s{Series(uf2_alphabet(), 0), 0, mode, {}};
  return s;
}

namespace {

// Appends one block of equations "sum_j x_j * coords(images[j]) = -coords(target)".
void append_block(std::vector<SparseVector>& rows, SparseVector& rhs, const ChordAlgebra& algebra, int d,
                  const std::vector<Series>& images, const Series& target) {
  const std::size_t base = rows.size();
  std::vector<SparseVector::Storage> block(algebra.dim(d));
  for (std::size_t j = 0; j < images.size(); ++j)
    for (const auto& [r, c] : algebra.coordinates(images[j], d)) block[r].emplace(j, c);
  for (auto& b : block) rows.emplace_back(std::move(b));
  for (const auto& [r, c] : algebra.coordinates(target, d)) rhs.set(base + r, -c);
}

Series equation_residual(const Series& phi, const ChordAlgebra& algebra, bool pentagon_eq, HexagonSign sign) {
  const Series value = pentagon_eq ? pentagon(phi, algebra) : hexagon(phi, sign, algebra);
  return algebra.reduce(value - Series::one(algebra.alphabet(), value.truncation()));
}

}  // namespace

BuildState extend(const BuildState& state, const ChordAlgebras& algebras, const std::vector<Rational>& gauge) {
  const int d = state.degree_reached + 1;
  const auto& a3 = algebras.a3();
  const auto& a4 = algebras.a4();
  if (d > a4.truncation() || (state.mode == BuildMode::full && d > a3.truncation()))
    throw std::invalid_argument("chord algebras are truncated below degree " + std::to_string(d));

  const Series log_phi = state.log_phi.with_truncation(d);
  const Series phi = exp(log_phi);
  const auto basis = lyndon_basis(uf2_alphabet(), d);
  const auto words = lyndon_words(2, d);

  std::vector<SparseVector> rows;
  SparseVector rhs;
  {
    std::vector<Series> images;
    for (const auto& b : basis) images.push_back(dP(b, DPForm::signed_form, a4));
    append_block(rows, rhs, a4, d, images, equation_residual(phi, a4, true, HexagonSign::plus));
  }
  if (state.mode == BuildMode::full) {
    std::vector<Series> images;
    for (const auto& b : basis) images.push_back(dH(b, a3));
    for (auto sign : {HexagonSign::plus, HexagonSign::minus})
      append_block(rows, rhs, a3, d, images, equation_residual(phi, a3, false, sign));
  } else if (d == 2) {
    // c2 = 1/24 fixes the scale that the hexagons would otherwise force.
    SparseVector row;
    for (std::size_t j = 0; j < basis.size(); ++j) row.set(j, c2(basis[j]));
    rhs.set(rows.size(), Rational(1, 24) - c2(phi));
    rows.push_back(std::move(row));
  }

  SparseMatrix system(basis.size(), std::move(rows));
  auto solution = solve_affine(system, rhs);
  if (!solution)
    throw InconsistentExtension("degree " + std::to_string(d) + " extension system is inconsistent");

  GaugeRecord record;
  record.degree = d;
  record.unknowns = basis.size();
  record.equations = system.nrows();
  const auto echelon = rref(system);
  record.rank = echelon.pivots.size();
  record.nullity = record.unknowns - record.rank;
  std::size_t next_pivot = 0;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    if (next_pivot < echelon.pivots.size() && echelon.pivots[next_pivot] == j)
      ++next_pivot;
    else
      record.zeroed.push_back(words[j]);
  }

  if (!gauge.empty()) {
    if (gauge.size() != record.nullity)
      throw std::invalid_argument("degree " + std::to_string(d) + " has " + std::to_string(record.nullity) +
                                  " free directions, got " + std::to_string(gauge.size()) + " gauge values");
    const auto free_directions = kernel_basis(system);
    for (std::size_t i = 0; i < gauge.size(); ++i) solution->axpy(gauge[i], free_directions[i]);
    record.zeroed.clear();
  }

  Series correction(uf2_alphabet(), d);
  for (const auto& [j, c] : *solution) correction += basis[j] * c;

  BuildState next = state;
  next.log_phi = log_phi + correction;
  next.degree_reached = d;
  next.gauge_log.push_back(std::move(record));

  const Series new_phi = next.phi();
  if (!equation_residual(new_phi, a4, true, HexagonSign::plus).is_zero())
    throw std::logic_error("pentagon residual survives the degree " + std::to_string(d) + " correction");
  if (state.mode == BuildMode::full)
    for (auto sign : {HexagonSign::plus, HexagonSign::minus})
      if (!equation_residual(new_phi, a3, false, sign).is_zero())
        throw std::logic_error("hexagon residual survives the degree " + std::to_string(d) + " correction");
  return next;
}

BuildResult build_associator(int n, BuildMode mode, const ChordAlgebras& algebras,
                             const std::map<int, std::vector<Rational>>& gauge) {
  if (n < 2) throw std::invalid_argument("target degree must be >= 2");
  BuildState state = initial_state(mode);
  while (state.degree_reached < n) {
    auto it = gauge.find(state.degree_reached + 1);
    state = extend(state, algebras, it == gauge.end() ? std::vector<Rational>{} : it->second);
  }
  Series phi = state.phi();
  return {std::move(state), std::move(phi)};
}

AssociatorReport verify_associator(const Series& phi, int n, const ChordAlgebras& algebras) {
  if (!same_alphabet(phi.alphabet(), uf2_alphabet())) throw std::invalid_argument("associators are series in X, Y");
  AssociatorReport report;
  const Series p = phi.with_truncation(n);
  report.c2 = c2(p);
  report.grouplike = is_grouplike(p);
  const CommutativePoly ab = abelianize(p);
  report.abelianization_trivial = ab.size() == 1 && ab.begin()->second == 1 &&
                                  std::all_of(ab.begin()->first.begin(), ab.begin()->first.end(), [](int e) { return e == 0; });
  if (p.constant_term() != 1) {
    report.equations.violations.push_back("constant term is not 1");
    return report;
  }
  if (n > algebras.a4().truncation() || n > algebras.a3().truncation())
    throw std::invalid_argument("chord algebras are truncated below degree " + std::to_string(n));
  std::map<std::string, Series> residuals;
  residuals.emplace("pentagon", equation_residual(p, algebras.a4(), true, HexagonSign::plus));
  residuals.emplace("hexagon+", equation_residual(p, algebras.a3(), false, HexagonSign::plus));
  residuals.emplace("hexagon-", equation_residual(p, algebras.a3(), false, HexagonSign::minus));
  report.equations = make_report(std::move(residuals));
  return report;
}

}  // namespace assoc
