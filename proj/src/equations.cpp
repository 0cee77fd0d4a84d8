#include "assoc/equations.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace assoc {

bool EquationReport::holds() const {
  if (!violations.empty()) return false;
  return std::all_of(residuals.begin(), residuals.end(), [](const auto& kv) { return kv.second.is_zero(); });
}

int satisfied_through(const Series& residual) {
  auto low = residual.lowest_degree();
  return low ? *low - 1 : residual.truncation();
}

std::vector<int> nonzero_degrees(const Series& residual) {
  std::vector<int> out;
  for (const auto& [w, c] : residual.terms()) {
    int d = static_cast<int>(w.degree());
    if (out.empty() || out.back() != d) out.push_back(d);
  }
  return out;
}

EquationReport make_report(std::map<std::string, Series> residuals) {
  EquationReport r;
  r.residuals = std::move(residuals);
  r.satisfied_through = INT32_MAX;
  for (const auto& [name, res] : r.residuals) r.satisfied_through = std::min(r.satisfied_through, satisfied_through(res));
  if (r.residuals.empty()) r.satisfied_through = 0;
  return r;
}

namespace {

Series at(const Series& phi, const Series& a, const Series& b) {
  const std::array<Series, 2> images{a, b};
  return substitute(phi, images);
}

void require_unit(const Series& phi) {
  if (phi.constant_term() != 1) throw std::domain_error("equation needs a series with constant term 1");
}

// Chord generators of A_n at a fixed truncation.
struct Chords {
  const ChordAlgebra& algebra;
  int truncation;
  Series operator()(int i, int j) const { return algebra.generator(i, j).with_truncation(truncation); }
};

}  // namespace

Series pentagon(const Series& phi, const ChordAlgebra& a4) {
  require_unit(phi);
  if (a4.strands() != 4) throw std::invalid_argument("pentagon lives in A_4");
  const int trunc = std::min(phi.truncation(), a4.truncation());
  Chords t{a4, trunc};
  Series acc = inverse(at(phi, t(1, 3) + t(2, 3), t(3, 4)));
  acc = a4.reduce(acc * inverse(at(phi, t(1, 2), t(2, 3) + t(2, 4))));
  acc = a4.reduce(acc * at(phi, t(2, 3), t(3, 4)));
  acc = a4.reduce(acc * at(phi, t(1, 2) + t(1, 3), t(2, 4) + t(3, 4)));
  acc = a4.reduce(acc * at(phi, t(1, 2), t(2, 3)));
  return acc;
}

Series hexagon(const Series& phi, HexagonSign sign, const ChordAlgebra& a3) {
  require_unit(phi);
  if (a3.strands() != 3) throw std::invalid_argument("hexagons live in A_3");
  const int trunc = std::min(phi.truncation(), a3.truncation());
  Chords t{a3, trunc};
  const Rational half(sign == HexagonSign::plus ? 1 : -1, 2);
  Series acc = exp((t(1, 3) + t(2, 3)) * Rational(-half));
  acc = a3.reduce(acc * at(phi, t(1, 3), t(1, 2)));
  acc = a3.reduce(acc * exp(t(1, 3) * half));
  acc = a3.reduce(acc * inverse(at(phi, t(1, 3), t(2, 3))));
  acc = a3.reduce(acc * exp(t(2, 3) * half));
  acc = a3.reduce(acc * at(phi, t(1, 2), t(2, 3)));
  return acc;
}

Series dP(const Series& phi, DPForm form, const ChordAlgebra& a4) {
  if (a4.strands() != 4) throw std::invalid_argument("dP lives in A_4");
  const int trunc = std::min(phi.truncation(), a4.truncation());
  Chords t{a4, trunc};
  Series sum(a4.alphabet(), trunc);
  if (form == DPForm::signed_form) {
    sum -= at(phi, t(1, 2), t(2, 3) + t(2, 4));
    sum -= at(phi, t(1, 3) + t(2, 3), t(3, 4));
    sum += at(phi, t(2, 3), t(3, 4));
    sum += at(phi, t(1, 2) + t(1, 3), t(2, 4) + t(3, 4));
    sum += at(phi, t(1, 2), t(2, 3));
  } else {
    sum += at(phi, t(1, 2), t(2, 3));
    sum += at(phi, t(3, 4), t(1, 3) + t(2, 3));
    sum += at(phi, t(2, 3) + t(2, 4), t(1, 2));
    sum += at(phi, t(2, 3), t(3, 4));
    sum += at(phi, t(1, 2) + t(1, 3), t(2, 4) + t(3, 4));
  }
  return a4.reduce(sum);
}

Series dH(const Series& phi, DHForm form, const ChordAlgebra& a3) {
  if (a3.strands() != 3) throw std::invalid_argument("dH lives in A_3");
  const int trunc = std::min(phi.truncation(), a3.truncation());
  Chords t{a3, trunc};
  if (form == DHForm::antisymmetrized)
    return a3.reduce(at(phi, t(1, 2), t(2, 3)) + at(phi, t(2, 3), t(1, 3)) + at(phi, t(1, 3), t(1, 2)));
  return a3.reduce(at(phi, t(1, 3), t(1, 2)) - at(phi, t(1, 3), t(2, 3)) + at(phi, t(1, 2), t(2, 3)));
}

Series dH2_at(const Series& phi, const Series& a, const Series& b) {
  Series c = -(a + b);
  return at(phi, a, b) + at(phi, b, c) + at(phi, c, a);
}

Series dH2(const Series& phi) {
  const auto& xy = uf2_alphabet();
  if (!same_alphabet(phi.alphabet(), xy)) throw std::invalid_argument("dH2 acts on series in X, Y");
  return dH2_at(phi, Series::letter(xy, phi.truncation(), 0), Series::letter(xy, phi.truncation(), 1));
}

bool is_antisymmetric(const Series& phi) {
  const auto& xy = uf2_alphabet();
  if (!same_alphabet(phi.alphabet(), xy)) throw std::invalid_argument("anti-symmetry is defined on series in X, Y");
  Series swapped = at(phi, Series::letter(xy, phi.truncation(), 1), Series::letter(xy, phi.truncation(), 0));
  return (phi + swapped).is_zero();
}

Series pattern_image(const Series& a, std::string_view pattern, const ChordAlgebra& a4) {
  SetMap f = SetMap::from_pattern(pattern, a4.strands());
  return induced_map(f, a, a4);
}

EquationReport verify_linearization(const Series& phi, const Series& phi2, int m, const ChordAlgebras& algebras) {
  const auto& a3 = algebras.a3();
  const auto& a4 = algebras.a4();
  if (m < 1) throw std::invalid_argument("linearization degree must be >= 1");
  if (m > a3.truncation() || m > a4.truncation()) throw std::invalid_argument("chord algebras are truncated below the requested degree");
  if (phi.truncation() < m || phi2.truncation() < m) throw std::invalid_argument("inputs are truncated below the requested degree");

  std::vector<std::string> violations;
  const Series big = phi.with_truncation(m);
  const Series small = phi2.with_truncation(m);
  if (big.constant_term() != 1 || small.constant_term() != 1) {
    EquationReport r;
    r.violations.push_back("constant term is not 1");
    return r;
  }
  if (!is_grouplike(big)) violations.push_back("first series is not group-like");
  if (!is_grouplike(small)) violations.push_back("second series is not group-like");
  const Series diff = big - small;
  if (auto low = diff.lowest_degree(); low && *low < m) violations.push_back("series differ below degree m");
  const Series delta = diff.homogeneous(m);
  if (!is_primitive(delta)) violations.push_back("degree-m difference is not primitive");

  const Series one4 = Series::one(a4.alphabet(), m);
  const Series one3 = Series::one(a3.alphabet(), m);
  const Series p_big = pentagon(big, a4), p_small = pentagon(small, a4);
  if (satisfied_through(p_big - one4) < m - 1 || satisfied_through(p_small - one4) < m - 1)
    violations.push_back("pentagon fails below degree m");

  std::map<std::string, Series> residuals;
  residuals.emplace("pentagon", a4.reduce(p_big - p_small - dP(delta, DPForm::signed_form, a4)));
  const Series dh = dH(delta, a3);
  for (auto [name, sign] : {std::pair{"hexagon+", HexagonSign::plus}, std::pair{"hexagon-", HexagonSign::minus}}) {
    const Series h_big = hexagon(big, sign, a3), h_small = hexagon(small, sign, a3);
    if (satisfied_through(h_big - one3) < m - 1 || satisfied_through(h_small - one3) < m - 1)
      violations.push_back(std::string(name) + " fails below degree m");
    residuals.emplace(name, a3.reduce(h_big - h_small - dh));
  }
  EquationReport r = make_report(std::move(residuals));
  r.violations = std::move(violations);
  return r;
}

Series four_permutation_identity(const Series& phi, const ChordAlgebras& algebras) {
  const auto& a4 = algebras.a4();
  const Series dp = dP(phi, DPForm::signed_form, a4);
  Series lhs(a4.alphabet(), dp.truncation());
  for (const char* sigma : {"1234", "4231", "1342", "4312"}) lhs += permute(parse_permutation(sigma), dp, a4);
  const Series dh = dH(phi, algebras.a3());
  Series rhs(a4.alphabet(), dp.truncation());
  for (const char* pattern : {"123", "(34)21", "423", "(31)24"}) rhs += pattern_image(dh, pattern, a4);
  return a4.reduce(lhs - rhs);
}

IdentitySides permuto_associahedron_sides(const Series& phi, const ChordAlgebras& algebras) {
  const auto& a4 = algebras.a4();
  const Series dp = dP(phi, DPForm::signed_form, a4);
  const Series dh = dH(phi, algebras.a3());
  Series lhs = pattern_image(dp, "1234", a4) - pattern_image(dp, "1243", a4) + pattern_image(dp, "1423", a4) -
               pattern_image(dp, "4123", a4);
  Series rhs = pattern_image(dh, "34(12)", a4) - pattern_image(dh, "(23)41", a4) + pattern_image(dh, "241", a4) -
               pattern_image(dh, "342", a4);
  return {a4.reduce(lhs), a4.reduce(rhs)};
}

Series permuto_associahedron_identity(const Series& phi, const ChordAlgebras& algebras) {
  const auto sides = permuto_associahedron_sides(phi, algebras);
  return algebras.a4().reduce(sides.lhs - sides.rhs);
}

MainLemmaReport main_lemma_check(int m, const ChordAlgebra& a4) {
  if (m < 1) throw std::invalid_argument("main lemma check needs degree >= 1");
  if (m > a4.truncation()) throw std::invalid_argument("A_4 is truncated below the requested degree");
  MainLemmaReport report;
  report.degree = m;
  const auto basis = lyndon_basis(uf2_alphabet(), m);
  report.primitive_dim = basis.size();

  // Rows: normal words of A_4 in degree m; columns: Lyndon basis elements.
  std::vector<SparseVector::Storage> rows(a4.dim(m));
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (const auto& [row, c] : a4.coordinates(dP(basis[j], DPForm::signed_form, a4), m)) rows[row].emplace(j, c);
  SparseMatrix system(basis.size());
  for (auto& r : rows) system.push_row(SparseVector(std::move(r)));

  const auto kernel = kernel_basis(system);
  report.kernel_dim = kernel.size();
  report.included = true;
  for (const auto& k : kernel) {
    Series phi(uf2_alphabet(), m);
    for (const auto& [j, c] : k) phi += basis[j] * c;
    Series image = dH2(phi);
    if (!image.is_zero()) {
      report.included = false;
      report.witnesses.push_back({phi, image});
    }
    report.kernel.push_back(std::move(phi));
  }
  return report;
}

Series four_dh_sum_free(const Series& phi) {
  const auto& f3 = free3_alphabet();
  const int trunc = phi.truncation();
  Series t12 = Series::letter(f3, trunc, 0), t23 = Series::letter(f3, trunc, 1), t24 = Series::letter(f3, trunc, 2);
  return dH2_at(phi, t12, t23) + dH2_at(phi, t23 + t24, t12) + dH2_at(phi, t24, t23) + dH2_at(phi, t12 + t23, t24);
}

ProjectionReport projection_consequences(const Series& phi, const ChordAlgebra& a4) {
  if (!same_alphabet(phi.alphabet(), uf2_alphabet())) throw std::invalid_argument("phi must be a series in X, Y");
  if (!is_zero(phi.constant_term()) || !is_primitive(phi)) throw std::invalid_argument("phi must be primitive");
  if (!is_antisymmetric(phi)) throw std::invalid_argument("phi must be anti-symmetric");
  if (phi.truncation() > a4.truncation()) throw std::invalid_argument("A_4 is truncated below phi");
  if (!dP(phi, DPForm::signed_form, a4).is_zero()) throw std::invalid_argument("phi must lie in the kernel of dP");

  ProjectionReport r;
  r.four_dh_sum = four_dh_sum_free(phi);
  r.four_dh_sum_vanishes = r.four_dh_sum.is_zero();

  const auto& xy = uf2_alphabet();
  const int trunc = phi.truncation();
  Series X = Series::letter(xy, trunc, 0), Y = Series::letter(xy, trunc, 1);
  auto D = [&](const Series& a, const Series& b) { return dH2_at(phi, a, b); };

  const Series p1 = named_hom(NamedHom::p1, r.four_dh_sum);
  r.p1_consistent = (p1 - (D(X, Y) * Rational(2) + D(X + Y, X) * Rational(2))).is_zero();
  r.p1_relation = p1.is_zero() && (D(X + Y, X) + D(X, Y)).is_zero();

  const Series p2 = named_hom(NamedHom::p2, r.four_dh_sum);
  r.p2_consistent = (p2 - (D(X, X) + D(Y, X) + D(X + Y, X) + D(X * Rational(2), Y))).is_zero();
  r.p2_relation = p2.is_zero() && (D(X * Rational(2), Y) - D(X, Y) * Rational(2)).is_zero();

  try {
    const auto a = ad_coefficients(D(X, Y));
    r.ad_coefficients_vanish = std::all_of(a.begin(), a.end(), [](const Rational& c) { return is_zero(c); });
  } catch (const NotInSpan&) {
    r.ad_coefficients_vanish = false;
  }
  return r;
}

Series ad_power(int n, int truncation) {
  if (n < 1) throw std::invalid_argument("ad_power needs n >= 1");
  const auto& xy = uf2_alphabet();
  Series s = Series::letter(xy, truncation, 0);
  Series Y = Series::letter(xy, truncation, 1);
  for (int k = 1; k < n; ++k) s = bracket(Y, s);
  return s;
}

std::vector<Rational> ad_coefficients(const Series& a) {
  if (!same_alphabet(a.alphabet(), uf2_alphabet())) throw std::invalid_argument("ad_coefficients acts on series in X, Y");
  if (!is_zero(a.constant_term())) throw NotInSpan("constant term outside span{(ad Y)^(n-1) X}");
  std::vector<Rational> coeffs;
  const int top = a.highest_degree().value_or(0);
  for (int d = 1; d <= top; ++d) {
    Series part = a.homogeneous(d);
    Word key = Word::repeat(1, d - 1) + Word{0};
    Rational c = part.coefficient(key);
    if (!(part - ad_power(d, a.truncation()) * c).is_zero())
      throw NotInSpan("degree " + std::to_string(d) + " component is outside span{(ad Y)^(n-1) X}");
    coeffs.push_back(c);
  }
  return coeffs;
}

}  // namespace assoc
