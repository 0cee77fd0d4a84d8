#pragma once

#include "assoc/chordalg.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace assoc {

/// A_3 and A_4 built once and shared by every evaluator.
class ChordAlgebras {
public:
  ChordAlgebras(int a3_truncation, int a4_truncation) : a3_(3, a3_truncation), a4_(4, a4_truncation) {}

  const ChordAlgebra& a3() const { return a3_; }
  const ChordAlgebra& a4() const { return a4_; }

private:
  ChordAlgebra a3_;
  ChordAlgebra a4_;
};

/// Residuals keyed by equation name ("pentagon", "hexagon+", "hexagon-",
/// ...). A residual is the quantity that must vanish, e.g. P(Phi) - 1.
struct EquationReport {
  std::map<std::string, Series> residuals;
  /// Largest d with every residual zero in all degrees <= d.
  int satisfied_through = 0;
  /// Failed preconditions; a report with violations proves nothing.
  std::vector<std::string> violations;

  bool holds() const;
};

/// Largest d such that `residual` vanishes in every degree <= d (its
/// truncation when it is zero).
int satisfied_through(const Series& residual);
/// Degrees carrying a nonzero component.
std::vector<int> nonzero_degrees(const Series& residual);
EquationReport make_report(std::map<std::string, Series> residuals);

enum class HexagonSign { plus, minus };
enum class DPForm { signed_form, antisymmetrized };
enum class DHForm { signed_form, antisymmetrized };

/// Reduced P(Phi) in A_4, truncated at min(phi, a4) truncation.
Series pentagon(const Series& phi, const ChordAlgebra& a4);
/// Reduced H_+ or H_- of Phi in A_3.
Series hexagon(const Series& phi, HexagonSign sign, const ChordAlgebra& a3);

Series dP(const Series& phi, DPForm form, const ChordAlgebra& a4);
/// Signed: phi(t13,t12) - phi(t13,t23) + phi(t12,t23).
/// Antisymmetrized: phi(t12,t23) + phi(t23,t13) + phi(t13,t12).
/// The two agree when phi is anti-symmetric. Reduced in A_3.
Series dH(const Series& phi, DHForm form, const ChordAlgebra& a3);
inline Series dH(const Series& phi, const ChordAlgebra& a3) { return dH(phi, DHForm::signed_form, a3); }
/// phi(X,Y) + phi(Y,-X-Y) + phi(-X-Y,X) in the free algebra on X, Y.
Series dH2(const Series& phi);
/// The same three-term combination with X, Y replaced by arbitrary a, b.
Series dH2_at(const Series& phi, const Series& a, const Series& b);

/// phi(X,Y) + phi(Y,X) == 0.
bool is_antisymmetric(const Series& phi);

/// Image of an A_3 (or A_4) element under the map induced by a strand
/// pattern such as "(34)21" or "1243", reduced in A_4.
Series pattern_image(const Series& a, std::string_view pattern, const ChordAlgebra& a4);

/// Checks P(Phi) - P(Phi') = dP(phi) and H(Phi) - H(Phi') = dH(phi) through
/// degree m, where phi is the degree-m part of Phi - Phi'. Residual names:
/// "pentagon", "hexagon+", "hexagon-". Precondition failures are listed.
EquationReport verify_linearization(const Series& phi, const Series& phi2, int m, const ChordAlgebras& algebras);

/// sum_i sigma_i(dP(phi)) - [dH(123) + dH((34)21) + dH(423) + dH((31)24)].
Series four_permutation_identity(const Series& phi, const ChordAlgebras& algebras);
struct IdentitySides {
  Series lhs;
  Series rhs;
};

/// lhs = dP(1234) - dP(1243) + dP(1423) - dP(4123),
/// rhs = dH(34(12)) - dH((23)41) + dH(241) - dH(342), both reduced in A_4.
IdentitySides permuto_associahedron_sides(const Series& phi, const ChordAlgebras& algebras);
/// lhs - rhs of the permuto-associahedron display. From degree 4 on this is
/// nonzero for anti-symmetric phi; lhs + rhs vanishes instead.
Series permuto_associahedron_identity(const Series& phi, const ChordAlgebras& algebras);

struct MainLemmaWitness {
  Series phi;
  Series dh2;
};

struct MainLemmaReport {
  int degree = 0;
  std::size_t primitive_dim = 0;
  std::size_t kernel_dim = 0;
  bool included = false;
  /// Kernel basis of dP on degree-m primitives.
  std::vector<Series> kernel;
  /// Kernel elements whose dH2 is nonzero.
  std::vector<MainLemmaWitness> witnesses;
};

/// Kernel of dP on degree-m primitives (Lyndon coordinates) and whether dH2
/// vanishes on it.
MainLemmaReport main_lemma_check(int m, const ChordAlgebra& a4);

class NotInSpan : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct ProjectionReport {
  /// The four-dH sum over the free algebra on t12, t23, t24.
  Series four_dh_sum{free3_alphabet(), 0};
  bool four_dh_sum_vanishes = false;
  /// p1 of the sum equals 2 D(X,Y) + 2 D(X+Y,X), and D(X+Y,X) = -D(X,Y).
  bool p1_consistent = false;
  bool p1_relation = false;
  /// p2 of the sum equals D(X,X) + D(Y,X) + D(X+Y,X) + D(2X,Y), and D(2X,Y) = 2 D(X,Y).
  bool p2_consistent = false;
  bool p2_relation = false;
  /// D(X,Y) lies in span{(ad Y)^{n-1} X} with every coefficient zero.
  bool ad_coefficients_vanish = false;

  bool holds() const {
    return four_dh_sum_vanishes && p1_consistent && p1_relation && p2_consistent && p2_relation && ad_coefficients_vanish;
  }
};

/// The four-dH sum written over {t12, t23, t24}.
Series four_dh_sum_free(const Series& phi);
/// Throws std::invalid_argument unless phi is primitive, anti-symmetric and
/// in the kernel of dP.
ProjectionReport projection_consequences(const Series& phi, const ChordAlgebra& a4);


/// (ad Y)^{n-1}(X) = [Y, [Y, ... [Y, X]]].
Series ad_power(int n, int truncation);
/// Coordinates a_1, a_2, ... over (ad Y)^{n-1}(X), one per degree up to the
/// highest nonzero degree. Throws NotInSpan otherwise.
std::vector<Rational> ad_coefficients(const Series& a);

}  // namespace assoc
