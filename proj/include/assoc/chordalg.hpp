#pragma once

#include "assoc/exactlin.hpp"
#include "assoc/ncpoly.hpp"

#include <array>
#include <functional>
#include <string_view>
#include <vector>

namespace assoc {

inline constexpr int kMaxStrands = 5;

/// Chord t_ij between strands i < j (1-based).
struct ChordGenerator {
  int i;
  int j;

  ChordGenerator(int a, int b);
  friend bool operator==(const ChordGenerator&, const ChordGenerator&) = default;
};

/// Generator alphabet of the chord algebra on n strands. Letters are ordered
/// by larger strand first, then smaller: t12, t13, t23, t14, t24, t34, ...
const AlphabetPtr& chord_alphabet(int strands);
Letter chord_letter(int strands, ChordGenerator g);
ChordGenerator chord_of_letter(int strands, Letter l);

/// Alphabet {t12, t23, t24}: the free subalgebra of A_4 on chords touching strand 2.
const AlphabetPtr& free3_alphabet();

/// Partial map [r] -> [s]; unassigned points never occur in a preimage.
class SetMap {
public:
  /// `assignment[k]` is the image of k+1, or 0 when unassigned.
  SetMap(int s, std::vector<int> assignment);

  static SetMap identity(int n);
  /// Group notation such as "(34)21": the k-th group lists the preimage of k.
  /// Points of [r] not listed are unassigned.
  static SetMap from_pattern(std::string_view pattern, int r);

  int domain_size() const { return static_cast<int>(assignment_.size()); }
  int codomain_size() const { return s_; }
  std::vector<int> preimage(int target) const;

private:
  int s_;
  std::vector<int> assignment_;
};

/// One-line permutation notation: sigma[k-1] = sigma(k).
using Permutation = std::vector<int>;
Permutation parse_permutation(std::string_view text);
Permutation compose(const Permutation& sigma, const Permutation& tau);

/// The chord-diagram algebra A_n truncated at degree m, presented as the free
/// algebra on t_ij modulo the two-sided ideal of locality and 4T relations.
/// Each degree keeps an echelon basis of the ideal over the word basis in
/// (degree, lexicographic) order; the non-pivot words form the normal basis.
class ChordAlgebra {
public:
  ChordAlgebra(int strands, int truncation);

  int strands() const { return strands_; }
  int truncation() const { return truncation_; }
  const AlphabetPtr& alphabet() const { return alphabet_; }

  /// Degree-1 element t_ij at this truncation.
  Series generator(int i, int j) const;

  /// The locality and 4T elements, degree 2.
  const std::vector<Series>& relations() const { return relations_; }

  std::size_t dim(int degree) const { return normal_cols_.at(degree).size(); }
  std::vector<std::size_t> dims() const;
  std::size_t ideal_rank(int degree) const { return ideal_.at(degree).rank(); }
  std::vector<Word> normal_words(int degree) const;
  /// Echelon rows of the ideal at one degree, as series.
  std::vector<Series> ideal_basis(int degree) const;

  /// Canonical representative supported on normal words. The input must use
  /// this algebra's alphabet and a truncation no larger than this one.
  Series reduce(const Series& a) const;
  bool is_zero_class(const Series& a) const { return reduce(a).is_zero(); }
  bool equal(const Series& a, const Series& b) const { return is_zero_class(a - b); }

  /// Coordinates of the degree-d class of `a` over normal_words(d).
  SparseVector coordinates(const Series& a, int degree) const;

  Word decode(Index col, int degree) const;
  Index encode(const Word& w) const;

private:
  void check_input(const Series& a) const;

  int strands_;
  int truncation_;
  AlphabetPtr alphabet_;
  std::vector<Series> relations_;
  std::vector<Echelon> ideal_;
  std::vector<std::vector<Index>> normal_cols_;
  std::vector<Index> powers_;
};

/// Images of the generators of A_s under the map induced by f: [r] -> [s],
/// as degree-1 elements of A_r at the given truncation.
std::vector<Series> induced_images(const SetMap& f, int truncation);
/// Applies the induced map A_s -> A_r and reduces in `target` (r strands).
Series induced_map(const SetMap& f, const Series& a, const ChordAlgebra& target);

std::vector<Series> permutation_images(const Permutation& sigma, int truncation);
/// Strand action t_ij -> t_sigma(i)sigma(j), reduced.
Series permute(const Permutation& sigma, const Series& a, const ChordAlgebra& algebra);

enum class NamedHom { q, pi, i, p1, p2 };
NamedHom parse_named_hom(std::string_view name);
/// Generator images of a named homomorphism at the given truncation.
std::vector<Series> named_hom_images(NamedHom h, int truncation);
/// Applies a named homomorphism. q, pi, p1 and p2 land in the free algebra
/// on X, Y; i lands in A_3 and is reduced there when `a3` is given.
Series named_hom(NamedHom h, const Series& a, const ChordAlgebra* a3 = nullptr);

/// t12 + t23 + t13 in A_3.
Series center_element(int truncation);
/// Relabels the three strands of an A_3 element by `subset` and reduces.
Series embed(const std::array<int, 3>& subset, const Series& a, const ChordAlgebra& target);

/// True when the generator substitution kills every locality and 4T relation
/// of `source` (and, when max_degree > 2, every ideal basis row of degree
/// <= max_degree). `vanishes` decides zero in the target.
bool annihilates_relations(const ChordAlgebra& source, std::span<const Series> images,
                           const std::function<bool(const Series&)>& vanishes, int max_degree = 2);

}  // namespace assoc
