#pragma once

#include "assoc/rational.hpp"

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace assoc {

/// Ordered set of distinct, nonempty generator names.
class Alphabet {
public:
  explicit Alphabet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  /// Words are written with "." separators when any name is longer than one character.
  bool dotted() const { return dotted_; }

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.names_ == b.names_; }

private:
  std::vector<std::string> names_;
  bool dotted_ = false;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

AlphabetPtr make_alphabet(std::vector<std::string> names);
/// The shared {X, Y} alphabet of the two-generator free algebra.
const AlphabetPtr& uf2_alphabet();

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b);

using Letter = std::uint8_t;

/// Monomial of the free associative algebra: one byte per letter. Ordered by
/// degree first, then lexicographically by letter index.
class Word {
public:
  Word() = default;
  Word(std::initializer_list<Letter> letters);
  static Word from_letters(std::span<const Letter> letters);
  static Word repeat(Letter l, std::size_t n);

  std::size_t degree() const { return bytes_.size(); }
  bool empty() const { return bytes_.empty(); }
  Letter operator[](std::size_t i) const { return static_cast<Letter>(bytes_[i]); }
  Letter back() const { return static_cast<Letter>(bytes_.back()); }

  void push_back(Letter l) { bytes_.push_back(static_cast<char>(l)); }
  Word prefix(std::size_t n) const;
  Word suffix_from(std::size_t pos) const;
  Word reversed() const;

  friend Word operator+(const Word& a, const Word& b);

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

  /// Lexicographic comparison ignoring degree (used for Lyndon words).
  static bool lex_less(const Word& a, const Word& b) { return a.bytes_ < b.bytes_; }

private:
  std::string bytes_;
};

std::string word_to_string(const Alphabet& alphabet, const Word& w);
/// Inverse of word_to_string; throws std::invalid_argument on unknown names.
Word parse_word(const Alphabet& alphabet, std::string_view text);

/// Truncated non-commutative power series: every word of degree above the
/// truncation is discarded, and no zero coefficient is stored.
class Series {
public:
  using Terms = std::map<Word, Rational>;

  Series(AlphabetPtr alphabet, int truncation);

  static Series constant(AlphabetPtr alphabet, int truncation, const Rational& c);
  static Series one(AlphabetPtr alphabet, int truncation) { return constant(std::move(alphabet), truncation, 1); }
  static Series letter(AlphabetPtr alphabet, int truncation, Letter l);
  static Series monomial(AlphabetPtr alphabet, int truncation, const Word& w, const Rational& c = 1);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  int truncation() const { return truncation_; }
  const Terms& terms() const { return terms_; }

  /// Adds c * w; words above the truncation are dropped.
  void add_term(const Word& w, const Rational& c);
  const Rational& coefficient(const Word& w) const;
  Rational constant_term() const { return coefficient(Word{}); }

  bool is_zero() const { return terms_.empty(); }
  /// Lowest degree carrying a nonzero coefficient.
  std::optional<int> lowest_degree() const;
  /// Highest degree carrying a nonzero coefficient.
  std::optional<int> highest_degree() const;

  /// Degree-d component, keeping this truncation.
  Series homogeneous(int d) const;
  /// Components of degree <= d, keeping this truncation.
  Series up_to(int d) const;
  /// Narrows (discarding terms) or widens (reading the series as a
  /// polynomial whose missing coefficients are zero).
  Series with_truncation(int m) const;

  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  Series& operator*=(const Rational& s);

  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator-(Series a) { return a *= Rational(-1); }
  friend Series operator*(Series a, const Rational& s) { return a *= s; }
  friend Series operator*(const Rational& s, Series a) { return a *= s; }
  friend Series operator*(const Series& a, const Series& b);

  friend bool operator==(const Series& a, const Series& b);

private:
  void check_compatible(const Series& o) const;

  AlphabetPtr alphabet_;
  int truncation_;
  Terms terms_;
};

/// a*b - b*a
Series bracket(const Series& a, const Series& b);

/// Geometric series on the augmentation part. Throws std::domain_error
/// when the constant term is zero.
Series inverse(const Series& a);
/// Throws std::domain_error unless the constant term is zero.
Series exp(const Series& a);
/// Throws std::domain_error unless the constant term is one.
Series log(const Series& a);

/// Applies the unital algebra homomorphism sending letter k to images[k].
/// Images must share one alphabet and truncation and have zero constant
/// term. The result is truncated at min(phi, images) truncation.
Series substitute(const Series& phi, std::span<const Series> images);

/// Coefficient of the word XY of the first alphabet letters.
Rational c2(const Series& a);

/// Left-normed bracketing [..[[x1,x2],x3],..,xn] of a word.
Series dynkin_bracketing(const AlphabetPtr& alphabet, int truncation, const Word& w);
/// Dynkin-Specht-Wever test on every homogeneous component. Throws
/// std::invalid_argument when the constant term is nonzero.
bool is_primitive(const Series& a);
bool is_grouplike(const Series& a);

/// Lyndon words of exactly `degree` letters over `alphabet_size` letters,
/// in lexicographic order.
std::vector<Word> lyndon_words(std::size_t alphabet_size, int degree);
/// Standard bracketing of a Lyndon word.
Series lyndon_bracket(const AlphabetPtr& alphabet, int truncation, const Word& w);
/// Standard bracketings of all degree-d Lyndon words (truncation d).
std::vector<Series> lyndon_basis(const AlphabetPtr& alphabet, int degree);
/// Necklace-counting dimension of the degree-d free Lie algebra component.
std::size_t witt_dimension(std::size_t alphabet_size, int degree);

/// Commutative image: exponent vector -> coefficient.
using CommutativePoly = std::map<std::vector<int>, Rational>;
CommutativePoly abelianize(const Series& a);

}  // namespace assoc
