#include "assoc/chordalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace assoc {

ChordGenerator::ChordGenerator(int a, int b) : i(std::min(a, b)), j(std::max(a, b)) {
  if (a == b || i < 1) throw std::invalid_argument("chord needs two distinct strands");
}

namespace {

void check_strands(int n) {
  if (n < 2 || n > kMaxStrands) throw std::invalid_argument("strand count must be in [2, 5]");
}

std::vector<std::string> chord_names(int n) {
  std::vector<std::string> names;
  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i) names.push_back("t" + std::to_string(i) + std::to_string(j));
  return names;
}

}  // namespace

const AlphabetPtr& chord_alphabet(int strands) {
  check_strands(strands);
  static const std::array<AlphabetPtr, kMaxStrands + 1> alphabets = [] {
    std::array<AlphabetPtr, kMaxStrands + 1> a;
    for (int n = 2; n <= kMaxStrands; ++n) a[n] = make_alphabet(chord_names(n));
    return a;
  }();
  return alphabets[strands];
}

Letter chord_letter(int strands, ChordGenerator g) {
  if (g.j > strands) throw std::out_of_range("chord outside the strand range");
  return static_cast<Letter>((g.j - 1) * (g.j - 2) / 2 + (g.i - 1));
}

ChordGenerator chord_of_letter(int strands, Letter l) {
  for (int j = 2; j <= strands; ++j) {
    int base = (j - 1) * (j - 2) / 2;
    if (l < base + j - 1) return ChordGenerator(l - base + 1, j);
  }
  throw std::out_of_range("letter outside the chord alphabet");
}

const AlphabetPtr& free3_alphabet() {
  static const AlphabetPtr a = make_alphabet({"t12", "t23", "t24"});
  return a;
}

// SetMap / Permutation --------------------------------------------------------

SetMap::SetMap(int s, std::vector<int> assignment) : s_(s), assignment_(std::move(assignment)) {
  for (int v : assignment_)
    if (v < 0 || v > s_) throw std::invalid_argument("set map value outside codomain");
}

SetMap SetMap::identity(int n) {
  std::vector<int> a(n);
  for (int k = 0; k < n; ++k) a[k] = k + 1;
  return SetMap(n, std::move(a));
}

SetMap SetMap::from_pattern(std::string_view pattern, int r) {
  std::vector<int> assignment(r, 0);
  int group = 0;
  bool in_paren = false;
  for (char c : pattern) {
    if (c == '(') {
      if (in_paren) throw std::invalid_argument("nested group in pattern");
      in_paren = true;
      ++group;
    } else if (c == ')') {
      if (!in_paren) throw std::invalid_argument("unbalanced pattern");
      in_paren = false;
    } else if (c >= '1' && c <= '9') {
      if (!in_paren) ++group;
      int point = c - '0';
      if (point > r) throw std::invalid_argument("pattern point outside domain");
      if (assignment[point - 1] != 0) throw std::invalid_argument("pattern lists a point twice");
      assignment[point - 1] = group;
    } else {
      throw std::invalid_argument("bad character in pattern");
    }
  }
  if (in_paren) throw std::invalid_argument("unbalanced pattern");
  return SetMap(group, std::move(assignment));
}

std::vector<int> SetMap::preimage(int target) const {
  std::vector<int> pre;
  for (int k = 0; k < domain_size(); ++k)
    if (assignment_[k] == target) pre.push_back(k + 1);
  return pre;
}

Permutation parse_permutation(std::string_view text) {
  Permutation p;
  for (char c : text) {
    if (c < '1' || c > '9') throw std::invalid_argument("bad permutation");
    p.push_back(c - '0');
  }
  auto sorted = p;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < sorted.size(); ++k)
    if (sorted[k] != static_cast<int>(k) + 1) throw std::invalid_argument("not a permutation");
  return p;
}

Permutation compose(const Permutation& sigma, const Permutation& tau) {
  if (sigma.size() != tau.size()) throw std::invalid_argument("permutation sizes differ");
  Permutation out(sigma.size());
  for (std::size_t k = 0; k < tau.size(); ++k) out[k] = sigma[tau[k] - 1];
  return out;
}

// ChordAlgebra ----------------------------------------------------------------

ChordAlgebra::ChordAlgebra(int strands, int truncation)
    : strands_(strands), truncation_(truncation), alphabet_(chord_alphabet(strands)) {
  if (truncation < 0) throw std::invalid_argument("truncation must be non-negative");
  const Index k = alphabet_->size();
  powers_.push_back(1);
  for (int d = 1; d <= truncation_; ++d) {
    if (powers_.back() > (Index{1} << 26) / k) throw std::invalid_argument("chord algebra too large to build");
    powers_.push_back(powers_.back() * k);
  }

  auto t = [&](int i, int j) { return Series::letter(alphabet_, 2, chord_letter(strands_, ChordGenerator(i, j))); };
  for (int i = 1; i <= strands_; ++i)
    for (int j = i + 1; j <= strands_; ++j)
      for (int a = 1; a <= strands_; ++a)
        for (int b = a + 1; b <= strands_; ++b) {
          if (a == i || a == j || b == i || b == j) continue;
          if (std::pair(i, j) < std::pair(a, b)) relations_.push_back(bracket(t(i, j), t(a, b)));
        }
  for (int i = 1; i <= strands_; ++i)
    for (int j = 1; j <= strands_; ++j)
      for (int l = 1; l <= strands_; ++l) {
        if (i == j || j == l || i == l) continue;
        relations_.push_back(bracket(t(i, j) + t(i, l), t(j, l)));
      }

  std::vector<SparseVector> rel_vectors;
  for (const auto& r : relations_) {
    SparseVector v;
    for (const auto& [w, c] : r.terms()) v.add_at(encode(w), c);
    rel_vectors.push_back(std::move(v));
  }

  // I_d = I_{d-1} * V + V^{d-2} * R: shifted rows keep distinct leading
  // words, so only the new products need elimination.
  ideal_.reserve(truncation_ + 1);
  for (int d = 0; d <= truncation_; ++d) {
    Echelon e(powers_[d]);
    if (d >= 2) {
      for (const auto& row : ideal_[d - 1].rows()) {
        for (Index x = 0; x < k; ++x) {
          SparseVector::Storage shifted;
          for (const auto& [c, v] : row) shifted.emplace_hint(shifted.end(), c * k + x, v);
          e.insert_unchecked(SparseVector(std::move(shifted)));
        }
      }
      // Products whose leading word is new go in directly; the rest are
      // eliminated afterwards so that remainders meet every short row.
      const auto& quadratic = d == 2 ? rel_vectors : ideal_[2].rows();
      std::vector<SparseVector> deferred;
      for (Index w = 0; w < powers_[d - 2]; ++w) {
        for (const auto& r : quadratic) {
          SparseVector::Storage prod;
          for (const auto& [c, v] : r) prod.emplace_hint(prod.end(), w * powers_[2] + c, v);
          SparseVector p(std::move(prod));
          if (d > 2 && !e.is_pivot(p.leading()))
            e.insert_unchecked(std::move(p));
          else
            deferred.push_back(std::move(p));
        }
      }
      for (auto& p : deferred) e.insert(std::move(p));
    }
    std::vector<Index> normal;
    normal.reserve(powers_[d] - e.rank());
    for (Index c = 0; c < powers_[d]; ++c)
      if (!e.is_pivot(c)) normal.push_back(c);
    normal_cols_.push_back(std::move(normal));
    ideal_.push_back(std::move(e));
  }
}

Series ChordAlgebra::generator(int i, int j) const {
  return Series::letter(alphabet_, truncation_, chord_letter(strands_, ChordGenerator(i, j)));
}

std::vector<std::size_t> ChordAlgebra::dims() const {
  std::vector<std::size_t> out;
  for (int d = 0; d <= truncation_; ++d) out.push_back(dim(d));
  return out;
}

std::vector<Word> ChordAlgebra::normal_words(int degree) const {
  std::vector<Word> out;
  for (Index c : normal_cols_.at(degree)) out.push_back(decode(c, degree));
  return out;
}

std::vector<Series> ChordAlgebra::ideal_basis(int degree) const {
  std::vector<Series> out;
  for (const auto& row : ideal_.at(degree).rows()) {
    Series s(alphabet_, truncation_);
    for (const auto& [c, v] : row) s.add_term(decode(c, degree), v);
    out.push_back(std::move(s));
  }
  return out;
}

Word ChordAlgebra::decode(Index col, int degree) const {
  const Index k = alphabet_->size();
  std::vector<Letter> letters(degree);
  for (int p = degree - 1; p >= 0; --p) {
    letters[p] = static_cast<Letter>(col % k);
    col /= k;
  }
  return Word::from_letters(letters);
}

Index ChordAlgebra::encode(const Word& w) const {
  const Index k = alphabet_->size();
  Index col = 0;
  for (std::size_t p = 0; p < w.degree(); ++p) col = col * k + w[p];
  return col;
}

void ChordAlgebra::check_input(const Series& a) const {
  if (!same_alphabet(a.alphabet(), alphabet_)) throw std::invalid_argument("element is not over this chord algebra");
  if (a.truncation() > truncation_) throw std::invalid_argument("element truncation exceeds the algebra truncation");
}

Series ChordAlgebra::reduce(const Series& a) const {
  check_input(a);
  Series out(alphabet_, a.truncation());
  auto it = a.terms().begin();
  while (it != a.terms().end()) {
    const int d = static_cast<int>(it->first.degree());
    SparseVector::Storage part;
    for (; it != a.terms().end() && static_cast<int>(it->first.degree()) == d; ++it)
      part.emplace_hint(part.end(), encode(it->first), it->second);
    SparseVector reduced = d >= 2 ? ideal_[d].reduce(SparseVector(std::move(part))) : SparseVector(std::move(part));
    for (const auto& [c, v] : reduced) out.add_term(decode(c, d), v);
  }
  return out;
}

SparseVector ChordAlgebra::coordinates(const Series& a, int degree) const {
  Series part = reduce(a.homogeneous(degree));
  const auto& normal = normal_cols_.at(degree);
  SparseVector out;
  for (const auto& [w, c] : part.terms()) {
    auto pos = std::lower_bound(normal.begin(), normal.end(), encode(w));
    out.set(static_cast<Index>(pos - normal.begin()), c);
  }
  return out;
}

// Maps ------------------------------------------------------------------------

std::vector<Series> induced_images(const SetMap& f, int truncation) {
  const int r = f.domain_size();
  const int s = f.codomain_size();
  const AlphabetPtr& source = chord_alphabet(s);
  const AlphabetPtr& target = chord_alphabet(r);
  std::vector<Series> images;
  for (std::size_t l = 0; l < source->size(); ++l) {
    ChordGenerator g = chord_of_letter(s, static_cast<Letter>(l));
    Series img(target, truncation);
    for (int alpha : f.preimage(g.i))
      for (int beta : f.preimage(g.j)) img.add_term(Word{chord_letter(r, ChordGenerator(alpha, beta))}, 1);
    images.push_back(std::move(img));
  }
  return images;
}

Series induced_map(const SetMap& f, const Series& a, const ChordAlgebra& target) {
  if (!same_alphabet(a.alphabet(), chord_alphabet(f.codomain_size())))
    throw std::invalid_argument("induced_map source does not match the set map codomain");
  if (target.strands() != f.domain_size()) throw std::invalid_argument("induced_map target does not match the set map domain");
  return target.reduce(substitute(a, induced_images(f, std::min(a.truncation(), target.truncation()))));
}

std::vector<Series> permutation_images(const Permutation& sigma, int truncation) {
  const int n = static_cast<int>(sigma.size());
  const AlphabetPtr& alpha = chord_alphabet(n);
  std::vector<Series> images;
  for (std::size_t l = 0; l < alpha->size(); ++l) {
    ChordGenerator g = chord_of_letter(n, static_cast<Letter>(l));
    images.push_back(Series::letter(alpha, truncation, chord_letter(n, ChordGenerator(sigma[g.i - 1], sigma[g.j - 1]))));
  }
  return images;
}

Series permute(const Permutation& sigma, const Series& a, const ChordAlgebra& algebra) {
  if (static_cast<int>(sigma.size()) != algebra.strands()) throw std::invalid_argument("permutation size mismatch");
  return algebra.reduce(substitute(a, permutation_images(sigma, a.truncation())));
}

NamedHom parse_named_hom(std::string_view name) {
  if (name == "q") return NamedHom::q;
  if (name == "pi") return NamedHom::pi;
  if (name == "i") return NamedHom::i;
  if (name == "p1") return NamedHom::p1;
  if (name == "p2") return NamedHom::p2;
  throw std::invalid_argument("unknown homomorphism '" + std::string(name) + "'");
}

namespace {

AlphabetPtr named_hom_source(NamedHom h) {
  switch (h) {
    case NamedHom::q: return chord_alphabet(4);
    case NamedHom::pi: return chord_alphabet(3);
    case NamedHom::i: return uf2_alphabet();
    case NamedHom::p1:
    case NamedHom::p2: return free3_alphabet();
  }
  throw std::logic_error("unreachable");
}

}  // namespace

std::vector<Series> named_hom_images(NamedHom h, int truncation) {
  const auto& xy = uf2_alphabet();
  Series X = Series::letter(xy, truncation, 0);
  Series Y = Series::letter(xy, truncation, 1);
  Series mXY = -(X + Y);
  auto by_chord = [&](int n, std::initializer_list<std::pair<ChordGenerator, Series>> table) {
    std::vector<Series> images(chord_alphabet(n)->size(), Series(xy, truncation));
    for (const auto& [g, img] : table) images[chord_letter(n, g)] = img;
    return images;
  };
  switch (h) {
    case NamedHom::q:
      return by_chord(4, {{{1, 2}, X}, {{2, 3}, Y}, {{1, 3}, mXY}, {{1, 4}, Y}, {{2, 4}, mXY}, {{3, 4}, X}});
    case NamedHom::pi:
      return by_chord(3, {{{1, 2}, X}, {{2, 3}, Y}, {{1, 3}, mXY}});
    case NamedHom::i: {
      const auto& a3 = chord_alphabet(3);
      return {Series::letter(a3, truncation, chord_letter(3, {1, 2})), Series::letter(a3, truncation, chord_letter(3, {2, 3}))};
    }
    case NamedHom::p1: return {X, Y, X};  // t12, t23, t24
    case NamedHom::p2: return {X, X, Y};
  }
  throw std::logic_error("unreachable");
}

Series named_hom(NamedHom h, const Series& a, const ChordAlgebra* a3) {
  if (!same_alphabet(a.alphabet(), named_hom_source(h))) throw std::invalid_argument("element is not in the source of this map");
  Series image = substitute(a, named_hom_images(h, a.truncation()));
  if (h == NamedHom::i && a3 != nullptr) {
    if (a3->strands() != 3) throw std::invalid_argument("i lands in A_3");
    return a3->reduce(image.with_truncation(std::min(image.truncation(), a3->truncation())));
  }
  return image;
}

Series center_element(int truncation) {
  const auto& a3 = chord_alphabet(3);
  Series z(a3, truncation);
  for (auto g : {ChordGenerator(1, 2), ChordGenerator(2, 3), ChordGenerator(1, 3)}) z.add_term(Word{chord_letter(3, g)}, 1);
  return z;
}

Series embed(const std::array<int, 3>& subset, const Series& a, const ChordAlgebra& target) {
  const int n = target.strands();
  if (!(subset[0] >= 1 && subset[0] < subset[1] && subset[1] < subset[2] && subset[2] <= n))
    throw std::invalid_argument("embedding subset must be strictly increasing within the strands");
  std::vector<int> assignment(n, 0);
  for (int k = 0; k < 3; ++k) assignment[subset[k] - 1] = k + 1;
  return induced_map(SetMap(3, std::move(assignment)), a, target);
}

bool annihilates_relations(const ChordAlgebra& source, std::span<const Series> images,
                           const std::function<bool(const Series&)>& vanishes, int max_degree) {
  for (const auto& r : source.relations())
    if (!vanishes(substitute(r, images))) return false;
  for (int d = 3; d <= std::min(max_degree, source.truncation()); ++d)
    for (const auto& row : source.ideal_basis(d))
      if (!vanishes(substitute(row, images))) return false;
  return true;
}

}  // namespace assoc
