#include "assoc/ncpoly.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace assoc {

// Alphabet --------------------------------------------------------------------

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw std::invalid_argument("alphabet must not be empty");
  if (names_.size() > 255) throw std::invalid_argument("alphabet too large");
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw std::invalid_argument("generator names must be nonempty");
    if (n.find('.') != std::string::npos) throw std::invalid_argument("generator names must not contain '.'");
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate generator name '" + n + "'");
    dotted_ = dotted_ || n.size() > 1;
  }
}

std::optional<std::size_t> Alphabet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

AlphabetPtr make_alphabet(std::vector<std::string> names) {
  return std::make_shared<const Alphabet>(std::move(names));
}

const AlphabetPtr& uf2_alphabet() {
  static const AlphabetPtr xy = make_alphabet({"X", "Y"});
  return xy;
}

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) { return a == b || *a == *b; }

// Word ------------------------------------------------------------------------

Word::Word(std::initializer_list<Letter> letters) {
  for (Letter l : letters) push_back(l);
}

Word Word::from_letters(std::span<const Letter> letters) {
  Word w;
  for (Letter l : letters) w.push_back(l);
  return w;
}

Word Word::repeat(Letter l, std::size_t n) {
  Word w;
  w.bytes_.assign(n, static_cast<char>(l));
  return w;
}

Word Word::prefix(std::size_t n) const {
  Word w;
  w.bytes_ = bytes_.substr(0, n);
  return w;
}

Word Word::suffix_from(std::size_t pos) const {
  Word w;
  w.bytes_ = bytes_.substr(pos);
  return w;
}

Word Word::reversed() const {
  Word w;
  w.bytes_.assign(bytes_.rbegin(), bytes_.rend());
  return w;
}

Word operator+(const Word& a, const Word& b) {
  Word w;
  w.bytes_.reserve(a.bytes_.size() + b.bytes_.size());
  w.bytes_ = a.bytes_;
  w.bytes_ += b.bytes_;
  return w;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.bytes_.size() <=> b.bytes_.size(); c != 0) return c;
  int c = a.bytes_.compare(b.bytes_);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::string word_to_string(const Alphabet& alphabet, const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.degree(); ++i) {
    if (i > 0 && alphabet.dotted()) out += '.';
    out += alphabet.name(w[i]);
  }
  return out;
}

Word parse_word(const Alphabet& alphabet, std::string_view text) {
  Word w;
  auto push = [&](std::string_view name) {
    auto idx = alphabet.index_of(name);
    if (!idx) throw std::invalid_argument("unknown generator '" + std::string(name) + "'");
    w.push_back(static_cast<Letter>(*idx));
  };
  if (text.empty()) return w;
  if (!alphabet.dotted()) {
    for (char c : text) push(std::string_view(&c, 1));
    return w;
  }
  std::size_t start = 0;
  while (true) {
    auto dot = text.find('.', start);
    push(text.substr(start, dot == std::string_view::npos ? std::string_view::npos : dot - start));
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return w;
}

// Series ----------------------------------------------------------------------

Series::Series(AlphabetPtr alphabet, int truncation) : alphabet_(std::move(alphabet)), truncation_(truncation) {
  if (!alphabet_) throw std::invalid_argument("series needs an alphabet");
  if (truncation_ < 0) throw std::invalid_argument("truncation must be non-negative");
}

Series Series::constant(AlphabetPtr alphabet, int truncation, const Rational& c) {
  Series s(std::move(alphabet), truncation);
  s.add_term(Word{}, c);
  return s;
}

Series Series::letter(AlphabetPtr alphabet, int truncation, Letter l) {
  if (l >= alphabet->size()) throw std::out_of_range("letter outside alphabet");
  Series s(std::move(alphabet), truncation);
  s.add_term(Word{l}, 1);
  return s;
}

Series Series::monomial(AlphabetPtr alphabet, int truncation, const Word& w, const Rational& c) {
  Series s(std::move(alphabet), truncation);
  s.add_term(w, c);
  return s;
}

void Series::add_term(const Word& w, const Rational& c) {
  if (static_cast<int>(w.degree()) > truncation_ || assoc::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (assoc::is_zero(it->second)) terms_.erase(it);
  }
}

const Rational& Series::coefficient(const Word& w) const {
  static const Rational zero(0);
  auto it = terms_.find(w);
  return it == terms_.end() ? zero : it->second;
}

std::optional<int> Series::lowest_degree() const {
  if (terms_.empty()) return std::nullopt;
  return static_cast<int>(terms_.begin()->first.degree());
}

std::optional<int> Series::highest_degree() const {
  if (terms_.empty()) return std::nullopt;
  return static_cast<int>(terms_.rbegin()->first.degree());
}

Series Series::homogeneous(int d) const {
  Series s(alphabet_, truncation_);
  for (const auto& [w, c] : terms_)
    if (static_cast<int>(w.degree()) == d) s.terms_.emplace_hint(s.terms_.end(), w, c);
  return s;
}

Series Series::up_to(int d) const {
  Series s(alphabet_, truncation_);
  for (const auto& [w, c] : terms_) {
    if (static_cast<int>(w.degree()) > d) break;
    s.terms_.emplace_hint(s.terms_.end(), w, c);
  }
  return s;
}

Series Series::with_truncation(int m) const {
  Series s = up_to(m);
  s.truncation_ = m;
  return s;
}

void Series::check_compatible(const Series& o) const {
  if (!same_alphabet(alphabet_, o.alphabet_)) throw std::invalid_argument("alphabet mismatch");
}

Series& Series::operator+=(const Series& o) {
  check_compatible(o);
  if (o.truncation_ < truncation_) *this = with_truncation(o.truncation_);
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

Series& Series::operator-=(const Series& o) {
  check_compatible(o);
  if (o.truncation_ < truncation_) *this = with_truncation(o.truncation_);
  Rational neg;
  for (const auto& [w, c] : o.terms_) {
    neg = -c;
    add_term(w, neg);
  }
  return *this;
}

Series& Series::operator*=(const Rational& s) {
  if (assoc::is_zero(s)) {
    terms_.clear();
    return *this;
  }
  for (auto& kv : terms_) kv.second *= s;
  return *this;
}

Series operator*(const Series& a, const Series& b) {
  a.check_compatible(b);
  Series out(a.alphabet_, std::min(a.truncation_, b.truncation_));
  const int trunc = out.truncation_;
  Rational prod;
  for (const auto& [wa, ca] : a.terms_) {
    const int da = static_cast<int>(wa.degree());
    if (da > trunc) break;
    for (const auto& [wb, cb] : b.terms_) {
      if (da + static_cast<int>(wb.degree()) > trunc) break;
      prod = ca * cb;
      auto [it, inserted] = out.terms_.try_emplace(wa + wb, prod);
      if (!inserted) it->second += prod;
    }
  }
  std::erase_if(out.terms_, [](const auto& kv) { return assoc::is_zero(kv.second); });
  return out;
}

bool operator==(const Series& a, const Series& b) {
  return same_alphabet(a.alphabet_, b.alphabet_) && a.truncation_ == b.truncation_ && a.terms_ == b.terms_;
}

// Ring-level operations -------------------------------------------------------

Series bracket(const Series& a, const Series& b) { return a * b - b * a; }

Series inverse(const Series& a) {
  const Rational c = a.constant_term();
  if (is_zero(c)) throw std::domain_error("inverse needs an invertible constant term");
  const Rational inv_c = 1 / c;
  Series minus_u = Series::one(a.alphabet(), a.truncation()) - a * inv_c;
  Series sum = Series::one(a.alphabet(), a.truncation());
  Series power = sum;
  for (int k = 1; k <= a.truncation(); ++k) {
    power = power * minus_u;
    if (power.is_zero()) break;
    sum += power;
  }
  return sum * inv_c;
}

Series exp(const Series& a) {
  if (!is_zero(a.constant_term())) throw std::domain_error("exp needs a zero constant term");
  Series sum = Series::one(a.alphabet(), a.truncation());
  Series term = sum;
  for (int k = 1; k <= a.truncation(); ++k) {
    term = term * a;
    term *= Rational(1, k);
    if (term.is_zero()) break;
    sum += term;
  }
  return sum;
}

Series log(const Series& a) {
  if (a.constant_term() != 1) throw std::domain_error("log needs constant term 1");
  Series u = a - Series::one(a.alphabet(), a.truncation());
  Series sum(a.alphabet(), a.truncation());
  Series power = Series::one(a.alphabet(), a.truncation());
  for (int k = 1; k <= a.truncation(); ++k) {
    power = power * u;
    if (power.is_zero()) break;
    sum += power * Rational(k % 2 == 1 ? 1 : -1, k);
  }
  return sum;
}

Series substitute(const Series& phi, std::span<const Series> images) {
  if (images.size() != phi.alphabet()->size())
    throw std::invalid_argument("substitute needs one image per letter");
  if (images.empty()) throw std::invalid_argument("substitute needs images");
  const AlphabetPtr& target = images.front().alphabet();
  int trunc = images.front().truncation();
  for (const auto& img : images) {
    if (!same_alphabet(img.alphabet(), target)) throw std::invalid_argument("images must share one alphabet");
    if (img.truncation() != trunc) throw std::invalid_argument("images must share one truncation");
    if (!is_zero(img.constant_term())) throw std::invalid_argument("images must have zero constant term");
  }
  trunc = std::min(trunc, phi.truncation());
  std::vector<Series> narrowed;
  narrowed.reserve(images.size());
  for (const auto& img : images) narrowed.push_back(img.with_truncation(trunc));

  // Products of images along word prefixes, shared between words.
  std::map<Word, Series> memo;
  memo.emplace(Word{}, Series::one(target, trunc));
  auto product = [&](auto&& self, const Word& w) -> const Series& {
    if (auto it = memo.find(w); it != memo.end()) return it->second;
    Series p = self(self, w.prefix(w.degree() - 1)) * narrowed[w.back()];
    return memo.emplace(w, std::move(p)).first->second;
  };

  Series out(target, trunc);
  for (const auto& [w, c] : phi.terms()) {
    if (static_cast<int>(w.degree()) > trunc) break;
    const Series& p = product(product, w);
    for (const auto& [v, d] : p.terms()) out.add_term(v, c * d);
  }
  return out;
}

Rational c2(const Series& a) {
  if (a.alphabet()->size() < 2) throw std::invalid_argument("c2 needs at least two generators");
  return a.coefficient(Word{0, 1});
}

// Lie elements ----------------------------------------------------------------

Series dynkin_bracketing(const AlphabetPtr& alphabet, int truncation, const Word& w) {
  if (w.empty()) return Series(alphabet, truncation);
  Series s = Series::letter(alphabet, truncation, w[0]);
  for (std::size_t i = 1; i < w.degree(); ++i) s = bracket(s, Series::letter(alphabet, truncation, w[i]));
  return s;
}

bool is_primitive(const Series& a) {
  if (!is_zero(a.constant_term())) throw std::invalid_argument("is_primitive needs a zero constant term");
  // Dynkin-Specht-Wever: p homogeneous of degree n is Lie iff delta(p) = n p.
  std::map<Word, Series> cache;
  for (int d = 1; d <= a.truncation(); ++d) {
    Series part = a.homogeneous(d);
    if (part.is_zero()) continue;
    Series delta(a.alphabet(), a.truncation());
    for (const auto& [w, c] : part.terms()) delta += dynkin_bracketing(a.alphabet(), a.truncation(), w) * c;
    if (delta != part * Rational(d)) return false;
  }
  return true;
}

bool is_grouplike(const Series& a) {
  if (a.constant_term() != 1) return false;
  return is_primitive(log(a));
}

std::vector<Word> lyndon_words(std::size_t alphabet_size, int degree) {
  std::vector<Word> out;
  if (degree < 1 || alphabet_size == 0) return out;
  const int k = static_cast<int>(alphabet_size);
  // Duval's generation of all Lyndon words of length <= degree, in lex order.
  std::vector<int> w{-1};
  while (!w.empty()) {
    ++w.back();
    if (static_cast<int>(w.size()) == degree) {
      Word word;
      for (int l : w) word.push_back(static_cast<Letter>(l));
      out.push_back(std::move(word));
    }
    const std::size_t m = w.size();
    while (static_cast<int>(w.size()) < degree) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == k - 1) w.pop_back();
  }
  return out;
}

namespace {

bool is_lyndon(const Word& w) {
  if (w.empty()) return false;
  for (std::size_t i = 1; i < w.degree(); ++i)
    if (!Word::lex_less(w, w.suffix_from(i))) return false;
  return true;
}

}  // namespace

Series lyndon_bracket(const AlphabetPtr& alphabet, int truncation, const Word& w) {
  if (!is_lyndon(w)) throw std::invalid_argument("not a Lyndon word");
  if (w.degree() == 1) return Series::letter(alphabet, truncation, w[0]);
  for (std::size_t i = 1; i < w.degree(); ++i) {
    Word v = w.suffix_from(i);
    if (is_lyndon(v))
      return bracket(lyndon_bracket(alphabet, truncation, w.prefix(i)), lyndon_bracket(alphabet, truncation, v));
  }
  throw std::logic_error("Lyndon word without a Lyndon suffix");
}

std::vector<Series> lyndon_basis(const AlphabetPtr& alphabet, int degree) {
  if (degree < 1) throw std::invalid_argument("lyndon_basis needs degree >= 1");
  std::vector<Series> basis;
  for (const auto& w : lyndon_words(alphabet->size(), degree)) basis.push_back(lyndon_bracket(alphabet, degree, w));
  return basis;
}

std::size_t witt_dimension(std::size_t alphabet_size, int degree) {
  if (degree < 1) return 0;
  auto mobius = [](int n) {
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
      if (n % p != 0) continue;
      n /= p;
      if (n % p == 0) return 0;
      result = -result;
    }
    return n > 1 ? -result : result;
  };
  mpz_class sum = 0;
  for (int e = 1; e <= degree; ++e) {
    if (degree % e != 0) continue;
    mpz_class pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), alphabet_size, static_cast<unsigned long>(e));
    sum += mobius(degree / e) * pw;
  }
  sum /= degree;
  return sum.get_ui();
}

CommutativePoly abelianize(const Series& a) {
  CommutativePoly out;
  for (const auto& [w, c] : a.terms()) {
    std::vector<int> exps(a.alphabet()->size(), 0);
    for (std::size_t i = 0; i < w.degree(); ++i) ++exps[w[i]];
    auto [it, inserted] = out.try_emplace(std::move(exps), c);
    if (!inserted) {
      it->second += c;
      if (is_zero(it->second)) out.erase(it);
    }
  }
  return out;
}

}  // namespace assoc
