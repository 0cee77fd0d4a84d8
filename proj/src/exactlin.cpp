#include "assoc/exactlin.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace assoc {

Rational rational_from_string(std::string_view text) {
  auto bad = [&] { return std::invalid_argument("malformed rational: '" + std::string(text) + "'"); };
  if (text.empty()) throw bad();
  auto valid_int = [](std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false)) throw bad();
  std::string num_str(num);
  if (num_str[0] == '+') num_str.erase(0, 1);
  mpz_class n(num_str, 10), d(std::string(den), 10);
  if (d == 0) throw bad();
  Rational r(n, d);
  r.canonicalize();
  return r;
}

// SparseVector ----------------------------------------------------------------

SparseVector::SparseVector(Storage entries) : entries_(std::move(entries)) {
  std::erase_if(entries_, [](const auto& kv) { return is_zero(kv.second); });
}

SparseVector SparseVector::from_dense(std::span<const Rational> values) {
  SparseVector v;
  for (std::size_t i = 0; i < values.size(); ++i)
    if (!is_zero(values[i])) v.entries_.emplace_hint(v.entries_.end(), i, values[i]);
  return v;
}

const Rational& SparseVector::get(Index i) const {
  static const Rational zero(0);
  auto it = entries_.find(i);
  return it == entries_.end() ? zero : it->second;
}

void SparseVector::set(Index i, const Rational& v) {
  if (is_zero(v))
    entries_.erase(i);
  else
    entries_[i] = v;
}

void SparseVector::add_at(Index i, const Rational& v) {
  if (is_zero(v)) return;
  auto [it, inserted] = entries_.try_emplace(i, v);
  if (!inserted) {
    it->second += v;
    if (is_zero(it->second)) entries_.erase(it);
  }
}

void SparseVector::axpy(const Rational& scale, const SparseVector& other) {
  if (is_zero(scale)) return;
  Rational term;
  for (const auto& [i, v] : other.entries_) {
    term = scale * v;
    add_at(i, term);
  }
}

void SparseVector::scale(const Rational& s) {
  if (is_zero(s)) {
    entries_.clear();
    return;
  }
  for (auto& kv : entries_) kv.second *= s;
}

Rational SparseVector::dot(const SparseVector& other) const {
  Rational acc(0);
  const auto& small = size() <= other.size() ? *this : other;
  const auto& large = size() <= other.size() ? other : *this;
  for (const auto& [i, v] : small.entries_) {
    auto it = large.entries_.find(i);
    if (it != large.entries_.end()) acc += v * it->second;
  }
  return acc;
}

// SparseMatrix ----------------------------------------------------------------

SparseMatrix::SparseMatrix(Index ncols, std::vector<SparseVector> rows) : ncols_(ncols) {
  rows_.reserve(rows.size());
  for (auto& r : rows) push_row(std::move(r));
}

void SparseMatrix::push_row(SparseVector row) {
  if (!row.empty() && row.entries().rbegin()->first >= ncols_)
    throw std::out_of_range("sparse row has a column index beyond ncols");
  rows_.push_back(std::move(row));
}

SparseVector SparseMatrix::apply(const SparseVector& x) const {
  SparseVector out;
  for (std::size_t r = 0; r < rows_.size(); ++r) out.set(r, rows_[r].dot(x));
  return out;
}

// Elimination -----------------------------------------------------------------

namespace {

// Full reduction against rows of a reduced echelon keyed by pivot.
void reduce_against(SparseVector& v, const std::map<Index, SparseVector>& by_pivot) {
  for (const auto& [p, row] : by_pivot) {
    const Rational& c = v.get(p);
    if (!is_zero(c)) {
      Rational f = -c;
      v.axpy(f, row);
    }
  }
}

std::map<Index, SparseVector> rref_rows(const SparseMatrix& m) {
  std::map<Index, SparseVector> by_pivot;
  for (const auto& input : m.rows()) {
    SparseVector v = input;
    reduce_against(v, by_pivot);
    if (v.empty()) continue;
    Index p = v.leading();
    Rational inv = 1 / v.get(p);
    v.scale(inv);
    for (auto& [q, row] : by_pivot) {
      const Rational& c = row.get(p);
      if (!is_zero(c)) {
        Rational f = -c;
        row.axpy(f, v);
      }
    }
    by_pivot.emplace(p, std::move(v));
  }
  return by_pivot;
}

}  // namespace

RrefResult rref(const SparseMatrix& m) {
  auto by_pivot = rref_rows(m);
  RrefResult out{SparseMatrix(m.ncols()), {}};
  for (auto& [p, row] : by_pivot) {
    out.pivots.push_back(p);
    out.echelon.push_row(std::move(row));
  }
  return out;
}

std::size_t rank(const SparseMatrix& m) { return rref_rows(m).size(); }

std::vector<SparseVector> kernel_basis(const SparseMatrix& m) {
  auto by_pivot = rref_rows(m);
  std::vector<SparseVector> basis;
  for (Index f = 0; f < m.ncols(); ++f) {
    if (by_pivot.contains(f)) continue;
    SparseVector k;
    k.set(f, Rational(1));
    for (const auto& [p, row] : by_pivot) {
      const Rational& c = row.get(f);
      if (!is_zero(c)) k.set(p, -c);
    }
    basis.push_back(std::move(k));
  }
  return basis;
}

std::optional<SparseVector> solve_affine(const SparseMatrix& a, const SparseVector& b) {
  const Index rhs = a.ncols();
  SparseMatrix aug(rhs + 1);
  for (std::size_t r = 0; r < a.nrows(); ++r) {
    SparseVector row = a.row(r);
    row.set(rhs, b.get(r));
    aug.push_row(std::move(row));
  }
  if (!b.empty() && b.entries().rbegin()->first >= a.nrows())
    throw std::invalid_argument("right-hand side longer than the row count");
  auto by_pivot = rref_rows(aug);
  SparseVector x;
  for (const auto& [p, row] : by_pivot) {
    if (p == rhs) return std::nullopt;
    x.set(p, row.get(rhs));
  }
  return x;
}

// Echelon ---------------------------------------------------------------------

namespace {
constexpr Index kDenseLimit = Index{1} << 24;
}

Echelon::Echelon(Index ncols) : ncols_(ncols) {
  if (ncols_ <= kDenseLimit) dense_pivot_.assign(ncols_, kNoRow);
}

std::uint32_t Echelon::row_for(Index col) const {
  if (!dense_pivot_.empty() || ncols_ == 0) return col < dense_pivot_.size() ? dense_pivot_[col] : kNoRow;
  auto it = sparse_pivot_.find(col);
  return it == sparse_pivot_.end() ? kNoRow : it->second;
}

bool Echelon::is_pivot(Index col) const { return row_for(col) != kNoRow; }

SparseVector Echelon::reduce(const SparseVector& v) const {
  SparseVector::Storage work = v.entries();
  SparseVector::Storage out;
  Rational term;
  while (!work.empty()) {
    auto first = work.begin();
    std::uint32_t r = row_for(first->first);
    if (r == kNoRow) {
      out.insert(out.end(), work.extract(first));
      continue;
    }
    Rational c = first->second;
    work.erase(first);
    const auto& row = rows_[r].entries();
    for (auto it = std::next(row.begin()); it != row.end(); ++it) {
      term = c * it->second;
      auto [w, inserted] = work.try_emplace(it->first);
      w->second -= term;
      if (is_zero(w->second)) work.erase(w);
    }
  }
  return SparseVector(std::move(out));
}

void Echelon::insert_unchecked(SparseVector row) {
  Index p = row.leading();
  if (p >= ncols_) throw std::out_of_range("echelon row beyond ncols");
  const Rational lead = row.get(p);
  if (lead != 1) row.scale(1 / lead);
  auto id = static_cast<std::uint32_t>(rows_.size());
  if (!dense_pivot_.empty())
    dense_pivot_[p] = id;
  else
    sparse_pivot_.emplace(p, id);
  rows_.push_back(std::move(row));
}

bool Echelon::insert(SparseVector row) {
  // Only the leading entry has to leave the pivot set; the tail may keep
  // pivot columns because reduce() sweeps columns in increasing order.
  SparseVector::Storage work = row.entries();
  Rational term;
  while (!work.empty()) {
    auto first = work.begin();
    std::uint32_t r = row_for(first->first);
    if (r == kNoRow) {
      insert_unchecked(SparseVector(std::move(work)));
      return true;
    }
    Rational c = first->second;
    work.erase(first);
    const auto& pivot_row = rows_[r].entries();
    for (auto it = std::next(pivot_row.begin()); it != pivot_row.end(); ++it) {
      term = c * it->second;
      auto [w, inserted] = work.try_emplace(it->first);
      w->second -= term;
      if (is_zero(w->second)) work.erase(w);
    }
  }
  return false;
}

}  // namespace assoc
