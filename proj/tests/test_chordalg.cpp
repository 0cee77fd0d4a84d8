#include "assoc/chordalg.hpp"

#include <doctest.h>

#include <cstdint>
#include <random>

using namespace assoc;

namespace {

// Dense Gaussian elimination modulo a prime. Built directly from the word
// expansion of u*r*v, sharing nothing with the quotient construction.
constexpr std::int64_t kPrime = 1000003;

std::int64_t power_mod(std::int64_t b, std::int64_t e) {
  std::int64_t r = 1;
  b %= kPrime;
  while (e) {
    if (e & 1) r = r * b % kPrime;
    b = b * b % kPrime;
    e >>= 1;
  }
  return r;
}

std::size_t rank_mod_p(std::vector<std::vector<std::int64_t>> m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    const std::int64_t inv = power_mod(m[rank][c], kPrime - 2);
    for (auto& x : m[rank]) x = x * inv % kPrime;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const std::int64_t f = m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] = ((m[r][k] - f * m[rank][k]) % kPrime + kPrime) % kPrime;
    }
    ++rank;
  }
  return rank;
}

// Relation ideal dimension at degree d: n strands, generators indexed by
// position in the pair list (i<j, any fixed order).
std::size_t oracle_dim(int n, int d) {
  std::vector<std::pair<int, int>> pairs;
  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i) pairs.emplace_back(i, j);
  const int k = static_cast<int>(pairs.size());
  auto idx = [&](int a, int b) {
    if (a > b) std::swap(a, b);
    for (int p = 0; p < k; ++p)
      if (pairs[p] == std::pair(a, b)) return p;
    return -1;
  };
  std::size_t total = 1;
  for (int i = 0; i < d; ++i) total *= k;
  if (d < 2) return total;

  // Quadratic relations as lists of (first letter, second letter, coefficient).
  using Quad = std::vector<std::tuple<int, int, int>>;
  std::vector<Quad> rels;
  auto commutator = [&](std::vector<int> a, int b) {
    Quad q;
    for (int x : a) {
      q.emplace_back(x, b, 1);
      q.emplace_back(b, x, -1);
    }
    return q;
  };
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = 1; c <= n; ++c)
        for (int e = c + 1; e <= n; ++e)
          if (a != c && a != e && b != c && b != e) rels.push_back(commutator({idx(a, b)}, idx(c, e)));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int l = 1; l <= n; ++l)
        if (i != j && j != l && i != l) rels.push_back(commutator({idx(i, j), idx(i, l)}, idx(j, l)));

  std::size_t outer = total / (k * k);
  std::vector<std::vector<std::int64_t>> rows;
  for (int pos = 0; pos + 2 <= d; ++pos) {
    std::size_t right = 1;
    for (int i = 0; i < d - pos - 2; ++i) right *= k;
    for (std::size_t w = 0; w < outer; ++w) {
      const std::size_t u = w / right, v = w % right;
      for (const auto& r : rels) {
        std::vector<std::int64_t> row(total, 0);
        for (auto [x, y, c] : r) {
          const std::size_t col = (u * k * k + x * k + y) * right + v;
          row[col] = ((row[col] + c) % kPrime + kPrime) % kPrime;
        }
        rows.push_back(std::move(row));
      }
    }
  }
  return total - rank_mod_p(std::move(rows));
}

Series random_element(std::mt19937& rng, const ChordAlgebra& a, int max_degree, int terms = 10) {
  std::uniform_int_distribution<int> deg(0, max_degree), num(-5, 5), den(1, 3);
  std::uniform_int_distribution<int> letter(0, static_cast<int>(a.alphabet()->size()) - 1);
  Series s(a.alphabet(), a.truncation());
  for (int t = 0; t < terms; ++t) {
    Word w;
    for (int d = deg(rng); d > 0; --d) w.push_back(static_cast<Letter>(letter(rng)));
    s.add_term(w, make_rational(num(rng), den(rng)));
  }
  return s;
}

}  // namespace

TEST_CASE("generator naming") {
  CHECK(chord_alphabet(4)->names() == std::vector<std::string>{"t12", "t13", "t23", "t14", "t24", "t34"});
  CHECK(chord_letter(4, ChordGenerator(4, 2)) == chord_letter(4, ChordGenerator(2, 4)));
  CHECK_THROWS(ChordGenerator(3, 3));
  const auto g = chord_of_letter(4, chord_letter(4, ChordGenerator(1, 3)));
  CHECK(g.i == 1);
  CHECK(g.j == 3);
}

TEST_CASE("dimensions agree with an independent modular rank oracle") {
  ChordAlgebra a2(2, 6);
  for (auto d : a2.dims()) CHECK(d == 1);

  ChordAlgebra a3(3, 5);
  for (int d = 0; d <= 5; ++d) {
    CHECK(a3.dim(d) == (std::size_t{1} << (d + 1)) - 1);
    CHECK(a3.dim(d) == oracle_dim(3, d));
    CHECK(a3.dim(d) + a3.ideal_rank(d) == static_cast<std::size_t>(std::pow(3, d)));
  }
  ChordAlgebra a4(4, 4);
  const std::vector<std::size_t> expected{1, 6, 25, 90, 301};
  for (int d = 0; d <= 4; ++d) {
    CHECK(a4.dim(d) == expected[d]);
    CHECK(a4.dim(d) == oracle_dim(4, d));
  }
}

TEST_CASE("reduce kills the defining relations and is canonical") {
  ChordAlgebra a3(3, 5);
  ChordAlgebra a4(4, 5);
  auto t = [&](int i, int j) { return a4.generator(i, j); };
  CHECK(a4.is_zero_class(bracket(t(1, 2) + t(1, 3), t(2, 3))));
  CHECK(a4.is_zero_class(bracket(t(1, 2), t(3, 4))));
  CHECK_FALSE(a4.is_zero_class(bracket(t(1, 2), t(2, 3))));
  for (const auto& r : a4.relations()) CHECK(a4.is_zero_class(r));

  std::mt19937 rng(17);
  for (int k = 0; k < 15; ++k) {
    const Series x = random_element(rng, a4, 5), y = random_element(rng, a4, 5);
    const Series rx = a4.reduce(x);
    CHECK(a4.reduce(rx) == rx);
    CHECK(a4.reduce(x + y) == rx + a4.reduce(y));
    CHECK(a4.reduce(x * y) == a4.reduce(rx * a4.reduce(y)));
    // Reduced forms only use normal words.
    for (const auto& [w, c] : rx.terms()) {
      const auto normal = a4.normal_words(static_cast<int>(w.degree()));
      CHECK(std::binary_search(normal.begin(), normal.end(), w));
    }
  }
  // Two-sided ideal: u * r * v reduces to zero.
  for (int k = 0; k < 10; ++k) {
    const Series u = random_element(rng, a3, 2), v = random_element(rng, a3, 1);
    for (const auto& r : a3.relations()) CHECK(a3.is_zero_class(u * r * v));
  }
  CHECK_THROWS_AS(a3.reduce(Series(chord_alphabet(4), 2)), std::invalid_argument);
  CHECK_THROWS_AS(ChordAlgebra(3, 2).reduce(Series(chord_alphabet(3), 3)), std::invalid_argument);
}

TEST_CASE("center of A_3") {
  ChordAlgebra a3(3, 6);
  const Series z = center_element(6);
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j) CHECK(a3.is_zero_class(z * a3.generator(i, j) - a3.generator(i, j) * z));
  CHECK(named_hom(NamedHom::pi, z).is_zero());
}

TEST_CASE("set maps and induced maps") {
  ChordAlgebra a4(4, 3);
  const SetMap f = SetMap::from_pattern("(34)21", 4);
  CHECK(f.preimage(1) == std::vector<int>{3, 4});
  CHECK(f.preimage(2) == std::vector<int>{2});
  CHECK(f.preimage(3) == std::vector<int>{1});
  const Series t12 = Series::letter(chord_alphabet(3), 3, chord_letter(3, ChordGenerator(1, 2)));
  CHECK(induced_map(f, t12, a4) == a4.reduce(a4.generator(2, 3) + a4.generator(2, 4)));

  const SetMap g = SetMap::from_pattern("241", 4);
  CHECK(g.preimage(1) == std::vector<int>{2});
  CHECK(g.preimage(2) == std::vector<int>{4});
  CHECK(g.preimage(3) == std::vector<int>{1});
  // 3 is unassigned, so a generator whose endpoint has empty preimage maps to 0.
  const SetMap h = SetMap::from_pattern("(23)41", 4);
  CHECK(h.preimage(1) == std::vector<int>{2, 3});
  const SetMap empty_first(3, {2, 2, 3, 0});
  CHECK(induced_map(empty_first, t12, a4).is_zero());

  ChordAlgebra a3(3, 3);
  const SetMap id = SetMap::identity(3);
  std::mt19937 rng(1);
  for (int k = 0; k < 5; ++k) {
    const Series x = a3.reduce(random_element(rng, a3, 3));
    CHECK(induced_map(id, x, a3) == x);
  }
  CHECK_THROWS(SetMap::from_pattern("(12", 4));
  CHECK_THROWS(SetMap::from_pattern("1123", 4));
  CHECK_THROWS(SetMap::from_pattern("15", 4));
}

TEST_CASE("pattern images agree with direct substitution") {
  // 241: t12 -> t24, t23 -> t14, t13 -> t12.
  ChordAlgebra a4(4, 4);
  const auto& src = chord_alphabet(3);
  auto s = [&](int i, int j) { return Series::letter(src, 4, chord_letter(3, ChordGenerator(i, j))); };
  const Series x = s(1, 2) * s(2, 3) * s(1, 3) - s(1, 3) * s(1, 3) + s(2, 3);
  auto t = [&](int i, int j) { return a4.generator(i, j); };
  const Series direct = t(2, 4) * t(1, 4) * t(1, 2) - t(1, 2) * t(1, 2) + t(1, 4);
  CHECK(induced_map(SetMap::from_pattern("241", 4), x, a4) == a4.reduce(direct));
  // 34(12): t12 -> t34, t23 -> t14 + t24, t13 -> t13 + t23.
  const Series direct2 = t(3, 4) * (t(1, 4) + t(2, 4)) * (t(1, 3) + t(2, 3)) - (t(1, 3) + t(2, 3)) * (t(1, 3) + t(2, 3)) +
                         t(1, 4) + t(2, 4);
  CHECK(induced_map(SetMap::from_pattern("34(12)", 4), x, a4) == a4.reduce(direct2));
}

TEST_CASE("strand permutations") {
  ChordAlgebra a4(4, 4);
  const Permutation sigma = parse_permutation("4231");
  CHECK(permute(sigma, a4.generator(1, 2), a4) == a4.generator(2, 4));
  std::mt19937 rng(23);
  const Permutation tau = parse_permutation("1342");
  for (int k = 0; k < 8; ++k) {
    const Series x = random_element(rng, a4, 4);
    CHECK(permute(parse_permutation("1234"), x, a4) == a4.reduce(x));
    CHECK(permute(sigma, permute(tau, x, a4), a4) == permute(compose(sigma, tau), x, a4));
  }
  CHECK_THROWS(parse_permutation("1224"));
  CHECK_THROWS(parse_permutation("12a4"));
}

TEST_CASE("named homomorphisms") {
  CHECK(parse_named_hom("q") == NamedHom::q);
  CHECK_THROWS_AS(parse_named_hom("r"), std::invalid_argument);

  ChordAlgebra a3(3, 5);
  ChordAlgebra a4(4, 5);
  auto free_zero = [](const Series& s) { return s.is_zero(); };
  CHECK(annihilates_relations(a4, named_hom_images(NamedHom::q, 5), free_zero, 5));
  CHECK(annihilates_relations(a3, named_hom_images(NamedHom::pi, 5), free_zero, 5));

  // pi o i is the identity on the free algebra.
  const auto& xy = uf2_alphabet();
  std::mt19937 rng(29);
  std::uniform_int_distribution<int> letter(0, 1), num(-4, 4);
  for (int k = 0; k < 10; ++k) {
    Series f(xy, 5);
    for (int t = 0; t < 8; ++t) {
      Word w;
      for (int d = 0; d < 1 + k % 5; ++d) w.push_back(static_cast<Letter>(letter(rng)));
      f.add_term(w, num(rng));
    }
    CHECK(named_hom(NamedHom::pi, named_hom(NamedHom::i, f, &a3)) == f);
  }

  // q restricted to the strand-{1,2,3} copy of A_3 is pi.
  for (int k = 0; k < 10; ++k) {
    const Series x = random_element(rng, a3, 4);
    CHECK(named_hom(NamedHom::q, embed({1, 2, 3}, x, a4)) == named_hom(NamedHom::pi, x));
  }
  // On any three strands q kills exactly the center of that copy.
  for (const std::array<int, 3> subset : {std::array{1, 2, 4}, std::array{1, 3, 4}, std::array{2, 3, 4}})
    CHECK(named_hom(NamedHom::q, embed(subset, center_element(4), a4)).is_zero());

  const auto& f3 = free3_alphabet();
  const Series t12 = Series::letter(f3, 2, 0), t23 = Series::letter(f3, 2, 1), t24 = Series::letter(f3, 2, 2);
  const Series X = Series::letter(xy, 2, 0), Y = Series::letter(xy, 2, 1);
  CHECK(named_hom(NamedHom::p1, t12 * t23 + t24) == X * Y + X);
  CHECK(named_hom(NamedHom::p2, t12 * t23 + t24) == X * X + Y);
  CHECK_THROWS_AS(named_hom(NamedHom::q, a3.generator(1, 2)), std::invalid_argument);
}

TEST_CASE("embeddings") {
  ChordAlgebra a4(4, 3);
  const Series t12 = Series::letter(chord_alphabet(3), 3, chord_letter(3, ChordGenerator(1, 2)));
  CHECK(embed({1, 2, 3}, t12, a4) == a4.generator(1, 2));
  CHECK(embed({2, 3, 4}, t12, a4) == a4.generator(2, 3));
  CHECK_THROWS_AS(embed({2, 2, 4}, t12, a4), std::invalid_argument);
  CHECK_THROWS_AS(embed({1, 2, 5}, t12, a4), std::invalid_argument);
}

TEST_CASE("chords ending on strand 2 generate a free subalgebra of A_4") {
  ChordAlgebra a4(4, 5);
  const std::array<Letter, 3> letters{chord_letter(4, ChordGenerator(1, 2)), chord_letter(4, ChordGenerator(2, 3)),
                                      chord_letter(4, ChordGenerator(2, 4))};
  for (int d = 1; d <= 5; ++d) {
    std::vector<SparseVector> rows;
    std::size_t count = 1;
    for (int i = 0; i < d; ++i) count *= 3;
    for (std::size_t code = 0; code < count; ++code) {
      Word w;
      for (std::size_t c = code, i = 0; i < static_cast<std::size_t>(d); ++i, c /= 3) w.push_back(letters[c % 3]);
      rows.push_back(a4.coordinates(Series::monomial(a4.alphabet(), 5, w), d));
    }
    CHECK(rank(SparseMatrix(a4.dim(d), std::move(rows))) == count);
  }
}
