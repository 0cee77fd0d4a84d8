// Acceptance run: one PASS/FAIL line per criterion, exact equality
// throughout (tolerance zero), wall-clock limits as listed.

#include "assoc/suites.hpp"

#include <array>
#include <cmath>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

using namespace assoc;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      detail << (detail.tellp() > 0 ? "; " : "") << what;
    }
  }
  void note(const std::string& what) { detail << (detail.tellp() > 0 ? "; " : "") << what; }
};

int failures = 0;

void criterion(int number, const std::string& title, double limit_seconds, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto start = Clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (limit_seconds > 0 && seconds > limit_seconds) {
    std::ostringstream s;
    s << "took " << seconds << " s, limit " << limit_seconds << " s";
    o.require(false, s.str());
  }
  if (!o.passed) ++failures;
  std::cout << "[" << (o.passed ? "PASS" : "FAIL") << "] criterion " << number << ": " << title << " (" << seconds
            << " s)";
  const std::string d = o.detail.str();
  if (!d.empty()) std::cout << " -- " << d;
  std::cout << std::endl;
}

void absorb(Outcome& o, const std::vector<CheckResult>& checks) {
  for (const auto& c : checks) o.require(c.passed, c.name + (c.detail.empty() ? "" : " [" + c.detail + "]"));
}

const AlphabetPtr& xy() { return uf2_alphabet(); }
Series X(int m) { return Series::letter(xy(), m, 0); }
Series Y(int m) { return Series::letter(xy(), m, 1); }

std::string run_command(const std::string& cmd, int& status) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  status = pclose(pipe);
  return out;
}

}  // namespace

int main() {
  std::cout << "acceptance: exact arithmetic, tolerance 0" << std::endl;

  criterion(1, "degree-2 uniqueness", 1.0, [](Outcome& o) {
    const ChordAlgebras al(2, 2);
    const auto built = build_associator(2, BuildMode::full, al);
    const Series expected = Series::one(xy(), 2) + bracket(X(2), Y(2)) * make_rational(1, 24);
    o.require(built.phi == expected, "Phi^(2) != 1 + [X,Y]/24");
    // Log coordinates: both degree-1 and the degree-2 system have zero nullity.
    for (const auto& g : built.state.gauge_log)
      o.require(g.nullity == 0, "degree " + std::to_string(g.degree) + " solution space is not a point");
    // Along exp(c[X,Y]) the pentagon holds for every c, the hexagons pick c = 1/24.
    for (const Rational& c : {make_rational(1, 12), make_rational(-1, 24), Rational(0)}) {
      const auto r = verify_associator(exp(bracket(X(2), Y(2)) * c), 2, al);
      o.require(r.equations.residuals.at("pentagon").is_zero(), "pentagon fails off 1/24");
      o.require(!r.equations.residuals.at("hexagon+").is_zero(), "hexagon+ holds for c != 1/24");
    }
    o.note("Phi^(2) = 1 + (XY - YX)/24, nullity 0 at degrees 1 and 2");
  });

  criterion(2, "main lemma kernels, degrees 2..5", 60.0, [](Outcome& o) {
    const ChordAlgebra a4(4, 5);
    const auto checks = lemma_suite(2, 5, a4);
    absorb(o, checks);
    const auto r2 = main_lemma_check(2, a4);
    o.require(r2.witnesses.size() == 1, "degree 2 should have exactly one witness");
    if (!r2.witnesses.empty()) {
      const Series& w = r2.witnesses[0].phi;
      const Rational c = w.coefficient(Word{0, 1});
      o.require(w == bracket(X(2), Y(2)) * c, "degree-2 witness is not a multiple of [X,Y]");
      o.require(r2.witnesses[0].dh2 == w * Rational(3), "dH2(witness) != 3 witness");
    }
    std::ostringstream s;
    for (int m = 3; m <= 5; ++m) s << (m > 3 ? ", " : "") << "deg " << m << " kernel " << main_lemma_check(m, a4).kernel_dim;
    o.note(s.str() + "; degree 2 exception witnessed by [X,Y]");
  });

  const ChordAlgebras sweep(5, 5);

  criterion(3, "four-permutation identity, anti-symmetric sweep degrees 2..5", 120.0, [&](Outcome& o) {
    std::size_t count = 0;
    for (int m = 2; m <= 5; ++m)
      for (const auto& phi : antisymmetric_primitive_basis(m)) {
        ++count;
        o.require(four_permutation_identity(phi, sweep).is_zero(), "residual nonzero at degree " + std::to_string(m));
      }
    o.note(std::to_string(count) + " basis elements");
  });

  criterion(4, "permuto-associahedron identity, same sweep", 120.0, [&](Outcome& o) {
    std::size_t count = 0;
    bool opposite = true;
    std::set<int> bad;
    for (int m = 2; m <= 5; ++m)
      for (const auto& phi : antisymmetric_primitive_basis(m)) {
        ++count;
        const auto sides = permuto_associahedron_sides(phi, sweep);
        opposite = opposite && sweep.a4().is_zero_class(sides.lhs + sides.rhs);
        if (!sweep.a4().is_zero_class(sides.lhs - sides.rhs)) bad.insert(m);
      }
    for (int m : bad) o.require(false, "lhs - rhs nonzero at degree " + std::to_string(m));
    o.note(std::to_string(count) + " basis elements");
    if (!o.passed && opposite) o.note("lhs + rhs vanishes on the whole sweep: the display holds with the opposite sign");
  });

  criterion(5, "pentagon-only builds satisfy both hexagons through N = 5 (A_4 truncation 6)", 600.0, [](Outcome& o) {
    const ChordAlgebras al(6, 6);
    absorb(o, theorem_suite(5, al));
    for (int n = 2; n <= 5; ++n) {
      const auto built = build_associator(n, BuildMode::pentagon_only, al);
      const auto r = verify_associator(built.phi, n, al);
      for (const char* h : {"hexagon+", "hexagon-"})
        o.require(r.equations.residuals.at(h).is_zero(), std::string(h) + " residual nonzero for N = " + std::to_string(n));
    }
    o.note("builder output and two gauge-perturbed solutions");
  });

  criterion(6, "well-definedness of q, pi, induced maps and permutations (degrees <= 5)", 0, [&](Outcome& o) {
    const auto checks = welldefined_suite(5, sweep);
    absorb(o, checks);
    o.note(std::to_string(checks.size()) + " maps");
  });

  criterion(7, "dimension oracle: quotient vs naive span rank", 0, [](Outcome& o) {
    absorb(o, dims_suite(3, 5));
    absorb(o, dims_suite(4, 4));
    const ChordAlgebra a3(3, 5), a4(4, 4);
    const std::vector<std::size_t> d3{1, 3, 7, 15, 31, 63}, d4{1, 6, 25, 90, 301};
    o.require(a3.dims() == d3, "A_3 dims differ from 1,3,7,15,31,63");
    o.require(a4.dims() == d4, "A_4 dims differ from 1,6,25,90,301");
    for (int d = 2; d <= 5; ++d)
      o.require(a3.dim(d) + naive_ideal_rank(3, d) == std::size_t(std::pow(3, d)), "A_3 naive rank mismatch");
    for (int d = 2; d <= 4; ++d)
      o.require(a4.dim(d) + naive_ideal_rank(4, d) == std::size_t(std::pow(6, d)), "A_4 naive rank mismatch");
    o.note("A_3: 1,3,7,15,31,63; A_4: 1,6,25,90,301");
  });

  criterion(8, "q, pi and i identities on primitive bases, degrees 2..5", 0, [&](Outcome& o) {
    std::size_t counted = 0;
    for (const auto& c : identities_suite(2, 5, sweep)) {
      const bool relevant = c.name.rfind("q(", 0) == 0 || c.name.rfind("pi(", 0) == 0 || c.name.rfind("i(", 0) == 0;
      if (!relevant) continue;
      ++counted;
      o.require(c.passed, c.name);
    }
    o.require(counted == 12, "expected 12 checks, found " + std::to_string(counted));
    o.note(std::to_string(counted) + " checks");
  });

  criterion(9, "series and quotient property suites", 60.0, [&](Outcome& o) {
    std::mt19937 rng(20240601);
    std::uniform_int_distribution<int> num(-7, 7), den(1, 5), bit(0, 1), deg(1, 6);
    auto random_series = [&](int m) {
      Series s(xy(), m);
      for (int t = 0; t < 12; ++t) {
        Word w;
        for (int d = deg(rng) % (m + 1); d > 0; --d) w.push_back(static_cast<Letter>(bit(rng)));
        if (!w.empty()) s.add_term(w, make_rational(num(rng), den(rng)));
      }
      return s;
    };
    auto random_lie = [&](int m) {
      Series s(xy(), m);
      for (int d = 1; d <= m; ++d)
        for (const auto& b : lyndon_basis(xy(), d)) s += b.with_truncation(m) * make_rational(num(rng), den(rng));
      return s;
    };
    const Series one6 = Series::one(xy(), 6);
    for (int k = 0; k < 25; ++k) {
      const Series u = random_series(6);
      o.require(log(exp(u)) == u, "log(exp(u)) != u");
      o.require(exp(log(one6 + u)) == one6 + u, "exp(log(1+u)) != 1+u");
      const std::array<Series, 2> images{random_series(6), random_series(6)};
      const Series a = random_series(6) + one6, b = random_series(6);
      o.require(substitute(a * b, images) == substitute(a, images) * substitute(b, images), "substitution not multiplicative");
      const Series lie = random_lie(6);
      o.require(is_grouplike(exp(lie)) && is_primitive(lie), "exp(primitive) not group-like");
      const Series spoiled = lie + X(6) * Y(6) * Y(6);
      o.require(!is_grouplike(exp(spoiled)) && !is_primitive(spoiled), "non-primitive log accepted");
    }
    for (int d = 1; d <= 8; ++d) {
      // Necklace formula with the Mobius function, written out.
      long sum = 0;
      for (int e = 1; e <= d; ++e) {
        if (d % e) continue;
        int n = d / e, mu = 1;
        for (int p = 2; p <= n; ++p)
          if (n % p == 0) {
            n /= p;
            mu = (n % p == 0) ? 0 : -mu;
            if (mu == 0) break;
          }
        sum += mu * (1L << e);
      }
      o.require(lyndon_words(2, d).size() == std::size_t(sum / d) && witt_dimension(2, d) == std::size_t(sum / d),
                "Lyndon/Witt count mismatch at degree " + std::to_string(d));
    }
    const auto built = build_associator(5, BuildMode::full, sweep);
    const auto ab = abelianize(built.phi);
    o.require(ab.size() == 1 && ab.begin()->second == 1 && ab.begin()->first == std::vector<int>{0, 0},
              "abelianize(Phi) != 1");
    const ChordAlgebra& a4 = sweep.a4();
    std::uniform_int_distribution<int> letter(0, 5);
    for (int k = 0; k < 20; ++k) {
      Series x(a4.alphabet(), 5);
      for (int t = 0; t < 10; ++t) {
        Word w;
        for (int d = deg(rng) % 6; d > 0; --d) w.push_back(static_cast<Letter>(letter(rng)));
        x.add_term(w, make_rational(num(rng), den(rng)));
      }
      o.require(a4.reduce(a4.reduce(x)) == a4.reduce(x), "reduce not idempotent");
    }
  });

  criterion(10, "determinism of build --degree 5 --mode full", 0, [](Outcome& o) {
    const std::string cmd = std::string("\"") + ASSOC_CLI_PATH + "\" build --degree 5 --mode full 2>/dev/null";
    int s1 = 0, s2 = 0;
    const std::string first = run_command(cmd, s1);
    const std::string second = run_command(cmd, s2);
    o.require(s1 == 0 && s2 == 0, "build exited nonzero");
    o.require(!first.empty(), "empty output");
    o.require(first == second, "outputs differ");
    o.note(std::to_string(first.size()) + " bytes, identical");
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
