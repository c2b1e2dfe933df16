// Acceptance suite: one PASS/FAIL line per criterion.

#include "oracles.hpp"

#include "borelhilb/classify.hpp"
#include "borelhilb/enumerate.hpp"
#include "borelhilb/facts.hpp"
#include "borelhilb/hilbert.hpp"
#include "borelhilb/io.hpp"
#include "borelhilb/macaulay.hpp"
#include "borelhilb/parse.hpp"
#include "borelhilb/tangent.hpp"

#include <chrono>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

using namespace borel;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> problems;

  void fail(const std::string& what) {
    pass = false;
    problems.push_back(what);
  }
};

int failures = 0;

void criterion(const std::string& id, const std::string& title, const std::function<Outcome()>& body) {
  auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.problems.push_back(std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream line;
  line << (o.pass ? "PASS " : "FAIL ") << id << ": " << title;
  if (!o.detail.empty())
    line << " (" << o.detail << ")";
  line.precision(2);
  line << std::fixed << " [" << secs << " s]";
  std::cout << line.str() << '\n';
  const std::size_t shown = 10;
  for (std::size_t i = 0; i < o.problems.size() && i < shown; ++i)
    std::cout << "    " << o.problems[i] << '\n';
  if (o.problems.size() > shown)
    std::cout << "    ... " << o.problems.size() - shown << " more\n";
  if (!o.pass)
    ++failures;
  std::cout.flush();
}

const std::vector<Fact>& corpus() {
  static const std::vector<Fact> facts = load_facts(default_facts_path());
  return facts;
}

Outcome facts_with_ids(const std::vector<std::string>& ids) {
  Outcome o;
  std::size_t ran = 0;
  for (const auto& id : ids) {
    auto it = std::find_if(corpus().begin(), corpus().end(), [&](const Fact& f) { return f.id == id; });
    if (it == corpus().end()) {
      o.fail("missing fact " + id);
      continue;
    }
    FactOutcome r = run_fact(*it);
    ++ran;
    if (!r.passed)
      o.fail(id + ": " + r.detail);
  }
  o.detail = std::to_string(ran) + " corpus rows";
  return o;
}

struct SweepRow {
  int n;
  HilbertPoly poly;
  int shape; // 1 or 2
  int d, r;
  long a;
  bool theorem_two;
  std::vector<MonomialIdeal> ideals;
};

bool poly1_two(int d, long a) { return (d == 0 && a == 2) || (d == 1 && a != 1 && a != 3) || (d >= 2 && a >= 2); }
bool poly2_two(int r, long a) { return (r == 0 && a == 1) || (r == 1 && a != 2) || r >= 2; }

const std::vector<SweepRow>& sweep() {
  static const std::vector<SweepRow> rows = [] {
    std::vector<SweepRow> out;
    for (int n = 2; n <= 6; ++n) {
      std::set<std::string> seen;
      for (int d = 0; d <= std::min(4, n - 2); ++d)
        for (long a = 1; a <= 4; ++a) {
          std::vector<SweepRow> cand;
          cand.push_back({n, q_to_poly(QNotation{{d}, {a}, 1}), 1, d, -1, a, poly1_two(d, a), {}});
          for (int r = 0; r < d; ++r)
            cand.push_back({n, q_to_poly(QNotation{{d, r}, {a, 1}, 1}), 2, d, r, a, poly2_two(r, a), {}});
          for (auto& c : cand) {
            if (!seen.insert(c.poly.to_string()).second)
              continue;
            c.ideals = enumerate_borel(c.poly, n).ideals;
            out.push_back(std::move(c));
          }
        }
    }
    return out;
  }();
  return rows;
}

std::string describe(const SweepRow& s) {
  std::ostringstream os;
  os << "n=" << s.n << " P=" << s.poly << " ("
     << (s.shape == 1 ? "Q(" + std::to_string(s.d) + ";" + std::to_string(s.a) + ")+1"
                      : "Q(" + std::to_string(s.d) + "," + std::to_string(s.r) + ";" + std::to_string(s.a) + ",1)+1")
     << ") count=" << s.ideals.size();
  return os.str();
}

long binom(long a, long b) { return oracle::binom(a, b); }

MonomialIdeal hyperplane_family(int n, int q, int p) {
  // x0(x0..x_{n-1}) + x1^q(x1..x_p)
  std::vector<Monomial> g;
  for (int i = 0; i <= n - 1; ++i)
    g.push_back(Monomial::var(n, 0).times_var(i));
  for (int i = 1; i <= p; ++i)
    g.push_back(Monomial::one(n).times_var(1, q).times_var(i));
  return MonomialIdeal(n, g);
}

MonomialIdeal tangent4_ideal(int n, int q) {
  std::vector<Monomial> g;
  for (int i = 0; i <= n - 1; ++i)
    g.push_back(Monomial::var(n, 0).times_var(i));
  g.push_back(Monomial::one(n).times_var(1, q));
  return MonomialIdeal(n, g);
}

} // namespace

int main() {
  criterion("1a", "P=3, n=2..5: the two ideals J1, J2", [] {
    return facts_with_ids({"enum-three-points-n2", "enum-three-points-n3", "enum-three-points-n4",
                           "enum-three-points-n5"});
  });
  criterion("1b", "P=3t+1, n=3..6: I', I_lex, I_exp", [] {
    return facts_with_ids({"enum-twisted-cubic-n3", "enum-twisted-cubic-n4", "enum-twisted-cubic-n5",
                           "enum-twisted-cubic-n6"});
  });
  criterion("1c", "P=5 in P^2 and P=4 in P^3: three ideals each",
            [] { return facts_with_ids({"enum-five-points-P2", "enum-four-points-P3"}); });
  criterion("1d", "P=2t+3 in P^3: three ideals", [] { return facts_with_ids({"enum-2t+3-P3"}); });
  criterion("1e", "P=dt+3-binom(d-1,2), d=5,6 in P^3: three ideals", [] {
    return facts_with_ids({"enum-plane-curve-two-points-d5", "enum-plane-curve-two-points-d6"});
  });
  criterion("1f", "P=binom(t+n-2,n-2)+3, n=3,4: three ideals", [] {
    return facts_with_ids({"enum-linear-space-three-points-n3", "enum-linear-space-three-points-n4"});
  });
  criterion("1g", "P=2binom(t+2,2)-1 in P^4: three ideals",
            [] { return facts_with_ids({"enum-quadric-surface-line-n4"}); });
  criterion("1h", "P=Q(d,1;2,1)+1, d=2,3, n<=6: I_exp, I_lex, I'", [] {
    std::vector<std::string> ids;
    for (int d = 2; d <= 3; ++d)
      for (int n = d + 2; n <= 6; ++n)
        ids.push_back("enum-quadric-fold-line-d" + std::to_string(d) + "-n" + std::to_string(n));
    return facts_with_ids(ids);
  });

  criterion("2", "two-point equivalence over the Q(d;a)+1 / Q(d,r;a,1)+1 sweep", [] {
    Outcome o;
    std::size_t positives = 0, exclusions = 0;
    for (const auto& s : sweep()) {
      const bool two = s.ideals.size() == 2;
      const FamilyTag tag = classify_two_borel(s.poly, s.n);
      if (tag.is_two() != s.theorem_two)
        o.fail("classifier disagrees with the theorem conditions: " + describe(s));
      if (two != s.theorem_two)
        o.fail(std::string(two ? "count 2 but conditions fail: " : "conditions hold but count != 2: ") +
               describe(s));
      if (s.theorem_two && two && tag.is_two()) {
        ++positives;
        DistinguishedPair p = distinguished_pair(tag, s.n);
        std::set<std::string> want{p.lex.to_string(), p.exp.to_string()}, got;
        for (const auto& I : s.ideals)
          got.insert(I.to_string());
        if (want != got)
          o.fail("ideal set differs from {I_exp, I_lex}: " + describe(s));
        if (p.lex == p.exp)
          o.fail("I_lex == I_exp: " + describe(s));
      }
      if (!s.theorem_two)
        ++exclusions;
    }
    o.detail = std::to_string(sweep().size()) + " polynomials, " + std::to_string(positives) + " two-point, " +
               std::to_string(exclusions) + " excluded";
    return o;
  });

  criterion("3", "unique Borel ideal exactly on the Staal criterion, same sweep", [] {
    Outcome o;
    std::size_t unique = 0;
    for (const auto& s : sweep()) {
      const bool one = s.ideals.size() == 1;
      unique += one;
      if (one != is_unique_borel(s.poly, s.n))
        o.fail("criterion " + std::string(one ? "false" : "true") + " but " + describe(s));
    }
    o.detail = std::to_string(unique) + " unique of " + std::to_string(sweep().size());
    return o;
  });

  criterion("4a", "x0(x0..x_{n-1})+(x1^q): dim = 2n-1+binom(n+q-1,n-1), n=3 (q>=4), 4, 5; q<=5", [] {
    Outcome o;
    int cases = 0;
    for (int n = 3; n <= 5; ++n)
      for (int q = 2; q <= 5; ++q) {
        if (n == 3 && q < 4)
          continue;
        ++cases;
        std::size_t got = hom_degree_zero(tangent4_ideal(n, q)).dim;
        long want = 2 * n - 1 + binom(n + q - 1, n - 1);
        if (static_cast<long>(got) != want)
          o.fail("n=" + std::to_string(n) + " q=" + std::to_string(q) + ": " + std::to_string(got) +
                 " != " + std::to_string(want));
      }
    o.detail = std::to_string(cases) + " cases";
    return o;
  });

  criterion("4b", "x0(x0..x_{n-1})+x1(x1..x_{n-1}): dim = 6n-4, n=3,4,5", [] {
    Outcome o;
    for (int n = 3; n <= 5; ++n) {
      std::size_t got = hom_degree_zero(hyperplane_family(n, 1, n - 1)).dim;
      if (static_cast<long>(got) != 6 * n - 4)
        o.fail("n=" + std::to_string(n) + ": " + std::to_string(got));
    }
    return o;
  });

  criterion("4c", "x0(x0..x_{n-1})+x1(x1..x_{n-2}): dim = 6n-6, n=4,5", [] {
    Outcome o;
    for (int n = 4; n <= 5; ++n) {
      std::size_t got = hom_degree_zero(hyperplane_family(n, 1, n - 2)).dim;
      if (static_cast<long>(got) != 6 * n - 6)
        o.fail("n=" + std::to_string(n) + ": " + std::to_string(got));
    }
    return o;
  });

  criterion("4d", "x0(x0..x_{n-1})+x1^q(x1..x_{n-r-1}): dim = 3n-1+(n-r-2)(r+1)+binom(n+q-1,n-1), n=4,5", [] {
    Outcome o;
    int cases = 0;
    for (int n = 4; n <= 5; ++n)
      for (int r = 1; r <= n - 3; ++r)
        for (int q = 1; q <= 5; ++q) {
          if (r == 1 && q < 3)
            continue;
          ++cases;
          std::size_t got = hom_degree_zero(hyperplane_family(n, q, n - r - 1)).dim;
          long want = 3 * n - 1 + (n - r - 2) * (r + 1) + binom(n + q - 1, n - 1);
          if (static_cast<long>(got) != want)
            o.fail("n=" + std::to_string(n) + " r=" + std::to_string(r) + " q=" + std::to_string(q) + ": " +
                   std::to_string(got) + " != " + std::to_string(want));
        }
    o.detail = std::to_string(cases) + " cases with 1 <= r <= n-3";
    return o;
  });

  criterion("5", "x0(x0..x_{n-1})+x1(x1..x_{n-2}): trivial 4n-6, nontrivial 2n, n=4,5", [] {
    Outcome o;
    for (int n = 4; n <= 5; ++n) {
      TangentReport t = tangent_report(hyperplane_family(n, 1, n - 2));
      if (static_cast<long>(t.dim_trivial) != 4 * n - 6 || static_cast<long>(t.dim_nontrivial) != 2 * n)
        o.fail("n=" + std::to_string(n) + ": trivial " + std::to_string(t.dim_trivial) + ", nontrivial " +
               std::to_string(t.dim_nontrivial));
    }
    return o;
  });

  criterion("6", "Q(d;q)+1 at n=d+2: dim_hom(I_exp) = dim_hom(I_lex), (d,q) in {(2,2),(2,3),(1,4)}", [] {
    Outcome o;
    std::ostringstream os;
    for (auto [d, q] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {1, 4}}) {
      const int n = d + 2;
      FamilyTag tag = classify_two_borel(q_to_poly(QNotation{{d}, {q}, 1}), n);
      if (tag.kind != FamilyKind::TwoPoly1) {
        o.fail("not a two-point family: d=" + std::to_string(d) + " q=" + std::to_string(q));
        continue;
      }
      DistinguishedPair p = distinguished_pair(tag, n);
      std::size_t e = hom_degree_zero(p.exp).dim, l = hom_degree_zero(p.lex).dim;
      // Supplementary: Hom of the truncation at the Gotzmann number.
      const int g = static_cast<int>(macaulay_expansion(q_to_poly(QNotation{{d}, {q}, 1})).m[0]);
      std::size_t et = hom_truncated(p.exp, g).dim, lt = hom_truncated(p.lex, g).dim;
      os << (os.tellp() ? ", " : "") << "(" << d << "," << q << "): hom " << e << "/" << l << ", truncated " << et
         << "/" << lt;
      if (e != l)
        o.fail("d=" + std::to_string(d) + " q=" + std::to_string(q) + ": dim_hom exp " + std::to_string(e) +
               " lex " + std::to_string(l) + "; truncated at degree " + std::to_string(g) + ": exp " +
               std::to_string(et) + " lex " + std::to_string(lt));
    }
    o.detail = os.str();
    return o;
  });

  criterion("7a", "1000 random ideals, n<=4: exchange oracle and Hilbert function through reg+n+2", [] {
    Outcome o;
    std::mt19937_64 rng(20261015);
    std::size_t borel_count = 0;
    for (int k = 0; k < 1000; ++k) {
      const int n = 1 + static_cast<int>(rng() % 4);
      MonomialIdeal I = oracle::random_ideal(rng, n, 4, 4);
      if (k % 2 == 0)
        I = oracle::borel_closure(I);
      const bool b = oracle::exchange_borel(I);
      borel_count += b;
      if (b != is_borel_fixed(I)) {
        o.fail("is_borel_fixed disagrees on " + I.to_string());
        continue;
      }
      if (!b)
        continue;
      SeriesNumerator num = hilbert_series_numerator(I);
      const int top = regularity_borel(I) + n + 2;
      for (int d = 0; d <= top; ++d)
        if (hilbert_function_from_series(num, n, d) != oracle::hf(I, d)) {
          o.fail("series and count differ at d=" + std::to_string(d) + " for " + I.to_string());
          break;
        }
    }
    o.detail = std::to_string(borel_count) + " Borel-fixed";
    return o;
  });

  criterion("7b", "Macaulay round trip on 500 random admissible polynomials", [] {
    Outcome o;
    std::mt19937_64 rng(7);
    for (int k = 0; k < 500; ++k) {
      const int d = static_cast<int>(rng() % 5);
      std::vector<long> m(d + 1);
      long cur = 1 + static_cast<long>(rng() % 4);
      for (int i = d; i >= 0; --i) {
        m[i] = cur;
        cur += static_cast<long>(rng() % 5);
      }
      HilbertPoly P = reconstruct(m);
      MacaulayExpansion e = macaulay_expansion(P);
      if (e.m != m || reconstruct(e.m) != P)
        o.fail("round trip failed for " + P.to_string());
    }
    return o;
  });

  criterion("7c", "Delta of Q-notation in both branches (last index zero or positive)", [] {
    Outcome o;
    std::mt19937_64 rng(11);
    int zero = 0, positive = 0;
    for (int k = 0; k < 400; ++k) {
      QNotation q;
      for (int i = 4; i >= 0; --i)
        if (rng() % 2) {
          q.indices.push_back(i);
          q.values.push_back(1 + static_cast<long>(rng() % 4));
        }
      if (q.indices.empty() || (q.indices.size() == 1 && q.indices[0] == 0))
        continue;
      (q.indices.back() == 0 ? zero : positive)++;
      HilbertPoly lhs = delta(q_to_poly(q));
      QNotation dq = delta_q(q);
      QNotation manual;
      for (std::size_t i = 0; i < q.indices.size(); ++i)
        if (q.indices[i] >= 1) {
          manual.indices.push_back(q.indices[i] - 1);
          manual.values.push_back(q.values[i]);
        }
      if (!(dq == manual) || lhs != q_to_poly(dq))
        o.fail("delta mismatch for " + q.to_string());
    }
    o.detail = std::to_string(zero) + " with last index 0, " + std::to_string(positive) + " positive";
    if (zero == 0 || positive == 0)
      o.fail("a branch was not exercised");
    return o;
  });

  criterion("7d", "lex_ideal: lex segments, saturated, Borel, correct P, member of the enumeration", [] {
    Outcome o;
    for (const auto& s : sweep()) {
      MonomialIdeal L = lex_ideal(s.poly, s.n);
      const int top = L.max_generator_degree() + 1;
      if (!is_borel_fixed(L) || !is_saturated_borel(L))
        o.fail("not saturated Borel: " + describe(s));
      else if (!is_lex_segment_ideal(L, top))
        o.fail("not lex segments: " + describe(s));
      else if (hilbert_polynomial(L) != s.poly)
        o.fail("wrong Hilbert polynomial: " + describe(s));
      else if (std::find(s.ideals.begin(), s.ideals.end(), L) == s.ideals.end())
        o.fail("lex ideal missing from the enumeration: " + describe(s));
    }
    o.detail = std::to_string(sweep().size()) + " polynomials";
    return o;
  });

  criterion("7e", "Hom dimension agrees for Taylor and Eliahou-Kervaire syzygies (<= 12 generators)", [] {
    Outcome o;
    std::set<std::string> done;
    std::size_t checked = 0;
    for (const auto& s : sweep()) {
      if (s.n > 5)
        continue;
      for (const auto& I : s.ideals) {
        if (I.size() > 12 || !done.insert(I.to_string()).second)
          continue;
        ++checked;
        std::size_t a = hom_degree_zero(I, SyzygySource::Taylor).dim;
        std::size_t b = hom_degree_zero(I, SyzygySource::EliahouKervaire).dim;
        if (a != b)
          o.fail(I.to_string() + ": Taylor " + std::to_string(a) + ", EK " + std::to_string(b));
      }
    }
    o.detail = std::to_string(checked) + " ideals from the sweep with n <= 5";
    return o;
  });

  criterion("7f", "square of the maximal ideal in P^3: dim_hom = 18", [] {
    Outcome o;
    std::vector<Monomial> g;
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j)
        g.push_back(Monomial::var(3, i).times_var(j));
    std::size_t got = hom_degree_zero(MonomialIdeal(3, g)).dim;
    o.detail = "got " + std::to_string(got);
    if (got != 18)
      o.fail("dim_hom = " + std::to_string(got));
    return o;
  });

  std::cout << (failures ? std::to_string(failures) + " criteria failed" : std::string("all criteria passed"))
            << '\n';
  return failures ? 1 : 0;
}
