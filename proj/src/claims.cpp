#include "borelhilb/classify.hpp"
#include "borelhilb/macaulay.hpp"

#include <functional>

namespace borel {

namespace {

struct Context {
  const HilbertPoly& P;
  int n;
  const FamilyTag& tag;
  std::size_t count;
};

struct Entry {
  std::string source;
  std::string guard;
  std::function<bool(const Context&)> applies;
  std::function<std::vector<std::string>(const Context&)> texts;
};

std::string str(long v) { return std::to_string(v); }

HilbertPoly linear(long a, long b) { return HilbertPoly::t() * HilbertPoly(a) + HilbertPoly(b); }

bool poly1(const Context& c) { return c.tag.kind == FamilyKind::TwoPoly1; }
bool poly2(const Context& c) { return c.tag.kind == FamilyKind::TwoPoly2; }
bool three(const Context& c, const char* label) {
  return c.tag.kind == FamilyKind::ThreeKnown && c.tag.label == label;
}

const std::vector<Entry>& table() {
  static const std::vector<Entry> entries = {
      {"literature: single Borel point", "borel_count == 1",
       [](const Context& c) { return c.count == 1; },
       [](const Context&) { return std::vector<std::string>{"smooth and irreducible"}; }},
      {"literature: three points", "P = 3, n >= 2",
       [](const Context& c) { return c.P == HilbertPoly(3) && c.n >= 2; },
       [](const Context&) {
         return std::vector<std::string>{"smooth", "general member: three reduced points"};
       }},
      {"literature: conic and point / skew lines", "P = 2t+2, n >= 3",
       [](const Context& c) { return c.P == linear(2, 2) && c.n >= 3; },
       [](const Context&) {
         return std::vector<std::string>{"reduced with two irreducible components",
                                         "lex component: plane conic plus a point",
                                         "other component: two skew lines",
                                         "both components smooth, meeting transversely"};
       }},
      {"literature: hypersurface and point", "Q(d;q)+1, n >= 3, (d >= 2, q >= 2) or (d = 1, q >= 4)",
       [](const Context& c) {
         return poly1(c) && c.n >= 3 && ((c.tag.d >= 2 && c.tag.a_d >= 2) || (c.tag.d == 1 && c.tag.a_d >= 4));
       },
       [](const Context& c) {
         return std::vector<std::string>{"smooth and irreducible",
                                         "general member: degree-" + str(c.tag.a_d) + " hypersurface in a P^" +
                                             str(c.tag.d + 1) + " plus a point"};
       }},
      {"literature: hypersurface, plane and point", "Q(d,r;q,1)+1, n-2 >= d > r, r >= 2 or (r = 1, q >= 3)",
       [](const Context& c) {
         return poly2(c) && c.tag.r >= 1 && (c.tag.r >= 2 || c.tag.a_d >= 3) && c.n - 2 >= c.tag.d;
       },
       [](const Context& c) {
         std::vector<std::string> v{"irreducible, Cohen-Macaulay and normal",
                                    "general member: degree-" + str(c.tag.a_d) + " hypersurface and a " +
                                        str(c.tag.r) + "-plane in a P^" + str(c.tag.d + 1) +
                                        ", meeting transversely, plus a point"};
         if (c.tag.d == c.n - 2)
           v.push_back("near the expansive point: cone over the Segre embedding of P^1 x P^" +
                       str(c.n - c.tag.r - 1));
         return v;
       }},
      {"literature: plane and two points", "Q(d,0;1,1)+1, n-2 >= d >= 1",
       [](const Context& c) { return poly2(c) && c.tag.r == 0 && c.tag.a_d == 1; },
       [](const Context& c) {
         std::vector<std::string> v{"irreducible, Cohen-Macaulay and normal",
                                    "general member: " + str(c.tag.d) + "-plane plus two points"};
         if (c.tag.d == c.n - 2)
           v.push_back("near the expansive point: cone over the Segre embedding of P^2 x P^" + str(c.n - 1));
         if (c.n == 3)
           v.push_back("Gorenstein");
         return v;
       }},
      {"literature: plane, line and point", "Q(d,1;1,1)+1, n-2 >= d >= 2",
       [](const Context& c) { return poly2(c) && c.tag.r == 1 && c.tag.a_d == 1 && c.tag.d >= 2; },
       [](const Context& c) {
         std::vector<std::string> v{
             "reduced with two irreducible components",
             "first component normal and Cohen-Macaulay: " + str(c.tag.d) +
                 "-plane meeting a line, plus a point",
             "second component smooth: disjoint " + str(c.tag.d) + "-plane and line"};
         if (c.tag.d == c.n - 2)
           v.push_back("near the expansive point the first component is a cone over the Segre embedding of "
                       "P^1 x P^" + str(c.n - 2));
         return v;
       }},
      {"literature: twisted cubics", "P = 3t+1, n >= 3",
       [](const Context& c) { return c.P == linear(3, 1) && c.n >= 3; },
       [](const Context&) {
         return std::vector<std::string>{"two smooth components meeting transversely"};
       }},
      {"literature: five points in the plane", "P = 5, n = 2",
       [](const Context& c) { return c.P == HilbertPoly(5) && c.n == 2; },
       [](const Context&) { return std::vector<std::string>{"smooth"}; }},
      {"literature: four points in space", "P = 4, n = 3",
       [](const Context& c) { return c.P == HilbertPoly(4) && c.n == 3; },
       [](const Context&) {
         return std::vector<std::string>{
             "irreducible",
             "singular locus: the orbit of (x0,x1,x2)^2",
             "near (x0,x1,x2)^2: affine cone with 3-dimensional vertex over G(2,6) in its Pluecker embedding",
             "Gorenstein"};
       }},
      {"literature: 2t+3 in P^3", "P = 2t+3, n = 3",
       [](const Context& c) { return three(c, "2t+3"); },
       [](const Context&) {
         return std::vector<std::string>{
             "three irreducible components: double lines of genus -2; two skew lines plus a point; "
             "conic plus two points",
             "all three components contain (x0^2,x0*x1,x1^2,x0*x2^2)"};
       }},
      {"literature: plane curve and two points", "P = dt+3-binom(d-1,2), d >= 5, n = 3",
       [](const Context& c) { return three(c, "plane-curve-two-points"); },
       [](const Context& c) {
         return std::vector<std::string>{"irreducible and singular",
                                         "general member: plane curve of degree " +
                                             c.P.leading().get_str() + " plus two points"};
       }},
      {"literature: linear space and three points", "P = binom(t+n-2,n-2)+3, n >= 3",
       [](const Context& c) { return three(c, "linear-space-three-points"); },
       [](const Context& c) {
         return std::vector<std::string>{"irreducible and singular",
                                         "general member: " + str(c.n - 2) + "-plane plus three points"};
       }},
      {"literature: quadric surface and line", "P = 2*binom(t+2,2)-1, n >= 4",
       [](const Context& c) {
         return c.n >= 4 && c.P == binom_poly(2, 2) * HilbertPoly(2) - HilbertPoly(1);
       },
       [](const Context&) {
         return std::vector<std::string>{"three irreducible components",
                                         "two of the three components are disjoint"};
       }},
      {"literature: quadric fold and line", "Q(d,1;2,1)+1, n-2 >= d >= 3",
       [](const Context& c) { return three(c, "quadric-fold-and-line") && c.P.degree() >= 3; },
       [](const Context&) {
         return std::vector<std::string>{"reduced with two irreducible components"};
       }},
  };
  return entries;
}

} // namespace

std::vector<Claim> matching_claims(const HilbertPoly& P, int n, const FamilyTag& tag, std::size_t borel_count) {
  Context c{P, n, tag, borel_count};
  std::vector<Claim> out;
  for (const auto& e : table())
    if (e.applies(c))
      for (auto& t : e.texts(c))
        out.push_back({std::move(t), e.source, e.guard});
  return out;
}

std::vector<Claim> all_claims() {
  std::vector<Claim> out;
  for (const auto& e : table())
    out.push_back({"", e.source, e.guard});
  return out;
}

} // namespace borel
