#include "pcm/catalog.hpp"

#include <charconv>
#include <regex>

#include "pcm/exact/poly_text.hpp"

namespace pcm::catalog {

namespace {

PolyMatrix diag_phi(std::size_t dim) {
  // xi first, then X_i (+1), Y_i (-1).
  PolyMatrix phi(dim, dim);
  for (std::size_t a = 1; a < dim; ++a) phi(a, a) = Poly(a % 2 == 1 ? 1 : -1);
  return phi;
}

ConstMatrix hyperbolic_metric(std::size_t dim) {
  ConstMatrix g(dim, dim);
  g(0, 0) = Scalar(1);
  for (std::size_t a = 1; a + 1 < dim; a += 2) {
    g(a, a + 1) = Scalar(1);
    g(a + 1, a) = Scalar(1);
  }
  return g;
}

std::vector<std::string> lie_names(std::size_t n) {
  std::vector<std::string> names{"xi"};
  for (std::size_t i = 1; i <= n; ++i) {
    names.push_back("X" + std::to_string(i));
    names.push_back("Y" + std::to_string(i));
  }
  return names;
}

class Table {
 public:
  explicit Table(std::size_t dim)
      : dim_(dim), c_(dim, std::vector<std::vector<Scalar>>(dim, std::vector<Scalar>(dim))) {}

  void add(std::size_t a, std::size_t b, std::size_t k, const Scalar& v) {
    c_[a][b][k] += v;
    c_[b][a][k] -= v;
  }
  StructureConstants take() { return std::move(c_); }

 private:
  std::size_t dim_;
  StructureConstants c_;
};

ParacontactData standard_lie_structure(std::vector<std::string> names, StructureConstants table) {
  const std::size_t dim = names.size();
  auto frame = LieFrame::create(std::move(names), std::move(table));
  std::vector<Poly> eta(dim);
  eta[0] = Poly(1);
  return ParacontactData(frame, diag_phi(dim), FieldVec::basis(dim, 0), std::move(eta),
                         hyperbolic_metric(dim));
}

}  // namespace

ParacontactData example_lie(std::size_t n, std::size_t m) {
  if (n < 1) throw CatalogError("example_lie needs n >= 1");
  if (m > n) throw CatalogError("example_lie needs 0 <= m <= n");
  const std::size_t dim = 2 * n + 1;
  auto x = [](std::size_t i) { return 2 * i - 1; };
  auto y = [](std::size_t i) { return 2 * i; };
  const Scalar s2 = Scalar::sqrt_of(2);
  Table t(dim);

  for (std::size_t i = 1; i <= m; ++i) t.add(0, x(i), y(i), Scalar(1));
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) {
      if (i <= m && j <= m) {
        if (i == j) {
          t.add(x(i), y(j), 0, Scalar(2));
          t.add(x(i), y(j), y(m), s2 * Scalar(i == m ? 2 : 1));
        } else {
          if (i == m) t.add(x(i), y(j), y(j), s2);
          if (j == m) t.add(x(i), y(j), y(i), s2);
        }
      } else if (i > m && j > m) {
        if (i == j) {
          t.add(x(i), y(j), 0, Scalar(2));
          t.add(x(i), y(j), y(i), s2);
        }
      } else if (i <= m && j > m) {
        t.add(x(i), y(j), y(i), s2);
      }
    }
  return standard_lie_structure(lie_names(n), t.take());
}

ParacontactData example_lie_mu0() {
  Table t(3);
  t.add(0, 1, 1, Scalar(1));
  t.add(0, 1, 2, Scalar(1));
  t.add(0, 2, 2, Scalar(-1));
  t.add(1, 2, 0, Scalar(2));
  return standard_lie_structure({"xi", "X", "Y"}, t.take());
}

ParacontactData example_r3() {
  const VarList coords = exact::make_vars({"x", "y", "z"});
  auto p = [&](const char* text) { return exact::parse_poly(text, coords); };
  std::vector<FieldVec> fields{
      FieldVec({p("1"), p("x*z"), p("-2*y")}),
      FieldVec({p("0"), p("1"), p("0")}),
      FieldVec({p("0"), p("0"), p("1")}),
  };
  auto frame = CoordFrame::create({"e1", "e2", "xi"}, coords, std::move(fields));

  // The bracket relations are recomputed from the vector fields, not assumed.
  const FieldVec e12 = FieldVec({p("0"), p("0"), p("2")});
  const FieldVec e1xi = FieldVec({p("0"), p("-x"), p("0")});
  const FieldVec e2xi(3);
  if (frame->bracket(0, 1) != e12 || frame->bracket(0, 2) != e1xi || frame->bracket(1, 2) != e2xi) {
    throw CatalogError("R^3 frame brackets differ from [e1,e2] = 2xi, [e1,xi] = -x e2, [e2,xi] = 0");
  }

  PolyMatrix phi(3, 3);
  phi(0, 0) = Poly(1);
  phi(1, 1) = Poly(-1);
  ConstMatrix g(3, 3);
  g(0, 1) = Scalar(1);
  g(1, 0) = Scalar(1);
  g(2, 2) = Scalar(1);
  // eta = 2y dx + dz vanishes on e1, e2 and is 1 on xi.
  std::vector<Poly> eta{Poly(0), Poly(0), Poly(1)};
  return ParacontactData(frame, std::move(phi), FieldVec::basis(3, 2), std::move(eta), std::move(g));
}

namespace {

bool parse_lie_name(std::string_view name, std::size_t& n, std::size_t& m) {
  static const std::regex re(R"(lie:n=(\d+),m=(\d+))");
  std::cmatch match;
  if (!std::regex_match(name.begin(), name.end(), match, re)) return false;
  const std::string ns = match[1].str();
  const std::string ms = match[2].str();
  auto [p1, e1] = std::from_chars(ns.data(), ns.data() + ns.size(), n);
  auto [p2, e2] = std::from_chars(ms.data(), ms.data() + ms.size(), m);
  return e1 == std::errc{} && e2 == std::errc{};
}

}  // namespace

ParacontactData lookup(std::string_view name) {
  if (name == "r3") return example_r3();
  if (name == "lie3-mu0") return example_lie_mu0();
  std::size_t n = 0;
  std::size_t m = 0;
  if (parse_lie_name(name, n, m)) return example_lie(n, m);
  throw CatalogError("unknown catalog entry '" + std::string(name) +
                     "' (expected lie:n=<n>,m=<m>, r3 or lie3-mu0)");
}

Entry describe(std::string_view name) {
  if (name == "r3") {
    return {"r3", "R^3 (-1,2)-space, rank h = 1 off x = 0 and 0 on it", false};
  }
  if (name == "lie3-mu0") {
    return {"lie3-mu0", "3-dimensional Lie algebra (-1,0)-space with h != 0 (extension)", true};
  }
  std::size_t n = 0;
  std::size_t m = 0;
  if (parse_lie_name(name, n, m)) {
    const std::string dim = std::to_string(2 * n + 1) + "-dimensional Lie algebra";
    if (m == 0) return {std::string(name), dim + ", K-paracontact with h = 0 (extension)", true};
    return {std::string(name), dim + " (-1,2)-space, rank h = " + std::to_string(m), false};
  }
  throw CatalogError("unknown catalog entry '" + std::string(name) + "'");
}

std::vector<std::string> standard_names() {
  return {"r3",          "lie:n=1,m=1", "lie:n=2,m=1", "lie:n=2,m=2", "lie:n=3,m=2",
          "lie:n=3,m=3", "lie:n=1,m=0", "lie:n=2,m=0", "lie3-mu0"};
}

}  // namespace pcm::catalog
