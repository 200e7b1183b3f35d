#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <sstream>
#include <tuple>

#include "gk2/curve.hpp"

using namespace gk2;

namespace {

struct Instance {
  CurveParams c;
  GfContext f;
  std::vector<CurvePoint> pts;
};

const Instance& instance(int_t q, int_t n) {
  static std::map<std::pair<int_t, int_t>, Instance> cache;
  auto it = cache.find({q, n});
  if (it == cache.end()) {
    auto c = CurveParams::make(q, n);
    auto f = make_curve_field(c);
    auto pts = enumerate_points(c, f, 2);
    it = cache.emplace(std::pair{q, n}, Instance{c, std::move(f), std::move(pts)}).first;
  }
  return it->second;
}

std::size_t count_class(const std::vector<CurvePoint>& pts, PointClass k) {
  return static_cast<std::size_t>(std::count_if(pts.begin(), pts.end(), [&](const auto& p) { return p.cls == k; }));
}

}  // namespace

TEST_CASE("point counts and orbit sizes", "[curve]") {
  for (auto [q, n, total] : std::vector<std::tuple<int_t, int_t, std::size_t>>{{2, 3, 225}, {2, 5, 3969}, {3, 3, 6076}}) {
    CAPTURE(q, n);
    const auto& in = instance(q, n);
    CHECK(in.pts.size() == total);
    CHECK(count_class(in.pts, PointClass::o1) == static_cast<std::size_t>(q + 1));
    CHECK(count_class(in.pts, PointClass::o2) == static_cast<std::size_t>(q * q * q - q));
  }
}

TEST_CASE("every point satisfies the curve equations", "[curve][property]") {
  for (auto [q, n] : std::vector<std::pair<int_t, int_t>>{{2, 3}, {2, 5}, {3, 3}}) {
    const auto& in = instance(q, n);
    const auto& f = in.f;
    const auto& c = in.c;
    for (const auto& p : in.pts) {
      CAPTURE(describe(p));
      if (p.is_infinite()) {
        REQUIRE(f.pow(p.a, q + 1) == f.one());
        continue;
      }
      const auto xq1 = f.pow(p.x, q + 1);
      REQUIRE(f.pow(p.y, q + 1) == f.sub(xq1, f.one()));
      const auto lhs = f.mul(f.pow(p.z, c.m), f.sub(xq1, f.one()));
      const auto rhs = f.mul(p.y, f.sub(f.pow(p.x, q * q), p.x));
      REQUIRE(lhs == rhs);
      REQUIRE(f.add(p.x, p.y) != f.zero());
      if (p.cls == PointClass::o2)
        REQUIRE(p.z == f.zero());
      else
        REQUIRE(p.z != f.zero());
    }
  }
}

TEST_CASE("enumeration is ordered and independent of thread count", "[curve]") {
  const auto c = CurveParams::make(2, 5);
  const auto f = make_curve_field(c);
  const auto a = enumerate_points(c, f, 1);
  const auto b = enumerate_points(c, f, 4);
  CHECK(a == b);
  CHECK(std::is_sorted(a.begin(), a.end()));
  CHECK(std::adjacent_find(a.begin(), a.end()) == a.end());
  CHECK(a.back().is_infinite());
  CHECK_THROWS_AS(enumerate_points(CurveParams::make(2, 3), f), invalid_argument);
}

TEST_CASE("distinguished points", "[curve]") {
  const auto& in = instance(2, 5);
  const auto p1 = distinguished_o1(in.f);
  const auto r = distinguished_o2(in.c, in.f);
  CHECK(std::find(in.pts.begin(), in.pts.end(), p1) != in.pts.end());
  CHECK(std::find(in.pts.begin(), in.pts.end(), r) != in.pts.end());
  CHECK(classify_point(in.c, in.f, r) == PointClass::o2);
  CHECK(in.f.pow(r.y, 3) == in.f.neg(in.f.one()));
  for (const auto& e : in.f.nth_roots(in.f.neg(in.f.one()), 3)) CHECK(r.y <= e);
}

TEST_CASE("pole bases", "[curve]") {
  const auto c = CurveParams::make(2, 5);
  const auto b = build_basis(c, Orbit::o1, 2);
  REQUIRE(b.size() == 2);
  CHECK(b[0].pole_order == 0);
  CHECK(b[0].exponents == std::vector<int_t>(7, 0));
  CHECK(b[1].pole_order == 22);
  CHECK(b[1].exponents == std::vector<int_t>{1, 0, 0, 0, 0, 0, 0});

  const auto s = h_o1(c);
  const auto big = build_basis(c, Orbit::o1, s.index_of(44));
  CHECK(big.back().exponents == std::vector<int_t>{2, 0, 0, 0, 0, 0, 0});

  const auto o2 = build_basis(c, Orbit::o2, h_o2(c).index_of(33));
  CHECK(o2.back().exponents == std::vector<int_t>{1, 0, 0, 0, 0, 0, 0});

  for (auto orbit : {Orbit::o1, Orbit::o2}) {
    const auto basis = build_basis(c, orbit, 200);
    const auto sg = weierstrass_semigroup(c, orbit);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      CHECK(basis[i].pole_order == sg.nth_nongap(static_cast<int_t>(i) + 1));
      CHECK(pole_order_of(c, orbit, basis[i].exponents) == basis[i].pole_order);
    }
  }
  CHECK_THROWS_AS(build_basis(c, Orbit::o1, 0), invalid_argument);
}

TEST_CASE("basis evaluation", "[curve]") {
  const auto& in = instance(2, 3);
  const auto& c = in.c;
  const auto& f = in.f;
  const PoleBasisFunction one{Orbit::o1, std::vector<int_t>(static_cast<std::size_t>(c.s + 2), 0), 0};
  const PoleBasisFunction one2{Orbit::o2, one.exponents, 0};
  std::vector<int_t> alpha_exp(static_cast<std::size_t>(c.s + 2), 0);
  alpha_exp.back() = 1;
  const PoleBasisFunction alpha{Orbit::o1, alpha_exp, c.q_pow_n() + 1};
  const PoleBasisFunction ff{Orbit::o2, alpha_exp, c.q_pow_n() + 1 - c.m};
  const auto r = distinguished_o2(c, f);

  for (const auto& p : in.pts) {
    if (!(p == distinguished_o1(f))) CHECK(eval_basis(c, f, one, p) == f.one());
    if (!(p == r)) CHECK(eval_basis(c, f, one2, p) == f.one());
  }
  const CurvePoint q{CurvePoint::Kind::affine, f.one(), f.zero(), f.zero(), {}, PointClass::o2};
  CHECK(std::find(in.pts.begin(), in.pts.end(), q) != in.pts.end());
  CHECK(eval_basis(c, f, alpha, q) == f.zero());

  for (const auto& p : in.pts)
    if (!p.is_infinite() && p.x == f.zero() && p.y != r.y) CHECK(eval_basis(c, f, ff, p) == f.zero());

  CHECK_THROWS_AS(eval_basis(c, f, alpha, distinguished_o1(f)), invalid_argument);
  CHECK_THROWS_AS(eval_basis(c, f, ff, r), invalid_argument);
}

TEST_CASE("code matrices have full rank with a unit staircase", "[curve][property]") {
  for (auto [q, n, lmax] : std::vector<std::tuple<int_t, int_t, int_t>>{{2, 3, 30}, {3, 3, 20}}) {
    const auto& in = instance(q, n);
    for (auto orbit : {Orbit::o1, Orbit::o2}) {
      const auto cm = code_matrix(in.c, in.f, in.pts, orbit, lmax);
      CHECK(cm.matrix.cols == static_cast<std::size_t>(in.c.code_length()));
      std::size_t prev = 0;
      for (int_t l = 1; l <= lmax; ++l) {
        FieldMatrix top{static_cast<std::size_t>(l), cm.matrix.cols,
                        {cm.matrix.data.begin(), cm.matrix.data.begin() + l * static_cast<int_t>(cm.matrix.cols)}};
        const auto rk = rank(top, in.f);
        CAPTURE(q, n, to_string(orbit), l);
        CHECK(rk == static_cast<std::size_t>(l));
        CHECK(rk == prev + 1);
        prev = rk;
      }
    }
  }
}

TEST_CASE("rows vanish at no more points than their pole order", "[curve][property]") {
  for (auto [q, n] : std::vector<std::pair<int_t, int_t>>{{2, 3}, {2, 5}}) {
    const auto& in = instance(q, n);
    for (auto orbit : {Orbit::o1, Orbit::o2}) {
      const auto cm = code_matrix(in.c, in.f, in.pts, orbit, 25);
      for (std::size_t r = 0; r < cm.matrix.rows; ++r) {
        int_t zeros = 0;
        for (std::size_t j = 0; j < cm.matrix.cols; ++j) zeros += cm.matrix.at(r, j) == in.f.zero();
        CHECK(zeros <= cm.basis[r].pole_order);
      }
    }
  }
}

TEST_CASE("exhaustive minimum weight", "[curve]") {
  const auto& in = instance(2, 3);
  for (auto orbit : {Orbit::o1, Orbit::o2}) {
    const auto c1 = code_matrix(in.c, in.f, in.pts, orbit, 1);
    CHECK(min_weight_exhaustive(c1.matrix, in.f) == 224);
    const auto c2 = code_matrix(in.c, in.f, in.pts, orbit, 2);
    CHECK(c2.basis[1].pole_order == 6);
    CHECK(min_weight_exhaustive(c2.matrix, in.f) >= 224 - 6);
  }
  const auto big = code_matrix(in.c, in.f, in.pts, Orbit::o1, 6);
  CHECK_THROWS_AS(min_weight_exhaustive(big.matrix, in.f), invalid_argument);
}

TEST_CASE("matrix file format", "[curve]") {
  const auto& in = instance(2, 3);
  const auto cm = code_matrix(in.c, in.f, in.pts, Orbit::o1, 3);
  std::ostringstream os;
  write_matrix(os, cm.matrix, in.f);
  std::istringstream is(os.str());
  std::string header;
  std::getline(is, header);
  CHECK(header == "N=224 L=3 p=2 deg=6");
  std::string line;
  int rows = 0;
  while (std::getline(is, line)) {
    ++rows;
    std::istringstream ls(line);
    std::uint64_t v;
    int cols = 0;
    while (ls >> v) {
      CHECK(v < 64);
      ++cols;
    }
    CHECK(cols == 224);
  }
  CHECK(rows == 3);
  CHECK(os.str().back() == '\n');
}
