#include <catch2/catch_amalgamated.hpp>

#include "gk2/gk2_semigroups.hpp"
#include "gk2/fengrao.hpp"
#include "gk2/reference.hpp"
#include "oracles.hpp"

using namespace gk2;

namespace {
const auto c25 = CurveParams::make(2, 5);
const auto p1 = h_o1(c25);
const auto r = h_o2(c25);

std::string ref(const char* name) { return std::string(GK2_REFERENCE_DIR) + "/" + name; }
}  // namespace

TEST_CASE("nu values", "[fengrao]") {
  CHECK(nu(p1, p1.index_of(44)) == 3);
  CHECK(nu(r, r.index_of(50)) == 4);
  CHECK(nu(p1, 1) == 1);
  CHECK(nu(r, 1) == 1);
}

TEST_CASE("nu agrees with a brute-force pair count", "[fengrao][property]") {
  for (const auto* s : {&p1, &r}) {
    const auto in = oracle::closure(s->generators(), 400);
    for (int_t l = 1; s->nth_nongap(l) <= 400; ++l) {
      CAPTURE(l);
      REQUIRE(nu(*s, l) == oracle::nu(in, s->nth_nongap(l)));
    }
  }
}

TEST_CASE("designed distance values", "[fengrao]") {
  CHECK(d_ord(p1, p1.index_of(46)) == 3);
  CHECK(d_ord(p1, p1.index_of(98)) == 8);
  CHECK(d_ord(r, r.index_of(183)) == 92);
  CHECK(r.index_of(183) == 138);
}

TEST_CASE("designed distance is monotone and bounded by nu", "[fengrao][property]") {
  for (const auto* s : {&p1, &r}) {
    int_t prev = 0;
    for (int_t l = 1; l <= 300; ++l) {
      const int_t d = d_ord(*s, l);
      CHECK(d >= prev);
      CHECK(d <= nu(*s, l));
      prev = d;
    }
  }
}

TEST_CASE("tail values of the designed distance", "[fengrao][property]") {
  for (const auto* s : {&p1, &r}) {
    const int_t g = s->genus();
    const int_t first = tail_index(*s, 1);
    for (int_t l = first; l < first + 50; ++l) {
      CAPTURE(l);
      CHECK(s->nth_nongap(l) + 1 >= 4 * g);
      CHECK(nu(*s, l) == s->nth_nongap(l) + 1 - 2 * g);
      CHECK(d_ord(*s, l) == l - g);
    }
  }
}

TEST_CASE("code table rows", "[fengrao]") {
  const auto rows1 = code_table(p1, c25, 1, 20);
  CHECK(rows1.front() == CodeTableRow{3968, 1, 3967, 0, 1, 1});
  for (const auto& row : rows1)
    if (row.rho == 65) {
      CHECK(row.dimension == 3943);
      CHECK(row.nu == 4);
      CHECK(row.d_ord == 4);
    }
  const auto rows2 = code_table(r, c25, 1, 60);
  bool seen = false;
  for (const auto& row : rows2)
    if (row.rho == 100) {
      seen = true;
      CHECK(row.dimension == 3913);
      CHECK(row.nu == 9);
      CHECK(row.d_ord == 9);
    }
  CHECK(seen);
  for (const auto& row : rows2) {
    CHECK(row.nu == nu(r, row.index));
    CHECK(row.d_ord == d_ord(r, row.index));
  }
  CHECK_THROWS_AS(code_table(p1, c25, 5, 4), invalid_argument);
  CHECK_THROWS_AS(code_table(p1, c25, 1, 3968), invalid_argument);
}

TEST_CASE("transcribed dual-code tables are reproduced", "[fengrao][reference]") {
  struct Case {
    const char* file;
    const NumericalSemigroup* s;
  };
  for (const Case& k : {Case{"dual_codes_o1_part1.csv", &p1}, Case{"dual_codes_o1_part2.csv", &p1},
                        Case{"dual_codes_o2_part1.csv", &r}, Case{"dual_codes_o2_part2.csv", &r}}) {
    CAPTURE(k.file);
    const auto rows = load_code_reference(ref(k.file));
    const auto report = compare_code_table(*k.s, c25, rows, k.file);
    CHECK(report.rows_checked == rows.size());
    CHECK(report.count(Discrepancy::Kind::value) == 0);
    CHECK(report.count(Discrepancy::Kind::not_a_nongap) == 0);
    for (const auto& e : report.entries) {
      CAPTURE(e.detail);
      if (e.kind == Discrepancy::Kind::length_column) {
        const auto& cell = rows[static_cast<std::size_t>(e.line - 2)].length_cell;
        CHECK((cell == "39688" || cell == "3868"));
      }
      if (e.kind == Discrepancy::Kind::omitted_row) CHECK(e.detail.rfind("no row for rho 59 ", 0) == 0);
    }
  }
  const auto report = compare_code_table(p1, c25, load_code_reference(ref("dual_codes_o1_part1.csv")), "o1");
  CHECK(report.count(Discrepancy::Kind::omitted_row) == 1);
}

TEST_CASE("reference loader rejects malformed input", "[fengrao][reference]") {
  CHECK_THROWS_AS(load_code_reference(ref("does_not_exist.csv")), invalid_argument);
}
