#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gk2/gk2.hpp"

using namespace gk2;
using json = nlohmann::ordered_json;

namespace {

using Cell = std::variant<int_t, std::string, bool>;

struct Table {
  std::string command;
  json params = json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  bool record = false;  // single result object rather than a list of rows
};

std::string cell_text(const Cell& c) {
  if (const auto* i = std::get_if<int_t>(&c)) return std::to_string(*i);
  if (const auto* b = std::get_if<bool>(&c)) return *b ? "true" : "false";
  return std::get<std::string>(c);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

json cell_json(const Cell& c) {
  if (const auto* i = std::get_if<int_t>(&c)) return *i;
  if (const auto* b = std::get_if<bool>(&c)) return *b;
  return std::get<std::string>(c);
}

void render(std::ostream& os, const Table& t, const std::string& format) {
  if (format == "csv") {
    for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
    os << '\n';
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_escape(cell_text(row[i]));
      os << '\n';
    }
  } else if (format == "md") {
    os << '|';
    for (const auto& c : t.columns) os << ' ' << c << " |";
    os << "\n|";
    for (std::size_t i = 0; i < t.columns.size(); ++i) os << " --- |";
    os << '\n';
    for (const auto& row : t.rows) {
      os << '|';
      for (const auto& c : row) os << ' ' << cell_text(c) << " |";
      os << '\n';
    }
  } else {
    json doc;
    doc["schema"] = 1;
    doc["command"] = t.command;
    doc["params"] = t.params;
    auto obj = [&](const std::vector<Cell>& row) {
      json o = json::object();
      for (std::size_t i = 0; i < t.columns.size(); ++i) o[t.columns[i]] = cell_json(row[i]);
      return o;
    };
    if (t.record) {
      doc["result"] = t.rows.empty() ? json::object() : obj(t.rows.front());
    } else {
      doc["rows"] = json::array();
      for (const auto& row : t.rows) doc["rows"].push_back(obj(row));
    }
    os << doc.dump(2) << '\n';
  }
}

std::string join(const std::vector<int_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
  return out;
}

unsigned thread_budget() {
  const char* env = std::getenv("GK2_THREADS");
  if (!env || !*env) return 0;
  try {
    const long v = std::stol(env);
    detail::require(v >= 1, "");
    return static_cast<unsigned>(v);
  } catch (const std::exception&) {
    throw invalid_argument(std::string("GK2_THREADS must be a positive integer, got '") + env + "'");
  }
}

struct Options {
  int_t q = 2;
  int_t n = 5;
  std::string orbit = "O1";
  int_t lmin = 1;
  int_t lmax = 0;
  int_t l = 1;
  std::string format = "csv";
  std::string output;
  std::string reference;
  std::string matrix_out;
  bool list = false;
};

CurveParams params_of(const Options& o, bool curve_scale) {
  if (curve_scale) detail::require(o.q <= 5, "curve subcommands support q <= 5");
  return CurveParams::make(o.q, o.n);
}

json base_params(const Options& o) { return json{{"q", o.q}, {"n", o.n}}; }

Table cmd_semigroup(const Options& o) {
  const auto c = params_of(o, false);
  const auto orbit = parse_orbit(o.orbit);
  const auto s = weierstrass_semigroup(c, orbit);
  Table t{"semigroup", base_params(o), {"orbit", "generators", "genus", "conductor", "symmetric", "nongaps_below_conductor"}, {}, true};
  t.params["orbit"] = to_string(orbit);
  std::vector<int_t> small;
  for (int_t x : s.nongaps())
    if (x < s.conductor()) small.push_back(x);
  t.rows.push_back({std::string(to_string(orbit)), join(s.generators()), s.genus(), s.conductor(), s.is_symmetric(), join(small)});
  return t;
}

Table cmd_gaps(const Options& o) {
  const auto c = params_of(o, false);
  const auto orbit = parse_orbit(o.orbit);
  const auto s = weierstrass_semigroup(c, orbit);
  if (orbit == Orbit::o2) gap_set_l(c);
  Table t{"gaps", base_params(o), {"index", "gap"}, {}, false};
  t.params["orbit"] = to_string(orbit);
  int_t i = 0;
  for (int_t g : s.gaps()) t.rows.push_back({++i, g});
  return t;
}

Table cmd_fengrao(const Options& o) {
  const auto c = params_of(o, false);
  const auto orbit = parse_orbit(o.orbit);
  const auto s = weierstrass_semigroup(c, orbit);
  const int_t lmax = o.lmax > 0 ? o.lmax : 3 * c.g;
  Table t{"fengrao-table", base_params(o), {"N", "k", "rho_l", "nu_l", "d_ord"}, {}, false};
  t.params["orbit"] = to_string(orbit);
  t.params["lmin"] = o.lmin;
  t.params["lmax"] = lmax;
  for (const auto& r : code_table(s, c, o.lmin, lmax)) t.rows.push_back({r.length, r.dimension, r.rho, r.nu, r.d_ord});
  return t;
}

Table cmd_quantum(const Options& o) {
  const auto c = params_of(o, false);
  const auto orbit = parse_orbit(o.orbit);
  const auto s = weierstrass_semigroup(c, orbit);
  Table t{"quantum-table", base_params(o), {"l", "d_ord", "s_min", "s_max", "regime", "discrepancy"}, {}, false};
  t.params["orbit"] = to_string(orbit);
  auto push = [&](const QuantumRange& r) {
    t.rows.push_back({r.index, r.d_floor, r.s_min, r.s_max, std::string(to_string(r.regime)), r.discrepancy.value_or("")});
  };
  if (!o.reference.empty()) {
    t.params["reference"] = std::filesystem::path(o.reference).filename().string();
    for (const auto& ref : load_quantum_reference(o.reference)) push(range_prop(c, s, ref.index, ref));
    return t;
  }
  const int_t lmin = std::max(o.lmin, c.g);
  const int_t lmax = o.lmax > 0 ? o.lmax : 3 * c.g - 1;
  t.params["lmin"] = lmin;
  t.params["lmax"] = lmax;
  detail::require(lmin <= lmax && lmax <= c.code_length() - c.g, "quantum-table: empty or invalid index range");
  for (int_t l = lmin; l <= lmax; ++l) push(l <= 3 * c.g - 1 ? range_prop(c, s, l) : range_corollary(c, l));
  return t;
}

Table cmd_frobenius(const Options& o) {
  const auto c = params_of(o, false);
  Table t{"frobenius", base_params(o), {"gk2", "gk1", "isomorphic"}, {}, true};
  const auto differs = non_isomorphism_check(o.q, o.n);
  if (!differs) throw invalid_argument("frobenius: the dimension formula for GK_{2,n} applies to n >= 5 only");
  t.rows.push_back({frobenius_dim_gk2(c), frobenius_dim_gk1(c), !*differs});
  return t;
}

Table cmd_points(const Options& o) {
  const auto c = params_of(o, true);
  const auto f = make_curve_field(c);
  const auto pts = enumerate_points(c, f, thread_budget());
  if (o.list) {
    Table t{"points", base_params(o), {"kind", "x", "y", "z", "a", "class"}, {}, false};
    for (const auto& p : pts) {
      if (p.is_infinite())
        t.rows.push_back({std::string("infinity"), std::string(""), std::string(""), std::string(""),
                          static_cast<int_t>(p.a.serial()), std::string(to_string(p.cls))});
      else
        t.rows.push_back({std::string("affine"), static_cast<int_t>(p.x.serial()), static_cast<int_t>(p.y.serial()),
                          static_cast<int_t>(p.z.serial()), std::string(""), std::string(to_string(p.cls))});
    }
    return t;
  }
  int_t o1 = 0, o2 = 0;
  for (const auto& p : pts) {
    o1 += p.cls == PointClass::o1;
    o2 += p.cls == PointClass::o2;
  }
  Table t{"points", base_params(o), {"count", "expected", "o1", "o2", "field_size"}, {}, true};
  t.rows.push_back({static_cast<int_t>(pts.size()), c.n_rat, o1, o2, static_cast<int_t>(f.size())});
  return t;
}

Table cmd_code_matrix(const Options& o) {
  const auto c = params_of(o, true);
  const auto orbit = parse_orbit(o.orbit);
  detail::require(o.l >= 1, "code-matrix: --l must be >= 1");
  const auto f = make_curve_field(c);
  const auto pts = enumerate_points(c, f, thread_budget());
  const auto cm = code_matrix(c, f, pts, orbit, o.l);
  if (!o.matrix_out.empty()) {
    std::ofstream out(o.matrix_out);
    detail::require(static_cast<bool>(out), "cannot write '" + o.matrix_out + "'");
    write_matrix(out, cm.matrix, f);
  }
  Table t{"code-matrix", base_params(o), {"orbit", "l", "N", "rho_l", "rank"}, {}, true};
  t.params["orbit"] = to_string(orbit);
  t.params["l"] = o.l;
  t.rows.push_back({std::string(to_string(orbit)), o.l, static_cast<int_t>(cm.matrix.cols), cm.basis.back().pole_order,
                    static_cast<int_t>(rank(cm.matrix, f))});
  return t;
}

Table cmd_verify(const Options& o) {
  const auto c = params_of(o, false);
  Table t{"verify", base_params(o), {"check", "result", "detail"}, {}, false};
  bool all = true;
  auto add = [&](const std::string& name, bool ok, const std::string& detail) {
    all = all && ok;
    t.rows.push_back({name, std::string(ok ? "ok" : "FAILED"), detail});
  };
  const auto s1 = h_o1(c);
  const auto s2 = h_o2(c);
  add("genus_o1", s1.genus() == c.g, std::to_string(s1.genus()));
  add("genus_o2", s2.genus() == c.g, std::to_string(s2.genus()));
  add("gap_set_l", gap_set_l(c) == s2.gaps(), std::to_string(c.g) + " gaps");
  const int_t qn1 = c.q_pow_n() + 1;
  add("q^n+1_nongap", s1.contains(qn1) && s2.contains(qn1), std::to_string(qn1));
  if (c.n >= 5) add("non_symmetric", s1.contains(2 * c.g - 1) && s2.contains(2 * c.g - 1), std::to_string(2 * c.g - 1));
  bool kmax_ok = true;
  for (int_t tt = 0; tt <= c.q * c.q - 2; ++tt) {
    int_t best = -1;
    for (int_t k = 0; k <= c.m - 1; ++k)
      if (k * (c.q * c.q - c.q) + tt * c.m <= c.m_q) best = k;
    kmax_ok = kmax_ok && best == k_max(c, tt);
  }
  add("k_max", kmax_ok, "j+l in [0, q^2-2]");
  const auto part = verify_partition(c);
  add("partition_subsets", part.subsets_ok, "");
  add("partition_disjoint", part.disjoint_ok, "");
  add("partition_cardinality", part.cardinality_ok,
      std::to_string(part.family_i_total) + " + " + std::to_string(part.family_j_total));
  add("partition_genus", part.genus_ok,
      std::to_string(part.telescopic_genus) + " - " + std::to_string(part.family_i_total + part.family_j_total) +
          " = " + std::to_string(part.remainder));
  if (c.n >= 5) {
    const int_t r = frobenius_dim_gk2(c);
    add("frobenius_gk2", r == c.s + 2, std::to_string(r));
    if (c.q_pow_n() <= 1'000'000) add("frobenius_count", frobenius_dim_by_count(c, Orbit::o1) == r, "");
    add("non_isomorphic", frobenius_dim_gk1(c) != r, std::to_string(frobenius_dim_gk1(c)) + " != " + std::to_string(r));
  }
  std::uint64_t field = 1;
  for (int_t i = 0; i < c.field_degree(); ++i) field *= static_cast<std::uint64_t>(c.p);
  if (c.q <= 5 && field <= GfContext::max_size) {
    const auto f = make_curve_field(c);
    const auto pts = enumerate_points(c, f, thread_budget());
    int_t o1 = 0, o2 = 0;
    for (const auto& p : pts) {
      o1 += p.cls == PointClass::o1;
      o2 += p.cls == PointClass::o2;
    }
    add("point_count", static_cast<int_t>(pts.size()) == c.n_rat, std::to_string(pts.size()));
    add("orbit_sizes", o1 == c.q + 1 && o2 == c.q * c.q * c.q - c.q,
        std::to_string(o1) + ", " + std::to_string(o2));
    const int_t lmax = std::min<int_t>(20, c.code_length() - 1);
    for (auto orbit : {Orbit::o1, Orbit::o2}) {
      const auto cm = code_matrix(c, f, pts, orbit, lmax);
      add(std::string("rank_") + to_string(orbit), rank(cm.matrix, f) == static_cast<std::size_t>(lmax),
          "l = " + std::to_string(lmax));
    }
  }
  if (!all) {
    std::ostringstream os;
    render(os, t, "csv");
    throw consistency_error("verify: invariant failures\n" + os.str());
  }
  return t;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weierstrass semigroups, Feng-Rao bounds and AG/quantum code parameters for GK_{2,n} curves"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub, bool orbit) {
    sub->add_option("--q", o.q, "prime power q")->required();
    sub->add_option("--n", o.n, "odd n >= 3")->required();
    if (orbit) sub->add_option("--orbit", o.orbit, "O1 or O2")->check(CLI::IsMember({"O1", "O2", "o1", "o2", "1", "2"}));
    sub->add_option("--format", o.format, "csv, json or md")->check(CLI::IsMember({"csv", "json", "md"}));
    sub->add_option("-o,--output", o.output, "output file (default stdout)");
  };

  auto* semigroup = app.add_subcommand("semigroup", "generators, genus and conductor of H(P)");
  common(semigroup, true);
  auto* gaps = app.add_subcommand("gaps", "gap sequence of H(P)");
  common(gaps, true);
  auto* fengrao = app.add_subcommand("fengrao-table", "dual one-point code parameters");
  common(fengrao, true);
  fengrao->add_option("--lmin", o.lmin, "first index l");
  fengrao->add_option("--lmax", o.lmax, "last index l (default 3g)");
  auto* quantum = app.add_subcommand("quantum-table", "CSS parameter ranges");
  common(quantum, true);
  quantum->add_option("--lmin", o.lmin, "first index l (at least g)");
  quantum->add_option("--lmax", o.lmax, "last index l (default 3g-1)");
  quantum->add_option("--reference", o.reference, "CSV l,d_ord,s_min,s_max to compare against");
  auto* frobenius = app.add_subcommand("frobenius", "Frobenius dimensions of GK_{2,n} and GK_{1,n}");
  common(frobenius, false);
  auto* points = app.add_subcommand("points", "rational points over F_{q^{2n}}");
  common(points, false);
  points->add_flag("--list", o.list, "list every point");
  auto* matrix = app.add_subcommand("code-matrix", "evaluation-code generator matrix");
  common(matrix, true);
  matrix->add_option("--l", o.l, "number of basis functions")->required();
  matrix->add_option("--matrix-out", o.matrix_out, "write the matrix file here");
  auto* verify = app.add_subcommand("verify", "run the invariant suite for one (q, n)");
  common(verify, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    Table t;
    if (app.got_subcommand(semigroup)) t = cmd_semigroup(o);
    else if (app.got_subcommand(gaps)) t = cmd_gaps(o);
    else if (app.got_subcommand(fengrao)) t = cmd_fengrao(o);
    else if (app.got_subcommand(quantum)) t = cmd_quantum(o);
    else if (app.got_subcommand(frobenius)) t = cmd_frobenius(o);
    else if (app.got_subcommand(points)) t = cmd_points(o);
    else if (app.got_subcommand(matrix)) t = cmd_code_matrix(o);
    else t = cmd_verify(o);

    if (o.output.empty()) {
      render(std::cout, t, o.format);
    } else {
      std::ofstream out(o.output);
      if (!out) throw invalid_argument("cannot write '" + o.output + "'");
      render(out, t, o.format);
    }
    return 0;
  } catch (const invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const consistency_error& e) {
    std::cerr << "internal consistency failure: " << e.what() << '\n';
    return 2;
  } catch (const needs_local_resolution& e) {
    std::cerr << "needs local resolution: " << e.what() << '\n';
    return 3;
  }
}
