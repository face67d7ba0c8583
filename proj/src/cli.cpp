#include "k2gr/cli.hpp"

#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "k2gr/cyclotomic.hpp"
#include "k2gr/invariants.hpp"
#include "k2gr/orders.hpp"
#include "k2gr/presentation.hpp"
#include "k2gr/ring.hpp"
#include "k2gr/symbols.hpp"

namespace k2gr::cli {

namespace {

using json = nlohmann::ordered_json;

json to_json_int(const Int& v) {
  static const Int lo = std::numeric_limits<std::int64_t>::min();
  static const Int hi = std::numeric_limits<std::int64_t>::max();
  if (v >= lo && v <= hi) return v.convert_to<std::int64_t>();
  return v.str();
}

Int ipow_int(int base, int exp) {
  Int r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

std::string render_value(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  if (v.is_array()) {
    std::string s = "[";
    bool first = true;
    for (const auto& el : v) {
      if (!first) s += ", ";
      s += render_value(el);
      first = false;
    }
    s += "]";
    return s;
  }
  return v.dump();
}

void emit_text(const json& j, std::ostream& out, const std::string& prefix) {
  for (const auto& [key, value] : j.items()) {
    const std::string label = prefix.empty() ? key : prefix + "." + key;
    if (value.is_object()) {
      emit_text(value, out, label);
    } else {
      out << label << ": " << render_value(value) << "\n";
    }
  }
}

void write_table_csv(const json& rows, std::ostream& out) {
  out << "quantity,p,n,k,value,citation\n";
  for (const auto& row : rows) {
    out << row["quantity"].get<std::string>() << ',' << row["p"].dump() << ','
        << row["n"].dump() << ',' << (row["k"].is_null() ? "" : row["k"].dump()) << ','
        << (row["value"].is_string() ? row["value"].get<std::string>() : row["value"].dump())
        << ',' << row["citation"].get<std::string>() << "\n";
  }
}

struct Grid {
  std::vector<int> ps{2, 3};
  std::vector<int> ns{1, 2, 3};
  std::vector<int> ks{1, 2, 3, 4};
};

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

int grid_number(const std::string& text) {
  const std::string t = trim(text);
  try {
    std::size_t used = 0;
    int v = std::stoi(t, &used);
    if (used != t.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("grid: '" + t + "' is not an integer");
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return parts;
}

Grid parse_grid(const std::string& text) {
  Grid g;
  if (trim(text).empty()) return g;
  for (const std::string& part : split(text, ';')) {
    if (trim(part).empty()) continue;
    const std::size_t eq = part.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("grid: expected var=values in '" + trim(part) + "'");
    const std::string var = trim(part.substr(0, eq));
    std::vector<int> values;
    for (const std::string& item : split(part.substr(eq + 1), ',')) {
      const std::size_t dots = item.find("..");
      if (dots == std::string::npos) {
        values.push_back(grid_number(item));
      } else {
        const int a = grid_number(item.substr(0, dots));
        const int b = grid_number(item.substr(dots + 2));
        if (a > b) throw std::invalid_argument("grid: empty range '" + trim(item) + "'");
        for (int v = a; v <= b; ++v) values.push_back(v);
      }
    }
    if (values.empty()) throw std::invalid_argument("grid: no values for '" + var + "'");
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    if (values.front() < 1) throw std::invalid_argument("grid: values must be positive");
    if (var == "p") {
      g.ps = values;
    } else if (var == "n") {
      g.ns = values;
    } else if (var == "k") {
      g.ks = values;
    } else {
      throw std::invalid_argument("grid: unknown variable '" + var + "'");
    }
  }
  return g;
}

void push_row(json& rows, const std::string& quantity, int p, int n, int k, const Int& value,
              const std::string& citation) {
  json row;
  row["quantity"] = quantity;
  row["p"] = p;
  row["n"] = n;
  if (k > 0) {
    row["k"] = k;
  } else {
    row["k"] = nullptr;
  }
  row["value"] = to_json_int(value);
  row["citation"] = citation;
  rows.push_back(row);
}

json table_rows(const Grid& grid) {
  json rows = json::array();
  for (int p : grid.ps) {
    if (!is_prime(p)) throw std::invalid_argument("grid: p = " + std::to_string(p) + " is not prime");
    for (int n : grid.ns) {
      const K2cReport k2c = k2c_exponent(p, n);
      push_row(rows, "k2c_total_rank", p, n, 0, k2c.total_rank, k2c.citation);
      for (int k : grid.ks) {
        if (k == 1) {
          const RankReport r = k2_rank(RingSpec::make(RingFamily::FpG, p, n, 1));
          push_row(rows, "k2_rank_fpg", p, n, 1, r.value, r.citation);
        }
        if (k >= 2) {
          const RankReport r = k2_rank(RingSpec::make(RingFamily::ZpkG, p, n, k));
          push_row(rows, "k2_rank_zpk", p, n, k, r.value, r.citation);
        }
        if (k == 1 && n >= 2) {
          const RankReport r = k2_rank(RingSpec::make(RingFamily::FpGModGtilde, p, n, 1));
          push_row(rows, "k2_rank_fpg-gtilde", p, n, 1, r.value, r.citation);
        }
        if (k >= n && (n >= 2 || k >= 2)) {
          const RankReport r = k2_rank(RingSpec::make(RingFamily::ZGModPkGamma, p, n, k));
          push_row(rows, "k2_rank_zg-pkgamma", p, n, k, r.value, r.citation);
        }
      }
      if (p % 2 == 1) {
        for (int k : grid.ks) {
          const RankReport r = sk1_rank(p, n, k);
          push_row(rows, "sk1_rank", p, n, k, r.value, r.citation);
        }
        const BoundsReport b = lower_bounds(p, n);
        push_row(rows, "k2_zg_lower_bound", p, n, 0, b.k2_zg, b.citation);
        push_row(rows, "wh2_lower_bound", p, n, 0, b.wh2, b.citation);
        push_row(rows, "sk1_zg_rank", p, n, 0, b.sk1_zg_rank, b.sk1_citation);
      }
    }
  }
  return rows;
}

json lattice_json(const IntegerLattice& l) {
  json j;
  j["denominator"] = to_json_int(l.denominator());
  json rows = json::array();
  for (const auto& row : l.basis()) {
    json r = json::array();
    for (const Int& e : row) r.push_back(to_json_int(e));
    rows.push_back(r);
  }
  j["hnf"] = rows;
  return j;
}

json order_info_report(int p, int n, int k) {
  RingSpec::make(RingFamily::FpG, p, n, 1);  // validates p, n
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  const std::size_t m = static_cast<std::size_t>(ipow_int(p, n));

  const auto subgroups = enumerate_subgroups(p, n);
  const FiniteQuotientRing ambient = zg_mod_pk(p, n, 1);
  bool idempotents_pass = true;
  for (const Subgroup& h : subgroups) {
    if (!idempotent_check(ambient, idempotent(h))) idempotents_pass = false;
  }

  const IntegerLattice gamma = gamma_lattice(p, n);
  const IntegerLattice i_lat = ideal_I(p, n);
  const IntegerLattice j_lat = ideal_J(p, n);
  ZMat identity(m, std::vector<Int>(m, 0));
  for (std::size_t t = 0; t < m; ++t) identity[t][t] = 1;
  const IntegerLattice zg(identity, 1);

  // Ring closure of Gamma: products of basis rows stay inside the lattice.
  bool ring_closed = true;
  const Int d = gamma.denominator();
  const Int d2 = d * d;
  for (std::size_t i = 0; i < m && ring_closed; ++i) {
    for (std::size_t j = i; j < m && ring_closed; ++j) {
      const std::vector<Int> prod = ambient.group_algebra_mul(gamma.basis()[i], gamma.basis()[j]);
      std::vector<Rat> v(m);
      for (std::size_t t = 0; t < m; ++t) v[t] = Rat(prod[t], d2);
      if (!gamma.contains(v)) ring_closed = false;
    }
  }

  // J = I + Z * gtilde.
  bool j_equals = false;
  if (i_lat.denominator() == 1) {
    ZMat rows = i_lat.basis();
    rows.push_back(gtilde_sigma(p, n));
    j_equals = IntegerLattice(rows, 1) == j_lat;
  }

  const IntegerLattice p_j = IntegerLattice::scale(j_lat, Rat(p));
  const IntegerLattice pk_gamma = IntegerLattice::scale(gamma, Rat(ipow_int(p, k)));

  json doc;
  doc["p"] = p;
  doc["n"] = n;
  doc["k"] = k;
  doc["subgroups"] = subgroups.size();
  doc["gamma_index"] = to_json_int(lattice_index(zg, gamma));
  doc["idempotents_pass"] = idempotents_pass;
  doc["gamma_ring_closed"] = ring_closed;
  doc["j_equals_i_plus_gtilde"] = j_equals;
  json inc;
  inc["pJ_in_I"] = lattice_leq(p_j, i_lat);
  inc["I_in_J"] = lattice_leq(i_lat, j_lat);
  inc["J_in_ZG"] = lattice_leq(j_lat, zg);
  inc["pk_gamma_in_ZG"] = lattice_leq(pk_gamma, zg);
  doc["inclusions"] = inc;
  json lats;
  lats["gamma"] = lattice_json(gamma);
  lats["ideal_I"] = lattice_json(i_lat);
  lats["ideal_J"] = lattice_json(j_lat);
  lats["pk_gamma"] = lattice_json(pk_gamma);
  doc["lattices"] = lats;
  return doc;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"Exact K2/SK1 computations for truncated elementary abelian group rings"};
  app.require_subcommand(1);

  std::string ring_name = "fpg";
  std::string symbol_text;
  std::string format = "json";
  std::string grid_text;
  int p = 0, n = 0, k = -1, bound = 13;

  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format (json, csv, text)")
        ->check(CLI::IsMember({"json", "csv", "text"}));
  };
  const auto add_pn = [&](CLI::App* sub) {
    sub->add_option("--p", p, "Prime p")->required();
    sub->add_option("--n", n, "Number of group generators")->required();
  };
  const auto add_ring = [&](CLI::App* sub) {
    sub->add_option("--ring", ring_name, "Ring family: fpg, zpk, fpg-gtilde, zg-pkgamma")
        ->required();
    sub->add_option("--k", k, "Coefficient exponent k");
  };

  CLI::App* rank_cmd = app.add_subcommand("rank", "Rank of K2 of the chosen ring");
  add_pn(rank_cmd);
  add_ring(rank_cmd);
  add_format(rank_cmd);

  CLI::App* basis_cmd = app.add_subcommand("basis", "Coordinate basis of K2 of the chosen ring");
  add_pn(basis_cmd);
  add_ring(basis_cmd);
  add_format(basis_cmd);

  CLI::App* reduce_cmd =
      app.add_subcommand("reduce", "Reduce a Dennis-Stein symbol onto the coordinate basis");
  add_pn(reduce_cmd);
  add_ring(reduce_cmd);
  reduce_cmd->add_option("--symbol", symbol_text, "Symbol text, e.g. \"<x1, x2>\"")->required();
  add_format(reduce_cmd);

  CLI::App* verify_cmd =
      app.add_subcommand("verify-relations", "Rank check of the monomial relation matrix");
  add_pn(verify_cmd);
  add_format(verify_cmd);

  CLI::App* order_cmd =
      app.add_subcommand("order-info", "Maximal-order lattices, idempotents and inclusions");
  add_pn(order_cmd);
  order_cmd->add_option("--k", k, "Exponent for the p^k Gamma inclusion check (default n)");
  add_format(order_cmd);

  CLI::App* sk1_cmd = app.add_subcommand("sk1", "Rank of SK1 of the mod-p^k group ring");
  add_pn(sk1_cmd);
  sk1_cmd->add_option("--k", k, "Coefficient exponent k (default 1)");
  add_format(sk1_cmd);

  CLI::App* bounds_cmd =
      app.add_subcommand("bounds", "Lower bounds for K2 and Wh2 of the integral group ring");
  add_pn(bounds_cmd);
  add_format(bounds_cmd);

  CLI::App* k2c_cmd =
      app.add_subcommand("k2c", "Order exponent of the continuous K2 of the p-adic group ring");
  add_pn(k2c_cmd);
  add_format(k2c_cmd);

  CLI::App* cyc_cmd =
      app.add_subcommand("cyclotomic-check", "Uniformizer facts in the p-th cyclotomic field");
  cyc_cmd->add_option("--p", p, "Odd prime p")->required();
  cyc_cmd->add_option("--bound", bound, "Largest allowed p (default 13)");
  add_format(cyc_cmd);

  CLI::App* table_cmd = app.add_subcommand("table", "All closed-form values over a parameter grid");
  table_cmd->add_option("--grid", grid_text,
                        "Grid, e.g. \"p=2,3;n=1..3;k=1..4\" (defaults shown)");
  add_format(table_cmd);

  std::vector<const char*> argv;
  argv.push_back("k2gr");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    json err;
    err["error"] = std::string(e.what());
    out << err.dump() << "\n";
    return 2;
  }

  const auto effective_k = [&](RingFamily family) {
    if (k >= 0) return k;
    switch (family) {
      case RingFamily::ZpkG:
        return 2;
      case RingFamily::ZGModPkGamma:
        return n;
      default:
        return 1;
    }
  };

  try {
    if (format == "csv" && !table_cmd->parsed())
      throw std::invalid_argument("csv output is only available for the table command");

    json doc;
    if (rank_cmd->parsed()) {
      const RingSpec spec = RingSpec::make(parse_family(ring_name), p, n, effective_k(parse_family(ring_name)));
      const RankReport rep = k2_rank(spec);
      doc["rank"] = to_json_int(rep.value);
      doc["citation"] = rep.citation;
    } else if (basis_cmd->parsed()) {
      const RingSpec spec = RingSpec::make(parse_family(ring_name), p, n, effective_k(parse_family(ring_name)));
      const auto ids = basis(spec);
      doc["rank"] = ids.size();
      doc["citation"] = basis_citation(spec);
      json arr = json::array();
      for (const GeneratorId& id : ids) arr.push_back(id.str());
      doc["generators"] = arr;
    } else if (reduce_cmd->parsed()) {
      const RingSpec spec = RingSpec::make(parse_family(ring_name), p, n, effective_k(parse_family(ring_name)));
      const SymbolEngine engine(spec);
      const auto ring = Ring::create(spec);
      const DSSymbol s = parse_symbol(ring, symbol_text);
      const SymbolVector v = engine.reduce(s);
      json coords = json::object();
      for (const auto& [id, c] : v.coords()) coords[id] = c;
      doc["coords"] = coords;
    } else if (verify_cmd->parsed()) {
      RingSpec::make(RingFamily::FpG, p, n, 1);
      const RankCheck c = verify_rank(p, n);
      doc["p"] = c.p;
      doc["n"] = c.n;
      doc["columns"] = c.columns;
      doc["rows"] = c.rows;
      doc["rank"] = c.rank;
      doc["quotient_rank"] = c.quotient_rank;
      doc["expected"] = c.expected;
      doc["pass"] = c.pass;
    } else if (order_cmd->parsed()) {
      doc = order_info_report(p, n, k >= 0 ? k : n);
    } else if (sk1_cmd->parsed()) {
      const RankReport rep = sk1_rank(p, n, k >= 0 ? k : 1);
      const Sk1Limit lim = sk1_inverse_limit(p, n);
      doc["rank"] = to_json_int(rep.value);
      doc["citation"] = rep.citation;
      doc["inverse_limit"] = lim.shape;
    } else if (bounds_cmd->parsed()) {
      const BoundsReport rep = lower_bounds(p, n);
      doc["p"] = rep.p;
      doc["n"] = rep.n;
      doc["k2_zg"] = to_json_int(rep.k2_zg);
      doc["wh2"] = to_json_int(rep.wh2);
      doc["sk1_zg_rank"] = to_json_int(rep.sk1_zg_rank);
      doc["clamped"] = rep.clamped;
      doc["citation"] = rep.citation;
      doc["sk1_citation"] = rep.sk1_citation;
    } else if (k2c_cmd->parsed()) {
      const K2cReport rep = k2c_exponent(p, n);
      doc["p"] = rep.p;
      doc["n"] = rep.n;
      doc["exponent"] = to_json_int(rep.exponent_enumerated);
      doc["closed_form"] = to_json_int(rep.exponent_closed_form);
      doc["tau"] = rep.tau;
      doc["total_rank"] = to_json_int(rep.total_rank);
      doc["citation"] = rep.citation;
    } else if (cyc_cmd->parsed()) {
      const UniformizerReport rep = verify_uniformizer(p, bound);
      doc["p"] = rep.p;
      doc["norm_pi"] = to_json_int(rep.norm_pi);
      doc["unit_norm"] = to_json_int(rep.unit_norm);
      doc["p_is_unit_times_pi_power"] = rep.p_is_unit_times_pi_power;
      doc["one_plus_pi_has_order_p"] = rep.one_plus_pi_has_order_p;
      doc["pass"] = rep.pass;
    } else if (table_cmd->parsed()) {
      doc = table_rows(parse_grid(grid_text));
    }

    if (table_cmd->parsed() && format != "json") {
      write_table_csv(doc, out);
    } else if (format == "text") {
      emit_text(doc, out, "");
    } else {
      out << doc.dump() << "\n";
    }
    return 0;
  } catch (const unsupported_error& e) {
    json err;
    err["error"] = std::string(e.what());
    out << err.dump() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    json err;
    err["error"] = std::string(e.what());
    out << err.dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    json err;
    err["error"] = std::string(e.what());
    out << err.dump() << "\n";
    return 2;
  }
}

}  // namespace k2gr::cli
