#pragma once

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lexcount/paths.hpp"
#include "lexcount/qstats.hpp"
#include "lexcount/routes.hpp"
#include "lexcount/suites.hpp"
#include "lexcount/transfer_matrix.hpp"

namespace lexcount::cli {

using nlohmann::json;

inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kFailed = 2;

// Integers that do not fit in 64 bits are emitted as strings.
inline json big_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

inline json poly_json(const Polynomial& p) {
  json cs = json::array();
  for (const auto& c : p.coeffs()) cs.push_back(big_json(c));
  return json{{"coeffs", cs}};
}

inline json patterns_json(const PatternSet& ps) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(to_string(p));
  return a;
}

inline std::string patterns_text(const PatternSet& ps) {
  std::string out;
  for (const auto& p : ps) out += (out.empty() ? "" : " ") + to_string(p);
  return out.empty() ? "-" : out;
}

inline std::string normalize_perm(std::string text) {
  for (char& c : text)
    if (c == ' ') c = ',';
  while (!text.empty() && text.front() == ',') text.erase(text.begin());
  while (!text.empty() && text.back() == ',') text.pop_back();
  std::string out;
  for (char c : text)
    if (!(c == ',' && !out.empty() && out.back() == ',')) out += c;
  return out;
}

inline PatternSet parse_patterns(const std::vector<std::string>& words) {
  std::vector<Permutation> v;
  for (const auto& w : words) v.push_back(parse_permutation(normalize_perm(w)));
  return PatternSet(std::move(v));
}

inline StandardTableau parse_tableau(const std::string& text) {
  StandardTableau tab;
  std::stringstream rows(text);
  std::string row;
  while (std::getline(rows, row, '/')) {
    std::vector<int> r;
    std::stringstream cells(normalize_perm(row));
    std::string cell;
    while (std::getline(cells, cell, ',')) r.push_back(std::stoi(cell));
    tab.rows.push_back(std::move(r));
  }
  return tab;
}

inline std::string tableau_text(const StandardTableau& tab) {
  std::string out;
  for (std::size_t r = 0; r < tab.rows.size(); ++r) {
    if (r) out += "/";
    for (std::size_t c = 0; c < tab.rows[r].size(); ++c) out += (c ? "," : "") + std::to_string(tab.rows[r][c]);
  }
  return out;
}

inline std::string fnv1a_hex(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream o;
  o << std::hex << std::setw(16) << std::setfill('0') << h;
  return o.str();
}

class Cache {
 public:
  explicit Cache(std::string dir) : dir_(std::move(dir)) {}
  bool enabled() const { return !dir_.empty(); }

  std::optional<std::string> get(const std::string& key) const {
    if (!enabled()) return std::nullopt;
    std::ifstream in(path(key));
    if (!in) return std::nullopt;
    try {
      json j = json::parse(in);
      if (j.value("command", "") != key) return std::nullopt;
      return j.at("output").get<std::string>();
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }

  void put(const std::string& key, const std::string& output) const {
    if (!enabled()) return;
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    std::ofstream o(path(key));
    if (o) o << json{{"command", key}, {"output", output}}.dump() << "\n";
  }

 private:
  std::string path(const std::string& key) const { return (std::filesystem::path(dir_) / (fnv1a_hex(key) + ".json")).string(); }
  std::string dir_;
};

struct Options {
  std::string poset;
  std::vector<std::string> avoid;
  std::string stat = "inv";
  std::string format = "plain";
  std::string route;
  std::string family = "EN";
  std::string suite = "theorems";
  std::string kind;
  std::string input;
  std::string cache_dir;
  int max_s = 4;
  int max_t = 4;
  int s = 0;
  int t = 0;
  bool force = false;
  bool inverse = false;
};

inline CountOptions count_options(const Options& o) {
  CountOptions c;
  if (!o.route.empty()) c.forced = parse_route(o.route);
  c.force = o.force;
  return c;
}

inline void check_guard(const PosetSpec& p, bool force) {
  const long long st = static_cast<long long>(p.s) * p.t;
  if (st > 25 && !force)
    throw SizeGuardError("enumeration refused for st = " + std::to_string(st) + " > 25 (use --force)");
}

inline std::string do_count(const Options& o) {
  const CountQuery q{parse_poset_spec(o.poset), parse_patterns(o.avoid)};
  const CountOutcome res = count(q, count_options(o));
  std::ostringstream out;
  if (o.format == "json") {
    json checked = json::array();
    for (const auto& v : res.checked) checked.push_back({{"route", v.label}, {"value", big_json(v.value)}});
    out << json{{"value", big_json(res.primary.value)},
                {"route", res.primary.label},
                {"poset", to_string(q.poset)},
                {"patterns", patterns_json(q.patterns)},
                {"checked", checked}}
               .dump()
        << "\n";
  } else if (o.format == "csv") {
    out << "poset,patterns,value,route\n"
        << to_string(q.poset) << "," << patterns_text(q.patterns) << "," << res.primary.value << ","
        << res.primary.label << "\n";
  } else {
    out << res.primary.value << "\troute " << res.primary.label;
    if (res.checked.size() > 1) {
      out << "\tagrees with";
      for (std::size_t i = 1; i < res.checked.size(); ++i) out << " " << res.checked[i].label;
    }
    out << "\n";
  }
  return out.str();
}

inline std::string do_list(const Options& o) {
  const PosetSpec p = parse_poset_spec(o.poset);
  check_guard(p, o.force);
  const PatternSet ps = parse_patterns(o.avoid);
  std::ostringstream out;
  if (o.format == "json") {
    json a = json::array();
    for_each_avoider(p.make(), ps, [&](std::span<const int> w) {
      a.push_back(to_string(Permutation(std::vector<int>(w.begin(), w.end()))));
    });
    out << json{{"poset", to_string(p)}, {"patterns", patterns_json(ps)}, {"extensions", a}}.dump() << "\n";
  } else {
    if (o.format == "csv") out << "extension\n";
    for_each_avoider(p.make(), ps, [&](std::span<const int> w) {
      for (std::size_t i = 0; i < w.size(); ++i) out << (i ? (o.format == "csv" ? ";" : " ") : "") << w[i];
      out << "\n";
    });
  }
  return out.str();
}

inline std::string do_table(const Options& o) {
  if (o.max_s < 1 || o.max_t < 1) throw std::invalid_argument("--max-s and --max-t must be positive");
  const Family fam = parse_family(o.family);
  const PatternSet ps = parse_patterns(o.avoid);
  std::vector<std::vector<BigInt>> grid(o.max_s, std::vector<BigInt>(o.max_t));
  for (int s = 1; s <= o.max_s; ++s)
    for (int t = 1; t <= o.max_t; ++t)
      grid[s - 1][t - 1] = count({PosetSpec{fam, s, t, Augment::None}, ps}, count_options(o)).primary.value;
  std::ostringstream out;
  if (o.format == "json") {
    json rows = json::array();
    for (const auto& row : grid) {
      json r = json::array();
      for (const auto& v : row) r.push_back(big_json(v));
      rows.push_back(r);
    }
    out << json{{"family", std::string(to_string(fam))}, {"patterns", patterns_json(ps)}, {"rows", rows}}.dump()
        << "\n";
  } else {
    const char* sep = o.format == "csv" ? "," : "\t";
    out << "s\\t";
    for (int t = 1; t <= o.max_t; ++t) out << sep << t;
    out << "\n";
    for (int s = 1; s <= o.max_s; ++s) {
      out << s;
      for (const auto& v : grid[s - 1]) out << sep << v;
      out << "\n";
    }
  }
  return out.str();
}

inline std::string do_qpoly(const Options& o) {
  const PosetSpec p = parse_poset_spec(o.poset);
  check_guard(p, o.force);
  const PatternSet ps = parse_patterns(o.avoid);
  const Stat stat = parse_stat(o.stat);
  const QPoly g = stat_gf(p.make(), ps, stat);
  std::ostringstream out;
  if (o.format == "json") {
    json j = poly_json(g);
    j["poset"] = to_string(p);
    j["patterns"] = patterns_json(ps);
    j["stat"] = std::string(to_string(stat));
    out << j.dump() << "\n";
  } else if (o.format == "csv") {
    out << "power,coefficient\n";
    for (int k = 0; k <= g.degree(); ++k) out << k << "," << g[k] << "\n";
  } else {
    out << g.pretty('q') << "\n";
  }
  return out.str();
}

inline std::string descent_text(const std::vector<int>& d) {
  std::string out;
  for (int x : d) out += (out.empty() ? "" : ",") + std::to_string(x);
  return "{" + out + "}";
}

inline std::string do_bijection(const Options& o) {
  const int s = o.s, t = o.t;
  std::string image, source;
  json j{{"kind", o.kind}, {"s", s}, {"t", t}};
  if (o.kind == "tableau") {
    if (o.inverse) {
      const auto tab = parse_tableau(o.input);
      image = to_string(tableau_to_ext(tab));
    } else {
      image = tableau_text(ext_to_tableau(parse_permutation(normalize_perm(o.input)), s, t));
    }
  } else if (o.kind == "fcpath") {
    if (o.inverse) {
      const Permutation pi = fcpath_to_ext(parse_ne(o.input), s, t);
      image = to_string(pi);
    } else {
      const Permutation pi = parse_permutation(normalize_perm(o.input));
      const LatticeWord w = ext_to_fcpath(pi, s, t);
      image = format_ne(w);
      j["extension_descents"] = descents(pi);
      j["path_descents"] = descents(std::span<const int>(w.letters));
    }
  } else if (o.kind == "zipper") {
    if (o.inverse) image = to_string(zipper_to_ext(parse_indexed(o.input), s, t));
    else image = format_indexed(ext_to_zipper(parse_permutation(normalize_perm(o.input)), s, t));
  } else {
    throw std::invalid_argument("--kind must be tableau, fcpath or zipper");
  }
  std::ostringstream out;
  if (o.format == "json") {
    j["input"] = o.input;
    j["image"] = image;
    j["inverse"] = o.inverse;
    out << j.dump() << "\n";
  } else {
    out << image << "\n";
    if (j.contains("path_descents"))
      out << "extension descents " << descent_text(j["extension_descents"].get<std::vector<int>>())
          << "\npath descents " << descent_text(j["path_descents"].get<std::vector<int>>()) << "\n";
  }
  return out.str();
}

inline std::string do_charpoly(const Options& o) {
  const IntPolynomial p = char_poly(o.t);
  if (o.format == "json") return json{{"t", o.t}, {"charpoly", poly_json(p)}}.dump() + "\n";
  if (o.format == "csv") {
    std::string out = "power,coefficient\n";
    for (int k = 0; k <= p.degree(); ++k) out += std::to_string(k) + "," + p[k].str() + "\n";
    return out;
  }
  return p.pretty('x') + "\n";
}

inline std::pair<std::string, bool> do_verify(const Options& o) {
  CheckReport r;
  if (o.suite == "theorems") r = theorem_suite();
  else if (o.suite == "conjectures") r = conjecture_suite();
  else throw std::invalid_argument("--suite must be theorems or conjectures");
  const bool conj = o.suite == "conjectures";
  auto verdict = [&](bool ok) { return conj ? (ok ? "consistent" : "counterexample") : (ok ? "pass" : "FAIL"); };
  std::ostringstream out;
  if (o.format == "json") {
    json lines = json::array();
    for (const auto& l : r.lines)
      lines.push_back({{"claim", l.claim}, {"instance", l.instance}, {"result", verdict(l.consistent)}, {"detail", l.detail}});
    json seq = json::object();
    for (const auto& [name, vals] : r.sequences) {
      json a = json::array();
      for (const auto& v : vals) a.push_back(big_json(v));
      seq[name] = a;
    }
    out << json{{"suite", o.suite}, {"checks", lines}, {"sequences", seq}, {"failures", r.counterexamples()}}.dump(1)
        << "\n";
  } else {
    for (const auto& l : r.lines) {
      out << verdict(l.consistent) << "\t" << l.claim << "\t" << l.instance;
      if (!l.consistent || conj) out << "\t" << l.detail;
      out << "\n";
    }
    for (const auto& [name, vals] : r.sequences) {
      out << "sequence\t" << name << "\t";
      for (std::size_t i = 0; i < vals.size(); ++i) out << (i ? "," : "") << vals[i];
      out << "\n";
    }
    out << r.lines.size() << " checks, " << r.counterexamples() << (conj ? " counterexamples" : " failures") << "\n";
  }
  return {out.str(), r.all_consistent()};
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact counting of pattern-avoiding linear extensions of rectangular posets"};
  app.require_subcommand(1, 1);
  Options o;
  const char* env_cache = std::getenv("LEXCOUNT_CACHE_DIR");
  if (env_cache) o.cache_dir = env_cache;

  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", o.format, "plain, json or csv")->check(CLI::IsMember({"plain", "json", "csv"}));
  };
  auto add_problem = [&](CLI::App* c) {
    c->add_option("--poset", o.poset, "FAMILY:SxT[+saw|+zip]")->required();
    c->add_option("--avoid", o.avoid, "forbidden pattern (repeatable)");
    c->add_flag("--force", o.force, "allow enumeration beyond st = 25");
    add_format(c);
  };

  auto* count_cmd = app.add_subcommand("count", "count avoiding linear extensions");
  add_problem(count_cmd);
  count_cmd->add_option("--route", o.route, "formula, transfer, gentree, paths, ideal-dp or oracle");
  count_cmd->add_option("--cache-dir", o.cache_dir, "memo directory for results");

  auto* list_cmd = app.add_subcommand("list", "list avoiding linear extensions in lexicographic order");
  add_problem(list_cmd);

  auto* table_cmd = app.add_subcommand("table", "grid of counts with s as rows and t as columns");
  table_cmd->add_option("--family", o.family, "poset family");
  table_cmd->add_option("--avoid", o.avoid, "forbidden pattern (repeatable)");
  table_cmd->add_option("--max-s", o.max_s, "largest s");
  table_cmd->add_option("--max-t", o.max_t, "largest t");
  table_cmd->add_option("--route", o.route, "force one route");
  table_cmd->add_flag("--force", o.force, "allow enumeration beyond st = 25");
  table_cmd->add_option("--cache-dir", o.cache_dir, "memo directory for results");
  add_format(table_cmd);

  auto* qpoly_cmd = app.add_subcommand("qpoly", "inv or maj generating polynomial");
  add_problem(qpoly_cmd);
  qpoly_cmd->add_option("--stat", o.stat, "inv or maj")->check(CLI::IsMember({"inv", "maj"}));

  auto* bij_cmd = app.add_subcommand("bijection", "apply a bijection or its inverse");
  bij_cmd->add_option("--kind", o.kind, "tableau, fcpath or zipper")->required()->check(
      CLI::IsMember({"tableau", "fcpath", "zipper"}));
  bij_cmd->add_option("--s", o.s, "number of teeth")->required();
  bij_cmd->add_option("--t", o.t, "tooth length")->required();
  bij_cmd->add_option("--input", o.input, "extension, path or tableau (rows separated by /)")->required();
  bij_cmd->add_flag("--inverse", o.inverse, "map a path or tableau back to an extension");
  add_format(bij_cmd);

  auto* cp_cmd = app.add_subcommand("charpoly", "det(I - xB_t)");
  cp_cmd->add_option("--t", o.t, "matrix size")->required()->check(CLI::Range(1, 64));
  add_format(cp_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("--suite", o.suite, "theorems or conjectures")->check(
      CLI::IsMember({"theorems", "conjectures"}));
  add_format(verify_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  std::string key;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--cache-dir") {
      ++i;
      continue;
    }
    if (a.rfind("--cache-dir=", 0) == 0) continue;
    key += a + '\x1f';
  }
  const Cache cache(o.cache_dir);

  try {
    std::string text;
    bool ok = true;
    if (*count_cmd || *table_cmd) {
      if (auto hit = cache.get(key)) {
        out << *hit;
        return kOk;
      }
      text = *count_cmd ? do_count(o) : do_table(o);
      cache.put(key, text);
    } else if (*list_cmd) {
      text = do_list(o);
    } else if (*qpoly_cmd) {
      text = do_qpoly(o);
    } else if (*bij_cmd) {
      text = do_bijection(o);
    } else if (*cp_cmd) {
      text = do_charpoly(o);
    } else {
      std::tie(text, ok) = do_verify(o);
    }
    out << text;
    return ok ? kOk : kFailed;
  } catch (const RouteDisagreement& e) {
    err << "error: " << e.what() << "\n";
    return kFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace lexcount::cli
