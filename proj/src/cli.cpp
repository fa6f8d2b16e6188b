#include "pbw/cli.hpp"

#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "pbw/dyck.hpp"
#include "pbw/polytope.hpp"
#include "pbw/straighten.hpp"
#include "pbw/verify.hpp"

namespace pbw {

using nlohmann::json;

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

json root_json(const PositiveRoot& r) { return {{"i", r.i}, {"j", r.j.k}, {"barred", r.j.barred}}; }

std::string pick_format(const CommandConfig& cfg, const std::string& fallback,
                        std::initializer_list<const char*> allowed) {
  const std::string f = cfg.format.empty() ? fallback : cfg.format;
  for (const char* a : allowed)
    if (f == a) return f;
  throw UsageError("format '" + f + "' is not supported by " + cfg.subcommand);
}

RootSystem system_of(const CommandConfig& cfg) {
  const Family f = parse_family(cfg.family);
  if (cfg.rank < 1) throw UsageError("rank must be >= 1, got " + std::to_string(cfg.rank));
  return RootSystem(make_spec(f, cfg.rank));
}

int cmd_roots(const CommandConfig& cfg, std::ostream& out) {
  const auto rs = system_of(cfg);
  const auto fmt = pick_format(cfg, "text", {"text", "json"});
  if (fmt == "json") {
    json a = json::array();
    for (const auto& r : rs.roots()) a.push_back(root_json(r));
    out << a.dump() << "\n";
  } else {
    for (RootId b = 0; b < static_cast<RootId>(rs.size()); ++b) out << rs.token(b) << "\n";
  }
  return exit_code::ok;
}

int cmd_paths(const CommandConfig& cfg, std::ostream& out) {
  const auto rs = system_of(cfg);
  const auto fmt = pick_format(cfg, "text", {"text", "json"});
  const auto paths = enumerate_paths(rs);
  if (fmt == "json") {
    json a = json::array();
    for (const auto& p : paths) {
      json q = json::array();
      for (RootId b : p.roots) q.push_back(root_json(rs.root(b)));
      a.push_back(std::move(q));
    }
    out << a.dump() << "\n";
  } else {
    for (const auto& p : paths) out << path_string(rs, p) << "\n";
  }
  return exit_code::ok;
}

DominantWeight weight_of(const CommandConfig& cfg, const RootSystem& rs) {
  if (cfg.weight.empty()) throw UsageError("--weight is required");
  return parse_weight(cfg.weight, rs.rank());
}

int cmd_points(const CommandConfig& cfg, std::ostream& out) {
  const auto rs = system_of(cfg);
  const auto m = weight_of(cfg, rs);
  const auto fmt = pick_format(cfg, "csv", {"csv", "json", "text"});
  const auto pts = Polytope(rs, m).points();
  if (fmt == "csv") {
    for (RootId b = 0; b < static_cast<RootId>(rs.size()); ++b) out << (b ? "," : "") << rs.token(b);
    out << "\n";
    for (const auto& s : pts) {
      for (std::size_t b = 0; b < s.size(); ++b) out << (b ? "," : "") << s[b];
      out << "\n";
    }
  } else if (fmt == "json") {
    json a = json::array();
    for (const auto& s : pts)
      a.push_back({{"s", s.values()},
                   {"exponent", format_exponent(rs, s)},
                   {"degree", s.degree()},
                   {"drop", weight_drop(rs, s)}});
    out << a.dump() << "\n";
  } else {
    for (const auto& s : pts) out << format_exponent(rs, s) << "\n";
  }
  return exit_code::ok;
}

int cmd_character(const CommandConfig& cfg, std::ostream& out) {
  const auto rs = system_of(cfg);
  const auto m = weight_of(cfg, rs);
  const auto fmt = pick_format(cfg, "json", {"json", "text"});
  const auto ch = Polytope(rs, m).character();
  std::vector<std::pair<SimpleRootVector, std::vector<std::int64_t>>> rows(ch.begin(), ch.end());
  std::stable_sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) {
    const int sx = std::accumulate(x.first.begin(), x.first.end(), 0);
    const int sy = std::accumulate(y.first.begin(), y.first.end(), 0);
    if (sx != sy) return sx < sy;
    return x.first < y.first;
  });
  if (fmt == "json") {
    json a = json::array();
    for (const auto& [d, p] : rows) a.push_back({{"drop", d}, {"poly", p}});
    out << a.dump() << "\n";
  } else {
    for (const auto& [d, p] : rows) {
      out << "(";
      for (std::size_t k = 0; k < d.size(); ++k) out << (k ? "," : "") << d[k];
      out << "):";
      for (std::size_t k = 0; k < p.size(); ++k)
        if (p[k] != 0) out << " " << p[k] << "q^" << k;
      out << "\n";
    }
  }
  return exit_code::ok;
}

int cmd_straighten(const CommandConfig& cfg, std::ostream& out) {
  const auto rs = system_of(cfg);
  const auto m = weight_of(cfg, rs);
  const auto fmt = pick_format(cfg, "json", {"json", "text"});
  const auto s = parse_exponent(rs, cfg.exponent);
  const auto r = Straightener(rs, m).reduce(s);
  if (fmt == "json") {
    json o = json::object();
    for (const auto& [t, c] : r.terms()) {
      // coefficients beyond 64 bits are emitted as strings
      if (c.fits_slong_p())
        o[format_exponent(rs, t)] = c.get_si();
      else
        o[format_exponent(rs, t)] = c.get_str();
    }
    out << o.dump() << "\n";
  } else {
    out << to_string(rs, r) << "\n";
  }
  return exit_code::ok;
}

int cmd_verify(const CommandConfig& cfg, std::ostream& out) {
  if (cfg.suite.empty()) throw UsageError("--suite is required");
  const auto fmt = pick_format(cfg, "json", {"json", "text"});
  VerifyOptions o;
  if (cfg.family_given) o.family = parse_family(cfg.family);
  o.max_rank = cfg.max_rank;
  o.max_coeff = cfg.max_coeff;
  o.samples = cfg.samples;
  o.seed = cfg.seed;
  if (o.max_coeff < 0) throw UsageError("--max-coeff must be >= 0");
  if (o.max_rank < 0) throw UsageError("--max-rank must be >= 0");
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), cfg.suite) == names.end())
    throw UsageError("unknown suite '" + cfg.suite + "'");
  const Report rep = run_suite(cfg.suite, o);
  if (fmt == "json") {
    json checks = json::array();
    for (const auto& c : rep.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    out << json{{"suite", rep.suite}, {"pass", rep.pass()}, {"checks", checks}}.dump(2) << "\n";
  } else {
    for (const auto& c : rep.checks) out << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
  }
  return rep.pass() ? exit_code::ok : exit_code::failure;
}

}  // namespace

int run(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.subcommand == "roots") return cmd_roots(cfg, out);
    if (cfg.subcommand == "paths") return cmd_paths(cfg, out);
    if (cfg.subcommand == "points") return cmd_points(cfg, out);
    if (cfg.subcommand == "character") return cmd_character(cfg, out);
    if (cfg.subcommand == "straighten") return cmd_straighten(cfg, out);
    if (cfg.subcommand == "verify") return cmd_verify(cfg, out);
    err << "error: unknown subcommand '" << cfg.subcommand << "'\n";
    return exit_code::usage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::usage;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::usage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return exit_code::failure;
  }
}

}  // namespace pbw
