#include "pogp/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "pogp/gf.hpp"
#include "pogp/oracle.hpp"
#include "pogp/pattern.hpp"
#include "pogp/verify.hpp"

namespace pogp::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string to_string(const BigInt& v) { return v.str(); }

std::string to_string(const Rational& v) {
  if (denominator(v) == 1) return numerator(v).str();
  return numerator(v).str() + "/" + denominator(v).str();
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void emit_json(std::ostream& out, const Json& payload) { out << payload.dump(2) << "\n"; }

OrderMode parse_order(const std::string& name) {
  if (name == "incomparable") return OrderMode::Incomparable;
  if (name == "shuffle") return OrderMode::Shuffle;
  if (name == "explicit") return OrderMode::Explicit;
  throw std::invalid_argument("unknown order mode \"" + name + "\"");
}

std::vector<SymbolPair> parse_relations(const std::vector<std::string>& specs) {
  std::vector<SymbolPair> pairs;
  for (const auto& spec : specs) {
    size_t lt = spec.find('<');
    if (lt == std::string::npos || lt == 0 || lt + 1 == spec.size())
      throw std::invalid_argument("relation \"" + spec + "\" is not of the form a<b");
    pairs.push_back({parse_symbol(spec.substr(0, lt)), parse_symbol(spec.substr(lt + 1))});
  }
  return pairs;
}

Pogp load_pattern(const std::string& text, const std::string& order,
                  const std::vector<std::string>& relations) {
  OrderMode mode = parse_order(order);
  if (!relations.empty() && mode != OrderMode::Explicit)
    throw std::invalid_argument("--rel requires --order explicit");
  return Pogp::parse(text, mode, parse_relations(relations));
}

// Shared per-subcommand settings.
struct Common {
  std::string pattern;
  std::string order = "incomparable";
  std::vector<std::string> relations;
  std::string format = "table";
  std::uint64_t cap = EnumLimits{}.max_steps;

  Pogp load() const { return load_pattern(pattern, order, relations); }
  EnumLimits limits() const { return EnumLimits{cap}; }

  void attach(CLI::App* cmd, bool with_order = true) {
    cmd->add_option("-p,--pattern", pattern, "pattern text, e.g. \"1'-2-1''\"")->required();
    if (with_order) {
      cmd->add_option("--order", order, "cross-class order: incomparable, shuffle, explicit")
          ->check(CLI::IsMember({"incomparable", "shuffle", "explicit"}));
      cmd->add_option("--rel", relations,
                      "explicit strict relation a<b (repeatable, with --order explicit)");
    }
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    cmd->add_option("--cap", cap, "enumeration budget in word-steps")
        ->envname("POGP_ENUM_CAP")
        ->check(CLI::PositiveNumber);
  }
};

struct CountConfig : Common {
  int k = 0;
  int n = 0;
  bool quasi = false;
};

int cmd_count(const CountConfig& cfg, std::ostream& out) {
  Pogp p = cfg.load();
  BigInt result = cfg.quasi ? count_quasi_avoiders(p, cfg.k, cfg.n, cfg.limits())
                            : count_avoiders(p, cfg.k, cfg.n, cfg.limits());
  if (cfg.format == "json") {
    Json payload{{"command", "count"},  {"pattern", p.to_string()}, {"order", cfg.order},
                 {"k", cfg.k},          {"n", cfg.n},               {"quasi", cfg.quasi},
                 {"count", to_string(result)}};
    emit_json(out, payload);
  } else if (cfg.format == "csv") {
    out << "pattern,order,k,n,quasi,count\n"
        << csv_escape(p.to_string()) << "," << cfg.order << "," << cfg.k << "," << cfg.n << ","
        << (cfg.quasi ? "true" : "false") << "," << result << "\n";
  } else {
    out << result << "\n";
  }
  return 0;
}

struct SeriesConfig : Common {
  int k = 0;
  int order_n = gf::kDefaultOrder;
  std::string engine = "gf";
};

int cmd_series(const SeriesConfig& cfg, std::ostream& out, std::ostream& err) {
  Pogp p = cfg.load();
  Series series(cfg.order_n);
  std::string source = "oracle";
  bool need_oracle = cfg.engine == "oracle";
  if (cfg.engine == "gf") {
    if (auto closed = gf::formula_series(p, cfg.k, cfg.order_n)) {
      series = *closed;
      source = "closed-form";
    } else {
      err << "note: no closed form applies to \"" << p.to_string()
          << "\"; falling back to brute-force enumeration\n";
      need_oracle = true;
    }
  }
  if (need_oracle) series = gf::oracle_provider(p, cfg.order_n, cfg.limits())(cfg.k);

  if (cfg.format == "json") {
    Json coeffs = Json::array();
    for (int n = 0; n <= cfg.order_n; ++n) coeffs.push_back(to_string(series.coeff(n)));
    Json payload{{"command", "series"}, {"pattern", p.to_string()}, {"order", cfg.order},
                 {"k", cfg.k},          {"N", cfg.order_n},         {"engine", cfg.engine},
                 {"source", source},    {"coefficients", coeffs}};
    emit_json(out, payload);
  } else if (cfg.format == "csv") {
    out << "n,coefficient\n";
    for (int n = 0; n <= cfg.order_n; ++n) out << n << "," << to_string(series.coeff(n)) << "\n";
  } else {
    for (int n = 0; n <= cfg.order_n; ++n) out << (n ? "," : "") << to_string(series.coeff(n));
    out << "\n";
  }
  return 0;
}

int cmd_expand(const Common& cfg, std::ostream& out) {
  Pogp p = cfg.load();
  std::vector<Pogp> parts = expand(p);
  if (cfg.format == "json") {
    Json list = Json::array();
    for (const auto& q : parts) list.push_back(q.to_string());
    Json payload{{"command", "expand"},
                 {"pattern", p.to_string()},
                 {"order", cfg.order},
                 {"count", parts.size()},
                 {"patterns", list}};
    emit_json(out, payload);
  } else if (cfg.format == "csv") {
    out << "pattern\n";
    for (const auto& q : parts) out << csv_escape(q.to_string()) << "\n";
  } else {
    for (const auto& q : parts) out << q.to_string() << "\n";
  }
  return 0;
}

struct EquivConfig : Common {
  std::string other;
  int max_alphabet = 3;
  int max_length = 6;
};

int cmd_equiv(const EquivConfig& cfg, std::ostream& out) {
  Pogp p = cfg.load();
  Pogp q = load_pattern(cfg.other, cfg.order, cfg.relations);
  EquivReport report = equiv_check(p, q, cfg.max_alphabet, cfg.max_length, cfg.limits());
  if (cfg.format == "json") {
    Json payload{{"command", "equiv"},     {"left", p.to_string()},
                 {"right", q.to_string()}, {"order", cfg.order},
                 {"K", cfg.max_alphabet},  {"N", cfg.max_length},
                 {"equivalent", report.equivalent}};
    Json per = Json::array();
    for (bool agree : report.per_alphabet) per.push_back(agree);
    payload["per_alphabet"] = per;
    if (report.counterexample) {
      const auto& m = *report.counterexample;
      payload["counterexample"] = Json{{"k", m.alphabet},
                                       {"n", m.length},
                                       {"left", to_string(m.left)},
                                       {"right", to_string(m.right)}};
    } else {
      payload["counterexample"] = nullptr;
    }
    emit_json(out, payload);
  } else if (cfg.format == "csv") {
    out << "k,agree\n";
    for (size_t i = 0; i < report.per_alphabet.size(); ++i)
      out << i + 1 << "," << (report.per_alphabet[i] ? "true" : "false") << "\n";
  } else {
    for (size_t i = 0; i < report.per_alphabet.size(); ++i)
      out << "k=" << i + 1 << ": " << (report.per_alphabet[i] ? "agree" : "differ") << "\n";
    if (report.equivalent) {
      out << "equivalent within budget (K=" << cfg.max_alphabet << ", N=" << cfg.max_length
          << ")\n";
    } else {
      const auto& m = *report.counterexample;
      out << "counterexample: k=" << m.alphabet << " n=" << m.length << ": " << m.left
          << " != " << m.right << "\n";
    }
  }
  return report.equivalent ? 0 : 2;
}

struct MndConfig : Common {
  int k = 0;
  int n = 0;
  bool use_gf = false;
};

int cmd_mnd(const MndConfig& cfg, std::ostream& out, std::ostream& err) {
  Pogp p = cfg.load();
  std::map<int, BigInt> histogram;
  if (cfg.use_gf) {
    if (!p.hyphen_free())
      throw std::invalid_argument("the occurrence statistic requires a hyphen-free pattern");
    Series avoidance(cfg.n);
    if (auto closed = gf::formula_series(p, cfg.k, cfg.n)) {
      avoidance = *closed;
    } else {
      err << "note: no closed form applies to \"" << p.to_string()
          << "\"; falling back to brute-force enumeration\n";
      avoidance = gf::oracle_provider(p, cfg.n, cfg.limits())(cfg.k);
    }
    YSeries f = gf::mnd_gf(avoidance, cfg.k, cfg.n / p.length());
    for (int s = 0; s <= f.y_degree(); ++s) {
      const Rational& c = f.coeff(cfg.n, s);
      if (c != 0) histogram[s] = numerator(c);
    }
  } else {
    histogram = mnd_distribution(p, cfg.k, cfg.n, cfg.limits()).histogram;
  }

  if (cfg.format == "json") {
    Json hist = Json::object();
    for (const auto& [s, c] : histogram) hist[std::to_string(s)] = to_string(c);
    Json payload{{"command", "mnd"}, {"pattern", p.to_string()},
                 {"k", cfg.k},       {"n", cfg.n},
                 {"engine", cfg.use_gf ? "gf" : "oracle"},
                 {"histogram", hist}};
    emit_json(out, payload);
  } else if (cfg.format == "csv") {
    out << "s,count\n";
    for (const auto& [s, c] : histogram) out << s << "," << c << "\n";
  } else {
    size_t width = 1;
    for (const auto& [s, c] : histogram) width = std::max(width, to_string(c).size());
    for (const auto& [s, c] : histogram)
      out << s << "  " << std::setw(static_cast<int>(width)) << to_string(c) << "\n";
  }
  return 0;
}

struct VerifyConfig {
  int max_alphabet = 3;
  int max_length = 8;
  std::vector<std::string> only;
  std::string format = "table";
  std::uint64_t cap = EnumLimits{}.max_steps;
};

int cmd_verify(const VerifyConfig& cfg, const Hooks* hooks, std::ostream& out) {
  verify::Options opts;
  opts.max_alphabet = cfg.max_alphabet;
  opts.max_length = cfg.max_length;
  opts.only = cfg.only;
  opts.limits = EnumLimits{cfg.cap};
  if (hooks && hooks->registry_override) opts.registry_override = hooks->registry_override;
  verify::Report report = verify::run(opts);

  if (cfg.format == "json") {
    Json checks = Json::array();
    for (const auto& c : report.checks)
      checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    Json payload{{"command", "verify"},
                 {"K", cfg.max_alphabet},
                 {"N", cfg.max_length},
                 {"checks", checks},
                 {"all_passed", report.all_passed()}};
    emit_json(out, payload);
  } else if (cfg.format == "csv") {
    out << "check,passed,detail\n";
    for (const auto& c : report.checks)
      out << c.name << "," << (c.passed ? "true" : "false") << "," << csv_escape(c.detail)
          << "\n";
  } else {
    for (const auto& c : report.checks)
      out << std::left << std::setw(10) << c.name << (c.passed ? "pass  " : "FAIL  ") << c.detail
          << "\n";
    out << (report.all_passed() ? "all checks passed" : "verification FAILED") << "\n";
  }
  return report.all_passed() ? 0 : 2;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Hooks* hooks) {
  CLI::App app{"exact enumeration of partially ordered generalized patterns in k-ary words"};
  app.name("pogp");
  app.require_subcommand(1);

  CountConfig count_cfg;
  auto* count = app.add_subcommand("count", "count avoiders (or quasi-avoiders with --quasi)");
  count_cfg.attach(count);
  count->add_option("-k,--alphabet", count_cfg.k, "alphabet size")
      ->required()
      ->check(CLI::NonNegativeNumber);
  count->add_option("-n,--length", count_cfg.n, "word length")
      ->required()
      ->check(CLI::NonNegativeNumber);
  count->add_flag("--quasi", count_cfg.quasi, "count quasi-avoiders instead");

  SeriesConfig series_cfg;
  auto* series = app.add_subcommand("series", "avoidance series coefficients for n = 0..N");
  series_cfg.attach(series);
  series->add_option("-k,--alphabet", series_cfg.k, "alphabet size")
      ->required()
      ->check(CLI::NonNegativeNumber);
  series->add_option("-N,--trunc-order", series_cfg.order_n, "truncation order")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  series->add_option("--engine", series_cfg.engine, "gf (closed forms) or oracle (brute force)")
      ->check(CLI::IsMember({"gf", "oracle"}))
      ->capture_default_str();

  Common expand_cfg;
  auto* expand = app.add_subcommand("expand", "expansion into totally ordered patterns");
  expand_cfg.attach(expand);

  EquivConfig equiv_cfg;
  auto* equiv = app.add_subcommand("equiv", "compare avoider counts of two patterns");
  equiv_cfg.attach(equiv);
  equiv->add_option("-q,--other", equiv_cfg.other, "second pattern")->required();
  equiv->add_option("-K,--max-alphabet", equiv_cfg.max_alphabet, "largest alphabet checked")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  equiv->add_option("-N,--max-length", equiv_cfg.max_length, "largest word length checked")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();

  MndConfig mnd_cfg;
  auto* mnd = app.add_subcommand(
      "mnd", "distribution of the maximum number of non-overlapping occurrences");
  mnd_cfg.attach(mnd);
  mnd->add_option("-k,--alphabet", mnd_cfg.k, "alphabet size")
      ->required()
      ->check(CLI::NonNegativeNumber);
  mnd->add_option("-n,--length", mnd_cfg.n, "word length")
      ->required()
      ->check(CLI::NonNegativeNumber);
  mnd->add_flag("--gf", mnd_cfg.use_gf, "compute through the series engine");

  VerifyConfig verify_cfg;
  auto* verify_cmd = app.add_subcommand("verify", "formula-vs-oracle consistency suite");
  verify_cmd->add_option("-K,--max-alphabet", verify_cfg.max_alphabet, "largest alphabet")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  verify_cmd->add_option("-N,--max-length", verify_cfg.max_length, "largest length / order")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  verify_cmd->add_option("--only", verify_cfg.only, "run only these checks (comma separated)")
      ->delimiter(',');
  verify_cmd->add_option("--format", verify_cfg.format, "output format")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  verify_cmd->add_option("--cap", verify_cfg.cap, "enumeration budget in word-steps")
      ->envname("POGP_ENUM_CAP")
      ->check(CLI::PositiveNumber);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("pogp");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (count->parsed()) return cmd_count(count_cfg, out);
    if (series->parsed()) return cmd_series(series_cfg, out, err);
    if (expand->parsed()) return cmd_expand(expand_cfg, out);
    if (equiv->parsed()) return cmd_equiv(equiv_cfg, out);
    if (mnd->parsed()) return cmd_mnd(mnd_cfg, out, err);
    if (verify_cmd->parsed()) return cmd_verify(verify_cfg, hooks, out);
    err << "no command selected\n";
    return 1;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace pogp::cli
