#include "gfc/cli/app.hpp"

#include <istream>
#include <ostream>

#include "CLI11.hpp"

#include "gfc/cli/parser.hpp"
#include "gfc/cli/render.hpp"

namespace gfc::cli {
namespace {

struct Flags {
  int dim = 0;
  std::string form;
  std::string coform;
  std::string cochain;
  std::string format;
  std::string expr;
  std::string op;
};

SessionConfig make_config(const Flags& f, const Io& io) {
  SessionConfig cfg;
  cfg.dim = f.dim;
  if (io.scalar_env) cfg.scalar_mode = parse_scalar_mode(*io.scalar_env);
  if (!f.form.empty()) cfg.form = load_matrix(f.form);
  if (!f.coform.empty()) cfg.coform = load_matrix(f.coform);
  if (!f.cochain.empty()) cfg.cochain = load_matrix(f.cochain);
  cfg.format = f.format == "json" ? OutputFormat::json : OutputFormat::text;
  resolve(cfg);
  return cfg;
}

// Maps library exceptions onto the exit-code contract.
template <class Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "parse error at " << e.what() << '\n';
    return exit_parse_error;
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << '\n';
    return exit_config_error;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_eval_error;
  }
}

template <Field F>
int eval_command(const SessionConfig& cfg, const std::string& text, Io& io) {
  const Evaluator<F> ev(cfg);
  const Expr e = parse(text, cfg.dim);
  io.out << render(ev.evaluate(e), cfg.format) << '\n';
  return exit_ok;
}

template <Field F>
int repl_command(const SessionConfig& cfg, Io& io) {
  const Evaluator<F> ev(cfg);
  std::string line;
  while (true) {
    if (io.interactive) io.out << "gfc> " << std::flush;
    if (!std::getline(io.in, line)) break;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const std::string_view body = std::string_view(line).substr(first);
    if (body.starts_with(":q") || body.starts_with("quit") || body.starts_with("exit")) break;
    guarded(io.err, [&] {
      io.out << render(ev.evaluate(parse(line, cfg.dim)), cfg.format) << '\n';
      return exit_ok;
    });
  }
  return exit_ok;
}

std::vector<Blade> basis(int dim) {
  std::vector<Blade> out;
  for (std::uint32_t m = 0; m < (1u << dim); ++m) out.emplace_back(m);
  return out;
}

template <Field F>
int table_command(const SessionConfig& cfg, const std::string& op, Io& io) {
  const Evaluator<F> ev(cfg);
  const int n = cfg.dim;
  if (op == "clifford" && !cfg.form) throw ConfigError("the clifford table needs --form");
  auto product = [&](Blade a, Blade b) {
    const auto x = Multivector<F>::blade(n, a);
    const auto y = Multivector<F>::blade(n, b);
    if (op == "wedge") return wedge(x, y);
    if (op == "meet") return meet(x, y);
    return ev.clifford(x, y);
  };
  const std::vector<Blade> blades = basis(n);
  if (cfg.format == OutputFormat::json) {
    nlohmann::json labels = nlohmann::json::array();
    for (Blade b : blades) labels.push_back(to_string(b, n));
    nlohmann::json rows = nlohmann::json::array();
    for (Blade a : blades) {
      nlohmann::json row = nlohmann::json::array();
      for (Blade b : blades) row.push_back(to_json(product(a, b)));
      rows.push_back(std::move(row));
    }
    io.out << nlohmann::json{{"dim", n}, {"op", op}, {"basis", labels}, {"table", rows}}.dump()
           << '\n';
    return exit_ok;
  }
  std::vector<std::vector<std::string>> cells;
  cells.push_back({""});
  for (Blade b : blades) cells.front().push_back(to_string(b, n));
  for (Blade a : blades) {
    std::vector<std::string> row{to_string(a, n)};
    for (Blade b : blades) row.push_back(to_text(product(a, b)));
    cells.push_back(std::move(row));
  }
  std::vector<std::size_t> width(cells.front().size(), 0);
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) line += "  ";
      line += row[c] + std::string(width[c] - row[c].size(), ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    io.out << line << '\n';
  }
  return exit_ok;
}

template <Field F>
int cocycle_command(const SessionConfig& cfg, Io& io) {
  if (!cfg.cochain) throw ConfigError("the cocycle command needs --p");
  const Evaluator<F> ev(cfg);
  const int n = cfg.dim;
  const CochainPair<F>& pair = ev.cochain();
  const CocycleForm<F> form = coboundary(pair);
  const auto witness = owl_counterexample(pair, form);
  const std::size_t checked = std::size_t{1} << (2 * n);
  if (cfg.format == OutputFormat::json) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [k, v] : form.forward.table()) {
      entries.push_back({{"left", k.first.indices()},
                         {"right", k.second.indices()},
                         {"value", ScalarTraits<F>::format(v)}});
    }
    nlohmann::json owl = {{"verified", !witness.has_value()}, {"pairs_checked", checked}};
    if (witness) owl["witness"] = {witness->first.indices(), witness->second.indices()};
    io.out << nlohmann::json{{"dim", n}, {"cocycle", entries}, {"owl", owl}}.dump() << '\n';
  } else {
    for (const auto& [k, v] : form.forward.table()) {
      io.out << "dP(" << to_string(k.first, n) << ", " << to_string(k.second, n)
             << ") = " << ScalarTraits<F>::format(v) << '\n';
    }
    if (witness) {
      io.out << "owl equality: FAILED at (" << to_string(witness->first, n) << ", "
             << to_string(witness->second, n) << ")\n";
    } else {
      io.out << "owl equality: verified on " << checked << " basis pairs\n";
    }
  }
  return witness ? exit_eval_error : exit_ok;
}

template <class Fn>
int dispatch(const SessionConfig& cfg, Fn&& fn) {
  if (cfg.scalar_mode == ScalarMode::binary_float) return fn(double{});
  return fn(Rational{});
}

}  // namespace

int run(const std::vector<std::string>& args, Io io) {
  CLI::App app{"Grade-free Graßmann, Clifford and Hopf algebra evaluator", "gfc"};
  app.require_subcommand(1);
  Flags f;

  auto add_session_flags = [&](CLI::App* sub) {
    sub->add_option("--dim", f.dim, "number of generators (1..16)");
    sub->add_option("--form", f.form, "bilinear form B: JSON file or inline matrix");
    sub->add_option("--coform", f.coform, "coscalar C: JSON file or inline matrix");
    sub->add_option("--p", f.cochain, "cochain bivector matrix: JSON file or inline matrix");
  };

  CLI::App* eval = app.add_subcommand("eval", "evaluate one expression");
  add_session_flags(eval);
  eval->add_option("--format", f.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  eval->add_option("expr", f.expr, "expression")->required();

  CLI::App* repl = app.add_subcommand("repl", "read and evaluate expressions line by line");
  add_session_flags(repl);
  repl->add_option("--format", f.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  CLI::App* table = app.add_subcommand("table", "multiplication table over all basis pairs");
  table->add_option("--dim", f.dim, "number of generators (1..16)");
  table->add_option("--form", f.form, "bilinear form B: JSON file or inline matrix");
  table->add_option("--op", f.op, "clifford, wedge or meet")
      ->required()
      ->check(CLI::IsMember({"clifford", "wedge", "meet"}));
  table->add_option("--format", f.format, "json (default) or text")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* cocycle = app.add_subcommand("cocycle", "tabulate the 2-cocycle of a cochain and check the owl equality");
  cocycle->add_option("--dim", f.dim, "number of generators (1..16)");
  cocycle->add_option("--p", f.cochain, "cochain bivector matrix: JSON file or inline matrix")->required();
  cocycle->add_option("--format", f.format, "json (default) or text")
      ->check(CLI::IsMember({"text", "json"}));

  // CLI11 wants argv order reversed when given a vector.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    io.out << app.help();
    if (auto* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front()) {
      io.out << sub->help();
    }
    return exit_ok;
  } catch (const CLI::CallForAllHelp& e) {
    io.out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    io.err << "configuration error: " << e.what() << '\n';
    return exit_config_error;
  }

  return guarded(io.err, [&]() -> int {
    if (eval->parsed()) {
      const SessionConfig cfg = make_config(f, io);
      return dispatch(cfg, [&]<class F>(F) { return eval_command<F>(cfg, f.expr, io); });
    }
    if (repl->parsed()) {
      const SessionConfig cfg = make_config(f, io);
      return dispatch(cfg, [&]<class F>(F) { return repl_command<F>(cfg, io); });
    }
    if (table->parsed()) {
      if (f.format.empty()) f.format = "json";
      const SessionConfig cfg = make_config(f, io);
      return dispatch(cfg, [&]<class F>(F) { return table_command<F>(cfg, f.op, io); });
    }
    if (f.format.empty()) f.format = "json";
    const SessionConfig cfg = make_config(f, io);
    return dispatch(cfg, [&]<class F>(F) { return cocycle_command<F>(cfg, io); });
  });
}

}  // namespace gfc::cli
