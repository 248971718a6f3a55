#include "ncdiff/cli.hpp"

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "ncdiff/errors.hpp"
#include "ncdiff/specfile.hpp"

namespace ncd {

namespace {

ModelFile load(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_model(buf.str());
}

// Points failing per-rule lines at the rule's source line.
void annotate(ValidationReport& r, const ModelFile& m) {
  ValidationReport out;
  for (auto line : r.lines()) {
    const auto colon = line.key.find(':');
    if (line.status == Status::Fail && colon != std::string::npos) {
      auto it = m.source_lines.find("rule:" + line.key.substr(colon + 1));
      if (it != m.source_lines.end())
        line.detail += " [rule at line " + std::to_string(it->second) + "]";
    }
    out.add(line.key, line.status, line.detail);
  }
  r = out;
}

int exit_code(Status s) { return s == Status::Pass ? 0 : 1; }

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact first-order differential calculi and Cartan pairs on quadratic presentations", "nc"};
  app.require_subcommand(1);
  bool machine = false;
  app.add_flag("--machine", machine, "tab-separated key/status/detail lines");

  std::string file, expr, dual, element;
  TrialOptions opts;
  int bound = 0;
  int kernel_degree = 3;

  auto add_trials = [&](CLI::App* sub) {
    sub->add_option("--trials", opts.trials, "randomized trials")->check(CLI::NonNegativeNumber);
    sub->add_option("--degree", opts.degree, "degree bound for random elements")->check(CLI::NonNegativeNumber);
    sub->add_option("--seed", opts.seed, "base seed; trial t uses seed + t");
  };
  auto add_file = [&](CLI::App* sub) { sub->add_option("file", file, "model file (.nc)")->required(); };

  auto* check = app.add_subcommand("check", "confluence, bimodule, calculus and Cartan checks");
  add_file(check);
  add_trials(check);
  auto* d = app.add_subcommand("d", "differential of an algebra element");
  add_file(d);
  d->add_option("expr", expr, "algebra element")->required();
  auto* partial = app.add_subcommand("partial", "right partial derivative X^ρ(f)");
  add_file(partial);
  partial->add_option("X", dual, "dual element, e.g. dx or ( x ).dy")->required();
  partial->add_option("expr", expr, "algebra element")->required();
  auto* pair_eval = app.add_subcommand("pair-eval", "pairing <X, x>");
  add_file(pair_eval);
  pair_eval->add_option("X", dual, "dual element")->required();
  pair_eval->add_option("x", element, "module element, e.g. dx.( y )")->required();
  auto* cartan_check = app.add_subcommand("cartan-check", "right Cartan pair axioms");
  add_file(cartan_check);
  add_trials(cartan_check);
  auto* left_check = app.add_subcommand("left-check", "left Cartan pair axioms of the mirrored pair");
  add_file(left_check);
  add_trials(left_check);
  auto* from_pair = app.add_subcommand("from-pair", "calculus reconstructed from a Cartan pair");
  add_file(from_pair);
  auto* roundtrip = app.add_subcommand("roundtrip", "calculus -> pair -> calculus and pair -> calculus -> pair");
  add_file(roundtrip);
  add_trials(roundtrip);
  auto* faithful = app.add_subcommand("faithful", "bounded faithfulness of the action");
  add_file(faithful);
  faithful->add_option("--degree", kernel_degree, "coefficient degree bound")->check(CLI::NonNegativeNumber);
  auto* spans = app.add_subcommand("spans", "bounded check that differentials span the module");
  add_file(spans);
  spans->add_option("--bound", bound, "degree bound")->check(CLI::NonNegativeNumber);
  auto* mirror_cmd = app.add_subcommand("mirror", "opposite model");
  add_file(mirror_cmd);
  auto* emit_cmd = app.add_subcommand("emit", "canonical form of a model file");
  add_file(emit_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  auto print_report = [&](const ValidationReport& r) {
    out << (machine ? emit_machine(r) : emit_human(r));
    return exit_code(r.verdict());
  };
  auto print_value = [&](const std::string& v) {
    out << (machine ? "result\tPASS\t" + v + "\n" : v + "\n");
    return 0;
  };

  std::optional<ModelFile> loaded;
  try {
    loaded = load(file);
  } catch (const ParseError& e) {
    err << "error: " << file << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  const ModelFile& m = *loaded;

  try {
    if (check->parsed()) {
      ValidationReport r = check_presentation(m.algebra);
      const bool confluent = r.ok();
      if (m.has_bimodule()) {
        if (confluent)
          r.append(check_bimodule(bimodule_of(m)));
        else
          r.add("bimodule", Status::Inconclusive, "skipped: algebra is not confluent");
      }
      if (m.differential && confluent)
        r.append(check_calculus(calculus_of(m)));
      if (m.action && confluent)
        r.append(check_right_axioms(pair_of(m), opts));
      annotate(r, m);
      return print_report(r);
    }
    if (d->parsed()) {
      const auto c = calculus_of(m);
      require_valid(c);
      return print_value(format(diff(parse_expr(expr, m.algebra), c), c.bimodule()));
    }
    if (partial->parsed()) {
      const auto pair = pair_of(m);
      const auto X = parse_dual_element(dual, m.algebra, m.basis);
      return print_value(format(action_apply(pair, X, parse_expr(expr, m.algebra)), m.algebra));
    }
    if (pair_eval->parsed()) {
      const auto b = bimodule_of(m);
      const auto X = parse_dual_element(dual, m.algebra, m.basis);
      const auto x = parse_module_element(element, m.algebra, m.basis);
      return print_value(format(pair(X, x, b), m.algebra));
    }
    if (cartan_check->parsed())
      return print_report(check_right_axioms(pair_of(m), opts));
    if (left_check->parsed()) {
      const auto left = mirror(pair_of(m));
      auto r = check_left_axioms(left, opts);
      const bool coherent = check_right_axioms(mirror(left), opts).verdict() == r.verdict();
      r.add("left:mirror-coherence", coherent ? Status::Pass : Status::Fail);
      return print_report(r);
    }
    if (from_pair->parsed()) {
      out << emit(to_model(calculus_from_pair(pair_of(m))));
      return 0;
    }
    if (roundtrip->parsed()) {
      ValidationReport r;
      if (m.differential)
        r.append(roundtrip_calculus(calculus_of(m), opts));
      r.append(roundtrip_pair(pair_of(m), opts));
      return print_report(r);
    }
    if (faithful->parsed()) {
      const auto pair = pair_of(m);
      const auto k = faithful_bounded(pair, kernel_degree);
      ValidationReport r;
      const std::string scope =
          "degree " + std::to_string(kernel_degree) + ", " + std::to_string(k.unknowns) + " unknowns";
      if (k.faithful()) {
        r.add("faithful", Status::Pass, "empty kernel at " + scope);
      } else {
        r.add("faithful", Status::Fail, "kernel dimension " + std::to_string(k.kernel.size()) + " at " + scope);
        for (std::size_t i = 0; i < k.kernel.size(); ++i)
          r.add("kernel:" + std::to_string(i + 1), Status::Fail, format(k.kernel[i], pair.presentation()));
      }
      return print_report(r);
    }
    if (spans->parsed()) {
      const auto c = calculus_of(m);
      require_valid(c);
      return print_report(to_report(spans_check(c, bound), c));
    }
    if (mirror_cmd->parsed()) {
      out << emit(mirror(m));
      return 0;
    }
    if (emit_cmd->parsed()) {
      out << emit(m);
      return 0;
    }
  } catch (const ParseError& e) {
    err << "error: argument: " << e.what() << "\n";
    return 2;
  } catch (const PresentationError& e) {
    err << "FAIL: " << e.what() << "\n";
    return 1;
  } catch (const ModelError& e) {
    err << "FAIL: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

} // namespace ncd
