#include "matchrb/cli.hpp"

#include "matchrb/algebra.hpp"
#include "matchrb/hopf.hpp"
#include "matchrb/io.hpp"
#include "matchrb/properties.hpp"
#include "matchrb/rewriting.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>

namespace matchrb {

namespace {

struct Options {
  std::string config;
  std::string format = "plain";
  std::string carrier = "mrb";
  std::string route = "subforest";
  std::string from = "word";
  bool forest_input = false;
  std::vector<std::string> exprs;

  std::string suite = "all";
  std::optional<std::size_t> max_degree;
  std::size_t letters = 1;
  std::size_t operators = 2;
  std::size_t context_depth = 2;
  bool mutate = false;
  std::uint64_t seed = 5489;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (format == f) return;
  throw UsageError("format '" + format + "' is not available for this command");
}

template <class B>
void emit(const Signature& sig, const LinComb<B>& v, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << to_json(sig, v).dump() << "\n";
  } else if (format == "latex") {
    if constexpr (std::is_same_v<B, Word>) {
      out << to_latex(sig, v) << "\n";
    } else {
      out << to_latex(sig, theta_inv(v)) << "\n";
    }
  } else if (format == "ascii-tree") {
    if constexpr (std::is_same_v<B, Word>) {
      out << to_ascii_tree(sig, theta(v));
    } else {
      out << to_ascii_tree(sig, v);
    }
  } else {
    out << to_plain(sig, v) << "\n";
  }
}

template <class B>
void emit(const Signature& sig, const TensorComb<B>& v, const std::string& format,
          std::ostream& out) {
  if (format == "json") {
    out << to_json(sig, v).dump() << "\n";
  } else if (format == "latex") {
    if constexpr (std::is_same_v<B, Word>) {
      out << to_latex(sig, v) << "\n";
    } else {
      TensorComb<Word> words;
      for (const auto& [p, c] : v) words.add_term({theta_inv(p.first), theta_inv(p.second)}, c);
      out << to_latex(sig, words) << "\n";
    }
  } else {
    out << to_plain(sig, v) << "\n";
  }
}

LinComb<Word> read_words(const Signature& sig, const Options& o, const std::string& text) {
  if (o.forest_input) return theta_inv(parse_forest_expression(text, sig));
  return parse_expression(text, sig);
}

int run_check(const Signature& config, const Options& o, std::ostream& out) {
  if (o.letters > config.letter_count() || o.operators > config.operator_count() ||
      o.operators == 0)
    throw UsageError("the configuration has " + std::to_string(config.letter_count()) +
                     " letters and " + std::to_string(config.operator_count()) + " operators");
  const Signature sig = config.restricted(o.letters, o.operators);
  SuiteOptions options;
  options.max_degree = o.max_degree;
  options.context_depth = o.context_depth;
  options.mutate_relations = o.mutate;
  options.seed = o.seed;
  std::size_t failed = 0;
  const auto results = run_suite(sig, o.suite, options);
  for (const CheckResult& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.checked << " checked)";
    if (!r.passed) {
      ++failed;
      out << "\n  witness: " << r.witness;
    }
    out << "\n";
  }
  if (failed == 0) {
    out << "all " << results.size() << " checks passed\n";
    return kExitOk;
  }
  out << failed << " of " << results.size() << " checks failed\n";
  return kExitPropertyFailure;
}

int dispatch(const std::string& command, const Options& o, std::ostream& out) {
  const Signature sig = o.config.empty() ? default_config_signature() : load_config(o.config);

  if (command == "check") return run_check(sig, o, out);

  if (command == "eval") {
    require_format(o.format, {"plain", "latex", "json", "ascii-tree"});
    const LinComb<Word> lhs = normal_form(sig, read_words(sig, o, o.exprs.at(0)));
    const LinComb<Word> rhs = normal_form(sig, read_words(sig, o, o.exprs.at(1)));
    emit(sig, diamond(sig, lhs, rhs), o.format, out);
  } else if (command == "nf") {
    require_format(o.format, {"plain", "latex", "json", "ascii-tree"});
    emit(sig, normal_form(sig, read_words(sig, o, o.exprs.at(0))), o.format, out);
  } else if (command == "coproduct" || command == "antipode") {
    require_format(o.format, command == "antipode"
                                 ? std::initializer_list<const char*>{"plain", "latex", "json", "ascii-tree"}
                                 : std::initializer_list<const char*>{"plain", "latex", "json"});
    const LinComb<Word> input = read_words(sig, o, o.exprs.at(0));
    if (o.carrier == "rt") {
      const LinComb<Forest> forests = theta(input);
      if (command == "coproduct") {
        const CoproductRoute route =
            o.route == "cocycle" ? CoproductRoute::Cocycle : CoproductRoute::Subforest;
        emit(sig, coproduct_rt(forests, route), o.format, out);
      } else {
        emit(sig, antipode_rt(forests), o.format, out);
      }
    } else {
      const LinComb<Word> v = normal_form(sig, input);
      if (command == "coproduct") {
        emit(sig, coproduct_mrb(sig, v), o.format, out);
      } else {
        emit(sig, antipode_mrb(sig, v), o.format, out);
      }
    }
  } else if (command == "convert") {
    require_format(o.format, {"plain", "latex", "json", "ascii-tree"});
    if (o.from == "forest") {
      emit(sig, theta_inv(parse_forest_expression(o.exprs.at(0), sig)), o.format, out);
    } else {
      emit(sig, theta(parse_expression(o.exprs.at(0), sig)), o.format, out);
    }
  } else if (command == "render") {
    const LinComb<Word> v = read_words(sig, o, o.exprs.at(0));
    if (o.format == "json" && o.forest_input) {
      emit(sig, theta(v), o.format, out);
    } else {
      emit(sig, v, o.format, out);
    }
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Free matching Rota-Baxter algebra toolkit", "matchrb"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();
  app.add_option("--config", o.config, "JSON signature file (default: letters x y z, a = 1, b = -1)");

  const std::vector<std::string> formats{"plain", "latex", "ascii-tree", "json"};
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));
  };
  auto add_forest_flag = [&](CLI::App* sub) {
    sub->add_flag("--forest", o.forest_input, "Read monomials in forest notation, e.g. a(x y)");
  };

  auto* eval = app.add_subcommand("eval", "Diamond product of two expressions");
  eval->add_option("lhs", o.exprs, "Expressions")->required()->expected(2);
  add_format(eval);
  add_forest_flag(eval);

  auto* nf = app.add_subcommand("nf", "Normal form modulo the matching Rota-Baxter relations");
  nf->add_option("expr", o.exprs, "Expression")->required()->expected(1);
  add_format(nf);
  add_forest_flag(nf);

  const std::vector<std::string> carriers{"rt", "mrb"};
  auto* coproduct = app.add_subcommand("coproduct", "Coproduct on rooted forests or the free algebra");
  coproduct->add_option("expr", o.exprs, "Expression")->required()->expected(1);
  coproduct->add_option("--carrier", o.carrier, "rt or mrb")->check(CLI::IsMember(carriers));
  coproduct->add_option("--route", o.route, "Forest coproduct route")
      ->check(CLI::IsMember({"subforest", "cocycle"}));
  add_format(coproduct);
  add_forest_flag(coproduct);

  auto* antipode = app.add_subcommand("antipode", "Antipode on rooted forests or the free algebra");
  antipode->add_option("expr", o.exprs, "Expression")->required()->expected(1);
  antipode->add_option("--carrier", o.carrier, "rt or mrb")->check(CLI::IsMember(carriers));
  add_format(antipode);
  add_forest_flag(antipode);

  auto* convert = app.add_subcommand("convert", "Translate between words and forests");
  convert->add_option("expr", o.exprs, "Expression")->required()->expected(1);
  convert->add_option("--from", o.from, "Input notation")->check(CLI::IsMember({"word", "forest"}));
  add_format(convert);

  auto* check = app.add_subcommand("check", "Run exhaustive property suites");
  check->add_option("--suite", o.suite, "Suite")
      ->check(CLI::IsMember({"gsb", "hopf", "mrba", "order", "all"}));
  check->add_option("--max-degree", o.max_degree, "Corpus degree bound");
  check->add_option("--letters", o.letters, "Number of letters taken from the configuration");
  check->add_option("--operators", o.operators, "Number of operators taken from the configuration");
  check->add_option("--context-depth", o.context_depth, "Depth bound for star-word contexts");
  check->add_option("--seed", o.seed, "Seed for sampled checks");
  check->add_flag("--mutate-relations", o.mutate)->group("");

  auto* render = app.add_subcommand("render", "Print an expression in another notation");
  render->add_option("expr", o.exprs, "Expression")->required()->expected(1);
  add_format(render);
  add_forest_flag(render);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return dispatch(command, o, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }
}

}  // namespace matchrb
