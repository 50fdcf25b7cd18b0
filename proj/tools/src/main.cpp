#include <algorithm>
#include <fstream>
#include <functional>
#include <initializer_list>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "compsum/compositions.hpp"
#include "compsum/compsum.hpp"
#include "compsum/errors.hpp"
#include "compsum/iterated.hpp"
#include "compsum/pitree.hpp"
#include "compsum/sequences.hpp"
#include "compsum/series.hpp"
#include "compsum/verify.hpp"

namespace {

using compsum::Integer;
using compsum::Rational;
using compsum::SeriesQ;
using json = nlohmann::ordered_json;

// Full listings print 2^(n-1) rows, so the table views carry caps of their
// own below the library enumeration guards.
constexpr int kMaxListingN = 16;
constexpr int kMaxTreeTableRows = 10;
constexpr long kMaxRestrictedRows = 65536;
constexpr int kMaxDigitSumN = 16;

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot open '" << out_path << "' for writing\n";
    return 2;
  }
  file << text;
  return file.good() ? 0 : 2;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

compsum::ParamMap parse_params(const std::vector<std::string>& raw) {
  compsum::ParamMap params;
  for (const auto& kv : raw) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0)
      throw compsum::RangeError("--param expects key=value, got '" + kv + "'");
    params[kv.substr(0, eq)] = kv.substr(eq + 1);
  }
  return params;
}

void reject_unknown_params(const compsum::ParamMap& params,
                           std::initializer_list<const char*> known, const std::string& sub) {
  for (const auto& [key, value] : params) {
    (void)value;
    if (std::none_of(known.begin(), known.end(),
                     [&key](const char* k) { return key == k; }))
      throw compsum::RangeError(sub + ": unknown --param key '" + key + "'");
  }
}

compsum::PartSet parse_parts(const std::string& text) {
  std::vector<int> parts;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, ',')) {
    try {
      std::size_t used = 0;
      const int value = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      parts.push_back(value);
    } catch (const std::exception&) {
      throw compsum::RangeError("parts: expected comma-separated integers, got '" + text + "'");
    }
  }
  if (parts.empty()) throw compsum::RangeError("parts: empty part set");
  return compsum::PartSet(std::move(parts));
}

// ---- named inputs shared by compose, digitsum, iterated ----

struct NamedSeries {
  std::string name;
  std::string formula;
  std::function<SeriesQ(int)> make;
};

const std::vector<NamedSeries>& series_menu() {
  static const std::vector<NamedSeries> menu{
      {"identity", "z", compsum::identity_series},
      {"geometric", "z/(1-z)", compsum::geometric_series},
      {"log1p", "log(1+z)", compsum::log1p_series},
      {"exp_minus_one", "e^z - 1", compsum::exp_minus_one_series},
      {"expm1_over_z", "(e^z - 1)/z", compsum::expm1_over_z_series},
      {"z_over_expm1", "z/(e^z - 1)", compsum::z_over_expm1_series},
      {"catalan_shifted", "(1 - sqrt(1 - 4z))/2", compsum::catalan_shifted_series},
      {"negbinom2", "(1-z)^(-2) - 1",
       [](int order) { return compsum::negative_binomial_series(order, 2); }},
  };
  return menu;
}

std::string series_names() {
  std::string names;
  for (const auto& entry : series_menu()) {
    if (!names.empty()) names += ", ";
    names += entry.name;
  }
  return names;
}

SeriesQ named_series(const std::string& name, int order) {
  for (const auto& entry : series_menu())
    if (entry.name == name) return entry.make(order);
  throw compsum::RangeError("unknown series '" + name + "' (available: " + series_names() + ")");
}

compsum::WeightSequence<Rational> named_weights(const std::string& name) {
  if (name == "geometric") return compsum::geometric_weights();
  if (name == "log1p") return compsum::log1p_weights();
  if (name == "exp_minus_one") return compsum::exp_minus_one_weights();
  if (name == "negbinom2") return compsum::negative_binomial_weights(2);
  throw compsum::RangeError("unknown weights '" + name +
                            "' (available: geometric, log1p, exp_minus_one, negbinom2)");
}

constexpr const char* kTreeInputNames = "woon, catalan, fibonacci, bernoulli_poly, hermite";

compsum::DotLabel parse_label(const std::string& label) {
  if (label == "value") return compsum::DotLabel::kValue;
  if (label == "tuple") return compsum::DotLabel::kMultiIndex;
  return compsum::DotLabel::kBoth;
}

// ---- compositions ----

struct CompositionsOpts {
  int n = 0;
  std::vector<std::string> params;
  bool as_json = false;
  std::string out;
};

int run_compositions(const CompositionsOpts& o) {
  const auto params = parse_params(o.params);
  reject_unknown_params(params, {"parts"}, "compositions");
  if (o.n < 1) throw compsum::RangeError("compositions: n must be positive");

  const bool restricted = params.count("parts") != 0;
  std::vector<compsum::Composition> rows;
  if (restricted) {
    const compsum::PartSet parts = parse_parts(params.at("parts"));
    const Integer count = compsum::count_restricted(o.n, parts);
    if (count > kMaxRestrictedRows)
      throw compsum::SizeGuardError(
          "compositions: listing would print " + count.get_str() + " rows", kMaxRestrictedRows);
    for (const auto& c : compsum::enumerate_restricted(o.n, parts)) rows.push_back(c);
  } else {
    if (o.n > kMaxListingN)
      throw compsum::SizeGuardError("compositions: n above the full-listing cap", kMaxListingN);
    for (const auto& c : compsum::enumerate(o.n)) rows.push_back(c);
  }

  if (!o.as_json) {
    std::string text;
    for (const auto& c : rows) text += c.str() + "\n";
    return emit(text, o.out);
  }
  json j;
  j["n"] = o.n;
  if (restricted) j["parts"] = parse_parts(params.at("parts")).members();
  j["count"] = rows.size();
  json list = json::array();
  for (const auto& c : rows) list.push_back(c.parts());
  j["compositions"] = list;
  return emit(dump(j), o.out);
}

// ---- tree ----

struct TreeOpts {
  std::string input;
  int order = 4;
  std::string label = "both";
  bool as_json = false;
  bool as_dot = false;
  std::string out;
};

template <typename R>
int tree_report(const compsum::InputSequence<R>& input, const TreeOpts& o) {
  if (o.as_dot) return emit(compsum::export_dot(input, o.order, parse_label(o.label)), o.out);

  if (o.order < 1 || o.order > kMaxTreeTableRows)
    throw compsum::SizeGuardError("tree: rows outside [1, 10]", kMaxTreeTableRows);
  const auto sums = compsum::row_sums(input, o.order);

  if (!o.as_json) {
    std::ostringstream os;
    os << "input: " << input.name << "\n";
    for (int n = 1; n <= o.order; ++n) {
      os << "row " << n << "\n";
      compsum::for_each_row_node(input, n, [&os](const compsum::PiNode<R>& node) {
        os << "  " << node.multi_index.str() << " = "
           << compsum::RingTraits<R>::str(node.value) << "\n";
      });
      os << "  sum = " << compsum::RingTraits<R>::str(sums[static_cast<std::size_t>(n)]) << "\n";
    }
    return emit(os.str(), o.out);
  }

  json j;
  j["input"] = input.name;
  j["order"] = o.order;
  json rows = json::array();
  for (int n = 1; n <= o.order; ++n) {
    json nodes = json::array();
    compsum::for_each_row_node(input, n, [&nodes](const compsum::PiNode<R>& node) {
      nodes.push_back({{"parts", node.multi_index.parts()},
                       {"value", compsum::RingTraits<R>::str(node.value)}});
    });
    rows.push_back({{"n", n},
                    {"nodes", nodes},
                    {"sum", compsum::RingTraits<R>::str(sums[static_cast<std::size_t>(n)])}});
  }
  j["rows"] = rows;
  return emit(dump(j), o.out);
}

int run_tree(const TreeOpts& o) {
  if (o.input == "woon") return tree_report(compsum::woon_input(), o);
  if (o.input == "catalan") return tree_report(compsum::catalan_input(), o);
  if (o.input == "fibonacci")
    return tree_report(compsum::indicator_input(compsum::PartSet({1, 2})), o);
  if (o.input == "bernoulli_poly") return tree_report(compsum::bernoulli_poly_input(), o);
  if (o.input == "hermite") return tree_report(compsum::hermite_input(), o);
  throw compsum::RangeError("unknown tree input '" + o.input + "' (available: " +
                            kTreeInputNames + ")");
}

// ---- sequence ----

struct SequenceOpts {
  std::string name;
  int order = 8;
  std::vector<std::string> params;
  bool as_json = false;
  std::string out;
};

// params_help strings lead with their key names, "a, b: ...", so the
// accepted keys can be read back out for validation.
std::vector<std::string> recipe_param_keys(const compsum::SequenceRecipe& recipe) {
  std::vector<std::string> keys;
  const auto colon = recipe.params_help.find(':');
  if (colon == std::string::npos) return keys;
  std::istringstream is(recipe.params_help.substr(0, colon));
  std::string key;
  while (std::getline(is, key, ',')) {
    key.erase(0, key.find_first_not_of(' '));
    key.erase(key.find_last_not_of(' ') + 1);
    if (!key.empty()) keys.push_back(key);
  }
  return keys;
}

int run_sequence(const SequenceOpts& o) {
  const auto* recipe = compsum::find_recipe(o.name);
  if (recipe == nullptr) {
    std::string names;
    for (const auto& r : compsum::sequence_registry()) {
      if (!names.empty()) names += ", ";
      names += r.name;
    }
    throw compsum::RangeError("unknown sequence '" + o.name + "' (available: " + names + ")");
  }
  if (o.order < 0) throw compsum::RangeError("sequence: negative order");

  const auto params = parse_params(o.params);
  const auto keys = recipe_param_keys(*recipe);
  for (const auto& [key, value] : params) {
    (void)value;
    if (std::find(keys.begin(), keys.end(), key) == keys.end())
      throw compsum::RangeError("sequence " + recipe->name + ": unknown --param key '" + key +
                                (recipe->params_help.empty()
                                     ? "' (takes no params)"
                                     : "' (params: " + recipe->params_help + ")"));
  }
  const auto values = recipe->closed_form(o.order, params);

  if (!o.as_json) {
    std::string text;
    for (std::size_t n = 0; n < values.size(); ++n)
      text += std::to_string(n) + "  " + values[n] + "\n";
    return emit(text, o.out);
  }
  json j;
  j["sequence"] = recipe->name;
  j["params"] = json::object();
  for (const auto& [key, value] : params) j["params"][key] = value;
  j["order"] = o.order;
  j["values"] = values;
  return emit(dump(j), o.out);
}

// ---- compose ----

struct ComposeOpts {
  std::string outer;
  std::string inner;
  int order = 8;
  bool as_json = false;
  std::string out;
};

int run_compose(const ComposeOpts& o) {
  if (o.order < 0) throw compsum::RangeError("compose: negative order");
  const SeriesQ result =
      compsum::compose(named_series(o.outer, o.order), named_series(o.inner, o.order));

  if (!o.as_json) {
    std::string text;
    for (int n = 0; n <= o.order; ++n)
      text += std::to_string(n) + "  " + result[n].str() + "\n";
    return emit(text, o.out);
  }
  json j;
  j["outer"] = o.outer;
  j["inner"] = o.inner;
  j["order"] = o.order;
  json coeffs = json::array();
  for (int n = 0; n <= o.order; ++n) coeffs.push_back(result[n].str());
  j["coeffs"] = coeffs;
  return emit(dump(j), o.out);
}

// ---- verify ----

struct VerifyOpts {
  std::string suite = "all";
  int max_n = 10;
  bool as_json = false;
  std::string out;
};

int run_verify(const VerifyOpts& o) {
  const auto results = compsum::verify_suite(o.suite, o.max_n);
  int failures = 0;
  for (const auto& r : results)
    if (!r.ok) ++failures;

  if (!o.as_json) {
    std::ostringstream os;
    for (const auto& r : results) {
      os << (r.ok ? "pass" : "FAIL") << "  " << r.identity << "  [" << r.n_lo << ".." << r.n_hi
         << "]\n";
      if (!r.ok) os << "  witness: " << r.witness << "\n";
    }
    os << "checks: " << results.size() << "  failures: " << failures << "\n";
    const int rc = emit(os.str(), o.out);
    return rc != 0 ? rc : (failures == 0 ? 0 : 1);
  }

  json j;
  j["suite"] = o.suite;
  j["max_n"] = o.max_n;
  json checks = json::array();
  for (const auto& r : results) {
    json check;
    check["identity"] = r.identity;
    check["n_range"] = {r.n_lo, r.n_hi};
    check["status"] = r.ok ? "pass" : "fail";
    if (!r.ok) check["witness"] = r.witness;
    checks.push_back(check);
  }
  j["checks"] = checks;
  j["failures"] = failures;
  const int rc = emit(dump(j), o.out);
  return rc != 0 ? rc : (failures == 0 ? 0 : 1);
}

// ---- digitsum ----

struct DigitSumOpts {
  std::string weights;
  int order = 8;
  bool as_json = false;
  std::string out;
};

int run_digitsum(const DigitSumOpts& o) {
  if (o.order < 1 || o.order > kMaxDigitSumN)
    throw compsum::SizeGuardError("digitsum: order outside [1, 16]", kMaxDigitSumN);
  const auto f = named_weights(o.weights);

  std::vector<Rational> values;
  for (int n = 1; n <= o.order; ++n) {
    const Rational brute = compsum::digit_sum_brute(f, n);
    const Rational series = compsum::digit_sum_series(f, n);
    const Rational binomial = compsum::digit_sum_binomial(f, n);
    if (!(brute == series) || !(brute == binomial)) {
      std::cerr << "digit-sum paths disagree at n=" << n << ": brute=" << brute.str()
                << " series=" << series.str() << " binomial=" << binomial.str() << "\n";
      return 1;
    }
    values.push_back(brute);
  }

  if (!o.as_json) {
    std::string text;
    for (int n = 1; n <= o.order; ++n)
      text += std::to_string(n) + "  " + values[static_cast<std::size_t>(n) - 1].str() + "\n";
    return emit(text, o.out);
  }
  json j;
  j["weights"] = o.weights;
  j["order"] = o.order;
  json rows = json::array();
  for (int n = 1; n <= o.order; ++n)
    rows.push_back({{"n", n}, {"value", values[static_cast<std::size_t>(n) - 1].str()}});
  j["rows"] = rows;
  return emit(dump(j), o.out);
}

// ---- iterated ----

struct IteratedOpts {
  std::vector<std::string> functions;
  int order = 8;
  int shape = -1;
  bool all_shapes = false;
  bool as_json = false;
  bool as_dot = false;
  std::string out;
};

int run_iterated(const IteratedOpts& o) {
  const int count = static_cast<int>(o.functions.size());
  const auto shapes = compsum::enumerate_shapes(count);
  const int shape_count = static_cast<int>(shapes.size());

  if (o.shape >= 0 && o.shape >= shape_count)
    throw compsum::RangeError("iterated: shape index " + std::to_string(o.shape) +
                              " out of range (have " + std::to_string(shape_count) + ")");
  if (o.as_dot) {
    if (o.shape < 0)
      throw compsum::RangeError("iterated: --dot needs --shape to pick one shape");
    return emit(compsum::shape_to_dot(shapes[static_cast<std::size_t>(o.shape)]), o.out);
  }

  std::vector<SeriesQ> fs;
  for (const auto& name : o.functions) fs.push_back(named_series(name, o.order));

  const int lo = o.shape >= 0 ? o.shape : 0;
  const int hi = o.shape >= 0 ? o.shape : shape_count - 1;

  if (!o.as_json) {
    std::ostringstream os;
    os << "functions:";
    for (const auto& name : o.functions) os << " " << name;
    os << "\norder: " << o.order << "\n";
    for (int i = lo; i <= hi; ++i) {
      const auto& shape = shapes[static_cast<std::size_t>(i)];
      os << "shape " << i << ": " << shape.str() << "\n";
      os << "  plan: " << compsum::plan_from_shape(shape).str() << "\n";
      os << "  coeffs:";
      for (const Rational& c : compsum::evaluate_iterated(fs, shape, o.order))
        os << " " << c.str();
      os << "\n";
    }
    return emit(os.str(), o.out);
  }

  json j;
  j["functions"] = o.functions;
  j["order"] = o.order;
  json out_shapes = json::array();
  for (int i = lo; i <= hi; ++i) {
    const auto& shape = shapes[static_cast<std::size_t>(i)];
    json coeffs = json::array();
    for (const Rational& c : compsum::evaluate_iterated(fs, shape, o.order))
      coeffs.push_back(c.str());
    out_shapes.push_back({{"index", i},
                          {"shape", shape.str()},
                          {"plan", compsum::plan_from_shape(shape).str()},
                          {"coeffs", coeffs}});
  }
  j["shapes"] = out_shapes;
  return emit(dump(j), o.out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"compsum: exact sums over integer compositions, PI trees, and"
               " series composition"};
  app.require_subcommand(1);

  CompositionsOpts comp_opts;
  auto* comp = app.add_subcommand("compositions", "List the compositions of n in mask order");
  comp->add_option("n", comp_opts.n, "integer to compose")->required();
  comp->add_option("--param", comp_opts.params, "parts=a,b,... restricts the allowed parts")
      ->allow_extra_args(false);
  comp->add_flag("--json", comp_opts.as_json, "emit JSON");
  comp->add_option("--out", comp_opts.out, "write output to a file instead of stdout");

  TreeOpts tree_opts;
  auto* tree = app.add_subcommand(
      "tree", std::string("Print PI tree rows and row sums (inputs: ") + kTreeInputNames + ")");
  tree->add_option("input", tree_opts.input, "named input sequence")->required();
  tree->add_option("--order,-N", tree_opts.order, "rows to print (tree depth with --dot)")
      ->capture_default_str();
  tree->add_option("--label", tree_opts.label, "dot node labels: value, tuple, or both")
      ->check(CLI::IsMember({"value", "tuple", "both"}))
      ->capture_default_str();
  auto* tree_json = tree->add_flag("--json", tree_opts.as_json, "emit JSON");
  tree->add_flag("--dot", tree_opts.as_dot, "emit Graphviz source")->excludes(tree_json);
  tree->add_option("--out", tree_opts.out, "write output to a file instead of stdout");

  SequenceOpts seq_opts;
  std::string seq_help = "Print a named sequence (";
  {
    bool first = true;
    for (const auto& recipe : compsum::sequence_registry()) {
      if (!first) seq_help += ", ";
      seq_help += recipe.name;
      first = false;
    }
    seq_help += ")";
  }
  auto* seq = app.add_subcommand("sequence", seq_help);
  seq->add_option("name", seq_opts.name, "sequence name")->required();
  seq->add_option("--order,-N", seq_opts.order, "highest index to print")->capture_default_str();
  seq->add_option("--param", seq_opts.params, "key=value recipe parameter (repeatable)")
      ->allow_extra_args(false);
  seq->add_flag("--json", seq_opts.as_json, "emit JSON");
  seq->add_option("--out", seq_opts.out, "write output to a file instead of stdout");

  ComposeOpts compose_opts;
  auto* comp2 = app.add_subcommand(
      "compose", "Coefficients of outer(inner(z)) for named series (" + series_names() + ")");
  comp2->add_option("outer", compose_opts.outer, "outer series")->required();
  comp2->add_option("inner", compose_opts.inner, "inner series (needs zero constant term)")
      ->required();
  comp2->add_option("--order,-N", compose_opts.order, "truncation order")->capture_default_str();
  comp2->add_flag("--json", compose_opts.as_json, "emit JSON");
  comp2->add_option("--out", compose_opts.out, "write output to a file instead of stdout");

  VerifyOpts verify_opts;
  auto* verify = app.add_subcommand("verify", "Run the cross-path identity suites");
  verify->add_option("--suite", verify_opts.suite, "compsum, pitree, sequences, iterated, all")
      ->check(CLI::IsMember(compsum::verify_suite_names()))
      ->capture_default_str();
  verify->add_option("--max-n", verify_opts.max_n, "series order the checks run to")
      ->capture_default_str();
  verify->add_flag("--json", verify_opts.as_json, "emit JSON");
  verify->add_option("--out", verify_opts.out, "write output to a file instead of stdout");

  DigitSumOpts digit_opts;
  auto* digit = app.add_subcommand(
      "digitsum", "Binary digit-sum sums over k < 2^(n-1), three paths cross-checked");
  digit->add_option("weights", digit_opts.weights,
                    "weight sequence: geometric, log1p, exp_minus_one, negbinom2")
      ->required();
  digit->add_option("--order,-N", digit_opts.order, "highest n")->capture_default_str();
  digit->add_flag("--json", digit_opts.as_json, "emit JSON");
  digit->add_option("--out", digit_opts.out, "write output to a file instead of stdout");

  IteratedOpts iter_opts;
  auto* iter = app.add_subcommand(
      "iterated", "Iterated composition f1 o f2 o ... under every parenthesization");
  iter->add_option("functions", iter_opts.functions, "2 to 5 named series, outermost first")
      ->required()
      ->expected(2, compsum::kMaxIteratedFunctions);
  iter->add_option("--order,-N", iter_opts.order, "truncation order")->capture_default_str();
  auto* iter_shape = iter->add_option("--shape", iter_opts.shape, "evaluate one shape by index");
  iter->add_flag("--all-shapes", iter_opts.all_shapes, "evaluate every shape (default)")
      ->excludes(iter_shape);
  auto* iter_json = iter->add_flag("--json", iter_opts.as_json, "emit JSON");
  iter->add_flag("--dot", iter_opts.as_dot, "emit Graphviz source for --shape")
      ->excludes(iter_json);
  iter->add_option("--out", iter_opts.out, "write output to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) return app.exit(e);
    app.exit(e);
    const CLI::App* failed = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    std::cerr << "\n" << failed->help();
    return 2;
  }

  try {
    if (app.got_subcommand(comp)) return run_compositions(comp_opts);
    if (app.got_subcommand(tree)) return run_tree(tree_opts);
    if (app.got_subcommand(seq)) return run_sequence(seq_opts);
    if (app.got_subcommand(comp2)) return run_compose(compose_opts);
    if (app.got_subcommand(verify)) return run_verify(verify_opts);
    if (app.got_subcommand(digit)) return run_digitsum(digit_opts);
    if (app.got_subcommand(iter)) return run_iterated(iter_opts);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
