#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "codimkit/guessing.hpp"
#include "codimkit/json_io.hpp"
#include "codimkit/multilinear.hpp"
#include "codimkit/pi_model.hpp"
#include "codimkit/rational_forms.hpp"

namespace {

using codimkit::Sequence;
using nlohmann::json;

constexpr unsigned long long kDefaultSeed = 20260821ULL;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw UsageError("cannot open file: " + path);
  }
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw UsageError("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

bool is_catalog_name(const std::string& name) {
  auto names = codimkit::catalog_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

// A sequence argument is either a catalog name (expanded to `terms` entries)
// or a path to a sequence JSON file (all stored terms, capped at `terms`
// when that flag was given explicitly).
Sequence resolve_sequence(const std::string& arg, long terms,
                          bool terms_explicit) {
  if (is_catalog_name(arg)) {
    return codimkit::catalog_terms(arg, terms);
  }
  Sequence s = codimkit::sequence_from_json(read_json_file(arg));
  if (terms_explicit && s.end() > terms) {
    s.terms.resize(static_cast<size_t>(
        std::max<long>(0, terms - s.offset)));
    if (s.terms.empty()) {
      throw UsageError("term cap leaves no terms of " + arg);
    }
  }
  return s;
}

void print_sequence(const Sequence& s, const std::string& format) {
  if (format == "json") {
    std::cout << codimkit::json_of(s).dump() << "\n";
    return;
  }
  size_t width = 1;
  for (const auto& t : s.terms) {
    width = std::max(width, codimkit::rat_to_string(t).size());
  }
  std::cout << "n      value\n";
  for (size_t i = 0; i < s.terms.size(); ++i) {
    std::ostringstream line;
    line << (s.offset + static_cast<long>(i));
    std::string n = line.str();
    std::cout << n << std::string(n.size() < 6 ? 7 - n.size() : 1, ' ')
              << codimkit::rat_to_string(s.terms[i]) << "\n";
  }
}

void print_object(const json& j, const std::string& format) {
  if (format == "json") {
    std::cout << j.dump() << "\n";
    return;
  }
  for (const auto& [key, value] : j.items()) {
    std::cout << key << "  "
              << (value.is_string() ? value.get<std::string>() : value.dump())
              << "\n";
  }
}

int run(int argc, char** argv) {
  CLI::App app{"Exact calculus for codimension sequences: expansions, "
               "binomial-convolution products, model fitting, character "
               "degrees, and a brute-force multilinear cross-check."};
  app.require_subcommand(1);
  std::string format = "json";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();

  // ---- expand ----
  auto* cmd_expand = app.add_subcommand(
      "expand", "Expand a closed form (rational function or recurrence)");
  std::string expand_rational_path, expand_recurrence_path;
  long expand_terms = 20;
  cmd_expand->add_option("--rational", expand_rational_path,
                         "Rational function JSON file {num, den}");
  cmd_expand->add_option("--recurrence", expand_recurrence_path,
                         "Recurrence JSON file {coeffs, initial, start}");
  cmd_expand->add_option("--terms", expand_terms, "Number of terms")
      ->capture_default_str();

  // ---- lr-prod ----
  auto* cmd_lrprod = app.add_subcommand(
      "lr-prod", "Binomial-convolution product of two sequences");
  std::string lr_left, lr_right;
  long lr_terms = 20;
  cmd_lrprod->add_option("--left", lr_left, "Catalog name or sequence file")
      ->required();
  cmd_lrprod->add_option("--right", lr_right, "Catalog name or sequence file")
      ->required();
  cmd_lrprod->add_option("--terms", lr_terms, "Number of terms")
      ->capture_default_str();

  // ---- hadamard ----
  auto* cmd_hadamard =
      app.add_subcommand("hadamard", "Termwise product of two sequences");
  std::string had_left, had_right;
  long had_terms = 20;
  cmd_hadamard->add_option("--left", had_left, "Catalog name or sequence file")
      ->required();
  cmd_hadamard
      ->add_option("--right", had_right, "Catalog name or sequence file")
      ->required();
  cmd_hadamard->add_option("--terms", had_terms, "Number of terms")
      ->capture_default_str();

  // ---- guess ----
  auto* cmd_guess = app.add_subcommand(
      "guess", "Fit a recurrence, rational, or algebraic model to a sequence");
  std::string guess_input, guess_mode = "recurrence";
  long guess_terms = 20, guess_kmax = 6, guess_n0max = 3, guess_mmax = 2,
       guess_dmax = 4, guess_holdout = 4;
  cmd_guess->add_option("--input", guess_input, "Catalog name or sequence file")
      ->required();
  cmd_guess->add_option("--mode", guess_mode, "Model family")
      ->check(CLI::IsMember({"recurrence", "rational", "algebraic"}))
      ->capture_default_str();
  cmd_guess->add_option("--terms", guess_terms, "Number of terms")
      ->capture_default_str();
  cmd_guess->add_option("--kmax", guess_kmax, "Largest recurrence order")
      ->capture_default_str();
  cmd_guess
      ->add_option("--n0max", guess_n0max, "Largest recurrence start slack")
      ->capture_default_str();
  cmd_guess->add_option("--mmax", guess_mmax, "Largest y-degree")
      ->capture_default_str();
  cmd_guess->add_option("--dmax", guess_dmax, "Largest t-degree")
      ->capture_default_str();
  cmd_guess->add_option("--holdout", guess_holdout, "Held-back terms")
      ->capture_default_str();

  // ---- catalog ----
  auto* cmd_catalog =
      app.add_subcommand("catalog", "Built-in codimension sequences");
  std::string catalog_name;
  long catalog_terms_n = 20;
  bool catalog_list = false;
  cmd_catalog->add_option("--name", catalog_name, "Catalog entry");
  cmd_catalog->add_option("--terms", catalog_terms_n, "Number of terms")
      ->capture_default_str();
  cmd_catalog->add_flag("--list", catalog_list, "List catalog names");

  // ---- tideal-prod ----
  auto* cmd_tideal = app.add_subcommand(
      "tideal-prod", "Codimensions of an algebra with a product T-ideal");
  std::string ti_left, ti_right, ti_variant = "derived";
  long ti_terms = 20;
  cmd_tideal->add_option("--left", ti_left, "Catalog name or sequence file")
      ->required();
  cmd_tideal->add_option("--right", ti_right, "Catalog name or sequence file")
      ->required();
  cmd_tideal->add_option("--terms", ti_terms, "Number of terms")
      ->capture_default_str();
  cmd_tideal
      ->add_option("--variant", ti_variant,
                   "Correction factor: derived (t-1) or shifted-exp (e^t-1)")
      ->check(CLI::IsMember({"derived", "affine", "shifted-exp"}))
      ->capture_default_str();

  // ---- proper ----
  auto* cmd_proper = app.add_subcommand(
      "proper", "Transform between full and proper codimension sequences");
  std::string proper_input, proper_direction = "to-proper";
  long proper_terms = 20;
  cmd_proper->add_option("--input", proper_input,
                         "Catalog name or sequence file")
      ->required();
  cmd_proper->add_option("--direction", proper_direction, "Transform direction")
      ->check(CLI::IsMember({"to-proper", "from-proper"}))
      ->capture_default_str();
  cmd_proper->add_option("--terms", proper_terms, "Number of terms")
      ->capture_default_str();

  // ---- oracle ----
  auto* cmd_oracle = app.add_subcommand(
      "oracle", "Brute-force multilinear codimension in degree n");
  std::string oracle_generator, oracle_left, oracle_right;
  long oracle_n = 4;
  unsigned long long oracle_seed = kDefaultSeed;
  bool oracle_exact = false;
  cmd_oracle->add_option("--generator", oracle_generator,
                         "Single T-ideal generator (name or expression)");
  cmd_oracle->add_option("--left", oracle_left,
                         "Left generator for a product of two T-ideals");
  cmd_oracle->add_option("--right", oracle_right,
                         "Right generator for a product of two T-ideals");
  cmd_oracle->add_option("--n", oracle_n, "Degree of the multilinear layer")
      ->capture_default_str();
  cmd_oracle->add_option("--seed", oracle_seed, "Seed for the working primes")
      ->capture_default_str();
  cmd_oracle->add_flag("--exact", oracle_exact,
                       "Exact rational elimination (degree <= 4)");

  // ---- verify ----
  auto* cmd_verify =
      app.add_subcommand("verify", "Check a built-in exact identity");
  std::string verify_identity;
  long verify_order = 25;
  cmd_verify->add_option("--identity", verify_identity, "Identity to check")
      ->required()
      ->check(CLI::IsMember({"m2-exp-closed-form", "etensore-exp-closed-form",
                             "chebyshev-i2", "f5-proper-pipeline"}));
  cmd_verify->add_option("--order", verify_order, "Check through this order")
      ->capture_default_str();

  // ---- asymptotics ----
  auto* cmd_asymp = app.add_subcommand(
      "asymptotics", "Numeric growth estimates from exact terms");
  std::string asymp_name;
  long asymp_terms = 500, asymp_cutoff = 2000;
  bool asymp_profile = false;
  cmd_asymp->add_option("--name", asymp_name, "Catalog name or sequence file");
  cmd_asymp->add_option("--terms", asymp_terms, "Number of terms")
      ->capture_default_str();
  cmd_asymp->add_flag("--profile-m2", asymp_profile,
                      "Rate and polynomial order of the 2x2-matrix model");
  cmd_asymp->add_option("--cutoff", asymp_cutoff, "Profile fit endpoint")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cmd_expand->parsed()) {
      if ((expand_rational_path.empty()) == (expand_recurrence_path.empty())) {
        throw UsageError("expand needs exactly one of --rational/--recurrence");
      }
      Sequence s =
          !expand_rational_path.empty()
              ? codimkit::expand_rational(
                    codimkit::rational_from_json(
                        read_json_file(expand_rational_path)),
                    expand_terms)
              : codimkit::expand_recurrence(
                    codimkit::recurrence_from_json(
                        read_json_file(expand_recurrence_path)),
                    expand_terms);
      print_sequence(s, format);
    } else if (cmd_lrprod->parsed()) {
      bool cap = cmd_lrprod->count("--terms") > 0;
      Sequence a = resolve_sequence(lr_left, lr_terms, cap);
      Sequence b = resolve_sequence(lr_right, lr_terms, cap);
      print_sequence(codimkit::lr_product_seq(a, b, lr_terms), format);
    } else if (cmd_hadamard->parsed()) {
      bool cap = cmd_hadamard->count("--terms") > 0;
      Sequence a = resolve_sequence(had_left, had_terms, cap);
      Sequence b = resolve_sequence(had_right, had_terms, cap);
      Sequence h = codimkit::hadamard_series(a, b);
      if (h.end() > had_terms) {
        h.terms.resize(static_cast<size_t>(had_terms - h.offset));
      }
      print_sequence(h, format);
    } else if (cmd_guess->parsed()) {
      Sequence s = resolve_sequence(guess_input, guess_terms,
                                    cmd_guess->count("--terms") > 0 ||
                                        is_catalog_name(guess_input));
      codimkit::GuessReport report;
      if (guess_mode == "recurrence") {
        report = codimkit::guess_recurrence(s, guess_kmax, guess_n0max,
                                            guess_holdout);
      } else if (guess_mode == "rational") {
        report = codimkit::guess_rational(s, guess_kmax, guess_n0max,
                                          guess_holdout);
      } else {
        report = codimkit::guess_algebraic(s, guess_mmax, guess_dmax,
                                           guess_holdout);
      }
      print_object(codimkit::json_of(report), format);
    } else if (cmd_catalog->parsed()) {
      if (catalog_list) {
        json names = json::array();
        for (const std::string& n : codimkit::catalog_names()) {
          names.push_back(n);
        }
        print_object(json{{"names", names}}, format);
      } else {
        if (catalog_name.empty()) {
          throw UsageError("catalog needs --name or --list");
        }
        print_sequence(codimkit::catalog_terms(catalog_name, catalog_terms_n),
                       format);
      }
    } else if (cmd_tideal->parsed()) {
      bool cap = cmd_tideal->count("--terms") > 0;
      Sequence a = resolve_sequence(ti_left, ti_terms, cap);
      Sequence b = resolve_sequence(ti_right, ti_terms, cap);
      codimkit::TidealVariant variant =
          ti_variant == "shifted-exp" ? codimkit::TidealVariant::shifted_exp
                                      : codimkit::TidealVariant::affine;
      print_sequence(codimkit::tideal_product(a, b, ti_terms, variant), format);
    } else if (cmd_proper->parsed()) {
      bool cap = cmd_proper->count("--terms") > 0;
      Sequence s = resolve_sequence(proper_input, proper_terms, cap);
      Sequence out = proper_direction == "to-proper"
                         ? codimkit::codim_to_proper(s, proper_terms)
                         : codimkit::proper_to_codim(s, proper_terms);
      print_sequence(out, format);
    } else if (cmd_oracle->parsed()) {
      bool product_mode = !oracle_left.empty() || !oracle_right.empty();
      codimkit::OracleResult result;
      if (product_mode) {
        if (oracle_left.empty() || oracle_right.empty() ||
            !oracle_generator.empty()) {
          throw UsageError(
              "oracle takes either --generator or both --left and --right");
        }
        result = codimkit::oracle_product(
            codimkit::parse_generator(oracle_left),
            codimkit::parse_generator(oracle_right), oracle_n, oracle_seed,
            oracle_exact);
      } else {
        if (oracle_generator.empty()) {
          throw UsageError(
              "oracle takes either --generator or both --left and --right");
        }
        result = codimkit::oracle_tideal(
            codimkit::parse_generator(oracle_generator), oracle_n, oracle_seed,
            oracle_exact);
      }
      print_object(codimkit::json_of(result), format);
    } else if (cmd_verify->parsed()) {
      bool ok = false;
      if (verify_identity == "m2-exp-closed-form") {
        ok = codimkit::verify_exp_closed_form("M2", verify_order);
      } else if (verify_identity == "etensore-exp-closed-form") {
        ok = codimkit::verify_exp_closed_form("EtensorE", verify_order);
      } else if (verify_identity == "chebyshev-i2") {
        using codimkit::TruncatedSeries;
        TruncatedSeries i0 = codimkit::bessel_series(0, verify_order + 2);
        TruncatedSeries lhs = codimkit::chebyshev_operator_apply(2, i0);
        TruncatedSeries i1p = codimkit::derivative(
            codimkit::bessel_series(1, verify_order + 1), 1);
        TruncatedSeries rhs = codimkit::sub(
            codimkit::scale(codimkit::Rat(2), i1p),
            codimkit::truncate(i0, verify_order));
        ok = (lhs == rhs);
      } else if (verify_identity == "f5-proper-pipeline") {
        std::vector<codimkit::CharacterSum> table =
            codimkit::f5_proper_cocharacters(verify_order - 1);
        std::vector<codimkit::Rat> gamma;
        for (const auto& sum : table) {
          gamma.emplace_back(codimkit::degree_of(sum));
        }
        Sequence from_table = codimkit::proper_to_codim(
            codimkit::make_sequence(gamma), verify_order);
        Sequence closed = codimkit::catalog_terms("f5T", verify_order);
        ok = true;
        for (long n = 0; n < verify_order; ++n) {
          ok = ok && from_table.at(n) == closed.at(n);
        }
      }
      print_object(json{{"identity", verify_identity},
                        {"order", verify_order},
                        {"ok", ok}},
                   format);
      return ok ? 0 : 1;
    } else if (cmd_asymp->parsed()) {
      if (asymp_profile) {
        auto [rate, poly_order] = codimkit::asymptotic_profile_m2(asymp_cutoff);
        print_object(json{{"rate", rate}, {"poly_order", poly_order}}, format);
      } else {
        if (asymp_name.empty()) {
          throw UsageError("asymptotics needs --name or --profile-m2");
        }
        Sequence s = resolve_sequence(asymp_name, asymp_terms,
                                      cmd_asymp->count("--terms") > 0 ||
                                          is_catalog_name(asymp_name));
        codimkit::ExponentEstimate est = codimkit::estimate_exponent(s);
        print_object(json{{"root_n", est.root_n},
                          {"ratio", est.ratio},
                          {"nearest", est.nearest}},
                     format);
      }
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
