// Command-line front end: Betti tables of monomial ideals by exact
// simplicial homology, the closed-form tables of special ideals, p-Borel
// closures, labeled cell complexes and mapping-cone experiments.

#include <cctype>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spborel/cellular.hpp"
#include "spborel/mapcone.hpp"
#include "spborel/oracle.hpp"
#include "spborel/pborel.hpp"
#include "spborel/special.hpp"

namespace {

using namespace spborel;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

// Smallest ambient dimension covering the variables mentioned in the text.
int infer_vars(const std::string& text) {
  int best = 1;
  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c >= 'a' && c <= 'e') best = std::max(best, c - 'a' + 1);
    if (c == 'x' && i + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
      size_t j = i + 1;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      best = std::max(best, std::stoi(text.substr(i + 1, j - i - 1)));
    }
  }
  return best;
}

std::vector<Monomial> parse_ordered_monomials(const std::string& text, int n) {
  std::vector<Monomial> out;
  std::string tok;
  std::istringstream in(text);
  while (std::getline(in, tok, ',')) {
    if (tok.find_first_not_of(" \t") == std::string::npos) continue;
    out.push_back(parse_monomial(tok, n));
  }
  if (out.empty()) throw std::invalid_argument("no monomials in \"" + text + "\"");
  return out;
}

void print_table(const GradedBettiTable& T, const std::string& format) {
  if (format == "tsv")
    std::cout << render_tsv(T);
  else
    std::cout << render_diagram(T);
}

int cmd_betti(const std::string& ideal_text, int n, std::uint64_t characteristic,
              const std::string& format, bool multigraded) {
  if (n == 0) n = infer_vars(ideal_text);
  MonomialIdeal I = parse_ideal(ideal_text, n);
  if (multigraded) {
    std::cout << render_tsv(multigraded_betti(I, FieldChar(characteristic)));
    return kExitOk;
  }
  print_table(betti_table(I, FieldChar(characteristic)), format);
  return kExitOk;
}

int cmd_special(const std::string& spec_text, bool compare_oracle,
                std::vector<std::uint64_t> chars, const std::string& format) {
  SpecialIdealParams params = SpecialIdealParams::parse(spec_text);
  GradedBettiTable T = special_betti(params);

  std::cout << "spec: " << params.to_text() << '\n';
  BigInt gens = 1;
  for (int j = 1; j <= params.factors(); ++j)
    gens *= binomial(params.a(j) + params.ell(j) - 1,
                     static_cast<std::uint64_t>(params.ell(j) - 1));
  std::cout << "generators: " << gens << '\n';
  print_table(T, format);
  std::cout << "reg(I) = " << pardue_regularity(params) << '\n';

  bool all_equal = true;
  if (compare_oracle) {
    if (chars.empty()) chars = {0, 2, 3};
    MonomialIdeal I = expand(params);
    for (auto c : chars) {
      bool eq = betti_table(I, FieldChar(c)) == T;
      std::cout << "char " << c << ": " << (eq ? "EQUAL" : "DIFFER") << '\n';
      all_equal = all_equal && eq;
    }
  }
  return all_equal ? kExitOk : kExitCheckFailed;
}

int cmd_closure(const std::string& monomials_text, std::uint64_t p, int n) {
  if (n == 0) n = infer_vars(monomials_text);
  std::vector<Monomial> seeds = parse_ordered_monomials(monomials_text, n);
  MonomialIdeal I = p_borel_closure(seeds, p, n);
  std::cout << to_text(I) << '\n';
  std::cout << "generators: " << I.gen_count() << '\n';
  return kExitOk;
}

int cmd_cellular(bool hexagon, const std::string& spec_text, int n, std::int64_t d,
                 std::int64_t p1, std::int64_t p2, std::uint64_t characteristic,
                 bool dump, const std::string& format) {
  if (hexagon == !spec_text.empty())
    throw CLI::ValidationError("cellular", "choose exactly one of --hexagon and --spec");
  LabeledComplex C =
      hexagon ? permutohedron_complex(n, BigInt(d), BigInt(p1), BigInt(p2))
              : glued_complex(SpecialIdealParams::parse(spec_text));

  FieldChar F(characteristic);
  bool supports = supports_resolution(C, F);
  bool minimal = is_minimal_cellular(C);
  std::cout << "supports: " << (supports ? "yes" : "no")
            << ", minimal: " << (minimal ? "yes" : "no") << '\n';
  if (dump) std::cout << render_dump(C);
  if (supports && minimal) print_table(cellular_betti(C), format);
  return (supports && minimal) ? kExitOk : kExitCheckFailed;
}

int cmd_mapcone(const std::string& ideal_text, int n, std::uint64_t characteristic,
                bool all_orders) {
  if (n == 0) n = infer_vars(ideal_text);
  FieldChar F(characteristic);
  if (all_orders) {
    MonomialIdeal I = parse_ideal(ideal_text, n);
    AllOrdersReport report = all_orders_check(I, F);
    std::cout << render_report(report);
    return kExitOk;
  }
  std::vector<Monomial> gens = parse_ordered_monomials(ideal_text, n);
  auto steps = iterated_mapcone(gens, F);
  bool all_minimal = true;
  for (const auto& s : steps) {
    std::cout << "step " << s.step << ": + " << to_text(s.added);
    if (s.minimal) {
      std::cout << " minimal\n";
    } else {
      std::cout << " NONMINIMAL at (" << s.first_discrepancy->first << ","
                << s.first_discrepancy->second << ")\n";
      all_minimal = false;
    }
  }
  std::cout << (all_minimal ? "all steps minimal" : "non-minimal steps found") << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Betti tables, regularity and cellular resolutions of p-Borel monomial ideals"};
  app.require_subcommand(1);

  std::string ideal_text, spec_text, monomials_text;
  std::string format = "diagram";
  std::uint64_t characteristic = 0;
  std::vector<std::uint64_t> chars;
  int n = 0;
  int cell_n = 3;
  std::int64_t opt_d = 1, opt_p1 = 1, opt_p2 = 2;
  bool compare_oracle = false, hexagon = false, dump = false, all_orders = false;
  bool multigraded = false;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"diagram", "tsv"}))
        ->capture_default_str();
  };

  CLI::App* betti = app.add_subcommand("betti", "Betti table of a monomial ideal");
  betti->add_option("-i,--ideal", ideal_text, "Comma-separated monomials")->required();
  betti->add_option("-n,--vars", n, "Ambient variable count (default: inferred)");
  betti->add_option("-p,--char", characteristic, "Field characteristic (0 or prime)");
  betti->add_flag("--multigraded", multigraded, "Emit multigraded entries as i TAB b1,..,bn TAB mult");
  add_format(betti);

  CLI::App* special = app.add_subcommand("special", "Closed-form table of a special ideal");
  special->add_option("--spec", spec_text, "Parameters, e.g. \"n=3; l=3,3; a=1,1; p=1,2\"")
      ->required();
  special->add_flag("--compare-oracle", compare_oracle,
                    "Also compute the homology table and report EQUAL/DIFFER");
  special->add_option("-p,--char", chars, "Characteristics to compare (default 0 2 3)");
  add_format(special);

  CLI::App* closure = app.add_subcommand("closure", "Smallest p-Borel ideal containing monomials");
  closure->add_option("-m,--monomials", monomials_text, "Comma-separated monomials")->required();
  closure->add_option("-p,--prime", characteristic, "Prime p")->required();
  closure->add_option("-n,--vars", n, "Ambient variable count (default: inferred)");

  CLI::App* cellular = app.add_subcommand("cellular", "Labeled cell complexes and their tables");
  cellular->add_flag("--hexagon", hexagon, "Generalized permutohedron complex");
  cellular->add_option("--spec", spec_text, "Glued complex of a two-factor spec with a=(1,1)");
  cellular->add_option("-n,--vars", cell_n, "Ambient variable count")->capture_default_str();
  cellular->add_option("--d", opt_d, "Multiplier d in u = (d*p1, p2, 0, ...)")->capture_default_str();
  cellular->add_option("--p1", opt_p1, "First scale")->capture_default_str();
  cellular->add_option("--p2", opt_p2, "Second scale (d*p1 < p2)")->capture_default_str();
  cellular->add_option("-p,--char", characteristic, "Field characteristic (0 or prime)");
  cellular->add_flag("--dump", dump, "Print faces: dim TAB vertex-ids TAB label");
  add_format(cellular);

  CLI::App* mapcone = app.add_subcommand("mapcone", "Iterated mapping-cone minimality");
  mapcone->add_option("-i,--ideal", ideal_text, "Generators, in the order to be added")->required();
  mapcone->add_option("-n,--vars", n, "Ambient variable count (default: inferred)");
  mapcone->add_option("-p,--char", characteristic, "Field characteristic (0 or prime)");
  mapcone->add_flag("--all-orders", all_orders, "Check every ordering of the generators");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (betti->parsed()) return cmd_betti(ideal_text, n, characteristic, format, multigraded);
    if (special->parsed()) return cmd_special(spec_text, compare_oracle, chars, format);
    if (closure->parsed()) return cmd_closure(monomials_text, characteristic, n);
    if (cellular->parsed())
      return cmd_cellular(hexagon, spec_text, cell_n, opt_d, opt_p1, opt_p2, characteristic,
                          dump, format);
    if (mapcone->parsed()) return cmd_mapcone(ideal_text, n, characteristic, all_orders);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
