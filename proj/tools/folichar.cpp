#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "folichar/commands.hpp"

namespace {

const std::map<std::string, std::string> kHelp = {
    {"ch", "Characteristic polynomial P = sum a_i y_i"},
    {"prolong", "Prolongation of xi to the cotangent space"},
    {"hamiltonian", "Hamiltonian field of <function>"},
    {"sing", "Singular scheme of xi and its flags"},
    {"ch-sing", "Singular locus of ch and smoothness off the zero section"},
    {"invariant", "Is <ideal> invariant under xi (or its prolongation)"},
    {"classify", "Quasi-minimality class of the subvariety <ideal>"},
    {"darboux", "Darboux polynomials up to a degree bound"},
    {"degree", "Hyperplane at infinity and projective degree"},
    {"eigen", "Eigendata of D xi at <point>"},
    {"nonres", "Non-resonance at <point>"},
    {"holonomy", "Linear holonomy along separatrix <axis> at <point>"},
    {"bott", "Bott connection along the coordinate axis <axis>"},
    {"duality", "Prolongation duality along the axis <axis>"},
    {"torus-fiber", "Coordinate subspace decomposition of <ideal>"},
    {"form-dist", "Does <form> define a distribution"},
    {"form-int", "Is <form> integrable"},
    {"form-lognf", "Logarithmic normal form of <form>"},
    {"inf-auto", "Is <field> an infinitesimal automorphism of <form>"},
    {"disc", "Discriminant of the binary form [a0, ..., ak]"},
    {"weyl-mul", "Product <a>*<b> in the Weyl algebra"},
    {"symbol", "Principal or Bernstein symbol of <operator>"},
    {"weyl-ch", "Characteristic variety of a principal ideal"},
    {"gb", "Reduced Groebner basis of <ideal>"},
};

struct Invocation {
  std::string file;
  std::vector<std::string> args;  // expressions or declared names
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"folichar: exact computations with polynomial foliations"};
  app.require_subcommand(1);
  bool as_json = false;
  bool assume_irreducible = false;
  folichar::CommandOptions opt;
  std::uint64_t budget = 0;
  app.add_flag("--json", as_json, "Print the JSON report");
  app.add_option("--budget", budget, "Reduction step budget");
  app.add_flag("--assume-irreducible", assume_irreducible, "Accept minimal polynomials of degree >= 5");
  app.add_option("--xi", opt.xi, "Declaration to use as the vector field");

  Invocation inv;
  std::string chosen;
  bool order_flag = false;
  for (const auto& name : folichar::command_names()) {
    auto it = kHelp.find(name);
    auto* sub = app.add_subcommand(name, it == kHelp.end() ? std::string() : it->second);
    sub->add_option("file", inv.file, "Session file")->required()->check(CLI::ExistingFile);
    sub->allow_extras();
    sub->add_flag("--json", as_json, "Print the JSON report");
    sub->add_option("--budget", budget, "Reduction step budget");
    sub->add_flag("--assume-irreducible", assume_irreducible, "Accept minimal polynomials of degree >= 5");
    sub->add_option("--xi", opt.xi, "Declaration to use as the vector field");
    if (name == "darboux") {
      sub->add_option("--max-deg", opt.max_deg, "Degree bound for g")->capture_default_str();
      sub->add_option("--max-cofactor", opt.max_cofactor, "Degree bound for the cofactor")->capture_default_str();
    } else if (name == "gb") {
      sub->add_option("--order", opt.order, "Monomial order")->check(CLI::IsMember({"lex", "grevlex"}));
    } else if (name == "symbol") {
      sub->add_flag("--bernstein", opt.bernstein, "Bernstein filtration");
      sub->add_flag("--order", order_flag, "Order filtration (default)");
    } else if (name == "invariant") {
      sub->add_flag("--prolonged", opt.prolonged, "Test under the prolongation");
    }
    sub->callback([&chosen, &inv, sub, name] {
      chosen = name;
      inv.args = sub->remaining();
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  if (budget > 0) opt.budget = budget;
  if (order_flag) opt.bernstein = false;

  std::ifstream in(inv.file);
  std::stringstream buf;
  buf << in.rdbuf();
  folichar::Report r = folichar::run_file_command(buf.str(), chosen, inv.args, opt, assume_irreducible);
  if (as_json)
    std::cout << r.json.dump(2) << "\n";
  else
    std::cout << r.human();
  if (r.json.contains("error") && !as_json)
    std::cerr << "error: " << r.json["error"]["kind"].get<std::string>() << ": "
              << r.json["error"]["message"].get<std::string>() << "\n";
  return r.exit_code;
}
