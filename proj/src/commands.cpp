#include "folichar/commands.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <sstream>

#include "folichar/singularity.hpp"

namespace folichar {

using nlohmann::json;

namespace {

struct Context {
  const Session& s;
  const std::vector<std::string>& args;
  const CommandOptions& opt;
  Budget& budget;
  json& out;
  json& inputs;
  int exit_code = 0;

  Value arg(size_t i, const std::string& what) {
    if (i >= args.size()) raise(ErrorKind::InvalidArgument, "missing argument <" + what + ">");
    Value v = s.evaluate(args[i]);
    inputs[what] = s.print(v);
    return v;
  }

  int axis_arg(size_t i) {
    if (i >= args.size()) raise(ErrorKind::InvalidArgument, "missing argument <axis>");
    int k = 0;
    try {
      size_t used = 0;
      k = std::stoi(args[i], &used);
      if (used != args[i].size()) throw std::invalid_argument("axis");
    } catch (const std::exception&) {
      raise(ErrorKind::InvalidArgument, "axis must be an integer between 1 and n");
    }
    if (k < 1 || k > s.n()) raise(ErrorKind::InvalidArgument, "axis must be between 1 and n");
    inputs["axis"] = k;
    return k - 1;
  }

  VectorField xi() {
    std::string name = s.default_field_name(opt.xi);
    VectorField f = s.as_field(s.get(name));
    inputs["xi"] = s.print(s.get(name));
    return make_foliation_field(f);
  }

  void negative_if(bool negative) {
    if (negative) exit_code = 1;
  }
};

json strings(const std::vector<MultiPoly>& ps) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(p.to_string());
  return a;
}

json scalars(const std::vector<Scalar>& v) {
  json a = json::array();
  for (const auto& c : v) a.push_back(c.to_string());
  return a;
}

template <class T, class F>
json matrix(const Matrix<T>& m, F&& str) {
  json rows = json::array();
  for (int i = 0; i < m.rows; ++i) {
    json r = json::array();
    for (int j = 0; j < m.cols; ++j) r.push_back(str(m(i, j)));
    rows.push_back(r);
  }
  return rows;
}

std::string univariate_string(const std::vector<Scalar>& coeffs, const std::string& var) {
  SpacePtr t = VarSpace::plain({var});
  MultiPoly p(t);
  for (size_t k = 0; k < coeffs.size(); ++k) p.add_term(Exponent{static_cast<int>(k)}, coeffs[k]);
  return p.to_string();
}

// Writes a field on the first m variables as "a*dz1 + ...", z the variable names.
std::string field_string(const SpacePtr& s, const std::vector<MultiPoly>& comps) {
  PolyForm w(s, static_cast<int>(comps.size()), 1);
  for (size_t i = 0; i < comps.size(); ++i) w.add_term({static_cast<int>(i)}, comps[i]);
  return w.to_string();
}

json prolonged_json(const ProlongedField& h) {
  std::vector<MultiPoly> all = h.x_components;
  all.insert(all.end(), h.y_components.begin(), h.y_components.end());
  return {{"x_components", strings(h.x_components)},
          {"y_components", strings(h.y_components)},
          {"field", field_string(h.space, all)}};
}

json certificate_json(const Certificate& c) {
  json a = json::array();
  for (const auto& e : c) {
    json j = {{"claim", e.claim},
              {"method", e.method == CertificateEntry::Method::NormalForm ? "normal_form" : "radical"},
              {"poly", e.poly.to_string()},
              {"ideal", strings(e.ideal.generators())},
              {"holds", e.holds}};
    if (e.method == CertificateEntry::Method::NormalForm) j["remainder"] = e.remainder.to_string();
    a.push_back(j);
  }
  return a;
}

std::string index_list(const IndexTuple& idx) {
  std::string s;
  for (size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + std::to_string(idx[i] + 1);
  return s;
}

using Handler = std::function<void(Context&)>;

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table = {
      {"ch",
       [](Context& c) {
         c.out["P"] = characteristic_polynomial(c.xi()).polynomial.to_string();
       }},
      {"prolong",
       [](Context& c) {
         VectorField xi = c.xi();
         ProlongedField h = prolong(xi);
         c.out.update(prolonged_json(h));
         c.out["equals_hamiltonian"] = h == hamiltonian(characteristic_polynomial(xi).polynomial);
       }},
      {"hamiltonian",
       [](Context& c) {
         MultiPoly f = c.s.as_poly(c.arg(0, "function"));
         c.out.update(prolonged_json(hamiltonian(f)));
       }},
      {"sing",
       [](Context& c) {
         SingularScheme sc = singular_scheme(c.xi(), c.s.field(), &c.budget);
         c.out["ideal"] = strings(sc.ideal.generators());
         c.out["isolated"] = sc.isolated;
         c.out["reduced"] = sc.reduced;
         c.out["vecdim"] = sc.vecdim ? json(*sc.vecdim) : json(nullptr);
         c.out["distinct_points"] = sc.distinct_points ? json(*sc.distinct_points) : json(nullptr);
         c.out["divisorial_part"] = sc.divisorial_part.to_string();
         c.out["valid_representative"] = !sc.has_divisorial_part;
         json pts = json::array();
         for (const auto& p : sc.points) pts.push_back(scalars(p));
         c.out["points"] = pts;
       }},
      {"ch-sing",
       [](Context& c) {
         ChSingularLocus l = ch_singular_locus(c.xi(), &c.budget);
         c.out["jacobian"] = strings(l.jacobian.generators());
         c.out["smooth_away_from_zero_section"] = l.smooth_away_from_zero_section;
         c.out["reduced_isolated_criterion"] = l.reduced_isolated_criterion;
         c.out["certificate"] = certificate_json(l.certificate);
         c.negative_if(!l.smooth_away_from_zero_section);
       }},
      {"invariant",
       [](Context& c) {
         VectorField xi = c.xi();
         Ideal j = c.s.as_ideal(c.arg(0, "ideal"));
         VectorField d = c.opt.prolonged ? prolong(xi).as_field() : xi;
         InvarianceResult r = is_invariant(d, j, &c.budget);
         c.out["derivation"] = c.opt.prolonged ? "prolongation" : "xi";
         c.out["invariant"] = r.invariant;
         c.out["certificate"] = certificate_json(r.certificate);
         c.negative_if(!r.invariant);
       }},
      {"classify",
       [](Context& c) {
         VectorField xi = c.xi();
         Ideal j = c.s.as_ideal(c.arg(0, "ideal"));
         SubvarietyClassification r = classify_ch_subvariety(xi, j, c.s.field(), &c.budget);
         c.out["tag"] = to_string(r.tag);
         c.out["point"] = r.point ? scalars(*r.point) : json(nullptr);
         c.out["notes"] = r.notes;
         c.out["certificate"] = certificate_json(r.certificate);
         c.out["certificate_verified"] = reverify(r.certificate, &c.budget);
         c.negative_if(r.tag == SubvarietyTag::NotContained || r.tag == SubvarietyTag::NotInvariant ||
                       r.tag == SubvarietyTag::NotYHomogeneous);
       }},
      {"darboux",
       [](Context& c) {
         VectorField xi = c.xi();
         auto res = darboux_search(xi, c.opt.max_deg, c.opt.max_cofactor, c.s.field(), &c.budget);
         json a = json::array();
         for (const auto& d : res) a.push_back({{"g", d.g.to_string()}, {"cofactor", d.cofactor.to_string()}});
         c.out["max_deg"] = c.opt.max_deg;
         c.out["max_cofactor"] = c.opt.max_cofactor;
         c.out["results"] = a;
       }},
      {"degree",
       [](Context& c) {
         HyperplaneAtInfinity h = hyperplane_at_infinity(c.xi());
         c.out["invariant"] = h.invariant;
         c.out["affine_degree"] = h.affine_degree;
         c.out["projective_degree"] = h.projective_degree;
         c.out["radial_factor"] = h.radial_factor ? json(h.radial_factor->to_string()) : json(nullptr);
       }},
      {"eigen",
       [](Context& c) {
         VectorField xi = c.xi();
         auto p = c.s.as_point(c.arg(0, "point"));
         EigenData e = jacobian_eigendata(xi, p, c.s.field(), &c.budget);
         c.out["point"] = scalars(e.point);
         c.out["jacobian"] = matrix(e.jacobian, [](const Scalar& x) { return x.to_string(); });
         c.out["char_poly"] = univariate_string(e.char_poly, "t");
         c.out["eigenvalues"] = scalars(e.eigenvalues);
         json vecs = json::array();
         for (const auto& [l, basis] : e.eigenvectors) {
           json b = json::array();
           for (const auto& v : basis) b.push_back(scalars(v));
           vecs.push_back({{"eigenvalue", l.to_string()}, {"basis", b}});
         }
         c.out["eigenvectors"] = vecs;
         c.out["resolved"] = e.resolved;
         c.out["residual_factor"] = univariate_string(e.residual_factor, "t");
         c.out["invertible"] = e.invertible;
       }},
      {"nonres",
       [](Context& c) {
         VectorField xi = c.xi();
         auto p = c.s.as_point(c.arg(0, "point"));
         EigenData e = jacobian_eigendata(xi, p, c.s.field(), &c.budget);
         NonresonanceReport r = is_nonresonant(e);
         c.out["eigenvalues"] = scalars(e.eigenvalues);
         c.out["invertible"] = r.invertible;
         c.out["zrank"] = r.zrank;
         c.out["n"] = r.n;
         c.out["nonresonant"] = r.nonresonant;
         c.negative_if(!r.nonresonant);
       }},
      {"holonomy",
       [](Context& c) {
         VectorField xi = c.xi();
         auto p = c.s.as_point(c.arg(0, "point"));
         int axis = c.axis_arg(1);
         EigenData e = jacobian_eigendata(xi, p, c.s.field(), &c.budget);
         HolonomySpectrum h = holonomy_spectrum(e, axis);
         json ev = json::array(), ratios = json::array();
         for (const auto& x : h.eigenvalues) {
           ratios.push_back(x.ratio.to_string());
           ev.push_back({{"index", x.index + 1},
                         {"ratio", x.ratio.to_string()},
                         {"symbolic", x.symbolic},
                         {"root_of_unity", x.root_of_unity},
                         {"order", x.order ? json(x.order->get_str()) : json(nullptr)}});
         }
         c.out["eigenvalues"] = scalars(e.eigenvalues);
         c.out["ratios"] = ratios;
         c.out["holonomy"] = ev;
         c.out["maximal_torus"] = h.maximal_torus;
       }},
      {"bott",
       [](Context& c) {
         VectorField xi = c.xi();
         int axis = c.axis_arg(0);
         c.out["matrix"] = matrix(bott_connection(xi, axis), [](const MultiPoly& p) { return p.to_string(); });
       }},
      {"duality",
       [](Context& c) {
         VectorField xi = c.xi();
         int axis = c.axis_arg(0);
         DualityCheck d = verify_prolongation_duality(xi, axis);
         auto str = [](const MultiPoly& p) { return p.to_string(); };
         c.out["A"] = matrix(d.a, str);
         c.out["B"] = matrix(d.b, str);
         c.out["holds"] = d.holds;
         c.negative_if(!d.holds);
       }},
      {"torus-fiber",
       [](Context& c) {
         Ideal j = c.s.as_ideal(c.arg(0, "ideal"));
         CoordinateSubspaces r = coordinate_subspace_decomposition(j, &c.budget);
         c.out["torus_invariant"] = r.torus_invariant;
         c.out["monomial_generators"] = strings(r.monomial_generators);
         json comps = json::array();
         for (const auto& comp : r.components) {
           json eqs = json::array();
           for (int v : comp) eqs.push_back(c.s.space()->name(v));
           comps.push_back(eqs);
         }
         c.out["components"] = comps;
         c.out["dimensions"] = r.dimensions;
         c.out["equal_dimension"] = r.equal_dimension;
         c.out["certificate"] = certificate_json(r.certificate);
         c.negative_if(!r.torus_invariant);
       }},
      {"form-dist",
       [](Context& c) {
         bool r = is_distribution(c.s.as_form(c.arg(0, "form")));
         c.out["distribution"] = r;
         c.negative_if(!r);
       }},
      {"form-int",
       [](Context& c) {
         bool r = is_integrable(c.s.as_form(c.arg(0, "form")));
         c.out["integrable"] = r;
         c.negative_if(!r);
       }},
      {"form-lognf",
       [](Context& c) {
         PolyForm w = c.s.as_form(c.arg(0, "form"));
         LogNormalForm l = logarithmic_normal_form(w);
         c.out["h"] = l.h.to_string();
         json lam = json::array();
         for (const auto& [idx, v] : l.lambdas) lam.push_back({{"index", index_list(idx)}, {"lambda", v.to_string()}});
         c.out["lambdas"] = lam;
         json sup = json::array();
         for (int i : l.support) sup.push_back(i + 1);
         c.out["support"] = sup;
         c.out["k"] = l.k;
         json hyper = json::array();
         for (int i : l.invariant_hyperplanes) hyper.push_back(c.s.space()->name(i) + " = 0");
         c.out["invariant_hyperplanes"] = hyper;
         if (l.singular_subspace) {
           json eqs = json::array();
           for (int i : *l.singular_subspace) eqs.push_back(c.s.space()->name(i) + " = 0");
           c.out["singular_subspace"] = eqs;
         } else {
           c.out["singular_subspace"] = nullptr;
         }
         c.out["singular_subspace_dimension"] = l.singular_subspace_dimension;
         c.out["singular_subspace_verified"] = l.singular_subspace_verified;
       }},
      {"inf-auto",
       [](Context& c) {
         VectorField v = c.s.as_field(c.arg(0, "field"));
         PolyForm w = c.s.as_form(c.arg(1, "form"));
         bool r = is_infinitesimal_automorphism(v, w);
         c.out["lie_derivative"] = lie_derivative(v, w).to_string();
         c.out["infinitesimal_automorphism"] = r;
         c.negative_if(!r);
       }},
      {"disc",
       [](Context& c) {
         auto coeffs = c.s.as_poly_list(c.arg(0, "binary-form"));
         c.out["discriminant"] = binary_discriminant(coeffs).to_string();
       }},
      {"weyl-mul",
       [](Context& c) {
         WeylOperator a = c.s.as_operator(c.arg(0, "a"));
         WeylOperator b = c.s.as_operator(c.arg(1, "b"));
         c.out["product"] = weyl_mul(a, b).to_string(c.s.space()->x_vars());
       }},
      {"symbol",
       [](Context& c) {
         WeylOperator d = c.s.as_operator(c.arg(0, "operator"));
         if (c.opt.bernstein) {
           Symbol sym = bernstein_symbol(d, c.s.space());
           c.out["filtration"] = "bernstein";
           c.out["degree"] = sym.degree;
           c.out["symbol"] = sym.symbol.to_string();
         } else {
           Symbol sym = principal_symbol(d, c.s.space());
           c.out["filtration"] = "order";
           c.out["order"] = sym.degree;
           c.out["symbol"] = sym.symbol.to_string();
         }
       }},
      {"weyl-ch",
       [](Context& c) {
         WeylOperator d = c.s.as_operator(c.arg(0, "operator"));
         PrincipalCharVariety r = charvariety_of_principal_ideal(d, c.s.space());
         c.out["ideal"] = strings(r.ideal.generators());
         c.out["order"] = r.order;
         c.out["first_order"] = r.first_order;
         c.out["matches_foliation"] = r.matches_foliation;
         c.out["field"] = r.field ? json(WeylOperator::from_field(*r.field, MultiPoly(c.s.space()))
                                              .to_string(c.s.space()->x_vars()))
                                 : json(nullptr);
         c.out["statement"] = r.statement;
         c.out["note"] = "maximal principal ideals have GK dimension 2n-1 (not computed); maximality is not decided";
       }},
      {"gb",
       [](Context& c) {
         Ideal j = c.s.as_ideal(c.arg(0, "ideal"));
         MonomialOrder order = MonomialOrder::grevlex();
         if (c.opt.order == "lex")
           order = MonomialOrder::lex();
         else if (c.opt.order != "grevlex")
           raise(ErrorKind::InvalidArgument, "order must be lex or grevlex");
         Ideal g = groebner(j, order, &c.budget);
         c.out["order"] = c.opt.order;
         c.out["basis"] = strings(g.basis());
       }},
  };
  return table;
}

}  // namespace

std::vector<std::string> command_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : handlers()) out.push_back(k);
  return out;
}

int exit_code_for(const std::exception& e) {
  if (auto* err = dynamic_cast<const Error*>(&e); err && err->kind() == ErrorKind::BudgetExceeded) return 3;
  return 2;
}

json error_json(const std::exception& e) {
  json j = {{"message", e.what()}};
  if (auto* err = dynamic_cast<const Error*>(&e)) {
    j["kind"] = std::string(to_string(err->kind()));
  } else {
    j["kind"] = "InternalError";
  }
  if (auto* pe = dynamic_cast<const ParseError*>(&e)) {
    j["line"] = pe->line();
    j["column"] = pe->column();
    if (!pe->expected().empty()) j["expected"] = pe->expected();
  }
  return j;
}

Report run_command(const Session& session, const std::string& command, const std::vector<std::string>& args,
                   const CommandOptions& options) {
  auto start = std::chrono::steady_clock::now();
  Report r;
  r.json = {{"schema", 1}, {"command", command}};
  json inputs = json::object();
  json out = json::object();
  Budget budget = options.budget ? Budget(*options.budget) : Budget();
  try {
    auto it = handlers().find(command);
    if (it == handlers().end()) raise(ErrorKind::InvalidArgument, "unknown command " + command);
    Context ctx{session, args, options, budget, out, inputs};
    it->second(ctx);
    r.exit_code = ctx.exit_code;
    r.json.update(out);
  } catch (const std::exception& e) {
    r.exit_code = exit_code_for(e);
    r.json["error"] = error_json(e);
  }
  r.json["inputs"] = inputs;
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  r.json["timings"] = {{"total_ms", ms}, {"budget_used", budget.used()}};
  return r;
}

Report run_file_command(const std::string& text, const std::string& command, const std::vector<std::string>& args,
                        const CommandOptions& options, bool assume_irreducible) {
  try {
    Session s = Session::parse(text, assume_irreducible);
    return run_command(s, command, args, options);
  } catch (const std::exception& e) {
    Report r;
    r.json = {{"schema", 1}, {"command", command}, {"inputs", json::object()}, {"error", error_json(e)},
              {"timings", {{"total_ms", 0.0}, {"budget_used", 0}}}};
    r.exit_code = exit_code_for(e);
    return r;
  }
}

std::string Report::human() const {
  std::ostringstream os;
  for (const auto& [k, v] : json.items()) {
    if (k == "schema" || k == "timings") continue;
    os << k << ": ";
    if (v.is_string())
      os << v.get<std::string>();
    else
      os << v.dump();
    os << "\n";
  }
  return os.str();
}

}  // namespace folichar
