#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "folichar/commands.hpp"
#include "folichar/exterior.hpp"
#include "folichar/foliation.hpp"
#include "folichar/groebner.hpp"
#include "folichar/session.hpp"
#include "folichar/singularity.hpp"
#include "folichar/weyl.hpp"

namespace fct {

using namespace folichar;

constexpr std::uint64_t kDefaultSeed = 20240917;

// Seed from --seed N / --seed=N, then FOLICHAR_SEED, then the default.
// Removes the flag from argv.
std::uint64_t parse_seed(int& argc, char** argv);
std::uint64_t seed();
void set_seed(std::uint64_t s);

class Rng {
 public:
  explicit Rng(std::uint64_t s) : g_(s) {}
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(g_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(g_); }
  Rational rational(int num = 5, int den = 3);
  Rational nonzero_rational(int num = 5, int den = 3);
  std::mt19937_64& engine() { return g_; }

 private:
  std::mt19937_64 g_;
};

// Random polynomial in the listed variables with at most `terms` terms.
MultiPoly random_poly(const SpacePtr& s, const std::vector<int>& vars, int max_deg, int terms, Rng& r);
// Random nonzero polynomial field on the x-block of VarSpace::doubled(n).
PolyVectorField random_field(int n, int max_deg, Rng& r, int terms = 3);
PolyForm random_form(const SpacePtr& s, int m, int q, int max_deg, Rng& r);
WeylOperator random_operator(int n, int max_deg, Rng& r, int terms = 3);

std::vector<int> x_block(const SpacePtr& s);
std::vector<int> all_vars(const SpacePtr& s);

// A session wrapper for writing polynomials as text.
struct Ctx {
  Session s;
  explicit Ctx(const std::string& vars, const std::string& extra = {});
  MultiPoly p(const std::string& e) const { return s.as_poly(s.evaluate(e)); }
  PolyVectorField xi(const std::string& e) const { return make_foliation_field(s.as_field(s.evaluate(e))); }
  Ideal ideal(const std::string& e) const { return s.as_ideal(s.evaluate(e)); }
  PolyForm form(const std::string& e) const { return s.as_form(s.evaluate(e)); }
  WeylOperator op(const std::string& e) const { return s.as_operator(s.evaluate(e)); }
  std::vector<Scalar> point(const std::string& e) const { return s.as_point(s.evaluate(e)); }
  std::string str(const MultiPoly& f) const { return f.to_string(); }
};

std::string read_file(const std::string& path);

}  // namespace fct

namespace fct {

// Brute-force membership: is f = sum q_i g_i solvable with deg q_i <= cof_deg,
// all polynomials supported on `vars`? Dense rational elimination.
bool oracle_member(const folichar::MultiPoly& f, const std::vector<folichar::MultiPoly>& gens,
                   const std::vector<int>& vars, int cof_deg);

std::vector<folichar::Exponent> monomials_up_to(int nvars_total, const std::vector<int>& vars, int deg);

std::vector<std::string> sorted_strings(const std::vector<folichar::MultiPoly>& ps);

}  // namespace fct

namespace fct {

struct InvariantCase {
  folichar::PolyVectorField xi;
  folichar::Ideal j;
  std::string label;
};

// Candidate ideals in (x, y) for a mix of linear, rotational and random
// fields; the caller filters by invariance under the prolongation.
std::vector<InvariantCase> projection_corpus(Rng& r, int random_cases = 20);

}  // namespace fct
