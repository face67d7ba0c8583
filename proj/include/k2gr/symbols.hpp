#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "k2gr/presentation.hpp"
#include "k2gr/ring.hpp"

namespace k2gr {

/// Dennis-Stein symbol <a,b>; well-formed only when 1 - ab is a unit.
struct DSSymbol {
  RingElem a, b;
};

/// Formal Z-linear combination of symbols (additive notation).
struct SymbolWord {
  std::vector<std::pair<DSSymbol, int>> terms;
};

/// True iff 1 - ab is a unit (both elements over the same ring).
bool validate(const DSSymbol& s);

/// Checked constructor; throws std::invalid_argument when 1 - ab is not a
/// unit.
DSSymbol make_symbol(RingElem a, RingElem b);

/// {a, 1-ab} for unit a; throws std::invalid_argument otherwise.
std::pair<RingElem, RingElem> to_steinberg(const DSSymbol& s);

/// <a,bc> = <ab,c> + <ac,b>; all three symbols must be valid.
SymbolWord ds3_expand(const RingElem& a, const RingElem& b, const RingElem& c);

/// Word sum_i mult_i * <x_i, x^(mu - e_i)> for the monomial mu counting the
/// given generator factors (1-based variable indices, repetitions allowed).
/// The word always reduces to zero: it encodes the product-of-symbols
/// relation attached to the monomial x^mu.
SymbolWord scholium_word(const std::shared_ptr<const Ring>& ring, const std::vector<int>& factors);

/// Coordinates of a K2 class over basis(spec): generator id string -> residue
/// in [1, p) (zero coordinates are dropped; the groups are elementary
/// abelian, so F_p coordinates are exact).
class SymbolVector {
 public:
  SymbolVector() = default;
  explicit SymbolVector(const RingSpec& spec) : spec_(spec) {}

  const RingSpec& spec() const { return spec_; }
  const std::map<std::string, int>& coords() const { return coords_; }
  bool is_zero() const { return coords_.empty(); }
  int coord(const std::string& id) const;

  void add(const std::string& id, int mult);
  SymbolVector operator+(const SymbolVector& o) const;
  SymbolVector operator-(const SymbolVector& o) const;
  SymbolVector operator*(int s) const;
  bool operator==(const SymbolVector& o) const = default;

  std::string str() const;  // e.g. "2*<x2,x1>" or "0"

 private:
  RingSpec spec_{};
  std::map<std::string, int> coords_;
};

/// Rewrites symbols onto the coordinate basis via the Dennis-Stein
/// relations: second slots are peeled term by term with the identity
/// <a, b+c> = <a,b> + <a, c(1-ab)^{-1}>, unit coefficients and constants are
/// stripped through DS3/Steinberg rules, p-divisible slots are flattened with
/// the exponent-p identity, and <x_i, monomial> symbols land on basis
/// coordinates (solving T1 symbols out of their product relation).
///
/// For ZpkG with k > 2 the engine works in the k = 2 truncation: coefficient
/// reduction is an isomorphism on these coordinate groups, and the basis ids
/// are shared.
class SymbolEngine {
 public:
  explicit SymbolEngine(const RingSpec& spec);

  const RingSpec& spec() const { return spec_; }
  const std::shared_ptr<const Ring>& working_ring() const { return ring_; }
  const std::vector<GeneratorId>& basis_ids() const { return basis_; }

  /// Public shapes: the scalar pair <-p,-p> (alias <p,p>), or a first slot
  /// that is a single term with unit coefficient (unit constants included);
  /// the second slot is arbitrary subject to symbol validity.
  SymbolVector reduce(const DSSymbol& s) const;
  SymbolVector reduce(const SymbolWord& w) const;

  /// Steinberg symbol {u,v}, u and v units, via <u, (1-v)u^{-1}>. The first
  /// slot may be any unit element here.
  SymbolVector reduce_steinberg(const RingElem& u, const RingElem& v) const;

 private:
  struct Task {
    RingElem a, b;
    int mult;
  };

  RingElem import(const RingElem& e) const;
  bool is_scalar_pp_pair(const DSSymbol& s) const;
  void run(std::vector<Task> work, std::map<GeneratorId, int>& acc) const;
  void step(Task t, std::vector<Task>& work, std::map<GeneratorId, int>& acc) const;
  void t_route(int i, const std::vector<int>& lambda, int mult,
               std::map<GeneratorId, int>& acc) const;
  SymbolVector finish(const std::map<GeneratorId, int>& acc) const;

  RingSpec spec_;
  std::shared_ptr<const Ring> caller_ring_;
  std::shared_ptr<const Ring> ring_;  // working ring (possibly truncated)
  std::vector<GeneratorId> basis_;
  std::set<GeneratorId> basis_set_;
  bool p2r_zero_ = true;  // p^2 annihilates the working ring
};

/// One-shot helper: build an engine for spec and reduce.
SymbolVector reduce_symbol(const RingSpec& spec, const DSSymbol& s);

/// Text form "<" elem "," elem ">"; each slot is an element expression or
/// the literal "-p". Scalar pairs <-p,-p> / <p,p> denote the extra p = 2
/// generator.
DSSymbol parse_symbol(const std::shared_ptr<const Ring>& ring, const std::string& text);
std::string symbol_str(const DSSymbol& s);

}  // namespace k2gr
