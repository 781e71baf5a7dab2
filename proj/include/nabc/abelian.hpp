#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nabc/action.hpp"

namespace nabc {

/// Z/p^k as a cyclic summand with a chosen generator.
struct CyclicFactor {
  int prime = 1;
  int exponent = 0;
  Elem generator = 0;
  long order() const;
};

/// An abelian group written as a direct sum of cyclic groups of prime power order.
/// Factors are grouped by prime (ascending) and sorted by decreasing order within a prime.
class AbelianDecomposition {
 public:
  /// Throws InvalidInput for a non-abelian group.
  explicit AbelianDecomposition(FiniteGroup z);

  const FiniteGroup& group() const { return group_; }
  const std::vector<CyclicFactor>& factors() const { return factors_; }
  const std::vector<int>& coordinates(Elem z) const { return coords_[z]; }
  Elem element(const std::vector<long>& coords) const;

 private:
  FiniteGroup group_;
  std::vector<CyclicFactor> factors_;
  std::vector<std::vector<int>> coords_;
  std::vector<long> stride_;
  std::vector<Elem> from_index_;
};

/// Normalized inhomogeneous n-cochains G^n -> Z, stored on all of G^n with
/// index sum g_i |G|^(n-i) (g_1 most significant). Values are elements of Z.
using Cochain = std::vector<Elem>;

/// Index of (g_1..g_n) in a Cochain.
long cochain_index(int group_order, std::initializer_list<Elem> args);

/// The bar differential
///   (df)(g_1..g_{n+1}) = g_1.f(g_2..g_{n+1}) + sum_i (-1)^i f(..g_i g_{i+1}..) + (-1)^(n+1) f(g_1..g_n)
/// for a G-module Z written multiplicatively as a FiniteGroup.
Cochain coboundary(const GAction& module, const Cochain& f, int n);

/// A Smith form over the chain ring Z/p^k: U A V = diag(p^v_0, p^v_1, ...).
/// Only the transforms asked for are tracked. Entries are residues in [0, p^k).
struct ChainRingSmith {
  int p = 2, k = 1;
  long q = 2;
  int rows = 0, cols = 0, rank = 0;
  std::vector<int> valuation;  // per diagonal position 0..min(rows,cols)-1, k when zero
  std::vector<std::int64_t> v, v_inv, u, u_inv;  // row-major square matrices, empty if untracked
  std::vector<std::int64_t> protected_cols;       // rows x extra, after the row operations
  int extra = 0;
};

/// `a` is rows x cols (row-major) over Z/p^k; `rhs` holds `extra` protected columns
/// that receive the row operations but never act as pivots.
ChainRingSmith chain_ring_smith(int p, int k, int rows, int cols, std::vector<std::int64_t> a, bool track_v,
                                bool track_u, std::vector<std::int64_t> rhs = {}, int extra = 0);

/// H^n(G, Z) for a finite G-module Z, computed prime by prime with Smith forms
/// over Z/p^k. Classes are coordinates modulo the elementary divisors.
class AbelianCohomology {
 public:
  AbelianCohomology(const GAction& module, int degree, long max_work = default_limits().max_linear_work);

  int degree() const { return degree_; }
  const GAction& module() const { return module_; }
  /// d_1 | d_2 | ... with every d_i > 1; empty for the trivial group.
  std::vector<long> invariant_factors() const;
  /// Prime power orders of the cyclic summands, in class-coordinate order.
  const std::vector<long>& elementary_divisors() const { return elementary_; }
  long order() const;

  bool is_cocycle(const Cochain& c) const;
  /// Class coordinates, one per elementary divisor. Throws if c is not a cocycle.
  std::vector<long> classify(const Cochain& c) const;
  long class_index(const Cochain& c) const;
  std::vector<long> coordinates_of_index(long index) const;
  long index_of_coordinates(const std::vector<long>& coords) const;
  Cochain representative(const std::vector<long>& coords) const;
  Cochain representative(long index) const { return representative(coordinates_of_index(index)); }

 private:
  struct PrimePart;
  std::vector<std::int64_t> prime_vector(const PrimePart& part, const Cochain& c) const;

  GAction module_;
  AbelianDecomposition decomposition_;
  int degree_;
  std::vector<PrimePart> parts_;
  std::vector<long> elementary_;

 public:
  ~AbelianCohomology();
  AbelianCohomology(const AbelianCohomology&);
  AbelianCohomology& operator=(const AbelianCohomology&);
};

/// Some (n-1)-cochain x with dx = c, or nothing if c is not a coboundary.
std::optional<Cochain> solve_coboundary(const GAction& module, const Cochain& c, int n,
                                        long max_work = default_limits().max_linear_work);

}  // namespace nabc
