#ifndef SDRES_ALGEBRAIC_HPP
#define SDRES_ALGEBRAIC_HPP

#include <sdres/engine.hpp>
#include <sdres/polytope.hpp>

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace sdres {

// Generic sparse algebraic (Laurent) polynomial: slots (c, alpha) with the
// designated slot 0 at the origin.  Coefficients are shifted u-variables of
// the shared table; equal support points may occur after specialization.
struct AlgSlot {
  SVar coeff;
  std::vector<long> point;
};

struct AlgPoly {
  std::vector<AlgSlot> slots;  // slots[0].point == 0
};

struct AlgPolySystem {
  std::shared_ptr<VarTable> table;
  int nvars = 0;
  std::vector<std::string> var_names;          // algebraic coordinate labels
  std::vector<AlgPoly> polys;
  std::vector<std::pair<int, int>> origin;     // (block, shift) per polynomial
};

AlgPolySystem algebraic_from_prolongation(const GenericSystem& sys, const Prolongation& pro);

// the essential subset of minimal ranking under the order sigma^k P_i <
// sigma^l P_j iff i < j or (i = j and k < l); returned as indices into
// sys.polys (ascending)
std::vector<int> essential_subset_minimal_ranking(const AlgPolySystem& sys);

AlgPolySystem restrict_to(const AlgPolySystem& sys, const std::vector<int>& subset);

struct SpecializeResult {
  AlgPolySystem sys;
  std::vector<int> kept_coords;  // indices into the input coordinate list
};

// keep |I|-1 coordinates carrying a full-rank column submatrix, set the
// rest to 1
SpecializeResult specialize_to_essential_vars(const AlgPolySystem& sys);

struct SmithResult {
  AlgPolySystem sys;
  std::vector<std::vector<long>> basis;  // z_j = prod x_k^{basis[j][k]}
  bool identity = false;
};

// monomial change of variables from the Smith/Hermite lattice basis of the
// supports; the transformed supports span Z^nvars
SmithResult smith_transform(const AlgPolySystem& sys);

Polytope newton_polytope(const AlgPolySystem& sys, int i);

// generator of the elimination ideal (F_i) ∩ Q[c], by the ansatz/nullspace
// method with no transforms; input must be strong essential
DiffPoly algebraic_sparse_resultant(const AlgPolySystem& sys);
DiffPoly algebraic_sparse_resultant_recorded(const AlgPolySystem& sys, NormalizationRecord& rec);

struct ReductionTrace {
  std::vector<int> super_essential;
  std::vector<ExtInt> prolongation;            // K_i, -inf outside T
  std::vector<std::pair<int, int>> essential;  // (block, shift) of the minimal subset
  std::vector<std::string> kept_vars;
  SmithResult smith;
};

ResultantCertificate resultant_via_reduction(const GenericSystem& sys,
                                             const EngineOptions& opts = {},
                                             ReductionTrace* trace = nullptr);

struct DenseResultantReport {
  std::shared_ptr<VarTable> table;
  std::optional<GenericSystem> system;
  std::vector<ExtInt> block_orders;  // s - s_i
  Int degree_cap;                    // prod (m_i+1)^(s-s_i+1)
  bool degrees_available = false;
  std::vector<Int> block_degrees;
  Int total_degree;
  bool guard_exceeded = false;
  std::optional<ResultantCertificate> certificate;
};

DenseResultantReport dense_resultant(int n, const std::vector<long>& orders,
                                     const std::vector<long>& degrees,
                                     const EngineOptions& opts = {});

}  // namespace sdres

#endif
