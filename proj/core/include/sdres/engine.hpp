#ifndef SDRES_ENGINE_HPP
#define SDRES_ENGINE_HPP

#include <sdres/errors.hpp>
#include <sdres/jacobi.hpp>
#include <sdres/linalg.hpp>
#include <sdres/system.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sdres {

struct VerificationRecord {
  int trials = 0;
  bool vanishing_ok = false;
  bool homogeneity_ok = false;
  // per block: layer degrees (m_0, ..., m_R); empty for absent blocks
  std::vector<std::vector<long>> layers;
};

struct NormalizationRecord {
  Rat content_scale = Rat(1);  // factor taking the raw solution to the output
  bool sign_flipped = false;
};

struct ResultantCertificate {
  DiffPoly sr;                  // coeff vars only, integer coprime, positive lead
  std::vector<ExtInt> orders;   // per block
  long degree = 0;
  std::string engine;           // "ansatz" or "reduction"
  bool multihomog = false;
  NormalizationRecord normalization;
  VerificationRecord verification;
  // representation-identity witnesses; not produced by default
  std::optional<std::vector<DiffPoly>> cofactors;
};

// one search point of the order/degree loops
struct AnsatzConfig {
  std::vector<ExtInt> order_vector;  // h, -inf outside the super-essential set
  long degree = 1;                   // d >= 1
  bool multihomog = true;
  Int degree_cap;                    // prod (m_i+1)^(h_i+1)
};

// validates h_i against the final search bounds and d against the cap
AnsatzConfig make_ansatz_config(const GenericSystem& sys, const BoundReport& bounds,
                                const std::vector<ExtInt>& h, long d, bool multihomog);

struct EngineOptions {
  bool multihomog = true;
  int trials = 5;
  std::uint64_t seed = 7;
};

struct Prolongation {
  std::vector<int> blocks;            // originating block per polynomial
  std::vector<int> shifts;            // transform count per polynomial
  std::vector<DiffPoly> polys;        // sigma^k(norm(P_i))
  std::vector<SVar> y_vars;           // Y^[t], occurring shifted main vars
  std::vector<SVar> u_vars;           // U^[K], occurring shifted coeff vars
};

// multiset { sigma^k(norm(P_i)) : 0 <= k <= K_i }, blocks with K_i = -inf dropped
Prolongation prolong(const GenericSystem& sys, const std::vector<ExtInt>& k);

struct AnsatzTemplate {
  std::vector<SVar> u_vars;               // U = union of u_i^[h_i]
  std::vector<LaurentMonomial> monomials; // degree-d monomials in U
};

AnsatzTemplate build_ansatz(const GenericSystem& sys, const std::vector<ExtInt>& h, long d);

struct MultiplierTemplate {
  int block = 0;
  int shift = 0;
  long degree_bound = 0;
  std::vector<SVar> vars;                 // Y^[h] ∪ U
  std::vector<LaurentMonomial> monomials; // degree <= bound
};

std::vector<MultiplierTemplate> build_multipliers(const GenericSystem& sys,
                                                  const std::vector<ExtInt>& h, long d);

struct AssembledSystem {
  SparseMatrixQ matrix;
  int c0_count = 0;                        // leading columns are the ansatz unknowns
  std::vector<LaurentMonomial> c0_monomials;
  Int row_space;                           // monomial count of the row space
  Int unknown_count;                       // total unknowns (c_0 and multipliers)
};

// literal linear system of the multiplier identity
// prod (N_i0^(k))^d SR_0 - sum H_ij norm(P_i)^(j); desk-scale sizes only
AssembledSystem assemble_system(const GenericSystem& sys, const std::vector<ExtInt>& h, long d);

// equivalent generic-zero system over the ansatz unknowns alone: rows are
// the coefficients of D^d * SR_0 with every u_{i0}^(l) replaced by the
// l-th transform of -sum u_ik N_ik / N_i0
struct GenericZeroSystem {
  SparseMatrixQ matrix;
  std::vector<LaurentMonomial> columns;
};
GenericZeroSystem assemble_generic_zero(const GenericSystem& sys, const std::vector<ExtInt>& h,
                                        const std::vector<LaurentMonomial>& monomials);

ResultantCertificate search_resultant(const GenericSystem& sys, const EngineOptions& opts = {});

VerificationRecord verify_certificate(const ResultantCertificate& cert, const GenericSystem& sys,
                                      int trials, std::uint64_t seed);

// unique solution candidate from partial-derivative ratios; nullopt when the
// monomial lattice condition has no solution or the candidate is irrational
std::optional<std::vector<Rat>> reconstruct_solution(const ResultantCertificate& cert,
                                                     const GenericSystem& sys,
                                                     const std::map<SVar, Rat>& specialization);

// residual check: all P_i vanish at the constant point xi (all xi_j nonzero)
bool satisfies_system(const GenericSystem& sys, const std::map<SVar, Rat>& specialization,
                      const std::vector<Rat>& xi);

}  // namespace sdres

#endif
