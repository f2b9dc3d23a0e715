#ifndef WITTEN_ROOTSYSTEM_HPP
#define WITTEN_ROOTSYSTEM_HPP

// Irreducible root systems A..G in Bourbaki labeling (the E/F numbering
// follows the usual Dynkin diagram ordering: chain 1-3-4-5-..., node 2
// attached to node 4). Roots are held in simple-root coordinates; all
// pairings derive from the Cartan matrix plus symmetrizers, so no ambient
// embedding ever enters.

#include "witten/errors.hpp"
#include "witten/scalars.hpp"

#include <set>
#include <string>
#include <vector>

namespace witten {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct RootSystem {
  Family family;
  int rank = 0;
  Eigen::MatrixXi cartan;  // cartan(i,j) = (alpha_i, alpha_j^vee)
  std::vector<Rat> symmetrizer;  // d_i = (alpha_i, alpha_i)/2, long roots at 1
  // Columns are positive roots as coefficient vectors over the simple
  // roots, ordered by ascending height with the simple roots first (so the
  // pairing matrix starts with an identity block).
  Eigen::MatrixXi positive_roots;

  int positive_count() const { return static_cast<int>(positive_roots.cols()); }
  std::string name() const { return std::string(1, static_cast<char>(family)) + std::to_string(rank); }
};

RootSystem build(Family family, int rank);       // throws InvalidType
RootSystem build(const std::string& type_name);  // "A2", "G2", ...

// Half squared length (alpha, alpha)/2 of a root given by coefficients.
Rat root_half_norm(const RootSystem& rs, const Eigen::VectorXi& coeffs);

// M(i,j) = (lambda_i, alpha_j^vee) over all positive roots; n x r, first n
// columns the identity. Integer-valued.
IntMatrix pairing_matrix(const RootSystem& rs);
// Same with an explicitly scaled symmetrizer (the pairing values are
// normalization-invariant; exposed so tests can assert that).
IntMatrix pairing_matrix(const RootSystem& rs, const std::vector<Rat>& symmetrizer);

Eigen::VectorXi highest_root(const RootSystem& rs);
std::set<long> highest_root_coeffs(const RootSystem& rs);

std::vector<int> weyl_degrees(const RootSystem& rs);
Int weyl_order(const RootSystem& rs);

// Product over positive roots of (delta, alpha^vee), delta the half sum of
// positive roots (equivalently the sum of fundamental weights).
Int k_phi(const RootSystem& rs);

struct WeylElement {
  Eigen::MatrixXi matrix;  // action on simple-root coordinates
  int length = 0;
};

// Full Weyl group by breadth-first closure over simple reflections;
// throws BudgetExceeded when |W| = prod d_k exceeds max_order.
std::vector<WeylElement> weyl_enumerate(const RootSystem& rs, long max_order);

// Coefficients of sum_sigma q^{l(sigma)}; uses enumeration when |W| is
// small enough, otherwise the degree factorization. Both agree.
std::vector<Int> poincare_poly(const RootSystem& rs);
std::vector<Int> poincare_from_degrees(const std::vector<int>& degrees);

RootSystem dual(const RootSystem& rs);

}  // namespace witten

#endif  // WITTEN_ROOTSYSTEM_HPP
