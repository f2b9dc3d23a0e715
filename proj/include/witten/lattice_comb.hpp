#ifndef WITTEN_LATTICE_COMB_HPP
#define WITTEN_LATTICE_COMB_HPP

// Lattice invariants of a root system: the level set D over invertible
// column submatrices of the pairing matrix, the exponent set E over
// full-rank root subsets, the highest-root coefficient set H, and the
// rational set T built on H. Enumeration is exhaustive with dependent
// prefixes pruned; the reduction is a set union, so chunked parallel runs
// are schedule-independent.

#include "witten/rootsystem.hpp"
#include "witten/scalars.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace witten {

enum class SetKind { D, E, H, T };

inline const char* set_kind_name(SetKind k) {
  switch (k) {
    case SetKind::D: return "dset";
    case SetKind::E: return "eset";
    case SetKind::H: return "hset";
    case SetKind::T: return "tset";
  }
  return "?";
}

struct InvariantSet {
  SetKind kind = SetKind::D;
  std::string phi;
  std::vector<Rat> values;  // sorted ascending; integral for D/E/H
  std::uint64_t budget_spent = 0;
};

inline constexpr std::uint64_t kDefaultBudget = 5'000'000;

// Levels of all invertible n x n column submatrices of B (n x m).
InvariantSet dset_of_matrix(const IntMatrix& b, std::uint64_t budget, int threads,
                            const std::string& label);

InvariantSet dset(const RootSystem& rs, std::uint64_t budget = kDefaultBudget, int threads = 0);
InvariantSet eset(const RootSystem& rs, std::uint64_t budget = kDefaultBudget, int threads = 0);
InvariantSet hset(const RootSystem& rs);
InvariantSet tset(const RootSystem& rs);

struct VerifyReport {
  bool holds = false;
  InvariantSet lhs;
  InvariantSet rhs;
};

// E(phi) == H(phi) u {1}
VerifyReport verify_eh(const RootSystem& rs, std::uint64_t budget = kDefaultBudget, int threads = 0);
// D(phi) == E(dual phi)
VerifyReport verify_de(const RootSystem& rs, std::uint64_t budget = kDefaultBudget, int threads = 0);

}  // namespace witten

#endif  // WITTEN_LATTICE_COMB_HPP
