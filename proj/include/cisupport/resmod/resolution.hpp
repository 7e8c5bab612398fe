#pragma once

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cisupport/resmod/module.hpp"

namespace cisupport {

/// Ranks by homological degree, plus the internal degrees of the basis of
/// each free module.
struct BettiTable {
  std::vector<int> ranks;
  std::vector<std::vector<int>> degrees;

  /// Graded Betti numbers b_{i,j} as (i, j, count) triples.
  std::vector<std::array<int, 3>> graded() const;
};

/// F: ... -> F_2 -> F_1 -> F_0 over `ring`, with d[n-1] the matrix of
/// d_n : F_n -> F_{n-1}. The basis of F_n has degrees d[n-1].col_degrees()
/// (F_0: d[0].row_degrees()).
struct FreeResolution {
  QuotientRingPtr ring;
  std::vector<PolyMatrix> d;
  std::vector<int> f0_degrees;
  int length = 0;
  bool minimal = true;
  /// Some differential vanished before `length`: the resolution is finite.
  bool finite = false;

  int rank(int n) const;
  const std::vector<int>& degrees(int n) const;
  BettiTable betti() const;
  /// d_n for 1 <= n <= length (an empty matrix with the right shape past a
  /// finite end).
  const PolyMatrix& differential(int n) const;
};

/// Minimal graded free resolution of M to homological degree L.
///
/// The first differential is a minimal presentation of M; each later one
/// minimally generates the kernel of the previous over the quotient ring.
/// Artinian rings use graded linear algebra over the standard-monomial
/// basis; other rings use Groebner syzygies with quotient multiples adjoined.
FreeResolution minimal_resolution(const GradedModule& M, int L);

/// Same, always through the Groebner path (kept as the reference
/// implementation for the linear-algebra path).
FreeResolution minimal_resolution_groebner(const GradedModule& M, int L);

/// Extends a resolution in place to length L.
void extend_resolution(FreeResolution& F, int L, bool use_linear_algebra = true);

/// Minimal generators of ker(m) over an artinian ring by linear algebra.
PolyMatrix artinian_kernel(const QuotientRing& A, const PolyMatrix& m);

/// Syzygy module: coker(d_{n+1}) on the basis of F_n; n = 0 gives M
/// (minimized).
GradedModule syzygy_module(const GradedModule& M, int n);
GradedModule syzygy_module(const FreeResolution& F, const GradedModule& M, int n);

/// d_n d_{n+1} = 0 entry-exactly modulo the ring relations.
bool is_complex(const FreeResolution& F);
/// No differential entry has a nonzero constant term.
bool has_minimal_entries(const FreeResolution& F);
/// Kernel equals image at each interior spot 1..length-1 (two Groebner
/// containments per spot).
bool is_exact(const FreeResolution& F);

/// Optional persistent store consulted by minimal_resolution. Keys are the
/// canonical texts from resolution_key(); implementations hash them.
class ResolutionStore {
 public:
  virtual ~ResolutionStore() = default;
  virtual std::optional<FreeResolution> load(const std::string& key, const QuotientRingPtr& ring) = 0;
  virtual void save(const std::string& key, const FreeResolution& F) = 0;
};

void set_resolution_store(std::shared_ptr<ResolutionStore> store);
std::shared_ptr<ResolutionStore> resolution_store();

std::string module_canonical(const GradedModule& M);
std::string resolution_key(const GradedModule& M, int L);

}  // namespace cisupport
