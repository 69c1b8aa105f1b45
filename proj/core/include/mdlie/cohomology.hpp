#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "mdlie/algebra.hpp"
#include "mdlie/matrix.hpp"
#include "mdlie/multilinear.hpp"
#include "mdlie/representation.hpp"

namespace mdlie {

/// Element of the total complex in degree q: f in C^q and, for q >= 2, g in C^{q-1}.
struct TotalCochain {
  int degree = 1;
  Cochain f;
  std::optional<Cochain> g;

  /// Coordinates of f followed by those of g.
  Vector coords() const;
  static TotalCochain from_coords(int degree, std::size_t n, std::size_t m, std::span<const Scalar> coords);
  static TotalCochain zero(int degree, std::size_t n, std::size_t m);

  friend bool operator==(const TotalCochain&, const TotalCochain&) = default;
};

/// The cochain complex of an algebra with coefficients in a representation.
/// Assembled matrices act on coordinate vectors in the Cochain layout and
/// are cached per degree. Copies share the cache.
///
///   δ_q : C^q -> C^{q+1},  Φ_q : C^q -> C^q,
///   ∂_1 = [δ_1; -Φ_1],  ∂_q = [[δ_q, 0], [(-1)^q Φ_q, δ_{q-1}]] for q >= 2.
class ComplexAssembly {
 public:
  /// Throws InputError when rep does not match md's dimension or weight.
  ComplexAssembly(MD3LieAlgebra md, Representation rep);

  const MD3LieAlgebra& algebra() const noexcept { return md_; }
  const Representation& representation() const noexcept { return rep_; }
  std::size_t algebra_dim() const noexcept { return md_.dim(); }
  std::size_t module_dim() const noexcept { return rep_.module_dim(); }

  std::size_t cochain_dim(int q) const;
  /// dim C^q ⊕ C^{q-1}, or dim C^1 when q = 1.
  std::size_t total_dim(int q) const;

  const Matrix& delta(int q) const;
  const Matrix& phi(int q) const;
  const Matrix& partial(int q) const;

  Cochain apply_delta(const Cochain& f) const;
  Cochain apply_phi(const Cochain& f) const;
  TotalCochain apply_partial(const TotalCochain& c) const;

 private:
  enum class Kind { Delta, Phi, Partial };
  const Matrix& cached(Kind kind, int q) const;
  Matrix build(Kind kind, int q) const;
  Matrix build_delta(int q) const;
  Matrix build_phi(int q) const;
  Matrix build_partial(int q) const;

  struct Cache {
    std::mutex mutex;
    std::map<std::pair<int, int>, std::unique_ptr<const Matrix>> entries;
  };

  MD3LieAlgebra md_;
  Representation rep_;
  std::vector<Matrix> action_;  // ρ(e_i, e_j) at i * n + j
  std::shared_ptr<Cache> cache_;
};

struct CocycleCheck {
  bool cocycle = false;
  TotalCochain residual;  // ∂ applied to the input
};

/// Throws InputError when the cochain's shape does not fit the complex.
CocycleCheck is_cocycle(const ComplexAssembly& cx, const TotalCochain& c);

/// Some preimage under ∂_{q-1}, or nullopt. Requires degree >= 2.
std::optional<TotalCochain> is_coboundary(const ComplexAssembly& cx, const TotalCochain& c);

struct CohomologyDims {
  std::size_t cocycles = 0;     // dim Z^q
  std::size_t coboundaries = 0; // dim B^q
  std::size_t cohomology = 0;   // dim H^q
  /// Cocycles whose classes form a basis of H^q.
  std::vector<TotalCochain> representatives;
};

CohomologyDims cohomology_dim(const ComplexAssembly& cx, int q, bool with_representatives = false);

/// Direct evaluation of the 1-cocycle conditions
///   ρ(b1,a2)f(a1) + ρ(a2,a1)f(b1) + ρ(a1,b1)f(a2) - f([a1,b1,a2]) = 0,  d_M f = f d.
bool satisfies_1cocycle_conditions(const MD3LieAlgebra& md, const Representation& rep, const Cochain& f);

/// Direct evaluation of the two 2-cocycle conditions δf = 0 and δg + Φf = 0,
/// each written out on basis tuples without the assembled matrices.
bool satisfies_2cocycle_conditions(const MD3LieAlgebra& md, const Representation& rep, const Cochain& f,
                                   const Cochain& g);

}  // namespace mdlie
