#pragma once

#include <cstdint>
#include <optional>

#include "isolab/family.hpp"

namespace isolab {

/// b(A) in the Johnson graph: non-members adjacent (|x Δ y| = 2) to a member.
/// Generates the r(n−r) neighbours of every member; members are split across
/// OpenMP workers and the private results merged by bitwise OR.
Family vertex_boundary(const Family& a);
/// Single-threaded reference for vertex_boundary.
Family vertex_boundary_serial(const Family& a);

/// N(A) = A ∪ b(A).
Family neighborhood(const Family& a);

/// Lower shadow in [n]^(r−1); throws RangeError at r = 0.
Family lower_shadow(const Family& a);
/// Upper shadow in [n]^(r+1); throws RangeError at r = n.
Family upper_shadow(const Family& a);

struct Shadows {
  std::optional<Family> lower;  ///< absent at r = 0
  std::optional<Family> upper;  ///< absent at r = n
};
Shadows shadows(const Family& a);

/// {[n] ∖ x : x ∈ A}, a family in [n]^(n−r).
Family complement_image(const Family& a);

/// The lower (avoiding n) and upper (containing n, with n removed) n-sections.
struct SectionPair {
  Family lower;     ///< over [n−1]^(r)
  Family upper;     ///< over [n−1]^(r−1)
  Rational alpha0;  ///< |lower| / C(n−1, r)
  Rational alpha1;  ///< |upper| / C(n−1, r−1)
};

/// Requires n >= 2 and 1 <= r <= n−1.
SectionPair sections(const Family& a);
/// Inverse of sections: rebuilds the family over [n]^(r).
Family join_sections(const Family& lower, const Family& upper);

/// Local LYM margins: normalised shadow density minus family density.
struct LymMargins {
  std::optional<Rational> lower;  ///< |∂⁻A|/C(n,r−1) − |A|/C(n,r); absent at r = 0
  std::optional<Rational> upper;  ///< |∂⁺A|/C(n,r+1) − |A|/C(n,r); absent at r = n
};
/// Throws DomainError for an empty family.
LymMargins local_lym_margins(const Family& a);

/// The section forms of Local LYM used in the induction:
/// |∂⁻A₀| − (r/(n−r))|A₀| and |∂⁺A₁| − ((n−r)/r)|A₁|, both >= 0.
struct SectionLymMargins {
  Rational lower_section;
  Rational upper_section;
};
/// Requires n >= 3 and 1 <= r <= n−2.
SectionLymMargins section_lym_margins(const Family& a);

/// Checks N(A)₀ = N(A₀) ∪ ∂⁺(A₁) and N(A)₁ = N(A₁) ∪ ∂⁻(A₀), with the
/// right-hand sides computed in [n−1]. Requires n >= 3 and 1 <= r <= n−2.
bool section_identity_check(const Family& a);

/// |N(A)| and the three section lower bounds it must dominate:
/// |N(A₀)|+|∂⁻A₀|, |N(A₁)|+|∂⁺A₁|, |N(A₀)|+|N(A₁)|.
struct NeighborhoodDecomposition {
  std::uint64_t neighborhood = 0;
  std::uint64_t via_lower_shadow = 0;
  std::uint64_t via_upper_shadow = 0;
  std::uint64_t via_sections = 0;
  bool holds() const;
};
NeighborhoodDecomposition neighborhood_decomposition(const Family& a);

}  // namespace isolab
