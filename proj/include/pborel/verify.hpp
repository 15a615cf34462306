#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pborel/betti.hpp"
#include "pborel/stretch.hpp"

namespace pborel {

/// Ties a constructed ideal back to its input: the stage-1 regularity bound
/// r1 (the radius of region A = { a : |a| <= r1 }) and the strictly
/// increasing exponent sequence e_1 < ... < e_{n-1}. Region B is the box
/// { b : b_j < p^{e_j} - 1 for j = 1..n-1 }.
struct RegionSpec {
  Exponent r1 = 0;
  std::uint64_t p = 0;
  std::vector<std::uint64_t> e;

  static RegionSpec from_trace(const ConstructionTrace& trace);
  void validate(std::size_t n) const;
};

struct Comparison {
  std::string context;
  std::uint64_t expected = 0;
  std::uint64_t actual = 0;

  bool pass() const { return expected == actual; }
};

/// Machine-checkable record of one verified claim: every comparison that
/// was made, in canonical order, plus free-form notes (logged boundary
/// cases and informational facts that are not pass/fail).
struct VerificationReport {
  std::string claim;
  std::vector<Comparison> comparisons;
  std::vector<std::string> notes;

  bool passed() const;
  std::size_t failure_count() const;
  const Comparison* first_discrepancy() const;
  /// One comparison per line when all_comparisons, discrepancies always,
  /// then a final verdict line.
  void print(std::ostream& os, bool all_comparisons) const;
};

/// The degree correspondence A -> B: a static rescaling
/// psi(a) = (a_1, a_2 p^{e_1}, ..., a_n p^{e_{n-1}}). Injective by
/// construction; requires |a| <= r1.
Monomial psi_map(const Monomial& a, const RegionSpec& spec);
/// Inverse where defined: every b_{j+1} divisible by p^{e_j} and the
/// rescaled preimage inside region A.
std::optional<Monomial> psi_preimage(const Monomial& b, const RegionSpec& spec);

bool in_region_A(const Monomial& a, const RegionSpec& spec);
bool in_region_B(const Monomial& b, const RegionSpec& spec);

/// For each field and each 1 <= i <= n: the table of J restricted to
/// region B equals the psi-transport of the table of I, and every nonzero
/// entry of I inside A is matched at psi(a).
VerificationReport verify_main_theorem(const MonomialIdeal& I, const MonomialIdeal& J,
                                       const RegionSpec& spec,
                                       const std::vector<FieldSpec>& fields);

/// Full-table check that stretching remaps the z-degree l -> d_l and
/// nothing else, per field. lattice_cap bounds the instance size.
VerificationReport verify_stretch_proposition(const MonomialIdeal& I, const StretchSpec& spec,
                                              const std::vector<FieldSpec>& fields,
                                              std::size_t lattice_cap = 4096);

/// One construction stage under the microscope: (1) the colon by x_j^{p^e}
/// is already the saturation; (2) the table of J_prev + (x_j^{p^e}) splits
/// into the table of J_prev (degrees with b_j < p^e) and the shifted table
/// of the saturation (degrees with b_j >= p^e), for i = 1..n; (3) the same
/// split transported through the stretch of variable j+1. Requires
/// p^{e_j} > regularity_bound(J_prev).
VerificationReport verify_stage_dichotomy(const MonomialIdeal& J_prev, std::size_t j,
                                          std::uint64_t e_j, std::uint64_t p,
                                          const std::vector<FieldSpec>& fields);

/// Regularity and projective dimension of J agree across the given fields.
/// Guaranteed for p-Borel-fixed ideals; for other inputs the report is
/// informational (a note says so) but the comparisons still run.
VerificationReport verify_char_independence_props(const MonomialIdeal& J, std::uint64_t p,
                                                  const std::vector<FieldSpec>& fields);

}  // namespace pborel
