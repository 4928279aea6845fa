#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ekchains/chains.hpp"

namespace ekc {

enum class CheckStatus { pass, fail, skipped };

const char* to_string(CheckStatus s) noexcept;

/// One verified statement. `detail` holds the witness on failure, the reason
/// when skipped, and the checked range on success.
struct Check {
  std::string id;
  std::string claim;
  CheckStatus status = CheckStatus::pass;
  std::string detail;
};

struct VerificationReport {
  std::vector<Check> checks;

  void add(std::string id, std::string claim, CheckStatus status, std::string detail);
  void append(const VerificationReport& other);
  std::size_t count(CheckStatus s) const;
  std::size_t failures() const { return count(CheckStatus::fail); }
};

/// For k <= kmax with C^k = C^k_G(H):
///   (i)   C^k is a subgroup of G
///   (ii)  C^k intersected with H equals Z_k(H)
///   (iii) C^k_G(G) = Z_k(G)              (only when H = G)
///   (iv)  H <= C^c(H) for H of class c   (only when H is nilpotent)
VerificationReport verify_bryant_lemma(const FiniteGroup& group, const Subgroup& h,
                                       std::size_t kmax);

/// For nested A <= B <= C and each k <= kmax for which C^j_C(A) = Z_j(C)
/// holds for all j <= k:
///   (i)   C^j_C(A) = C^j_C(B) = Z_j(C)        for j <= k
///   (ii)  C^j_B(A) = Z_j(B) = Z_j(C) ∩ B      for j <= k
///   (iii) C^{k+1}_B(A) = C^{k+1}_C(A) ∩ B
/// Throws NotContained when the subgroups are not nested.
VerificationReport verify_abc_lemma(const Subgroup& a, const Subgroup& b, const Subgroup& c,
                                    std::size_t kmax);

/// Structure of the envelope chain E_0 >= E_1 >= ... >= E_kmax:
///   - E_0 = G, the chain descends, H <= E_k, and E_1 = C_G(C_G(H));
///   - C^j_{E_k}(H) = Z_j(E_k) for j <= k;
///   - C^{i+1}_{E_k}(H) = {x in E_k : [x,H] ⊆ Z_i(E_k)} for i <= k;
///   - Z_i(E_i) <= Z_j(E_j) for i <= j;
///   - C^{k+1}_{E_{k+1}}(H) = C^{k+1}_{E_k}(H) ∩ E_{k+1}, and equality
///     without the intersection whenever C^{k+1}_{E_k}(H) <= E_{k+1}.
VerificationReport verify_ek_structure(const FiniteGroup& group, const Subgroup& h,
                                       std::size_t kmax);

/// For nilpotent H of class c (taken as 1 when H is trivial):
///   - E_c(H) is nilpotent of class at most c, and exactly c when c >= 1;
///   - E_c = E_{c+1} = E_{c+2} = E_{c+3};
///   - when H is abelian, C_G(C_G(H)) is abelian.
/// Non-nilpotent H yields skipped checks.
VerificationReport verify_nilpotent_envelope(const FiniteGroup& group, const Subgroup& h);

} // namespace ekc
