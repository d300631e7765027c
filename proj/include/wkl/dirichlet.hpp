#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wkl/cyclo.hpp"
#include "wkl/fqpoly.hpp"

namespace wkl {

/// Character of (F_q[T]/pi^n)^x given by a weight vector against the unit
/// group generators. primitive: does not factor through mod pi^(n-1);
/// odd: nontrivial on the scalars F_q^x.
struct DirichletChar {
    std::vector<int64_t> weights;
    bool primitive = false;
    bool odd = false;
};

/// Everything needed to evaluate Dirichlet characters mod pi^n exactly:
/// the unit group presentation, the value modulus M (a prime power whose
/// root group hosts mu_E up to sign), and the enumerated family.
class CharacterFamily {
public:
    explicit CharacterFamily(PolyQuot R);

    const PolyQuot& ring() const { return R_; }
    const UnitGroupTable& units() const { return U_; }
    int64_t value_modulus() const { return M_; }

    const std::vector<DirichletChar>& all_characters() const { return chars_; }
    /// The family of primitive odd characters mod pi^n.
    const std::vector<DirichletChar>& family() const { return family_; }
    int64_t family_size() const { return static_cast<int64_t>(family_.size()); }
    /// |pi|^(n-2) (|pi|-1)^2 (q-2)/(q-1); matches the enumeration.
    int64_t family_size_closed_form() const;
    /// |pi|^(n-2) (|pi|-1) (|pi|-2): conflates q with |pi| for deg pi > 1,
    /// reported alongside for the discrepancy ledger.
    int64_t family_size_reference() const;

    /// Exponent j with chi(f) = zeta_E^j, f a unit; E = units().exponent().
    int64_t char_exponent(const DirichletChar& chi, const Poly& f) const;
    /// chi(f) as a CycloVec over value_modulus(); zero for non-unit f.
    CycloVec char_value(const DirichletChar& chi, const Poly& f) const;

    /// psi(f) = additive character of the T^N coefficient; exponent in Z/p.
    int64_t psi_exponent(const Poly& f) const;
    CycloVec psi_value(const Poly& f) const;

private:
    PolyQuot R_;
    UnitGroupTable U_;
    int64_t M_;
    std::vector<DirichletChar> chars_, family_;
};

/// Smallest prime power M with mu_E inside +-mu_M, also hosting mu_p.
/// Throws when no prime-power cyclotomic fits (cannot occur for n >= 2).
int64_t character_value_modulus(int64_t group_exponent, int64_t p);

/// L-polynomial data for chi: S[d] = sum over monic f of degree d coprime
/// to pi of chi(f), so that a_d = q^(-d/2) S[d] and epsilon = q^(-N/2) S[N].
struct LPolynomial {
    int N = 0;
    std::vector<CycloVec> S;
    const CycloVec& epsilon_scaled() const { return S[N]; }
};

LPolynomial l_coefficients(const CharacterFamily& ctx, const DirichletChar& chi);

/// Exact checks |epsilon| = 1 (S_N conj(S_N) = q^N) and the functional
/// equation a_d = epsilon conj(a_{N-d}) (q^(N-d) S_d = S_N conj(S_{N-d})).
bool epsilon_modulus_exact(const CharacterFamily& ctx, const LPolynomial& L);
bool functional_equation_exact(const CharacterFamily& ctx, const LPolynomial& L);

} // namespace wkl
