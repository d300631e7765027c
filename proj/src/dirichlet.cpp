#include "wkl/dirichlet.hpp"

#include <stdexcept>

namespace wkl {

int64_t character_value_modulus(int64_t group_exponent, int64_t p) {
    int64_t E = group_exponent;
    int two_part = 0;
    int64_t odd = E;
    while (odd % 2 == 0) { odd /= 2; ++two_part; }
    if (odd == 1) {
        if (p != 2)
            throw std::invalid_argument("character values need an odd-order part for odd p");
        return std::max<int64_t>(E, 2);
    }
    if (two_part > 1)
        throw std::invalid_argument("group exponent does not fit a prime-power cyclotomic");
    // odd part must be a prime power and, for odd p, contain p
    int64_t d = 3, rest = odd, base = 0;
    for (; d * d <= rest; d += 2)
        if (rest % d == 0) { base = d; break; }
    if (base == 0) base = rest;
    while (rest % base == 0) rest /= base;
    if (rest != 1)
        throw std::invalid_argument("group exponent does not fit a prime-power cyclotomic");
    if (p != 2 && odd % p != 0)
        throw std::invalid_argument("character values cannot host the additive character");
    return odd;
}

CharacterFamily::CharacterFamily(PolyQuot R) : R_(std::move(R)), U_(R_) {
    M_ = character_value_modulus(U_.exponent(), R_.field().p());
    // kernel of reduction mod pi^(n-1): units congruent to 1 mod pi^(n-1)
    std::vector<Poly> kernel;
    if (R_.n() >= 2) {
        Poly pim = poly::pow(R_.field(), R_.pi(), R_.n() - 1);
        for (const auto& u : R_.units())
            if (poly::divmod(R_.field(), poly::sub(R_.field(), u, Poly{1}), pim).second.empty())
                kernel.push_back(u);
    }
    std::vector<Poly> scalars;
    for (int64_t c = 1; c < R_.field().q(); ++c) scalars.push_back(Poly{c});

    const auto& ords = U_.orders();
    std::vector<int64_t> w(ords.size(), 0);
    const int64_t E = U_.exponent();
    while (true) {
        DirichletChar chi{w, false, false};
        chi.primitive = R_.n() < 2;
        for (const auto& f : kernel)
            if (char_exponent(chi, f) % E != 0) { chi.primitive = true; break; }
        for (const auto& f : scalars)
            if (char_exponent(chi, f) % E != 0) { chi.odd = true; break; }
        chars_.push_back(chi);
        if (chi.primitive && chi.odd) family_.push_back(chi);
        size_t pos = 0;
        while (pos < w.size() && ++w[pos] == ords[pos]) w[pos++] = 0;
        if (pos == w.size()) break;
    }
    if (static_cast<int64_t>(chars_.size()) != U_.order())
        throw std::logic_error("character count does not match the unit group order");
}

int64_t CharacterFamily::family_size_closed_form() const {
    const int64_t P = R_.abs_pi(), q = R_.field().q();
    if (R_.n() < 2) return family_size();  // no closed form below conductor pi^2
    return ipow64(P, R_.n() - 2) * (P - 1) * ((P - 1) / (q - 1)) * (q - 2);
}

int64_t CharacterFamily::family_size_reference() const {
    const int64_t P = R_.abs_pi();
    if (R_.n() < 2) return family_size();
    return ipow64(P, R_.n() - 2) * (P - 1) * (P - 2);
}

int64_t CharacterFamily::char_exponent(const DirichletChar& chi, const Poly& f) const {
    const auto& dv = U_.dlog(f);
    const auto& ords = U_.orders();
    const int64_t E = U_.exponent();
    int64_t j = 0;
    for (size_t i = 0; i < dv.size(); ++i)
        j = (j + chi.weights[i] * dv[i] % E * (E / ords[i])) % E;
    return j;
}

CycloVec CharacterFamily::char_value(const DirichletChar& chi, const Poly& f) const {
    Poly r = R_.reduce(f);
    if (!R_.is_unit(r)) return CycloVec(M_);
    return root_of_unity_in(U_.exponent(), char_exponent(chi, r), M_);
}

int64_t CharacterFamily::psi_exponent(const Poly& f) const {
    return R_.field().trace(R_.top_coeff(R_.reduce(f)));
}

CycloVec CharacterFamily::psi_value(const Poly& f) const {
    return root_of_unity_in(R_.field().p(), psi_exponent(f), M_);
}

LPolynomial l_coefficients(const CharacterFamily& ctx, const DirichletChar& chi) {
    const auto& R = ctx.ring();
    LPolynomial L;
    L.N = R.N();
    L.S.reserve(L.N + 1);
    for (int d = 0; d <= L.N; ++d) {
        CycloVec acc(ctx.value_modulus());
        for (const auto& f : poly::monics(R.field(), d))
            acc += ctx.char_value(chi, f);
        L.S.push_back(std::move(acc));
    }
    return L;
}

bool epsilon_modulus_exact(const CharacterFamily& ctx, const LPolynomial& L) {
    const int64_t q = ctx.ring().field().q();
    CycloVec lhs = L.S[L.N] * L.S[L.N].conj();
    return lhs.equals(CycloVec::constant(ctx.value_modulus(), ipow64(q, L.N)));
}

bool functional_equation_exact(const CharacterFamily& ctx, const LPolynomial& L) {
    const int64_t q = ctx.ring().field().q();
    for (int d = 0; d <= L.N; ++d) {
        CycloVec lhs = L.S[d].scaled(ipow64(q, L.N - d));
        CycloVec rhs = L.S[L.N] * L.S[L.N - d].conj();
        if (!lhs.equals(rhs)) return false;
    }
    return true;
}

} // namespace wkl
