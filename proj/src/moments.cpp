#include "wkl/moments.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace wkl {

namespace {

int64_t pv_of(int64_t k, int64_t p) {
    // p^floor(log_p k)
    int64_t pv = 1;
    while (pv * p <= k) pv *= p;
    return pv;
}

Poly reduce_mod(const Fq& F, const Poly& a, const Poly& m) {
    return poly::divmod(F, a, m).second;
}

} // namespace

std::vector<Diagonal> enumerate_diagonals(const CharacterFamily& ctx, const Poly& a,
                                          int max_deg_g, int max_deg_h, bool apply_cutoff) {
    const auto& R = ctx.ring();
    const Fq& F = R.field();
    const int64_t q = F.q();
    Poly pim = poly::pow(F, R.pi(), std::max(R.n() - 1, 1));
    const int cutoff_deg = R.N() - 2 * R.pi_deg();  // deg g + deg h <= this
    std::vector<Diagonal> out;
    std::map<int, size_t> per_deg_h;
    for (int dg = 0; dg <= max_deg_g; ++dg)
        for (int dh = 0; dh <= max_deg_h; ++dh) {
            if (apply_cutoff && dg + dh > cutoff_deg) continue;
            for (const auto& g : poly::monics(F, dg)) {
                if (!R.is_unit(g)) continue;
                for (const auto& h : poly::monics(F, dh)) {
                    if (!R.is_unit(h)) continue;
                    if (poly::deg(poly::gcd(F, g, h)) != 0) continue;
                    Poly lhs = reduce_mod(F, poly::mul(F, a, h), pim);
                    for (int64_t b = 1; b < q; ++b) {
                        if (reduce_mod(F, poly::sub(F, lhs, poly::mul(F, Poly{b}, g)), pim).empty()) {
                            if (apply_cutoff) {
                                auto [it, fresh] = per_deg_h.emplace(dh, out.size());
                                if (!fresh)
                                    throw std::logic_error(
                                        "two diagonals under the cutoff share deg h");
                            }
                            out.push_back(Diagonal{g, h, b});
                            break;
                        }
                    }
                }
            }
        }
    return out;
}

int64_t c_gh_closed(const CharacterFamily& ctx, const Poly& a, const Diagonal& d) {
    const auto& R = ctx.ring();
    const Fq& F = R.field();
    const int64_t q = F.q(), P = R.abs_pi();
    if (R.n() < 2) throw std::invalid_argument("C_{g,h} closed form needs n >= 2");
    // does a h = beta g hold mod pi^n exactly?
    bool exact = R.reduce(poly::sub(F, poly::mul(F, a, d.h), poly::mul(F, Poly{d.beta}, d.g))).empty();
    int64_t A = (d.beta == 1) ? (q - 2) : -1;
    int64_t m = (P - 1) / (q - 1);
    int64_t B = exact ? (P - 1) * m : -m;
    return ipow64(P, R.n() - 2) * A * B;
}

CycloVec c_gh_direct(const CharacterFamily& ctx, const Poly& a, const Diagonal& d) {
    const auto& R = ctx.ring();
    Poly u = R.mul(R.mul(a, d.h), R.inv(d.g));
    CycloVec acc(ctx.value_modulus());
    for (const auto& chi : ctx.family()) acc += ctx.char_value(chi, u);
    return acc;
}

int64_t c_gh(const CharacterFamily& ctx, const Poly& a, const Poly& g, const Poly& h) {
    const auto& R = ctx.ring();
    const Fq& F = R.field();
    Poly pim = poly::pow(F, R.pi(), std::max(R.n() - 1, 1));
    Poly lhs = reduce_mod(F, poly::mul(F, a, h), pim);
    for (int64_t b = 1; b < F.q(); ++b)
        if (reduce_mod(F, poly::sub(F, lhs, poly::mul(F, Poly{b}, g)), pim).empty())
            return c_gh_closed(ctx, a, Diagonal{g, h, b});
    return 0;  // no scalar matches: orthogonality gives 0
}

MomentCoeffCheck moment_coeff_dual(const CharacterFamily& ctx, const Poly& a, int d1, int d2) {
    const auto& R = ctx.ring();
    MomentCoeffCheck out{CycloVec(ctx.value_modulus()), 0, false};
    for (const auto& chi : ctx.family()) {
        auto L = l_coefficients(ctx, chi);
        out.lhs_scaled += ctx.char_value(chi, a) * L.S[d1] * L.S[d2].conj();
    }
    for (const auto& d : enumerate_diagonals(ctx, a, d2, d1, false)) {
        if (poly::deg(d.g) - poly::deg(d.h) != d2 - d1) continue;
        out.rhs_scaled += c_gh_closed(ctx, a, d) * R.coprime_monic_count(d2 - poly::deg(d.g));
    }
    auto v = out.lhs_scaled.rational_value();
    out.equal = v.has_value() && *v == out.rhs_scaled;
    return out;
}

CfkrsK1Report cfkrs_k1_check(const CharacterFamily& ctx, const Poly& a) {
    const auto& R = ctx.ring();
    const int64_t q = R.field().q(), P = R.abs_pi();
    const int N = R.N(), n = R.n(), dpi = R.pi_deg();
    CfkrsK1Report rep;
    std::vector<LPolynomial> Ls;
    std::vector<CycloVec> chi_a;
    for (const auto& chi : ctx.family()) {
        Ls.push_back(l_coefficients(ctx, chi));
        chi_a.push_back(ctx.char_value(chi, a));
    }
    auto diags = enumerate_diagonals(ctx, a, N, N, true);
    rep.cutoff_diagonals = static_cast<int64_t>(diags.size());
    rep.cutoff_diagonal_cap = static_cast<int64_t>(n - 2) * dpi;
    for (int d1 = 0; d1 <= N; ++d1)
        for (int d2 = 0; d2 <= N; ++d2) {
            CycloVec lhs(ctx.value_modulus());
            for (size_t i = 0; i < Ls.size(); ++i)
                lhs += chi_a[i] * Ls[i].S[d1] * Ls[i].S[d2].conj();
            int64_t rhs = 0;
            for (const auto& d : diags) {
                if (poly::deg(d.g) - poly::deg(d.h) != d2 - d1) continue;
                if (d1 + d2 <= N)
                    rhs += c_gh_closed(ctx, a, d) * R.coprime_monic_count(d2 - poly::deg(d.g));
                else
                    rhs += c_gh_closed(ctx, a, d) *
                           R.coprime_monic_count(N - d1 - poly::deg(d.g)) *
                           ipow64(q, d1 + d2 - N);
            }
            CycloVec diff = lhs - CycloVec::constant(ctx.value_modulus(), rhs);
            rep.total_coeff_diff +=
                diff.abs_value() * std::pow(double(q), -0.5 * double(d1 + d2));
        }
    rep.explicit_bound = 2.0 * double(dpi) * std::sqrt(double(q)) *
                         std::pow(double(P), double(n) / 2.0 + 1.0) *
                         double(n) * double(dpi) * double(q - 1) * double(P);
    rep.sharper_bound = 10.0 * double(n) * std::pow(double(P), double(n) / 2.0);
    rep.within_explicit = rep.total_coeff_diff <= rep.explicit_bound;
    rep.within_sharper = rep.total_coeff_diff <= rep.sharper_bound;
    return rep;
}

std::vector<CycloVec> poly_kl_table(const CharacterFamily& ctx, int64_t k) {
    const auto& R = ctx.ring();
    const int64_t M = ctx.value_modulus(), p = R.field().p();
    const int64_t N = R.size();
    std::vector<int64_t> lam(N);
    std::vector<int32_t> mulixs(N * N);
    for (int64_t i = 0; i < N; ++i) {
        Poly f = R.element_at(i);
        lam[i] = ctx.psi_exponent(f);
        for (int64_t j = 0; j < N; ++j)
            mulixs[i * N + j] = static_cast<int32_t>(R.index_of(R.mul(f, R.element_at(j))));
    }
    std::vector<CycloVec> psi_vals;
    psi_vals.reserve(p);
    for (int64_t r = 0; r < p; ++r) psi_vals.push_back(root_of_unity_in(p, r, M));
    std::vector<CycloVec> tab;
    tab.reserve(N);
    for (int64_t i = 0; i < N; ++i) tab.push_back(psi_vals[lam[i]]);
    for (int64_t step = 1; step < k; ++step) {
        std::vector<CycloVec> next(N, CycloVec(M));
        for (int64_t u = 0; u < N; ++u)
            for (int64_t v = 0; v < N; ++v)
                next[mulixs[u * N + v]] += tab[u] * psi_vals[lam[v]];
        tab = std::move(next);
    }
    return tab;
}

CycloVec epsilon_moment_direct_scaled(const CharacterFamily& ctx, const Poly& a, int64_t pv) {
    CycloVec D(ctx.value_modulus());
    for (const auto& chi : ctx.family()) {
        auto L = l_coefficients(ctx, chi);
        CycloVec Spow = L.S[L.N];
        for (int64_t i = 1; i < pv; ++i) Spow = Spow * L.S[L.N];
        D += ctx.char_value(chi, a) * Spow;
    }
    return D;
}

EpsilonMomentCheck epsilon_moment_check(const CharacterFamily& ctx, const Poly& a, int64_t k) {
    const auto& R = ctx.ring();
    const Fq& F = R.field();
    const int64_t q = F.q(), p = F.p(), M = ctx.value_modulus();
    EpsilonMomentCheck out;
    out.pv = pv_of(k, p);
    const int64_t pv = out.pv;
    const int64_t G = R.unit_count();

    CycloVec D = epsilon_moment_direct_scaled(ctx, a, pv);
    auto kl = poly_kl_table(ctx, pv);
    Poly ainv = R.inv(a);

    auto kl_at = [&](const Poly& x) { return kl[R.index_of(R.reduce(x))]; };
    // K(sign) = sum over lambda tuples of psi(sign * sum lambda_i T^N) Kl(prod lambda_i / a)
    auto K = [&](int sign) {
        CycloVec acc(M);
        std::vector<int64_t> odo(pv, 1);
        while (true) {
            int64_t tot = 0;
            Poly prod{1};
            for (int64_t l : odo) {
                tot = F.add(tot, l);
                prod = R.mul(prod, Poly{l});
            }
            int64_t ex = F.trace(sign > 0 ? tot : F.neg(tot));
            acc += root_of_unity_in(p, ex, M) * kl_at(R.mul(prod, ainv));
            size_t pos = 0;
            while (pos < odo.size() && ++odo[pos] == q) odo[pos++] = 1;
            if (pos == odo.size()) break;
        }
        return acc;
    };
    CycloVec Kminus = K(-1), Kplus = K(+1);
    CycloVec Mu(M);
    for (int64_t mu = 1; mu < q; ++mu) Mu += kl_at(R.mul(Poly{mu}, ainv));

    const int64_t even_sign = (pv % 2 == 0) ? 1 : -1;
    CycloVec lhs = D.scaled((q - 1) * ipow64(q, pv));
    CycloVec corr_m = (Kminus.scaled(q - 1) - Mu.scaled(even_sign)).scaled(G);
    CycloVec corr_p = (Kplus.scaled(q - 1) - Mu.scaled(even_sign)).scaled(G);
    out.corrected_minus = lhs.equals(corr_m);
    out.corrected_plus = lhs.equals(corr_p);
    CycloVec printed_lhs = D.scaled(G * ipow64(q, pv));
    out.printed_minus = printed_lhs.equals(Kminus);
    out.printed_plus = printed_lhs.equals(Kplus);
    out.resolved = out.corrected_minus ? "corrected-minus"
                 : out.corrected_plus ? "corrected-plus"
                 : out.printed_minus  ? "printed-minus"
                 : out.printed_plus   ? "printed-plus"
                                      : "none";
    return out;
}

EpsilonLowerBoundReport epsilon_moment_lower_bound(const CharacterFamily& ctx, int64_t k) {
    const auto& R = ctx.ring();
    const int64_t q = R.field().q(), P = R.abs_pi(), M = ctx.value_modulus();
    EpsilonLowerBoundReport rep;
    rep.pv = pv_of(k, R.field().p());
    const int n = R.n();
    CycloVec second(M);
    double max2 = 0.0;
    rep.nonvanishing_count = 0;
    for (const auto& a : R.units()) {
        CycloVec D = epsilon_moment_direct_scaled(ctx, a, rep.pv);
        second += D.abs_square();
        if (!D.is_zero()) ++rep.nonvanishing_count;
        CycloVec a2 = D.abs_square();
        auto r = a2.rational_value();
        double val2 = r ? double(*r) : a2.abs_value();
        max2 = std::max(max2, val2);
    }
    auto sv = second.rational_value();
    int64_t expected = R.unit_count() * ctx.family_size() * ipow64(q, rep.pv * R.N());
    rep.second_moment_exact = sv.has_value() && *sv == expected;
    auto ceil_div = [](int64_t a, int64_t b) { return a > 0 ? (a + b - 1) / b : 0; };
    int64_t cc = ceil_div(n, rep.pv + 1), ct = ceil_div(n - 1, rep.pv + 1);
    rep.printed_count_bound = ipow64(P, cc + ct - 1) * (q * P - 1) * (q - 1);
    rep.consistent_count_bound = ipow64(P, cc + ct - 1) * (P - 1) * (q - 1);
    rep.printed_count_ok = rep.nonvanishing_count <= rep.printed_count_bound;
    rep.consistent_count_ok = rep.nonvanishing_count <= rep.consistent_count_bound;
    rep.max_abs = std::sqrt(max2) * std::pow(double(q), -0.5 * double(rep.pv * R.N()));
    rep.power_target =
        std::pow(double(P), (1.0 - 1.0 / double(rep.pv + 1)) * double(n));
    return rep;
}

} // namespace wkl
