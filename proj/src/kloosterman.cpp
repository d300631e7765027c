#include "wkl/kloosterman.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include "wkl/parallel.hpp"

namespace wkl {

namespace {

// index-level views used by the convolution kernels
struct IndexedRing {
    int64_t size;
    std::vector<int32_t> lam;        // psi exponent per element index
    std::vector<int32_t> mul;        // size*size product indices (when affordable)
    const RingSpec* spec;
    bool has_mul_table;

    IndexedRing(const RingSpec& s, const AdditiveCharacter& psi) : size(s.size()), spec(&s) {
        lam.resize(size);
        for (int64_t i = 0; i < size; ++i)
            lam[i] = static_cast<int32_t>(psi.exponent(s.element_at(i)));
        has_mul_table = size <= 2048;
        if (has_mul_table) {
            mul.resize(size * size);
            std::vector<RingElt> elems;
            elems.reserve(size);
            for (int64_t i = 0; i < size; ++i) elems.push_back(s.element_at(i));
            for (int64_t i = 0; i < size; ++i)
                for (int64_t j = 0; j < size; ++j)
                    mul[i * size + j] = static_cast<int32_t>(s.index_of(s.mul(elems[i], elems[j])));
        }
    }
    int64_t product(int64_t i, int64_t j) const {
        if (has_mul_table) return mul[i * size + j];
        return spec->index_of(spec->mul(spec->element_at(i), spec->element_at(j)));
    }
};

void check_budget(const RingSpec& spec, int64_t k, int64_t budget) {
    // naive tuple count q^(n(k-1))
    long double cost = 1.0L;
    for (int64_t i = 0; i < k - 1; ++i) cost *= static_cast<long double>(spec.size());
    if (cost > static_cast<long double>(budget))
        throw BudgetExceeded("kloosterman enumeration exceeds budget");
}

KlTable convolve_table(const RingSpec& spec, const AdditiveCharacter& psi, int64_t k,
                       int64_t budget, int workers, bool parallel) {
    check_budget(spec, k, budget);
    const int64_t M = psi.modulus();
    IndexedRing ix(spec, psi);
    std::vector<CycloVec> tab;
    tab.reserve(ix.size);
    for (int64_t i = 0; i < ix.size; ++i) tab.push_back(CycloVec::root(M, ix.lam[i]));
    for (int64_t step = 1; step < k; ++step) {
        std::vector<CycloVec> next(ix.size, CycloVec(M));
        if (!parallel) {
            for (int64_t u = 0; u < ix.size; ++u)
                for (int64_t v = 0; v < ix.size; ++v)
                    next[ix.product(u, v)].add_rotated(tab[u], ix.lam[v]);
        } else {
            const int W = effective_workers(workers);
            std::vector<std::vector<CycloVec>> parts(W, std::vector<CycloVec>(ix.size, CycloVec(M)));
#ifdef _OPENMP
#pragma omp parallel num_threads(W)
            {
                auto& mine = parts[thread_index()];
#pragma omp for schedule(static)
                for (int64_t u = 0; u < ix.size; ++u)
                    for (int64_t v = 0; v < ix.size; ++v)
                        mine[ix.product(u, v)].add_rotated(tab[u], ix.lam[v]);
            }
#else
            for (int64_t u = 0; u < ix.size; ++u)
                for (int64_t v = 0; v < ix.size; ++v)
                    parts[0][ix.product(u, v)].add_rotated(tab[u], ix.lam[v]);
#endif
            for (auto& part : parts)
                for (int64_t i = 0; i < ix.size; ++i) next[i] += part[i];
        }
        tab = std::move(next);
    }
    return KlTable{k, std::move(tab)};
}

} // namespace

KlTable kl_brute_table(const RingSpec& spec, const AdditiveCharacter& psi, int64_t k,
                       int64_t budget, int workers) {
    return convolve_table(spec, psi, k, budget, workers, true);
}

KlTable kl_brute_table_serial(const RingSpec& spec, const AdditiveCharacter& psi, int64_t k,
                              int64_t budget) {
    return convolve_table(spec, psi, k, budget, 1, false);
}

CycloVec kl_brute_tuples(const RingSpec& spec, const AdditiveCharacter& psi, int64_t k,
                         const RingElt& x, int64_t budget) {
    check_budget(spec, k, budget);
    const int64_t M = psi.modulus();
    CycloVec acc(M);
    if (k == 1) {
        acc += psi.value(x);
        return acc;
    }
    const int64_t N = spec.size();
    std::vector<int64_t> odo(k - 1, 0);
    while (true) {
        RingElt prod = spec.one(), sum = spec.zero();
        for (int64_t i : odo) {
            RingElt t = spec.element_at(i);
            prod = spec.mul(prod, t);
            sum = spec.add(sum, t);
        }
        if (spec.is_unit(prod)) {
            RingElt last = spec.div(x, prod);
            acc += psi.value(spec.add(sum, last));
        } else {
            // non-unit product: count all completions y with prod*y = x
            for (int64_t j = 0; j < N; ++j) {
                RingElt y = spec.element_at(j);
                if (spec.mul(prod, y) == x) acc += psi.value(spec.add(sum, y));
            }
        }
        size_t pos = 0;
        while (pos < odo.size() && ++odo[pos] == N) odo[pos++] = 0;
        if (pos == odo.size()) break;
    }
    return acc;
}

CriticalWitness critical_set_member(const RingSpec& spec, const AdditiveCharacter& psi,
                                    int64_t k, const RingElt& a, const RingElt& x, int level,
                                    bool use_generators) {
    if (!spec.is_unit(a)) throw std::domain_error("critical-set test requires a unit a");
    const int64_t M = psi.modulus();
    RingElt km1 = spec.from_int(k - 1);
    RingElt base = spec.div(x, spec.pow(a, k - 1));
    auto phase_exp = [&](const RingElt& y) {
        RingElt t = spec.mul(y, km1);
        t = spec.add(t, spec.div(x, spec.pow(spec.add(a, y), k - 1)));
        t = spec.sub(t, base);
        return psi.exponent(t) % M;
    };
    CriticalWitness w{a, x, true, std::nullopt};
    if (use_generators) {
        for (const auto& y : spec.additive_generators(level))
            if (phase_exp(y) != 0) {
                w.member = false;
                w.failing_y = y;
                return w;
            }
        return w;
    }
    for (const auto& y : spec.ideal_elements(level))
        if (phase_exp(y) != 0) {
            w.member = false;
            w.failing_y = y;
            return w;
        }
    return w;
}

namespace {

struct GkCache {
    const RingSpec& spec;
    const AdditiveCharacter& psi;
    int64_t k;
    std::map<std::pair<int64_t, int64_t>, CycloVec> store;

    const CycloVec& get(int64_t alpha, int64_t beta) {
        auto key = std::make_pair(alpha, beta);
        auto it = store.find(key);
        if (it == store.end())
            it = store.emplace(key, gauss_gk_brute(spec, psi, k, alpha, beta)).first;
        return it->second;
    }
};

CycloVec stationary_impl(const RingSpec& spec, const AdditiveCharacter& psi, int64_t k,
                         const RingElt& x, GkCache* gk) {
    const int n = spec.n();
    if (n < 2) throw std::invalid_argument("stationary phase requires n >= 2");
    if (!spec.is_unit(x)) throw std::domain_error("stationary phase requires unit x");
    const bool even = n % 2 == 0;
    if (!even && n < 3) throw std::invalid_argument("odd case requires n >= 3");
    const KlParams P = compute_params(spec, k);
    const int c = P.c;
    const int half = even ? n / 2 : (n - 1) / 2;
    const int64_t M = psi.modulus();
    const int64_t q = spec.q();
    RingElt km1 = spec.from_int(k - 1);
    CycloVec acc(M);
    const int64_t fiber = ipow64(q, n - c);
    for (int64_t i = 0; i < spec.size(); ++i) {
        RingElt a = spec.element_at(i);
        if (!spec.is_unit(a)) continue;
        if (!(spec.reduce_mod_pi_pow(a, c) == a)) continue;  // one representative per class mod pi^c
        RingElt ak = spec.pow(a, k);
        RingElt dif = spec.sub(ak, x);
        if (spec.valuation(dif) < half) continue;
        if (!critical_set_member(spec, psi, k, a, x, c, true).member) continue;
        int64_t phase = psi.exponent(spec.add(spec.mul(km1, a), spec.div(x, spec.pow(a, k - 1))));
        if (even) {
            acc += CycloVec::root(M, phase).scaled(fiber);
        } else {
            int64_t alpha = spec.residue(spec.div(spec.div_by_pi_pow(dif, half), x));
            int64_t beta = spec.residue(spec.inv(a));
            acc += gk->get(alpha, beta).rotated(phase).scaled(fiber);
        }
    }
    int64_t exp2 = even ? (k - 2) * n : (n - 1) * (k - 1) - n - 1;
    // both parities give an even product; divide exactly when negative
    return acc.scaled_pow_exact(q, exp2 / 2);
}

} // namespace

CycloVec kl_stationary(const RingSpec& spec, const AdditiveCharacter& psi, int64_t k,
                       const RingElt& x) {
    GkCache gk{spec, psi, k, {}};
    return stationary_impl(spec, psi, k, x, &gk);
}

std::vector<CycloVec> kl_stationary_sweep(const RingSpec& spec, const AdditiveCharacter& psi,
                                          int64_t k, int workers) {
    const int64_t M = psi.modulus();
    // fill the Gauss cache up front so the parallel x-loop only reads it
    GkCache gk{spec, psi, k, {}};
    if (spec.n() % 2 == 1)
        for (int64_t alpha = 0; alpha < spec.q(); ++alpha)
            for (int64_t beta = 1; beta < spec.q(); ++beta) gk.get(alpha, beta);
    std::vector<CycloVec> out(spec.size(), CycloVec(M));
    parallel_for(spec.size(), workers, [&](int64_t i) {
        RingElt x = spec.element_at(i);
        if (spec.is_unit(x)) out[i] = stationary_impl(spec, psi, k, x, &gk);
    });
    return out;
}

std::vector<CycloVec> kl_stationary_sweep_serial(const RingSpec& spec,
                                                 const AdditiveCharacter& psi, int64_t k) {
    const int64_t M = psi.modulus();
    GkCache gk{spec, psi, k, {}};
    std::vector<CycloVec> out(spec.size(), CycloVec(M));
    for (int64_t i = 0; i < spec.size(); ++i) {
        RingElt x = spec.element_at(i);
        if (spec.is_unit(x)) out[i] = stationary_impl(spec, psi, k, x, &gk);
    }
    return out;
}

CycloVec gauss_gk_brute(const RingSpec& spec, const AdditiveCharacter& psi, int64_t k,
                        int64_t alpha, int64_t beta) {
    const int64_t M = psi.modulus();
    const Fq& F = spec.residue_field();
    const int64_t q = spec.q();
    RingElt pin1 = spec.pi_pow(spec.n() - 1);
    // psi(pi^(n-1) z) as a function of the residue code z
    std::vector<int64_t> chi1(q);
    for (int64_t z = 0; z < q; ++z)
        chi1[z] = psi.exponent(spec.mul(pin1, spec.lift_residue(z)));
    CycloVec acc(M);
    if (k == 1) {
        acc += CycloVec::root(M, chi1[0]);
        return acc;
    }
    std::vector<int64_t> delta(k - 1, 0);
    while (true) {
        int64_t s1 = 0, s2 = 0;
        for (int64_t i = 0; i < k - 1; ++i) {
            s1 = F.add(s1, delta[i]);
            for (int64_t j = i; j < k - 1; ++j) s2 = F.add(s2, F.mul(delta[i], delta[j]));
        }
        int64_t z = F.add(F.mul(alpha, s1), F.mul(beta, s2));
        acc += CycloVec::root(M, chi1[z]);
        size_t pos = 0;
        while (pos < delta.size() && ++delta[pos] == q) delta[pos++] = 0;
        if (pos == delta.size()) break;
    }
    return acc;
}

int64_t find_psi_lambda(const RingSpec& spec, const AdditiveCharacter& psi) {
    const Fq& F = spec.residue_field();
    const int64_t q = spec.q(), M = psi.modulus();
    RingElt pin1 = spec.pi_pow(spec.n() - 1);
    auto chi = [&](int64_t z) { return psi.exponent(spec.mul(pin1, spec.lift_residue(z))); };
    for (int64_t lam = 0; lam < q; ++lam) {
        bool ok = true;
        for (int64_t x = 0; x < q && ok; ++x)
            ok = (chi(F.mul(x, x)) - chi(F.mul(lam, x))) % M == 0;
        if (ok) return lam;
    }
    throw std::logic_error("no linearizing lambda found");
}

GaussMagnitude gauss_gk_magnitude(const RingSpec& spec, const AdditiveCharacter& psi, int64_t k,
                                  int64_t alpha, int64_t beta) {
    if (beta == 0) throw std::invalid_argument("G_k magnitude requires beta != 0");
    const int64_t p = spec.p(), q = spec.q();
    if (k % p != 0)
        return {std::pow(double(q), double(k - 1) / 2.0), false};
    if (p != 2 || k % 4 == 0) {
        if (alpha == 0) return {std::pow(double(q), double(k) / 2.0), false};
        return {0.0, true};
    }
    // p = 2, k = 2 mod 4
    const Fq& F = spec.residue_field();
    int64_t lam = find_psi_lambda(spec, psi);
    if (F.mul(alpha, alpha) == F.mul(F.mul(lam, lam), beta))
        return {std::pow(double(q), double(k) / 2.0), false};
    return {0.0, true};
}

GenericGaussResult generic_gauss(const Fq& field, int dim, int64_t M,
                                 const std::vector<int64_t>& phase_exponents) {
    const int64_t q = field.q();
    int64_t V = 1;
    for (int i = 0; i < dim; ++i) V *= q;
    if (static_cast<int64_t>(phase_exponents.size()) != V)
        throw std::invalid_argument("phase table size mismatch");
    auto vadd = [&](int64_t a, int64_t b) {
        int64_t r = 0, scale = 1;
        for (int i = 0; i < dim; ++i) {
            r += field.add(a % q, b % q) * scale;
            a /= q; b /= q; scale *= q;
        }
        return r;
    };
    auto e = [&](int64_t v) { return phase_exponents[v]; };
    auto tilde = [&](int64_t v, int64_t w) {
        int64_t t = (e(vadd(v, w)) - e(v) - e(w) + e(0)) % M;
        return t < 0 ? t + M : t;
    };
    for (int64_t v = 0; v < V; ++v)
        for (int64_t w1 = 0; w1 < V; ++w1)
            for (int64_t w2 = 0; w2 < V; ++w2)
                if ((tilde(v, vadd(w1, w2)) - tilde(v, w1) - tilde(v, w2)) % M != 0)
                    throw std::invalid_argument("phase increment is not a homomorphism");
    GenericGaussResult R;
    std::vector<int64_t> kernel;
    for (int64_t v = 0; v < V; ++v) {
        bool in_kernel = true;
        for (int64_t w = 0; w < V && in_kernel; ++w) in_kernel = tilde(v, w) == 0;
        if (in_kernel) kernel.push_back(v);
    }
    R.kernel_size = static_cast<int64_t>(kernel.size());
    R.constant_on_kernel = true;
    for (int64_t v : kernel)
        if ((e(v) - e(0)) % M != 0) { R.constant_on_kernel = false; break; }
    CycloVec sum(M);
    for (int64_t v = 0; v < V; ++v) sum += CycloVec::root(M, e(v) % M);
    R.direct = sum.abs_value();
    R.predicted = R.constant_on_kernel ? std::sqrt(double(V) * double(R.kernel_size)) : 0.0;
    return R;
}

} // namespace wkl
