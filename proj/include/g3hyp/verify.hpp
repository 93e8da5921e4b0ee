/**
 * @file verify.hpp
 * @brief Randomized exact-identity verification suites. Each suite draws its
 *        per-sample randomness from (seed, index) only, so reports are
 *        deterministic and independent of the worker count.
 */
#pragma once

#include <g3hyp/strata.hpp>

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

namespace g3hyp {

struct SuiteOptions {
    int samples = 100;
    std::uint64_t seed = 0;
    int threads = 0;  ///< 0: use G3HYP_THREADS or hardware concurrency
};

struct SuiteFailure {
    int index;
    std::string message;
};

struct SuiteResult {
    std::string name;
    int samples = 0;
    std::vector<SuiteFailure> failures;
    std::vector<std::string> notes;

    bool passed() const { return failures.empty(); }
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace detail

/// Deterministic per-sample randomness source.
class Sampler {
public:
    Sampler(std::uint64_t seed, int index)
        : eng_(detail::splitmix64(seed ^ detail::splitmix64(static_cast<std::uint64_t>(index) + 1))) {}

    long int_in(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(eng_);
    }

    Rational rational(long max_num = 9, long max_den = 4) {
        return Rational(int_in(-max_num, max_num), int_in(1, max_den));
    }

    Rational nonzero_rational(long max_num = 9, long max_den = 4) {
        while (true) {
            Rational r = rational(max_num, max_den);
            if (!r.is_zero()) return r;
        }
    }

private:
    std::mt19937_64 eng_;
};

namespace detail {

inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("G3HYP_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

/// Run `fn(index)` for index in [0, samples) across workers; failures are
/// merged in index order so the report is independent of scheduling.
inline void run_samples(SuiteResult& out, const SuiteOptions& opt,
                        const std::function<std::optional<std::string>(int)>& fn) {
    out.samples = opt.samples;
    int nthreads = std::min(resolve_threads(opt.threads), std::max(opt.samples, 1));
    std::vector<SuiteFailure> failures;
    std::mutex mu;
    std::atomic<int> next{0};
    auto worker = [&] {
        while (true) {
            int i = next.fetch_add(1);
            if (i >= opt.samples) break;
            std::optional<std::string> fail;
            try {
                fail = fn(i);
            } catch (const std::exception& e) {
                fail = std::string("exception: ") + e.what();
            }
            if (fail) {
                std::lock_guard<std::mutex> lk(mu);
                failures.push_back({i, *fail});
            }
        }
    };
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(nthreads));
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    std::sort(failures.begin(), failures.end(),
              [](const SuiteFailure& a, const SuiteFailure& b) { return a.index < b.index; });
    out.failures = std::move(failures);
}

/// Random reduced curve with a != 0 and squarefree octavic.
inline ReducedCurve sample_bridge_curve(Sampler& rng) {
    while (true) {
        ReducedCurve c{rng.nonzero_rational(6, 3), rng.rational(6, 3), rng.rational(6, 3)};
        if (is_squarefree(c.octavic())) return c;
    }
}

inline std::array<Rational, 6> pipeline_t(const BinaryForm<Rational>& f) {
    auto S = shioda_invariants(f);
    return {S[3].pow(2) / S[2].pow(3), S[4] / S[2].pow(2), S[5] / (S[2] * S[3]),
            S[6] / (S[2] * S[4]),      S[7] / (S[2] * S[5]), S[8] / S[2].pow(4)};
}

}  // namespace detail

/// t1..t4 from the closed dihedral forms equal the transvectant pipeline.
inline SuiteResult verify_bridge(const SuiteOptions& opt) {
    SuiteResult res{"bridge"};
    detail::run_samples(res, opt, [&](int i) -> std::optional<std::string> {
        Sampler rng(opt.seed, i);
        ReducedCurve c = detail::sample_bridge_curve(rng);
        DihedralPoint p = dihedral_invariants(c);
        auto closed = absolute_from_dihedral(p.s2(), p.s3(), p.s4());
        auto S = shioda_invariants(c.octavic());
        if (S[2].is_zero() || S[3].is_zero() || S[4].is_zero())
            return "sample hit a vanishing absolute-invariant denominator";
        std::array<Rational, 4> direct = {S[3].pow(2) / S[2].pow(3), S[4] / S[2].pow(2),
                                          S[5] / (S[2] * S[3]), S[6] / (S[2] * S[4])};
        for (int k = 0; k < 4; ++k)
            if (closed[k] != direct[k])
                return "t" + std::to_string(k + 1) + " mismatch at (a,b,c)=(" + c.a.str() + "," +
                       c.b.str() + "," + c.c.str() + "): closed " + closed[k].str() + " vs direct " +
                       direct[k].str();
        return std::nullopt;
    });
    return res;
}

/// disc(octavic) = kappa * (-256) * Delta^2 / (s4+2 s2^2)^4 with one global
/// measured constant kappa (reported; the measured value is -1).
inline SuiteResult verify_discriminant(const SuiteOptions& opt) {
    SuiteResult res{"discriminant"};
    {
        Sampler rng(opt.seed, 0);
        ReducedCurve c = detail::sample_bridge_curve(rng);
        DihedralPoint p = dihedral_invariants(c);
        Rational L = p.s4() + Rational(2) * p.s2() * p.s2();
        Rational delta = dihedral_discriminant(p.s2(), p.s3(), p.s4());
        Rational stated = Rational(-256) * delta.pow(2) / L.pow(4);
        Rational kappa = discriminant(c.octavic()) / stated;
        res.notes.push_back("measured global constant kappa = " + kappa.str());
    }
    detail::run_samples(res, opt, [&](int i) -> std::optional<std::string> {
        Sampler rng(opt.seed, i);
        ReducedCurve c = detail::sample_bridge_curve(rng);
        DihedralPoint p = dihedral_invariants(c);
        Rational L = p.s4() + Rational(2) * p.s2() * p.s2();
        Rational delta = dihedral_discriminant(p.s2(), p.s3(), p.s4());
        Rational lhs = discriminant(c.octavic());
        Rational rhs = Rational(-1) * Rational(-256) * delta.pow(2) / L.pow(4);
        if (lhs != rhs)
            return "discriminant relation fails at (a,b,c)=(" + c.a.str() + "," + c.b.str() + "," +
                   c.c.str() + ")";
        return std::nullopt;
    });
    return res;
}

namespace detail {

inline BinaryForm<Rational> sample_squarefree_octavic(Sampler& rng) {
    while (true) {
        std::vector<Rational> cs(9);
        for (auto& c : cs) c = rng.rational(5, 2);
        if (cs[8].is_zero() && cs[7].is_zero()) cs[8] = Rational(1);
        BinaryForm<Rational> f(8, std::move(cs));
        if (!f.is_zero() && is_squarefree(f)) return f;
    }
}

inline MoebiusMatrix<Rational> sample_moebius(Sampler& rng) {
    while (true) {
        MoebiusMatrix<Rational> M{Rational(rng.int_in(-5, 5)), Rational(rng.int_in(-5, 5)),
                                  Rational(rng.int_in(-5, 5)), Rational(rng.int_in(-5, 5))};
        if (!M.det().is_zero()) return M;
    }
}

}  // namespace detail

/// Weight law J_i(f o M) = det(M)^{4i} J_i(f), cross-ratio consistency, and
/// exact invariance of the moduli point.
inline SuiteResult verify_weights(const SuiteOptions& opt) {
    SuiteResult res{"weights"};
    detail::run_samples(res, opt, [&](int i) -> std::optional<std::string> {
        Sampler rng(opt.seed, i);
        BinaryForm<Rational> f = detail::sample_squarefree_octavic(rng);
        MoebiusMatrix<Rational> M = detail::sample_moebius(rng);
        BinaryForm<Rational> g = moebius_act(f, M);
        auto Sf = shioda_invariants(f);
        auto Sg = shioda_invariants(g);
        Rational lambda = M.det().pow(4);
        for (int w = 2; w <= 10; ++w) {
            if (Sf[w].is_zero() != Sg[w].is_zero())
                return "zero pattern not invariant at J" + std::to_string(w);
            if (Sg[w] != lambda.pow(w) * Sf[w])
                return "weight law J_i(f o M) = det^{4i} J_i(f) fails at J" + std::to_string(w);
        }
        for (int a = 2; a <= 10; ++a) {
            if (Sf[a].is_zero()) continue;
            for (int b = a + 1; b <= 10; ++b) {
                if (Sf[b].is_zero()) continue;
                if (Sf[a].pow(b) * Sg[b].pow(a) != Sf[b].pow(a) * Sg[a].pow(b))
                    return "cross-ratio inconsistency at (" + std::to_string(a) + "," +
                           std::to_string(b) + ")";
            }
        }
        if (moduli_point(Sf) != moduli_point(Sg)) return "moduli point not invariant";
        if (!isomorphic(f, g).isomorphic) return "Moebius twist not recognized as isomorphic";
        return std::nullopt;
    });
    return res;
}

/// Closed-form j of the elliptic subfield vs the classical quartic invariants.
inline SuiteResult verify_jinv(const SuiteOptions& opt) {
    SuiteResult res{"jinv"};
    detail::run_samples(res, opt, [&](int i) -> std::optional<std::string> {
        Sampler rng(opt.seed, i);
        ReducedCurve c = detail::sample_bridge_curve(rng);
        DihedralPoint p = dihedral_invariants(c);
        Rational I = Rational(12) - Rational(3) * c.a * c.c + c.b * c.b;
        Rational J = Rational(72) * c.b + Rational(9) * c.a * c.b * c.c -
                     Rational(27) * c.c * c.c - Rational(27) * c.a * c.a -
                     Rational(2) * c.b.pow(3);
        Rational den = Rational(4) * I.pow(3) - J * J;
        if (den.is_zero()) return "oracle denominator vanished on a squarefree sample";
        Rational oracle = Rational(1728) * Rational(4) * I.pow(3) / den;
        Rational closed = elliptic_j(p.s2(), p.s3(), p.s4());
        if (closed != oracle)
            return "j mismatch at (a,b,c)=(" + c.a.str() + "," + c.b.str() + "," + c.c.str() +
                   "): closed " + closed.str() + " vs oracle " + oracle.str();
        return std::nullopt;
    });
    return res;
}

/// Reconstruction: field-of-moduli tagging and round trips.
inline SuiteResult verify_roundtrip(const SuiteOptions& opt) {
    SuiteResult res{"roundtrip"};
    detail::run_samples(res, opt, [&](int i) -> std::optional<std::string> {
        Sampler rng(opt.seed, i);
        if (i % 2 == 0) {
            // curve route: d = (a^4 - c^4)^2 is always a square, model stays rational
            ReducedCurve c = detail::sample_bridge_curve(rng);
            DihedralPoint p = dihedral_invariants(c);
            ReconstructedModel m = reconstruct(p.s2(), p.s3(), p.s4());
            if (m.field != ModelField::moduli)
                return "curve-derived triple not tagged moduli";
            if (!isomorphic(c.octavic(), m.octavic_rational()).isomorphic)
                return "reconstructed model not isomorphic to the original curve";
            return std::nullopt;
        }
        // raw triple route: compare the model's invariants symbolically
        while (true) {
            Rational s2 = rng.rational(6, 3), s3 = rng.rational(6, 3), s4 = rng.rational(6, 3);
            Rational L = s4 + Rational(2) * s2 * s2;
            if (L.is_zero() || dihedral_discriminant(s2, s3, s4).is_zero()) continue;
            ReconstructedModel m = reconstruct(s2, s3, s4);
            Rational d = s4 * s4 - Rational(4) * s2.pow(4);
            if (rational_sqrt(d) && m.field != ModelField::moduli)
                return "square discriminant not tagged moduli";
            if (!rational_sqrt(d) && m.field != ModelField::quadratic)
                return "non-square discriminant not tagged quadratic";
            auto [r2, r3, r4] = dihedral_from_even_octavic(m.octavic());
            if (r2 != QuadExt(s2) || r3 != QuadExt(s3) || r4 != QuadExt(s4))
                return "model invariants do not reproduce the input triple at (" + s2.str() +
                       "," + s3.str() + "," + s4.str() + ")";
            QuadExt q = m.A * m.A - QuadExt(s4) * m.A + QuadExt(s2.pow(4));
            if (!q.is_zero()) return "leading coefficient violates its quadratic";
            return std::nullopt;
        }
    });
    return res;
}

/// Family members satisfy their closed-form relations and classify to the
/// generating stratum; parameter maps recover the squared parameter.
inline SuiteResult verify_loci(const SuiteOptions& opt) {
    SuiteResult res{"loci"};
    const int kinds = 6;
    SuiteOptions inner = opt;
    inner.samples = opt.samples * kinds;
    detail::run_samples(res, inner, [&](int idx) -> std::optional<std::string> {
        int kind = idx % kinds;
        Sampler rng(opt.seed, idx);
        switch (kind) {
            case 0: {  // Z2cubed family via the dihedral route
                while (true) {
                    Rational a = rng.rational(6, 2), b = rng.rational(6, 2);
                    if ((a + b).is_zero()) continue;
                    std::optional<StratumSample> s;
                    try {
                        s = stratum_sample(AutGroupLabel::Z2cubed, {a, b});
                    } catch (const precondition_error&) {
                        continue;
                    }
                    DihedralPoint p = dihedral_invariants(*s->curve);
                    if ((p.s4() - Rational(2) * p.s2() * p.s2()) != Rational(0))
                        return "Z2cubed: s4 - 2 s2^2 != 0 on a family member";
                    auto cls = classify_dihedral(p);
                    if (cls.label == AutGroupLabel::D12 || cls.label == AutGroupLabel::Z2xD8 ||
                        cls.label == AutGroupLabel::Z2xZ4)
                        continue;  // landed in a deeper printed stratum; excluded parameter
                    if (cls.label != AutGroupLabel::Z2cubed || cls.certainty != Certainty::exact)
                        return "Z2cubed: classification " + group_name(cls.label);
                    return std::nullopt;
                }
            }
            case 1: {  // Z2xD8 family, both routes + parameter recovery
                Rational a;
                do {
                    a = Rational(rng.int_in(-30, 30), rng.int_in(1, 3));
                } while (a.is_zero() || a.abs() == Rational(2) || a.abs() == Rational(14));
                StratumSample s = stratum_sample(AutGroupLabel::Z2xD8, {a});
                auto cls = classify_dihedral(dihedral_invariants(*s.curve));
                if (cls.label != AutGroupLabel::Z2xD8 || cls.certainty != Certainty::exact)
                    return "Z2xD8: dihedral classification " + group_name(cls.label);
                ModuliPoint mp = moduli_point(shioda_invariants(s.octavic));
                if (mp.branch != ModuliBranch::T) return "Z2xD8: expected T branch";
                auto cls2 = classify_moduli(mp);
                if (cls2.label != AutGroupLabel::Z2xD8 || cls2.certainty != Certainty::exact)
                    return "Z2xD8: moduli classification " + group_name(cls2.label);
                if (z2xd8_parameter_from_t4(mp.values[3]) != a * a)
                    return "Z2xD8: parameter map does not recover a^2";
                return std::nullopt;
            }
            case 2: {  // D12 family + parameter recovery
                Rational a;
                do {
                    a = Rational(rng.int_in(-30, 30), rng.int_in(1, 3));
                } while (a.is_zero() || a.abs() == Rational(2));
                StratumSample s = stratum_sample(AutGroupLabel::D12, {a});
                ModuliPoint mp = moduli_point(shioda_invariants(s.octavic));
                if (mp.branch != ModuliBranch::T) return "D12: expected T branch";
                auto cls = classify_moduli(mp);
                if (cls.label != AutGroupLabel::D12 || cls.certainty != Certainty::exact)
                    return "D12: moduli classification " + group_name(cls.label);
                if (d12_parameter_from_t4(mp.values[3]) != a * a)
                    return "D12: parameter map does not recover a^2";
                return std::nullopt;
            }
            case 3: {  // Z4 family: necessary conditions
                while (true) {
                    Rational a = rng.rational(6, 2), b = rng.rational(6, 2);
                    std::optional<StratumSample> s;
                    try {
                        s = stratum_sample(AutGroupLabel::Z4, {a, b});
                    } catch (const precondition_error&) {
                        continue;
                    }
                    auto S = shioda_invariants(s->octavic);
                    if (!S[3].is_zero() || !S[5].is_zero() || !S[7].is_zero())
                        return "Z4: J3 = J5 = J7 = 0 fails on a family member";
                    auto cls = classify_moduli(moduli_point(S));
                    if (cls.label == AutGroupLabel::Z2xZ4 || cls.label == AutGroupLabel::U6 ||
                        cls.label == AutGroupLabel::V8)
                        continue;  // deeper stratum hit; excluded parameter
                    if (cls.label != AutGroupLabel::Z4 ||
                        cls.certainty != Certainty::necessary_conditions_only)
                        return "Z4: classification " + group_name(cls.label);
                    return std::nullopt;
                }
            }
            case 4: {  // Z2xZ4 family: i-relations, exact classification
                Rational a;
                do {
                    a = Rational(rng.int_in(-30, 30), rng.int_in(1, 3));
                } while (a.is_zero() || a.abs() == Rational(2));
                StratumSample s = stratum_sample(AutGroupLabel::Z2xZ4, {a});
                auto S = shioda_invariants(s.octavic);
                if (!S[3].is_zero() || !S[5].is_zero() || !S[7].is_zero())
                    return "Z2xZ4: J3 = J5 = J7 = 0 fails";
                ModuliPoint mp = moduli_point(S);
                if (mp.branch != ModuliBranch::I) return "Z2xZ4: expected I branch";
                auto cls = classify_moduli(mp);
                if (cls.label != AutGroupLabel::Z2xZ4 || cls.certainty != Certainty::exact)
                    return "Z2xZ4: classification " + group_name(cls.label);
                return std::nullopt;
            }
            default: {  // D12 lambda-parametrized s-points + mixed-branch Z2xZ4
                if (idx % 2 == 0) {
                    Rational lam;
                    do {
                        lam = Rational(rng.int_in(-9, 9), rng.int_in(1, 4));
                    } while (lam.is_zero() || lam.abs() == Rational(1));
                    Rational f1 = Rational(5) - Rational(9) * lam;
                    Rational f2 = Rational(5) * lam - Rational(9);
                    Rational s2 = f1 * f2 / lam;
                    Rational s3 = Rational(3) * (lam + 1) * (f1.pow(2) + f2.pow(2) / lam) / lam;
                    Rational s4 = f1.pow(4) / lam + f2.pow(4) / lam.pow(3);
                    if (dihedral_discriminant(s2, s3, s4).is_zero()) return std::nullopt;
                    auto cls = classify_dihedral(DihedralPoint::generic(s2, s3, s4));
                    if (cls.label != AutGroupLabel::D12)
                        return "D12 s-point: classification " + group_name(cls.label);
                    return std::nullopt;
                }
                // a = u(1+i), c = u(i-1): a^2+c^2 = 0, mixed branch, Thm-4(iii) locus
                Rational u = rng.nonzero_rational(6, 3), b = rng.nonzero_rational(6, 3);
                QuadExt qa(u, u, Rational(-1));
                QuadExt qc(-u, u, Rational(-1));
                DihedralPoint p = dihedral_invariants(qa, QuadExt(b), qc);
                if (p.branch != DihedralBranch::Mixed) return "mixed branch not reached";
                if (p.s2() != Rational(-2) * u * u || p.s4() != Rational(-8) * u.pow(4))
                    return "mixed-branch invariants unexpected";
                auto cls = classify_dihedral(p);
                if (cls.label != AutGroupLabel::Z2xZ4 || cls.certainty != Certainty::exact)
                    return "mixed point: classification " + group_name(cls.label);
                return std::nullopt;
            }
        }
    });
    res.notes.push_back("per-family samples: " + std::to_string(opt.samples));
    return res;
}

inline std::vector<std::string> verify_suite_names() {
    return {"bridge", "discriminant", "weights", "loci", "jinv", "roundtrip"};
}

inline SuiteResult run_verify_suite(const std::string& name, const SuiteOptions& opt) {
    if (name == "bridge") return verify_bridge(opt);
    if (name == "discriminant") return verify_discriminant(opt);
    if (name == "weights") return verify_weights(opt);
    if (name == "loci") return verify_loci(opt);
    if (name == "jinv") return verify_jinv(opt);
    if (name == "roundtrip") return verify_roundtrip(opt);
    throw parse_error("unknown verify suite '" + name + "'");
}

}  // namespace g3hyp
