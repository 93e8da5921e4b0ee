/**
 * @file strata.hpp
 * @brief Automorphism-group stratification: family generators per group,
 *        exact locus membership from dihedral invariants, and classification
 *        from absolute-invariant moduli points.
 */
#pragma once

#include <g3hyp/dihedral.hpp>

#include <optional>
#include <string>
#include <vector>

namespace g3hyp {

enum class AutGroupLabel {
    Z2_generic,
    V4,
    Z2cubed,
    Z4,
    Z2xZ4,
    Z2xD8,
    D12,
    Z2xS4,
    U6,
    V8,
    X7special
};

inline std::string group_name(AutGroupLabel g) {
    switch (g) {
        case AutGroupLabel::Z2_generic: return "Z2_generic";
        case AutGroupLabel::V4: return "V4";
        case AutGroupLabel::Z2cubed: return "Z2cubed";
        case AutGroupLabel::Z4: return "Z4";
        case AutGroupLabel::Z2xZ4: return "Z2xZ4";
        case AutGroupLabel::Z2xD8: return "Z2xD8";
        case AutGroupLabel::D12: return "D12";
        case AutGroupLabel::Z2xS4: return "Z2xS4";
        case AutGroupLabel::U6: return "U6";
        case AutGroupLabel::V8: return "V8";
        case AutGroupLabel::X7special: return "X7special";
    }
    return "?";
}

inline std::optional<AutGroupLabel> group_from_name(const std::string& s) {
    for (AutGroupLabel g :
         {AutGroupLabel::Z2_generic, AutGroupLabel::V4, AutGroupLabel::Z2cubed, AutGroupLabel::Z4,
          AutGroupLabel::Z2xZ4, AutGroupLabel::Z2xD8, AutGroupLabel::D12, AutGroupLabel::Z2xS4,
          AutGroupLabel::U6, AutGroupLabel::V8, AutGroupLabel::X7special})
        if (group_name(g) == s) return g;
    return std::nullopt;
}

enum class Certainty { exact, necessary_conditions_only };

inline std::string certainty_name(Certainty c) {
    return c == Certainty::exact ? "exact" : "necessary_conditions_only";
}

struct Witness {
    std::string relation;
    std::string ref;
    bool satisfied;
};

struct ClassificationResult {
    AutGroupLabel label;
    Certainty certainty;
    std::vector<Witness> witnesses;
};

/// A family member: always the octavic; the reduced-curve form when the
/// family lives in Y^2 = X^8 + aX^6 + bX^4 + cX^2 + 1 coordinates.
struct StratumSample {
    std::optional<ReducedCurve> curve;
    BinaryForm<Rational> octavic;
};

namespace detail {

inline std::vector<Rational> poly_mul(const std::vector<Rational>& a,
                                      const std::vector<Rational>& b) {
    std::vector<Rational> r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

}  // namespace detail

/**
 * Exact parametric member of a stratum family:
 *   Z2cubed  [a,b]  y^2 = (x^4+ax^2+1)(x^4+bx^2+1)
 *   Z4       [a,b]  y^2 = x(x^2-1)(x^4+ax^2+b)
 *   Z2xD8    [a]    y^2 = x^8+ax^4+1, a != +-2
 *   D12      [a]    y^2 = x(x^6+ax^3+1)
 *   Z2xZ4    [a]    y^2 = (x^4-1)(x^4+ax^2+1)
 *   V4       [a,b,c] the generic reduced curve
 *   Z2xS4 [] x^8+14x^4+1; U6 [] x(x^6-1); V8 [] x^8-1; X7special [] x^7-1
 */
inline StratumSample stratum_sample(AutGroupLabel label, const std::vector<Rational>& params) {
    auto need = [&](std::size_t n) {
        if (params.size() != n)
            throw precondition_error("stratum_sample: " + group_name(label) + " takes " +
                                     std::to_string(n) + " parameter(s)");
    };
    auto finish = [&](StratumSample s) {
        if (!is_squarefree(s.octavic))
            throw precondition_error("stratum_sample: degenerate parameters (octavic not squarefree)");
        return s;
    };
    auto from_ascending = [](const std::vector<Rational>& asc) {
        return BinaryForm<Rational>::from_univariate(8, asc);
    };
    switch (label) {
        case AutGroupLabel::Z2cubed: {
            need(2);
            ReducedCurve c{params[0] + params[1], params[0] * params[1] + Rational(2),
                           params[0] + params[1]};
            return finish({c, c.octavic()});
        }
        case AutGroupLabel::Z4: {
            need(2);
            auto poly = detail::poly_mul(
                detail::poly_mul({Rational(0), Rational(1)}, {Rational(-1), Rational(0), Rational(1)}),
                {params[1], Rational(0), params[0], Rational(0), Rational(1)});
            return finish({std::nullopt, from_ascending(poly)});
        }
        case AutGroupLabel::Z2xD8: {
            need(1);
            if (params[0] == Rational(2) || params[0] == Rational(-2))
                throw precondition_error("stratum_sample: Z2xD8 requires a != +-2");
            ReducedCurve c{Rational(0), params[0], Rational(0)};
            return finish({c, c.octavic()});
        }
        case AutGroupLabel::D12: {
            need(1);
            std::vector<Rational> asc(8, Rational(0));
            asc[1] = Rational(1);
            asc[4] = params[0];
            asc[7] = Rational(1);
            return finish({std::nullopt, from_ascending(asc)});
        }
        case AutGroupLabel::Z2xZ4: {
            need(1);
            auto poly = detail::poly_mul(
                {Rational(-1), Rational(0), Rational(0), Rational(0), Rational(1)},
                {Rational(1), Rational(0), params[0], Rational(0), Rational(1)});
            return finish({std::nullopt, from_ascending(poly)});
        }
        case AutGroupLabel::V4: {
            need(3);
            ReducedCurve c{params[0], params[1], params[2]};
            return finish({c, c.octavic()});
        }
        case AutGroupLabel::Z2xS4: {
            need(0);
            ReducedCurve c{Rational(0), Rational(14), Rational(0)};
            return finish({c, c.octavic()});
        }
        case AutGroupLabel::U6: {
            need(0);
            std::vector<Rational> asc(8, Rational(0));
            asc[1] = Rational(-1);
            asc[7] = Rational(1);
            return finish({std::nullopt, from_ascending(asc)});
        }
        case AutGroupLabel::V8: {
            need(0);
            std::vector<Rational> asc(9, Rational(0));
            asc[0] = Rational(-1);
            asc[8] = Rational(1);
            return finish({std::nullopt, from_ascending(asc)});
        }
        case AutGroupLabel::X7special: {
            need(0);
            std::vector<Rational> asc(8, Rational(0));
            asc[0] = Rational(-1);
            asc[7] = Rational(1);
            return finish({std::nullopt, from_ascending(asc)});
        }
        default:
            throw precondition_error("stratum_sample: no family form for " + group_name(label));
    }
}

namespace detail {

inline Rational d12_s3_of_s2(const Rational& s2) {
    return Rational(1, 75) * (Rational(9) * s2 - Rational(224)) * (s2 - Rational(196));
}

inline Rational d12_s4_of_s2(const Rational& s2) {
    return Rational(-9, 125) * s2.pow(3) + Rational(1962, 125) * s2.pow(2) -
           Rational(840448, 1125) * s2 + Rational(9834496, 1125);
}

}  // namespace detail

/**
 * Exact stratum from a dihedral point. On the generic/mixed branches the
 * cases are tried smallest stratum first: the D12 relations, then
 * s2 = s4 = 0, then s4 + 2 s2^2 = 0 with s3 = 0, then s4 - 2 s2^2 = 0,
 * else V4. A fully degenerate point w classifies inside the
 * Y^2 = X^8 + bX^4 + 1 family: w = 196 is the Z2xS4 curve, anything else
 * Z2xD8 (w = 4 is the singular member and is rejected).
 *
 * The curve with s2 = 196 on the D12 locus is the U6 curve (an excluded
 * family parameter); by the literal case split it still reports D12 here,
 * and only the moduli-point route resolves it to U6.
 */
inline ClassificationResult classify_dihedral(const DihedralPoint& p) {
    std::vector<Witness> wit;
    if (p.branch == DihedralBranch::Full) {
        const Rational& w = p.w();
        if (w == Rational(4))
            throw precondition_error("classify_dihedral: w = 4 is the singular family member");
        wit.push_back({"s2 = s4 = 0", "locus:Z2xD8", true});
        if (w == Rational(196)) {
            wit.push_back({"w = 196", "point:Z2xS4", true});
            return {AutGroupLabel::Z2xS4, Certainty::exact, wit};
        }
        wit.push_back({"w = 196", "point:Z2xS4", false});
        return {AutGroupLabel::Z2xD8, Certainty::exact, wit};
    }

    const Rational& s2 = p.s2();
    const Rational& s4 = p.s4();
    Rational s3 = (p.branch == DihedralBranch::Mixed) ? Rational(0) : p.s3();
    Rational L = s4 + Rational(2) * s2 * s2;
    Rational delta = dihedral_discriminant(s2, s3, s4);
    // Delta factors through the octavic discriminant times L^4, so it
    // vanishes identically on L = 0 even for smooth curves; only L != 0
    // vanishing signals a genuine singular point.
    if (delta.is_zero() && !L.is_zero())
        throw precondition_error("classify_dihedral: Delta = 0 (singular curve)");

    bool d12 = (s3 == detail::d12_s3_of_s2(s2)) && (s4 == detail::d12_s4_of_s2(s2));
    wit.push_back({"s3 = (9*s2-224)*(s2-196)/75 and s4 = -(9/125)*s2^3+(1962/125)*s2^2-(840448/1125)*s2+9834496/1125",
                   "locus:D12", d12});
    if (d12) return {AutGroupLabel::D12, Certainty::exact, wit};

    bool d8 = s2.is_zero() && s4.is_zero();
    wit.push_back({"s2 = s4 = 0", "locus:Z2xD8", d8});
    if (d8) return {AutGroupLabel::Z2xD8, Certainty::exact, wit};

    bool z2z4 = L.is_zero() && s3.is_zero();
    wit.push_back({"s4 + 2*s2^2 = 0 and s3 = 0", "locus:Z2xZ4", z2z4});
    if (z2z4) return {AutGroupLabel::Z2xZ4, Certainty::exact, wit};

    bool z23 = (s4 - Rational(2) * s2 * s2).is_zero();
    wit.push_back({"s4 - 2*s2^2 = 0", "locus:Z2cubed", z23});
    if (z23) return {AutGroupLabel::Z2cubed, Certainty::exact, wit};

    return {AutGroupLabel::V4, Certainty::exact, wit};
}

namespace detail {

inline bool z2xd8_t_relations(const std::vector<Rational>& t, std::vector<Witness>& wit) {
    const Rational &t1 = t[0], &t2 = t[1], &t3 = t[2], &t4 = t[3], &t5 = t[4], &t6 = t[5];
    bool r1 = t1 == Rational(-175, 288) * t4.pow(2) + Rational(125, 3456) * t4.pow(3) +
                        Rational(686, 27);
    bool r2 = t2 == t4 * t4;
    Rational den = Rational(5) * t4 - Rational(56);
    bool r3 = !den.is_zero() && den * t3 == Rational(-6) * t4 * t4;
    bool r4 = t5 == t4;
    bool r5 = t6 == Rational(49, 3) * t4.pow(3) + Rational(5, 12) * t4.pow(4);
    wit.push_back({"t1 = -(175/288)t4^2+(125/3456)t4^3+686/27", "locus:Z2xD8", r1});
    wit.push_back({"t2 = t4^2", "locus:Z2xD8", r2});
    wit.push_back({"t3 = -6 t4^2/(5 t4 - 56)", "locus:Z2xD8", r3});
    wit.push_back({"t5 = t4", "locus:Z2xD8", r4});
    wit.push_back({"t6 = (49/3)t4^3+(5/12)t4^4", "locus:Z2xD8", r5});
    return r1 && r2 && r3 && r4 && r5;
}

inline bool d12_t_relations(const std::vector<Rational>& t, std::vector<Witness>& wit) {
    const Rational &t1 = t[0], &t2 = t[1], &t3 = t[2], &t4 = t[3], &t5 = t[4], &t6 = t[5];
    bool r1 = t1 == Rational(686, 27) + Rational(125, 54) * t4.pow(3) -
                        Rational(175, 18) * t4.pow(2);
    bool r2 = t2 == t4 * t4;
    Rational den = Rational(5) * t4 - Rational(14);
    bool r3 = !den.is_zero() && den * t3 == t4 * t4;
    bool r4 = t5 == t4;
    bool r5 = t6 == Rational(65, 9) * t4.pow(4) - Rational(98, 9) * t4.pow(3);
    wit.push_back({"t1 = 686/27+(125/54)t4^3-(175/18)t4^2", "locus:D12", r1});
    wit.push_back({"t2 = t4^2", "locus:D12", r2});
    wit.push_back({"t3 = t4^2/(5 t4 - 14)", "locus:D12", r3});
    wit.push_back({"t5 = t4", "locus:D12", r4});
    wit.push_back({"t6 = (65/9)t4^4-(98/9)t4^3", "locus:D12", r5});
    return r1 && r2 && r3 && r4 && r5;
}

inline bool z2xz4_i_relations(const std::vector<Rational>& iv, std::vector<Witness>& wit) {
    bool zeros = iv[0].is_zero() && iv[2].is_zero() && iv[4].is_zero();
    Rational R1 = eval_table2(kZ2Z4Rel1Table, iv[1], iv[3]);
    Rational R2 = eval_table2(kZ2Z4Rel2Table, iv[1], iv[5]);
    wit.push_back({"i1 = i3 = i5 = 0", "locus:Z2xZ4", zeros});
    wit.push_back({"first i2,i4 locus relation", "locus:Z2xZ4", R1.is_zero()});
    wit.push_back({"second i2,i6 locus relation", "locus:Z2xZ4", R2.is_zero()});
    return zeros && R1.is_zero() && R2.is_zero();
}

}  // namespace detail

/**
 * Classification from a moduli point, smallest stratum first. Point vectors
 * are matched before one-dimensional relation sets; on the T branch the
 * Z2xD8 and D12 relation sets are mutually exclusive. The branch zero
 * pattern J3 = J5 = J7 = 0 without a deeper match reports Z4 with
 * necessary-conditions-only certainty, and anything else reports the generic
 * stratum with necessary-conditions-only certainty (full V4 membership is
 * not decidable from the closed-form relations carried here).
 */
inline ClassificationResult classify_moduli(const ModuliPoint& p) {
    std::vector<Witness> wit;
    if (p.branch == ModuliBranch::X7) {
        wit.push_back({"J2 = ... = J6 = 0", "point:X7", true});
        return {AutGroupLabel::X7special, Certainty::exact, wit};
    }
    if (p.branch == ModuliBranch::T) {
        const std::vector<Rational> s4_vec = {Rational(15435, 8),  Rational(784, 25),
                                              Rational(56, 25),    Rational(-28, 5),
                                              Rational(28, 5),     Rational(7760032, 125)};
        if (p.values == s4_vec) {
            wit.push_back({"published Z2xS4 tuple", "point:Z2xS4", true});
            return {AutGroupLabel::Z2xS4, Certainty::exact, wit};
        }
        if (detail::z2xd8_t_relations(p.values, wit))
            return {AutGroupLabel::Z2xD8, Certainty::exact, wit};
        if (detail::d12_t_relations(p.values, wit))
            return {AutGroupLabel::D12, Certainty::exact, wit};
        return {AutGroupLabel::Z2_generic, Certainty::necessary_conditions_only, wit};
    }
    if (p.branch == ModuliBranch::I) {
        const std::vector<Rational> s4_actual = {Rational(686, 27), Rational(0), Rational(0),
                                                 Rational(0),       Rational(0), Rational(0)};
        const std::vector<Rational> u6 = {Rational(0),         Rational(49, 25), Rational(0),
                                          Rational(-343, 125), Rational(0),      Rational(7203, 125)};
        const std::vector<Rational> v8 = {Rational(0),           Rational(784, 25),
                                          Rational(0),           Rational(-21952, 125),
                                          Rational(0),           Rational(-307328, 125)};
        if (p.values == s4_actual) {
            wit.push_back({"i-branch vector of x^8+14x^4+1", "point:Z2xS4", true});
            return {AutGroupLabel::Z2xS4, Certainty::exact, wit};
        }
        if (p.values == u6) {
            wit.push_back({"i-branch vector of x(x^6-1)", "point:U6", true});
            return {AutGroupLabel::U6, Certainty::exact, wit};
        }
        if (p.values == v8) {
            wit.push_back({"i-branch vector of x^8-1", "point:V8", true});
            return {AutGroupLabel::V8, Certainty::exact, wit};
        }
        if (detail::z2xz4_i_relations(p.values, wit))
            return {AutGroupLabel::Z2xZ4, Certainty::exact, wit};
        bool z4 = p.values[0].is_zero() && p.values[2].is_zero() && p.values[4].is_zero();
        wit.push_back({"J3 = J5 = J7 = 0", "locus:Z4-necessary", z4});
        if (z4) return {AutGroupLabel::Z4, Certainty::necessary_conditions_only, wit};
        return {AutGroupLabel::Z2_generic, Certainty::necessary_conditions_only, wit};
    }
    // deeper branches: only the Z4 zero pattern is decidable from the values
    bool z4 = false;
    if (p.branch == ModuliBranch::Jv)
        z4 = p.values[0].is_zero() && p.values[2].is_zero();  // J5, J7
    else if (p.branch == ModuliBranch::Tau)
        z4 = p.values[0].is_zero();  // J7
    wit.push_back({"J3 = J5 = J7 = 0", "locus:Z4-necessary", z4});
    if (z4) return {AutGroupLabel::Z4, Certainty::necessary_conditions_only, wit};
    return {AutGroupLabel::Z2_generic, Certainty::necessary_conditions_only, wit};
}

/// Machine-checkable relation descriptors for a stratum, where closed forms
/// exist; parameter-recovery maps included when available.
struct LocusRelations {
    AutGroupLabel label;
    std::vector<std::string> relations;
    std::optional<std::string> parameter_map;
    bool necessary_conditions_only = false;
};

inline LocusRelations locus_relations(AutGroupLabel label) {
    switch (label) {
        case AutGroupLabel::Z2xD8:
            return {label,
                    {"t1 = -(175/288)t4^2+(125/3456)t4^3+686/27", "t2 = t4^2",
                     "t3 = -6 t4^2/(5 t4 - 56)", "t5 = t4", "t6 = (49/3)t4^3+(5/12)t4^4",
                     "s2 = s4 = 0"},
                    "t = -28(5 t4 + 28)/(t4 - 4)"};
        case AutGroupLabel::D12:
            return {label,
                    {"t1 = 686/27+(125/54)t4^3-(175/18)t4^2", "t2 = t4^2",
                     "t3 = t4^2/(5 t4 - 14)", "t5 = t4", "t6 = (65/9)t4^4-(98/9)t4^3",
                     "s3 = (9 s2 - 224)(s2 - 196)/75",
                     "s4 = -(9/125)s2^3+(1962/125)s2^2-(840448/1125)s2+9834496/1125"},
                    "t = (7/2)(5 t4 + 7)/(t4 - 4)"};
        case AutGroupLabel::Z2xZ4:
            return {label,
                    {"i1 = i3 = i5 = 0", "quadratic i2,i4 locus relation",
                     "quadratic i2,i6 locus relation", "s4 + 2 s2^2 = 0 and s3 = 0"},
                    std::nullopt};
        case AutGroupLabel::Z2cubed:
            return {label, {"s4 - 2 s2^2 = 0"}, std::nullopt};
        case AutGroupLabel::Z4:
            return {label, {"J3 = J5 = J7 = 0"}, std::nullopt, true};
        case AutGroupLabel::Z2xS4:
            return {label, {"moduli point of x^8+14x^4+1", "w = 196"}, std::nullopt};
        case AutGroupLabel::U6:
            return {label, {"i-branch point (0, 49/25, 0, -343/125, 0, 7203/125)"}, std::nullopt};
        case AutGroupLabel::V8:
            return {label,
                    {"i-branch point (0, 784/25, 0, -21952/125, 0, -307328/125)"},
                    std::nullopt};
        case AutGroupLabel::X7special:
            return {label, {"J2 = ... = J6 = 0"}, std::nullopt};
        default:
            throw precondition_error("locus_relations: no closed-form relations for " +
                                     group_name(label));
    }
}

/// Parameter-recovery maps: squared family parameter from t4.
inline Rational z2xd8_parameter_from_t4(const Rational& t4) {
    if (t4 == Rational(4)) throw precondition_error("parameter map pole t4 = 4");
    return Rational(-28) * (Rational(5) * t4 + Rational(28)) / (t4 - Rational(4));
}

inline Rational d12_parameter_from_t4(const Rational& t4) {
    if (t4 == Rational(4)) throw precondition_error("parameter map pole t4 = 4");
    return Rational(7, 2) * (Rational(5) * t4 + Rational(7)) / (t4 - Rational(4));
}

}  // namespace g3hyp
