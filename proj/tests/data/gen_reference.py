"""Regenerates tests/reference_values.hpp with mpmath at 50 digits."""
import mpmath as mp

mp.mp.dps = 50


def fmt(v):
    return mp.nstr(v, 20, min_fixed=-1, max_fixed=-1)


def K(s, a):
    return 1 / (a + s) + mp.beta(a, s + 1)


def A(s, a):
    return mp.quad(lambda t: abs((1 - t) ** a - t ** a) * t ** s, [0, 0.5, 1])


def main():
    out = ["#pragma once", "", "// Generated by tests/data/gen_reference.py (mpmath, 50 digits).", "",
           "#include <array>", "", "namespace ref {", ""]

    out.append("struct Gamma { double x, value; };")
    xs = ["0.001", "0.1", "0.5", "1.5", "2.5", "3.7", "10.3", "25.5", "100.5", "170.5"]
    out.append("inline constexpr std::array<Gamma, %d> gamma_values{{" % len(xs))
    for x in xs:
        out.append("    {%s, %s}," % (x, fmt(mp.gamma(mp.mpf(x)))))
    out.append("}};\n")

    out.append("struct Beta { double p, q, value; };")
    pq = [("0.5", "0.5"), ("2", "3"), ("0.1", "4"), ("7.5", "1.2"), ("0.25", "0.75"), ("30", "40")]
    out.append("inline constexpr std::array<Beta, %d> beta_values{{" % len(pq))
    for p, q in pq:
        out.append("    {%s, %s, %s}," % (p, q, fmt(mp.beta(mp.mpf(p), mp.mpf(q)))))
    out.append("}};\n")

    out.append("struct IncBeta { double x, p, q, value; };")
    cases = [("0.3", "0.5", "0.5"), ("0.5", "2", "3"), ("0.9", "0.1", "4"), ("0.25", "7.5", "1.2"),
             ("0.5", "0.25", "0.75"), ("0.999", "3", "0.2"), ("0.01", "1.3", "2.2"),
             ("0.7", "12", "9"), ("0.5", "1.5", "2.5"), ("0.2", "0.05", "0.05")]
    out.append("inline constexpr std::array<IncBeta, %d> inc_beta_values{{" % len(cases))
    for x, p, q in cases:
        v = mp.betainc(mp.mpf(p), mp.mpf(q), 0, mp.mpf(x))
        out.append("    {%s, %s, %s, %s}," % (x, p, q, fmt(v)))
    out.append("}};\n")

    # Left RL integral of exp from 0: e^x * P(alpha, x).
    out.append("struct RlExp { double alpha, x, value; };")
    rl = [("0.3", "1.5"), ("1.7", "1.5"), ("0.5", "0.2"), ("2.5", "3")]
    out.append("inline constexpr std::array<RlExp, %d> rl_left_exp{{" % len(rl))
    for a, x in rl:
        a_, x_ = mp.mpf(a), mp.mpf(x)
        v = mp.e ** x_ * mp.gammainc(a_, 0, x_, regularized=True)
        out.append("    {%s, %s, %s}," % (a, x, fmt(v)))
    out.append("}};\n")

    # Right RL integral of sqrt(t) with base point b = 1.
    out.append("struct RlSqrt { double alpha, x, value; };")
    rr = [("0.6", "0.2"), ("0.25", "0.5"), ("2", "0")]
    out.append("inline constexpr std::array<RlSqrt, %d> rl_right_sqrt{{" % len(rr))
    for a, x in rr:
        a_, x_ = mp.mpf(a), mp.mpf(x)
        v = mp.quad(lambda t: (t - x_) ** (a_ - 1) * mp.sqrt(t), [x_, 1]) / mp.gamma(a_)
        out.append("    {%s, %s, %s}," % (a, x, fmt(v)))
    out.append("}};\n")

    out.append("struct Constant { double s, alpha, value; };")
    sa = [("0.25", "0.5"), ("0.5", "1"), ("0.9", "2"), ("1", "3"), ("0.1", "0.25")]
    out.append("inline constexpr std::array<Constant, %d> weight_constant{{" % len(sa))
    for s, a in sa:
        out.append("    {%s, %s, %s}," % (s, a, fmt(A(mp.mpf(s), mp.mpf(a)))))
    out.append("}};\n")
    out.append("inline constexpr std::array<Constant, %d> sconvex_rhs_factor{{" % len(sa))
    for s, a in sa:
        out.append("    {%s, %s, %s}," % (s, a, fmt(K(mp.mpf(s), mp.mpf(a)))))
    out.append("}};\n")

    out.append("}  // namespace ref")
    with open("tests/reference_values.hpp", "w") as fh:
        fh.write("\n".join(out) + "\n")


if __name__ == "__main__":
    main()
