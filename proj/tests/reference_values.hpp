#pragma once

// Generated by tests/data/gen_reference.py (mpmath, 50 digits).

#include <array>

namespace ref {

struct Gamma { double x, value; };
inline constexpr std::array<Gamma, 10> gamma_values{{
    {0.001, 9.9942377248459546611e+2},
    {0.1, 9.5135076986687318363},
    {0.5, 1.7724538509055160273},
    {1.5, 8.8622692545275801365e-1},
    {2.5, 1.3293403881791370205},
    {3.7, 4.1706517837966031654},
    {10.3, 7.1643068906237524455e+5},
    {25.5, 3.0867705405286967828e+24},
    {100.5, 9.3209631040827166083e+156},
    {170.5, 5.5620924145599996107e+305},
}};

struct Beta { double p, q, value; };
inline constexpr std::array<Beta, 6> beta_values{{
    {0.5, 0.5, 3.1415926535897932385},
    {2, 3, 8.3333333333333333333e-2},
    {0.1, 4, 8.3787180561374109761},
    {7.5, 1.2, 8.055850902531696965e-2},
    {0.25, 0.75, 4.442882938158366247},
    {30, 40, 1.053942460379654569e-21},
}};

struct IncBeta { double x, p, q, value; };
inline constexpr std::array<IncBeta, 10> inc_beta_values{{
    {0.3, 0.5, 0.5, 1.1592794807274085998},
    {0.5, 2, 3, 5.7291666666666666667e-2},
    {0.9, 0.1, 4, 8.3786911007266937054},
    {0.25, 7.5, 1.2, 3.8708303676878006287e-6},
    {0.5, 0.25, 0.75, 3.4678919493596441503},
    {0.999, 3, 0.2, 2.5323541056859267756},
    {0.01, 1.3, 2.2, 1.9191239903993361789e-3},
    {0.7, 12, 9, 5.8656064745774231419e-7},
    {0.5, 1.5, 2.5, 1.3984143709134770537e-1},
    {0.2, 0.05, 0.05, 1.8639848368171319121e+1},
}};

struct RlExp { double alpha, x, value; };
inline constexpr std::array<RlExp, 4> rl_left_exp{{
    {0.3, 1.5, 4.29296754892707542},
    {1.7, 1.5, 2.4206614740439747196},
    {0.5, 0.2, 5.7761448602800738285e-1},
    {2.5, 3, 1.3934965530819172434e+1},
}};

struct RlSqrt { double alpha, x, value; };
inline constexpr std::array<RlSqrt, 3> rl_right_sqrt{{
    {0.6, 0.2, 6.7197308986898267471e-1},
    {0.25, 0.5, 7.146699409454894963e-1},
    {2, 0, 4.0e-1},
}};

struct Constant { double s, alpha, value; };
inline constexpr std::array<Constant, 5> weight_constant{{
    {0.25, 0.5, 3.0130493179520052085e-1},
    {0.5, 1, 3.2189514164974600651e-1},
    {0.9, 2, 2.6059650295247669367e-1},
    {1, 3, 2.1875e-1},
    {0.1, 0.25, 2.2622990929705308267e-1},
}};

inline constexpr std::array<Constant, 5> sconvex_rhs_factor{{
    {0.25, 0.5, 3.081371702861413207},
    {0.5, 1, 1.3333333333333333333},
    {0.9, 2, 5.2631578947368421053e-1},
    {1, 3, 3.3333333333333333333e-1},
    {0.1, 0.25, 6.7276710465926352314},
}};

}  // namespace ref
