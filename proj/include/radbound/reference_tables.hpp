#pragma once

#include <array>
#include <optional>
#include <vector>

namespace radbound::reference {

// Printed values the reproduction targets are compared against.

struct NuclearRef {
    double A;
    double minus_E_ex;  // MeV
    double minus_E_H;   // MeV
    double ratio;
};

inline const std::vector<NuclearRef>& nuclear_rows()
{
    static const std::vector<NuclearRef> rows = {
        {1, 0.30, 0.26, 2.11},   {5, 0.14, 0.11, 2.20},    {10, 0.11, 0.087, 2.23},
        {15, 0.10, 0.075, 2.25}, {20, 0.097, 0.067, 2.27}, {25, 0.089, 0.062, 2.28},
        {50, 0.069, 0.047, 2.30}, {100, 0.053, 0.035, 2.32},
    };
    return rows;
}

/// One row of a -E<r^2> table: strength, exact value and the printed limits.
/// Missing columns are empty.
struct MsrRef {
    double g;
    double exact;
    std::optional<double> simple_upper;
    std::optional<double> main_upper;
    std::optional<double> main_lower;
    std::optional<double> nodeless_upper;
};

enum class MsrTable { rational_s = 2, rational_p = 3, yukawa_s = 4, yukawa_p = 5 };

inline const std::vector<MsrRef>& msr_rows(MsrTable t)
{
    static const std::vector<MsrRef> rational_s = {
        {1.35, 0.51418, 1.7143, 1.0063, 0.5, 1.1549}, {1.4, 0.55325, 1.7407, 1.025, 0.5, 1.1825},
        {1.5, 0.61348, 1.7937, 1.0625, 0.5, 1.2460},  {1.75, 0.74037, 1.9259, 1.1563, 0.5, 1.4592},
        {2, 0.85531, 2.0582, 1.25, 0.5, 1.7623},      {3, 1.26746, 2.5873, 1.625, 0.5, 4.1773},
        {4, 1.63531, 3.1164, 2, 0.5, 9.2480},         {5, 1.97341, 3.6455, 2.375, 0.5, 17.949},
    };
    static const std::vector<MsrRef> rational_p = {
        {6.945, 0.06045, 2.6746, 1.771, {}, 46.942}, {6.95, 0.09321, 2.6773, 1.7729, {}, 47.045},
        {7, 0.23641, 2.7037, 1.7917, {}, 48.142},    {7.5, 0.74323, 2.9683, 1.9792, {}, 59.982},
        {8, 1.0652, 3.2328, 2.1667, {}, 73.583},     {9, 1.5923, 3.7619, 2.5417, {}, 106.55},
        {10, 2.0529, 4.291, 2.9167, {}, 148.03},
    };
    static const std::vector<MsrRef> yukawa_s = {
        {1.7, 0.50948, 1.6254, 0.92778, 0.49575, {}}, {1.75, 0.53314, 1.6438, 0.94036, 0.49563, {}},
        {1.8, 0.55699, 1.6622, 0.95294, 0.4955, {}},  {1.9, 0.60473, 1.699, 0.97810, 0.49525, {}},
        {2, 0.65199, 1.7358, 1.0033, 0.495, {}},      {3, 1.0558, 2.1036, 1.2549, 0.4925, {}},
        {4, 1.3429, 2.4715, 1.5065, 0.49, {}},        {5, 1.55389, 2.8394, 1.7582, 0.4875, {}},
    };
    static const std::vector<MsrRef> yukawa_p = {
        {9.085, 0.03585, 2.3422, 1.4528, {}, {}}, {9.1, 0.092294, 2.3477, 1.4565, {}, {}},
        {9.5, 0.53225, 2.4949, 1.5572, {}, {}},   {10, 0.85248, 2.6788, 1.683, {}, {}},
        {11, 1.3309, 3.0467, 1.9346, {}, {}},     {12, 1.7085, 3.4146, 2.1863, {}, {}},
        {13, 2.0267, 3.7824, 2.4379, {}, {}},     {14, 2.3031, 4.1503, 2.6895, {}, {}},
        {15, 2.5476, 4.5182, 2.9412, {}, {}},
    };
    switch (t) {
    case MsrTable::rational_s: return rational_s;
    case MsrTable::rational_p: return rational_p;
    case MsrTable::yukawa_s: return yukawa_s;
    case MsrTable::yukawa_p: return yukawa_p;
    }
    return rational_s;
}

/// Strength of the first row in each table sits just above a binding threshold.
inline double near_threshold_g(MsrTable t)
{
    switch (t) {
    case MsrTable::rational_s: return 1.35;
    case MsrTable::rational_p: return 6.945;
    case MsrTable::yukawa_p: return 9.085;
    case MsrTable::yukawa_s: break;
    }
    return -1.0;
}

// <r^2>^{1/2} / r0 at E = E_H for 1/(1 + x^n), n = 5, 10, 20, 50, 100.
inline constexpr std::array<double, 5> ratio_list_n = {5, 10, 20, 50, 100};
inline constexpr std::array<double, 5> ratio_list_ground = {2.44, 2.47, 2.44, 2.41, 2.40};
inline constexpr std::array<double, 5> ratio_list_excited = {2.29, 2.38, 2.42, 2.40, 2.40};

// E_H(N=1) / E_H(N=2) for exp(-x^n), n = 1, 2, 5.
inline constexpr std::array<double, 3> exp_ratio_n = {1, 2, 5};
inline constexpr std::array<double, 3> exp_ratio = {2.15, 1.35, 1.12};

// E_H(N=1) / E_H(N=2) for 1/(1 + x^n), n = 4, 6, 10, as printed.
inline constexpr std::array<double, 3> s_ratio_n = {4, 6, 10};
inline constexpr std::array<double, 3> s_ratio = {4, 2, 1.41};

inline constexpr double helium_E_H_ueV = -0.82;
inline constexpr double helium_lj12_6_E_H_ueV = -0.89;

inline constexpr double h_at_1 = 0.16;
inline constexpr double h_at_225 = 0.55;

struct FitRef {
    double sigma;
    double prefactor;
    double exponent;
};
inline constexpr std::array<FitRef, 2> nuclear_fits = {{{2.0, 0.22, -0.40}, {1.5, 0.25, -0.50}}};

}  // namespace radbound::reference
