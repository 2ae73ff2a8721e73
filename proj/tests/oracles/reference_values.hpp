// Generated by reference_values.py. Do not edit.
#pragma once

namespace heatfcs::reference {

inline constexpr double kRabiFrequency = 0.200997512422413;
inline constexpr double kQuasienergy1 = -0.0904987562112097;
inline constexpr double kQuasienergy2 = 0.110498756211203;
inline constexpr double kDssP1 = 0.693215774697396;
inline constexpr double kDssHeatPower = 0.0284214488358116;
inline constexpr double kMean80 = 14.5777330395043;
inline constexpr double kVariance80 = 15.2565348055609;
inline constexpr double kThirdCumulant80 = 14.5790909026509;
inline constexpr double kMean700 = 127.555164095663;
inline constexpr double kVariance700 = 133.83428279693;
inline constexpr double kThirdCumulant700 = 126.534410682422;

struct ReferenceAtom { long n; int m; double w; };
inline constexpr ReferenceAtom kAtoms80[] = {
    {10, -1, 0.0104066631219692},
    {10, 0, 0.0306140668606215},
    {10, 1, 0.0104078148354954},
    {14, -1, 0.0212853157361907},
    {14, 0, 0.0573433452939456},
    {14, 1, 0.0212851144361309},
    {18, -1, 0.0149915225711954},
    {18, 0, 0.0383986947883086},
    {18, 1, 0.0149905393546802},
};
inline constexpr double kAtomTotal80 = 1;

} // namespace heatfcs::reference
