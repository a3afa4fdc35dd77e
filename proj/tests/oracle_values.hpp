#pragma once

// Frozen output of tests/oracles/reference_values.py (mpmath, 60+ digits).
namespace oracle {

inline constexpr double gamma_0_75 = 1.2254167024651776451;
inline constexpr double rgamma_0_75 = 0.81604893909826298108;
inline constexpr double rgamma_m0_5 = -0.28209479177387814347;
inline constexpr double erf_1 = 0.84270079294971486934;

inline constexpr double wright_m2_m025_1 = 0.16285047571988361059;
inline constexpr double wright_m30_m025_1 = 8.8410714633546741276e-21;
inline constexpr double wright_m6_m01_1 = 0.0028481986842293754249;
inline constexpr double wright_3_05_1 = 14.781124457968376106;
inline constexpr double wright_m15_07_03 = -0.29668250002654616905;
inline constexpr double mainardi_025_1 = 0.38333541657068353578;
inline constexpr double mainardi_025_20 = 1.9429889447659160479e-12;
inline constexpr double mainardi_04_15 = 4.7378823110319852716e-14;
inline constexpr double one_minus_wright_1_a05 = 0.57857467196620161567;
inline constexpr double one_minus_wright_5_a03 = 0.99235159972178445796;

// W(-10, -alpha/2, 1): kernel mass beyond similarity radius 10.
inline constexpr double tail_10_a02 = 0.000046515448580162888915;
inline constexpr double tail_10_a03 = 0.0000339885028655285289;
inline constexpr double tail_10_a05 = 8.968176949299821112e-6;
inline constexpr double tail_10_a08 = 4.2637047590925553321e-8;
inline constexpr double tail_10_a09 = 8.8868211697256322886e-10;

// (alpha, lambda, B, C, k) = (0.5, 1, 1, 0, 1) and (alpha, lambda, q, C, k) = (0.5, 1, 1, 0, 1).
inline constexpr double st1_rhs = 1.351956480134569458;
inline constexpr double st1_xi = 0.95629765854388461134;
inline constexpr double st2_rhs = 1.6567100517629325531;
inline constexpr double st2_mu = 0.76607417305434009501;
inline constexpr double equivalent_B = 0.58806840889670939851;

inline constexpr double st1_xi_a07 = 1.045790633775678652;
inline constexpr double st1_xi_a09 = 1.164985818832278686;
inline constexpr double st1_xi_a099 = 1.2320521128354848737;
inline constexpr double st1_xi_a0999 = 1.2393120273476438908;

inline constexpr double classical_xi = 1.240125266627190991;
inline constexpr double classical_mu = 1.3058372808384094311;
inline constexpr double H_1_classical = 1.1845930729386531513;
inline constexpr double J_1_classical = 2.2758757944687472355;

}  // namespace oracle
