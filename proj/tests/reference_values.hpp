// Auto-generated by tests/tools/gen_reference_values.py -- do not edit.
// Independent high-precision reference values (mpmath dps=100, sympy
// exact root isolation). Regenerate with the script if needed.
#pragma once

namespace refvals {

// (1/242)^(23/22) = exp((23/22) * ln(1/242))
inline const char* const kPowRat_1_242__23_22 = "0.00321980366293876342011497815377880433696121590618660614943930";

// log base 3 of 88/21
inline const char* const kLogRatio_88_21_base3 = "1.30420385019708813227963345067775376837524711100234216448027";

// alpha = ln r / (ln s + ln(r/(1-eps))) at k=1, r=4, s=3, eps=1/22
inline const char* const kAlpha_k1_r4_s3_e1_22 = "0.547633624965509360589375260405964104677836746504445825255100";

// beta = ln s / ((k+eps) ln(rs/(1-eps))) at k=1, r=4, s=3, eps=1/22
inline const char* const kBeta_k1_r4_s3_e1_22 = "0.415120276380329588749489875495353182956935703472622424867846";

// ln(rs)/ln(rs/(1-eps)) at r=4, s=3, eps=1/22
inline const char* const kDimA_k1_r4_s3_e1_22 = "0.981623004817672112463841948423833341405542254680369269435122";

// eps->0 limit of beta at k=1, r=4, s=3: 1/(k(1+log_s r)) = ln3/ln12
inline const char* const kBetaLimit_k1_r4_s3 = "0.442114108697740313617911837924228793790411324807053864054608";

// alpha(r,s) = log_s r/(1+log_s r) at r=3, s=2
inline const char* const kAlphaRS_3_2 = "0.613147192765458413129753861532179123534858140542896571610505";

// eps * ln(rs/(1-eps)) at r=4, s=3, eps=1/22 (decay slope of ln(a_{n-1}/d_n^k))
inline const char* const kLogRatioSlope_k1_r4_s3_e1_22 = "0.115064848428313325782194872677112694291414660338014624960055";

// sup over [0,1] of |phi^(2)| for the k=2 kernel (exact root isolation)
inline const char* const kKernelSup_k2 = "5.77350269189625764509148780501957455647601751270126876018602";

// sup over [0,1] of |phi^(3)| for the k=3 kernel (exact root isolation)
inline const char* const kKernelSup_k3 = "52.5000000000000000000000000000000000000000000000000000000000";

// sup over [0,1] of |phi^(4)| for the k=4 kernel (exact root isolation)
inline const char* const kKernelSup_k4 = "622.532735505424155699629437652867083310986197239408203580554";

}  // namespace refvals
