#include "quanto/expansion.hpp"

namespace quanto {

const std::vector<WeightRow>& weight_rows() {
    using F = Factor;
    static const std::vector<WeightRow> rows = {
    {'A', 1, {F::Lam2, F::LamLamY}},
    {'A', 2, {F::Lam2, F::LamLamYY}},
    {'A', 3, {F::Lam2, F::LamY2}},
    {'A', 4, {F::LamSig, F::LamYSig}},
    {'A', 5, {F::LamSig, F::LamYSigZ}},
    {'A', 6, {F::LamSig, F::LamSigZ}},
    {'A', 7, {F::LamSig, F::LamLamY}},
    {'A', 8, {F::Lam2, F::LamYSig}},
    {'A', 9, {F::Sig2, F::LamSigZ}},
    {'A', 10, {F::Lam2, F::LamYYSig}},
    {'A', 11, {F::Sig2, F::LamSigZZ}},
    {'B', 1, {F::Lam2, F::LamLamY, F::LamLamY}},
    {'B', 2, {F::Lam2, F::Lam2, F::LamLamYY}},
    {'B', 3, {F::Lam2, F::Lam2, F::LamY2}},
    {'B', 4, {F::LamSig, F::LamYSig, F::LamYSig}},
    {'B', 5, {F::LamSig, F::LamSigZ, F::LamYSig}},
    {'B', 6, {F::LamSig, F::LamSigZ, F::LamSigZ}},
    {'B', 7, {F::LamSig, F::LamSig, F::LamYSigZ}},
    {'B', 8, {F::LamSig, F::LamSig, F::LamYYSig}},
    {'B', 9, {F::LamSig, F::LamSig, F::LamSigZZ}},
    {'B', 10, {F::Lam2, F::LamYSig, F::LamYSig}},
    {'B', 11, {F::LamSig, F::LamLamY, F::LamYSig}},
    {'B', 12, {F::LamSig, F::LamYSig, F::LamLamY}},
    {'B', 13, {F::Sig2, F::LamSigZ, F::LamYSig}},
    {'B', 14, {F::LamSig, F::Sig2, F::LamYSigZ}},
    {'B', 15, {F::Sig2, F::LamSig, F::LamYSigZ}},
    {'B', 16, {F::Lam2, F::LamSig, F::LamYYSig}},
    {'B', 17, {F::LamSig, F::Lam2, F::LamYYSig}},
    {'B', 18, {F::LamSig, F::LamSig, F::LamLamYY}},
    {'B', 19, {F::LamSig, F::LamSig, F::LamY2}},
    {'B', 20, {F::LamSig, F::LamSigZ, F::LamLamY}},
    {'B', 21, {F::Sig2, F::LamSigZ, F::LamSigZ}},
    {'B', 22, {F::LamSig, F::Lam2, F::LamYSigZ}},
    {'B', 23, {F::Lam2, F::LamSig, F::LamYSigZ}},
    {'B', 24, {F::LamSig, F::Sig2, F::LamSigZZ}},
    {'B', 25, {F::Sig2, F::LamSig, F::LamSigZZ}},
    {'B', 26, {F::Lam2, F::LamLamY, F::LamYSig}},
    {'B', 27, {F::Lam2, F::LamYSig, F::LamLamY}},
    {'B', 28, {F::LamSig, F::LamLamY, F::LamLamY}},
    {'B', 29, {F::Lam2, F::Lam2, F::LamYYSig}},
    {'B', 30, {F::Lam2, F::LamSig, F::LamLamYY}},
    {'B', 31, {F::LamSig, F::Lam2, F::LamLamYY}},
    {'B', 32, {F::Sig2, F::LamSigZ, F::LamLamY}},
    {'B', 33, {F::Lam2, F::Sig2, F::LamYSigZ}},
    {'B', 34, {F::Sig2, F::Lam2, F::LamYSigZ}},
    {'B', 35, {F::Lam2, F::LamSig, F::LamY2}},
    {'B', 36, {F::Sig2, F::SigSigZ, F::LamSigZ}},
    {'B', 37, {F::Sig2, F::Sig2, F::LamSigZZ}},
    {'B', 38, {F::LamSig, F::LamLamY, F::LamSigZ}},
    {'B', 39, {F::Lam2, F::LamYSig, F::LamSigZ}},
    {'B', 40, {F::LamSig, F::LamYSig, F::LamSigZ}},
    {'B', 41, {F::LamSig, F::SigSigZ, F::LamSigZ}},
    {'B', 42, {F::LamSig, F::Lam2, F::LamY2}},
    {'C', 1, {F::LamSig, F::LamSig, F::LamSigZ, F::LamSigZ}},
    {'C', 2, {F::LamSig, F::LamSigZ, F::LamSig, F::LamSigZ}},
    {'C', 3, {F::LamSig, F::LamSig, F::LamYSig, F::LamSigZ}},
    {'C', 4, {F::LamSig, F::LamYSig, F::LamSig, F::LamSigZ}},
    {'C', 5, {F::Lam2, F::LamLamY, F::Sig2, F::LamSigZ}},
    {'C', 6, {F::Lam2, F::Sig2, F::LamLamY, F::LamSigZ}},
    {'C', 7, {F::Sig2, F::Lam2, F::LamLamY, F::LamSigZ}},
    {'C', 8, {F::Lam2, F::LamYSig, F::Sig2, F::LamSigZ}},
    {'C', 9, {F::LamSig, F::LamLamY, F::Sig2, F::LamSigZ}},
    {'C', 10, {F::Sig2, F::LamSigZ, F::Sig2, F::LamSigZ}},
    {'C', 11, {F::Sig2, F::Sig2, F::LamSigZ, F::LamSigZ}},
    {'C', 12, {F::Lam2, F::Sig2, F::LamYSig, F::LamSigZ}},
    {'C', 14, {F::Sig2, F::Lam2, F::LamYSig, F::LamSigZ}},
    {'C', 15, {F::LamSig, F::Sig2, F::LamLamY, F::LamSigZ}},
    {'C', 16, {F::Sig2, F::LamSig, F::LamLamY, F::LamSigZ}},
    {'C', 17, {F::Lam2, F::LamLamY, F::LamSig, F::LamSigZ}},
    {'C', 18, {F::LamSig, F::Lam2, F::LamLamY, F::LamSigZ}},
    {'C', 19, {F::Lam2, F::LamSig, F::LamLamY, F::LamSigZ}},
    {'C', 20, {F::LamSig, F::LamYSig, F::Sig2, F::LamSigZ}},
    {'C', 21, {F::LamSig, F::Sig2, F::LamYSig, F::LamSigZ}},
    {'C', 22, {F::Sig2, F::LamSig, F::LamYSig, F::LamSigZ}},
    {'C', 23, {F::LamSig, F::LamSigZ, F::Sig2, F::LamSigZ}},
    {'C', 24, {F::LamSig, F::Sig2, F::LamSigZ, F::LamSigZ}},
    {'C', 25, {F::Sig2, F::LamSig, F::LamSigZ, F::LamSigZ}},
    {'C', 26, {F::LamSig, F::Lam2, F::LamYSig, F::LamSigZ}},
    {'C', 27, {F::LamSig, F::LamSig, F::LamLamY, F::LamSigZ}},
    {'C', 28, {F::Lam2, F::LamSig, F::LamYSig, F::LamSigZ}},
    {'C', 29, {F::Sig2, F::LamSigZ, F::LamSig, F::LamSigZ}},
    {'C', 30, {F::Lam2, F::LamYSig, F::LamSig, F::LamSigZ}},
    {'C', 31, {F::LamSig, F::LamLamY, F::LamSig, F::LamSigZ}},
    {'C', 32, {F::Lam2, F::LamLamY, F::Lam2, F::LamLamY}},
    {'C', 33, {F::Lam2, F::Lam2, F::LamLamY, F::LamLamY}},
    {'C', 34, {F::LamSig, F::LamYSig, F::LamSig, F::LamLamY}},
    {'C', 35, {F::LamSig, F::LamSig, F::LamYSig, F::LamLamY}},
    {'C', 36, {F::LamSig, F::LamSigZ, F::LamSig, F::LamLamY}},
    {'C', 37, {F::LamSig, F::LamSig, F::LamSigZ, F::LamLamY}},
    {'C', 38, {F::Lam2, F::LamYSig, F::LamSig, F::LamLamY}},
    {'C', 39, {F::LamSig, F::LamLamY, F::LamSig, F::LamLamY}},
    {'C', 40, {F::LamSig, F::LamYSig, F::Lam2, F::LamLamY}},
    {'C', 41, {F::Sig2, F::LamSigZ, F::LamSig, F::LamLamY}},
    {'C', 42, {F::Lam2, F::LamSig, F::LamYSig, F::LamLamY}},
    {'C', 43, {F::LamSig, F::Lam2, F::LamYSig, F::LamLamY}},
    {'C', 44, {F::LamSig, F::LamSig, F::LamLamY, F::LamLamY}},
    {'C', 45, {F::LamSig, F::Sig2, F::LamSigZ, F::LamLamY}},
    {'C', 46, {F::Sig2, F::LamSig, F::LamSigZ, F::LamLamY}},
    {'C', 47, {F::LamSig, F::LamSigZ, F::Lam2, F::LamLamY}},
    {'C', 48, {F::LamSig, F::Lam2, F::LamSigZ, F::LamLamY}},
    {'C', 49, {F::Lam2, F::LamSig, F::LamSigZ, F::LamLamY}},
    {'C', 50, {F::Lam2, F::LamLamY, F::LamSig, F::LamLamY}},
    {'C', 51, {F::Lam2, F::LamYSig, F::Lam2, F::LamLamY}},
    {'C', 52, {F::LamSig, F::LamLamY, F::Lam2, F::LamLamY}},
    {'C', 53, {F::Sig2, F::LamSigZ, F::Lam2, F::LamLamY}},
    {'C', 54, {F::Lam2, F::Lam2, F::LamYSig, F::LamLamY}},
    {'C', 55, {F::Lam2, F::LamSig, F::LamLamY, F::LamLamY}},
    {'C', 56, {F::LamSig, F::Lam2, F::LamLamY, F::LamLamY}},
    {'C', 57, {F::Lam2, F::Sig2, F::LamSigZ, F::LamLamY}},
    {'C', 58, {F::Sig2, F::Lam2, F::LamSigZ, F::LamLamY}},
    {'C', 59, {F::LamSig, F::LamYSig, F::LamSig, F::LamYSig}},
    {'C', 60, {F::LamSig, F::LamSig, F::LamYSig, F::LamYSig}},
    {'C', 61, {F::LamSig, F::LamSigZ, F::LamSig, F::LamYSig}},
    {'C', 62, {F::LamSig, F::LamSig, F::LamSigZ, F::LamYSig}},
    {'C', 63, {F::Lam2, F::LamYSig, F::LamSig, F::LamYSig}},
    {'C', 64, {F::LamSig, F::LamLamY, F::LamSig, F::LamYSig}},
    {'C', 65, {F::LamSig, F::LamYSig, F::Lam2, F::LamYSig}},
    {'C', 66, {F::Sig2, F::LamSigZ, F::LamSig, F::LamYSig}},
    {'C', 67, {F::Lam2, F::LamSig, F::LamYSig, F::LamYSig}},
    {'C', 68, {F::LamSig, F::Lam2, F::LamYSig, F::LamYSig}},
    {'C', 69, {F::LamSig, F::LamSig, F::LamLamY, F::LamYSig}},
    {'C', 70, {F::LamSig, F::Sig2, F::LamSigZ, F::LamYSig}},
    {'C', 71, {F::Sig2, F::LamSig, F::LamSigZ, F::LamYSig}},
    {'C', 72, {F::LamSig, F::LamLamY, F::LamSig, F::LamYSig}},
    {'C', 73, {F::LamSig, F::LamSigZ, F::Lam2, F::LamYSig}},
    {'C', 74, {F::LamSig, F::Lam2, F::LamSigZ, F::LamYSig}},
    {'C', 75, {F::Lam2, F::LamSig, F::LamSigZ, F::LamYSig}},
    {'C', 76, {F::LamSig, F::LamSig, F::LamLamY, F::LamYSig}},
    {'C', 77, {F::Lam2, F::LamLamY, F::Lam2, F::LamYSig}},
    {'C', 78, {F::Lam2, F::Lam2, F::LamLamY, F::LamYSig}},
    {'C', 79, {F::Lam2, F::LamLamY, F::LamSig, F::LamYSig}},
    {'C', 80, {F::Lam2, F::LamYSig, F::Lam2, F::LamYSig}},
    {'C', 81, {F::LamSig, F::LamLamY, F::Lam2, F::LamYSig}},
    {'C', 82, {F::Sig2, F::LamSigZ, F::Lam2, F::LamYSig}},
    {'C', 83, {F::Lam2, F::Lam2, F::LamYSig, F::LamYSig}},
    {'C', 84, {F::Lam2, F::LamSig, F::LamLamY, F::LamYSig}},
    {'C', 85, {F::LamSig, F::Lam2, F::LamLamY, F::LamYSig}},
    {'C', 86, {F::Lam2, F::Sig2, F::LamSigZ, F::LamYSig}},
    {'C', 87, {F::Sig2, F::Lam2, F::LamSigZ, F::LamYSig}},
    };
    return rows;
}

}  // namespace quanto
