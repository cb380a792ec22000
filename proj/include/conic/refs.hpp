#pragma once

// Reference strings used in certificates: each names the mathematical
// statement a check verifies, in the vocabulary of the library.

namespace conic::refs {

inline constexpr const char* kAxioms =
    "association scheme axioms: diagonal class, symmetric relations, constant triangle counts";
inline constexpr const char* kIdentities =
    "intersection identities: p^0_ij = delta_ij n_j, p^k_0j = delta_jk, p^k_ij = p^k_ji, "
    "n_k p^k_ij = n_j p^j_ik, sum_j p^k_ij = n_i";
inline constexpr const char* kPseudocyclic =
    "pseudocyclicity criterion: n_j = t and sum_k p^k_kj = t - 1 for all j >= 1";
inline constexpr const char* kDesign = "associate blocks {R_i(x)} form a 2-(v, t, t-1) design";
inline constexpr const char* kFusedEntry =
    "fused intersection numbers P^c_ab = sum over blocks of p^g_ef, independent of g";

inline constexpr const char* kExteriorLines =
    "exterior lines (1,x,y)^perp are exactly the pairs with Tr(xy) = 1; |E| = q(q-1)/2";
inline constexpr const char* kOrbitals =
    "orbital classes on exterior lines indexed by rho_hat values in T_0^*";
inline constexpr const char* kEllipticValency = "elliptic scheme valencies: n_a = q + 1";
inline constexpr const char* kFormula =
    "closed-form intersection numbers: 1 + 2[Tr(ac)=1] when a+b+c=0, else Artin-Schreier "
    "solution counts of v + ac/tau^2 over tau^2+tau = a+b+c";
inline constexpr const char* kDiagonalSum = "diagonal intersection sum: sum_a p^a_ab = q";
inline constexpr const char* kTwistSum =
    "Frobenius-twisted sum: sum_c p^b_{c,c^sigma} = q+1 for gcd(k,m)=1, m odd";
inline constexpr const char* kTwistedPairs =
    "twisted pair counts: N_{k,1,1} = q/2, N_{k,0,0} = q/2-3, N_{k,1,0} = q/2-1";
inline constexpr const char* kTwistedPairsComplement =
    "derived complement count: N_{k,0,1} = q/2 (total pairs 2q-4)";
inline constexpr const char* kFusionPseudo =
    "fusion pseudocyclicity: valencies m(q+1) and diagonal sums m(q+1)-1";

inline constexpr const char* kTraceSphereBijection =
    "H_{alpha,gamma} maps T_0 onto T_0 and T_1 onto T_{(r+(alpha+gamma)m) mod 2}, bijectively";
inline constexpr const char* kPermutationParity =
    "H_{alpha,gamma} permutes F_q iff r + (alpha+gamma)m is odd";
inline constexpr const char* kHIdentities =
    "pointwise identities H_00 = f + f/x + f^2/x^2 on F_q^* and H_10 = 1 + 1/x + 1/x^2 + H_00 "
    "on T_1";

inline constexpr const char* kCyclotomicScheme =
    "cyclotomic classes: (x,y) related by the coset of x - y; valencies f = (q-1)/e";
inline constexpr const char* kCyclotomicPseudo =
    "cyclotomic pseudocyclicity: sum_k p^k_kj = |C_0| - 1 = f - 1";
inline constexpr const char* kCyclotomicNumbers =
    "intersection numbers as cyclotomic numbers: p^k_ij = #{z in C_{i-k} : 1+z in C_{j-k}}";
inline constexpr const char* kGaussPeriods =
    "Gauss periods eta_i = sum over C_i of psi(beta); sum_i eta_i = -1";
inline constexpr const char* kCirculantSpectrum =
    "nontrivial eigenvalues of a cyclotomic class matrix are {f} plus Gauss periods";

inline constexpr const char* kEigenmatrix =
    "eigenmatrices: rows of P are common eigenvalues of the intersection matrices; "
    "Q = |X| P^{-1}; multiplicities are row 0 of Q";
inline constexpr const char* kSpectralPseudo =
    "spectral pseudocyclicity: all nontrivial multiplicities equal t";
inline constexpr const char* kBoseMesner =
    "intersection matrices represent the adjacency algebra: B_0 = I, pairwise commuting, "
    "column sums n_j";

inline constexpr const char* kLatinSquare =
    "Latin-square-type parameters (n^2, t(n-1), n+t^2-3t, t^2-t)";
inline constexpr const char* kTensorSrg =
    "tensor graph of a pseudocyclic scheme: (x,y) ~ (x',y') iff class(x,x') = class(y,y') != 0";
inline constexpr const char* kSrgCounts =
    "strong regularity: degree k, lambda common neighbors when adjacent, mu otherwise";
inline constexpr const char* kVErratum =
    "published vertex count reads q^2(q-1)^2/2; the tensor construction gives |X|^2 = "
    "q^2(q-1)^2/4";

}  // namespace conic::refs
