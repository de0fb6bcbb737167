//! Registered theorem ids with their statements and hypothesis gates.

/// One verifiable statement.
#[derive(Clone, Copy, Debug)]
pub struct TheoremInfo {
    pub id: &'static str,
    pub title: &'static str,
    pub statement: &'static str,
    pub hypotheses: &'static [&'static str],
    /// Corpus families that would exercise the hypotheses if a run is vacuous.
    pub extension_hint: &'static str,
    /// Fixed remarks copied into every report.
    pub notes: &'static [&'static str],
    /// Set when the literal statement is known to be false, with the reason.
    pub known_false: Option<&'static str>,
}

macro_rules! theorem {
    ($id:literal, $title:literal, $statement:literal, [$($h:literal),* $(,)?], $hint:literal, [$($n:literal),* $(,)?], $kf:expr) => {
        TheoremInfo {
            id: $id,
            title: $title,
            statement: $statement,
            hypotheses: &[$($h),*],
            extension_hint: $hint,
            notes: &[$($n),*],
            known_false: $kf,
        }
    };
}

pub const THEOREMS: &[TheoremInfo] = &[
    theorem!(
        "theo4",
        "colon-union decomposition",
        "If N is phi-classical 1-absorbing prime then for all nonunits a,b,c and m: (N:_R abcm) = (phi(N):_R abcm) u (N:_R abm) u (N:_R cm).",
        ["N is phi-classical 1-absorbing prime"],
        "any module with phi-classical submodules",
        [],
        None
    ),
    theorem!(
        "theo5",
        "eight equivalent conditions",
        "For proper N, conditions T5.2 to T5.8 each hold iff N is phi-classical 1-absorbing prime.",
        ["N proper"],
        "any module",
        [],
        None
    ),
    theorem!(
        "theo1",
        "quotient transfer",
        "For proper K <= N with phi_K(N/K) = (phi(N)+K)/K: (1) N phi-classical => N/K phi_K-classical; (2) K <= phi(N) and N/K phi_K-classical => N phi-classical; (3) phi(N) <= K and N phi-classical => N/K weakly classical; (4) phi(K) <= phi(N), K phi-classical, N/K weakly classical => N phi-classical; (5) N phi-classical and phi(N) classical 1-absorbing prime => N classical 1-absorbing prime.",
        ["K <= N proper", "part-specific gates as stated"],
        "modules with chains of submodules",
        [],
        None
    ),
    theorem!(
        "theo2",
        "colon ideals of elements",
        "(1) N phi-classical => (N:_R m) is psi-1-absorbing prime for every m not in N with (phi(N):_R m) <= psi((N:_R m)). (2) If every m not in N has psi((N:_R m)) <= (phi(N):_R m) and (N:_R m) psi-1-absorbing prime, then N is phi-classical.",
        ["psi ranges over the catalog on ideals", "part (2) requires both conditions for every m outside N"],
        "any module",
        ["Part (2) is read with the inclusion required for every m; the reading that only quantifies over m satisfying the inclusion is vacuous and false."],
        None
    ),
    theorem!(
        "prop2",
        "n-almost plus k-potent",
        "On a multiplication module, N n-almost classical 1-absorbing prime and k-potent classical 1-absorbing prime for some 2 <= k <= n imply N classical 1-absorbing prime.",
        ["M multiplication", "n in {2,3,4}", "2 <= k <= n"],
        "multiplication modules with nilpotent colon ideals",
        [],
        None
    ),
    theorem!(
        "prop3",
        "cyclic modules",
        "On a cyclic module, N is phi-1-absorbing prime iff N is phi-classical 1-absorbing prime.",
        ["M cyclic"],
        "cyclic modules",
        [],
        None
    ),
    theorem!(
        "theo3",
        "epimorphism transfer",
        "For an epimorphism f: M -> M': (1) N' phi'-classical and phi(f^-1(N')) = f^-1(phi'(N')) => f^-1(N') phi-classical; (2) N phi-classical, Ker f <= N and phi'(f(N)) = f(phi(N)) => f(N) phi'-classical.",
        ["f is a projection M -> M/K", "phi and phi' are the same catalog entry", "compatibility equalities hold"],
        "modules with many quotients",
        [],
        None
    ),
    theorem!(
        "theo6",
        "triple products in multiplication modules",
        "On a multiplication module, N is phi-classical iff: N1 N2 N3 m <= N and not <= phi(N) imply N1 N2 m <= N or N3 m <= N, for all submodules N1, N2, N3 and m.",
        ["M multiplication"],
        "multiplication modules",
        [],
        Some("Taking N1 = M reduces the condition to a two-factor absorbing property that classical 1-absorbing primes need not have: in Z_4 with N = 0 and phi empty, N1 = M, N2 = N3 = 2Z_4, m = 1 violates it although N is classical 1-absorbing prime. The converse argument only uses submodules aM with a nonunit; theo6-proper checks the form restricted to proper submodules on faithful modules, where aM is proper for every nonunit a.")
    ),
    theorem!(
        "theo6-proper",
        "triple products, proper factors",
        "On a faithful multiplication module, N is phi-classical iff the triple-product condition holds for all proper submodules N1, N2, N3.",
        ["M multiplication", "(0:_R M) = 0"],
        "multiplication modules",
        [],
        None
    ),
    theorem!(
        "theo7",
        "equivalent conditions under union collapse",
        "Where finite unions of the colon submodules collapse, conditions T7.2 to T7.8 each hold iff N is phi-classical 1-absorbing prime.",
        ["union-collapse guard on (N:_M abc) for all nonunits a,b,c"],
        "modules whose colon submodules form chains",
        ["The ring-wide union hypothesis fails for every finite ring, so it is replaced by a per-instance union-collapse guard."],
        None
    ),
    theorem!(
        "theo9",
        "four-fold products",
        "On a multiplication module under the union-collapse guard, N is phi-classical iff N1 N2 N3 N4 <= N and not <= phi(N) imply N1 N2 N4 <= N or N3 N4 <= N, for proper N1, N2, N3 and any N4.",
        ["M multiplication", "union-collapse guard"],
        "multiplication modules",
        [],
        Some("The converse sets N1 = aM for a nonunit a, which need not be proper. Over Z_12 the module Z_4 = Z_12/4Z_12 is cyclic, hence multiplication, and 3M = M; N = 0 with phi empty satisfies the condition on proper submodules while (2,3,2,1) shows N is not classical 1-absorbing prime. theo9-faithful checks faithful modules.")
    ),
    theorem!(
        "theo9-faithful",
        "four-fold products, faithful modules",
        "As theo9 on faithful multiplication modules.",
        ["M multiplication", "(0:_R M) = 0", "union-collapse guard"],
        "faithful multiplication modules",
        [],
        None
    ),
    theorem!(
        "theo10",
        "free tensor transfer",
        "For F = R^k (k in {1,2}) with F(x)phi(N) = phi(F(x)N): (1) N phi-classical and F(x)N != F(x)M => F(x)N phi-classical; (2) N phi-classical iff F(x)N phi-classical.",
        ["k in {1,2}", "|M|^k <= 64", "phi compatibility", "union-collapse guard on both sides"],
        "small modules",
        [],
        None
    ),
    theorem!(
        "theo12",
        "aM almost versus classical",
        "If aM != M and (0:_M a) <= aM, then aM is almost classical 1-absorbing prime iff it is classical 1-absorbing prime.",
        ["aM != M", "(0:_M a) <= aM"],
        "modules with proper aM",
        [],
        None
    ),
    theorem!(
        "theo13",
        "localization",
        "If (N:_R M) n S = empty and N is phi-classical, then S^-1 N is phi_S-classical in S^-1 M, with phi_S(S^-1 N) = S^-1 phi(N).",
        ["(N:_R M) n S = empty", "N phi-classical", "S generated by one element"],
        "rings with non-trivial multiplicative sets",
        ["S^-1 M is realized as M / tor_S(M) over R / tor_S(R).", "The value S^-1 phi(N) is computed from the given N."],
        None
    ),
    theorem!(
        "theo11",
        "quadruple-zero free triples",
        "If N is phi-classical, abcK <= N for nonunits a,b,c and a submodule K, and no (a,b,c,k) with k in K is a quadruple-zero, then abK <= N or cK <= N.",
        ["N phi-classical", "abcK <= N", "no quadruple-zero in K"],
        "any module",
        [],
        None
    ),
    theorem!(
        "cor5",
        "free quadruple-zero ideals",
        "If N is phi-classical, HIJK <= N for ideals H, I, J and a submodule K, and N is quadruple-zero free with respect to HIJK, then HIK <= N or JK <= N.",
        ["N phi-classical", "HIJK <= N", "free with respect to HIJK"],
        "any module",
        [],
        Some("Ideals containing units escape the quadruple-zero condition: in Z_8 with N = 4Z_8 and phi empty, H = R, I = J = 2Z_8, K = M satisfies every hypothesis while HIK = JK = 2Z_8 is not inside N. cor5-proper checks the statement for proper ideals.")
    ),
    theorem!(
        "cor5-proper",
        "free quadruple-zero ideals, proper",
        "As cor5 with H, I, J proper ideals.",
        ["N phi-classical", "H, I, J proper", "HIJK <= N", "free with respect to HIJK"],
        "any module",
        [],
        None
    ),
    theorem!(
        "theo14",
        "consequences of a quadruple-zero",
        "For a quadruple-zero (a,b,c,m) of a phi-classical N: (1) abcN <= phi(N); (2) ab(N:M)m <= phi(N); (4) if a,b not in (N:cm), then a(N:M)^2 m, b(N:M)^2 m, c(N:M)^2 m <= phi(N); (5) if a,b not in (N:cm), then (N:M)^3 m <= phi(N).",
        ["N phi-classical", "(a,b,c,m) a quadruple-zero"],
        "modules with weakly but not classical submodules",
        [],
        None
    ),
    theorem!(
        "theo14.3-a",
        "quadruple-zero, part 3 with m",
        "If a,b not in (N:cm) then ac(N:M)m <= phi(N) and bc(N:M)m <= phi(N).",
        ["N phi-classical", "(a,b,c,m) a quadruple-zero", "a,b not in (N:cm)"],
        "modules with weakly but not classical submodules",
        [],
        None
    ),
    theorem!(
        "theo14.3-b",
        "quadruple-zero, part 3 as written",
        "If a,b not in (N:cm) then ac(N:M)m <= phi(N) and bc(N:M)M <= phi(N).",
        ["N phi-classical", "(a,b,c,m) a quadruple-zero", "a,b not in (N:cm)"],
        "modules with weakly but not classical submodules",
        ["The second clause compares an ideal with a submodule; it is read as bc(N:M)M."],
        None
    ),
    theorem!(
        "theo15-a",
        "cube bound, a,b outside (N:M)",
        "If N is phi-classical but not classical 1-absorbing prime, a quadruple-zero exists; for each quadruple-zero with a,b not in (N:M), (N:M)^3 N <= phi(N).",
        ["N phi-classical", "N not classical 1-absorbing prime"],
        "modules with weakly but not classical submodules",
        [],
        Some("In Z_12 with N = 4Z_12 and phi zero, (2,3,2,1) is a quadruple-zero with 2,3 not in (N:M) = 4Z_12, yet (N:M)^3 N = N is not zero. The supporting lemma needs a,b not in (N:cm); theo15-b uses that hypothesis.")
    ),
    theorem!(
        "theo15-b",
        "cube bound, a,b outside (N:cm)",
        "If N is phi-classical but not classical 1-absorbing prime, a quadruple-zero exists; for each quadruple-zero with a,b not in (N:cm), (N:M)^3 N <= phi(N).",
        ["N phi-classical", "N not classical 1-absorbing prime"],
        "modules with weakly but not classical submodules",
        [],
        None
    ),
    theorem!(
        "cor6",
        "omega collapse",
        "If N is phi-classical with phi(N) <= (N:M)^4 N, then N is omega-classical 1-absorbing prime.",
        ["N phi-classical", "phi(N) <= (N:M)^4 N", "N not classical 1-absorbing prime"],
        "modules with weakly but not classical submodules",
        [],
        None
    ),
    theorem!(
        "cor7",
        "n-almost stabilization",
        "If N is n-almost classical (n >= 4) but not classical 1-absorbing prime, then (N:M)^3 N = (N:M)^(n-1) N.",
        ["n in {4,5,6}", "N n-almost classical", "N not classical 1-absorbing prime"],
        "modules with nilpotent colon ideals",
        [],
        None
    ),
    theorem!(
        "cor8",
        "fourth powers in multiplication modules",
        "On a multiplication module: (1) N phi-classical but not classical => N^4 <= phi(N); (2) N n-almost classical (n >= 4) but not classical => N^4 <= N^n.",
        ["M multiplication", "N not classical 1-absorbing prime"],
        "multiplication modules",
        ["The supporting argument cites a remark that is not stated anywhere; the corollary is tested as written."],
        Some("Part (1) inherits the unsupported cube bound. Without a quadruple-zero satisfying a,b not in (N:cm) the cube bound (N:M)^3 N <= phi(N) has no support, and it fails: in Z_12 with N = 4Z_12 and phi zero, N is weakly classical 1-absorbing prime, not classical, and (N:M)^3 N = N. cor8-b adds the hypothesis that some quadruple-zero has a,b not in (N:cm).")
    ),
    theorem!(
        "cor8-b",
        "fourth powers, supported cube bound",
        "As cor8 for N admitting a quadruple-zero (a,b,c,m) with a,b not in (N:cm).",
        ["M multiplication", "N not classical 1-absorbing prime", "a quadruple-zero with a,b not in (N:cm) exists"],
        "multiplication modules",
        [],
        None
    ),
    theorem!(
        "theo16",
        "radical equalities",
        "If N is phi-classical but not classical: (1) sqrt((N:M)) = sqrt((phi(N):M)); (2) on multiplication modules M-rad(N) = M-rad(phi(N)).",
        ["N phi-classical", "N not classical 1-absorbing prime"],
        "modules with weakly but not classical submodules",
        [],
        Some("The equality is derived from the cube bound. Without a quadruple-zero satisfying a,b not in (N:cm) the cube bound (N:M)^3 N <= phi(N) has no support, and it fails: in Z_12 with N = 4Z_12 and phi zero, N is weakly classical 1-absorbing prime, not classical, and (N:M)^3 N = N. Then sqrt((N:M)) = 2Z_12 while sqrt((phi(N):M)) = 6Z_12. theo16-b adds the hypothesis that some quadruple-zero has a,b not in (N:cm).")
    ),
    theorem!(
        "theo16-b",
        "radical equalities, supported cube bound",
        "As theo16 for N admitting a quadruple-zero (a,b,c,m) with a,b not in (N:cm).",
        ["N phi-classical", "N not classical 1-absorbing prime", "a quadruple-zero with a,b not in (N:cm) exists"],
        "modules with weakly but not classical submodules",
        [],
        None
    ),
    theorem!(
        "theo17",
        "sums",
        "For phi-classical N1, N2 that are not classical: (1) sqrt((N1:M)+(N2:M)) = sqrt((phi(N1):M)+(phi(N2):M)); (2) if N1+N2 != M, phi(N1) <= N2 and phi(N2) <= phi(N1+N2), then N1+N2 is phi-classical.",
        ["N1, N2 phi-classical", "N1, N2 not classical 1-absorbing prime"],
        "modules with several weakly but not classical submodules",
        ["Tested exactly as stated, without extra compatibility hypotheses."],
        Some("Part (1) rests on the radical equality for each summand, which fails for N = 4Z_12 in Z_12 with phi zero; with N1 = 0 and N2 = 4Z_12 the two radicals are 2Z_12 and 6Z_12. theo17-b adds the supported cube-bound hypothesis for N1 and N2.")
    ),
    theorem!(
        "theo17-b",
        "sums, supported cube bound",
        "As theo17 for N1, N2 each admitting a quadruple-zero with a,b not in (N:cm).",
        ["N1, N2 phi-classical", "N1, N2 not classical 1-absorbing prime", "a quadruple-zero with a,b not in (N_i:cm) exists for i = 1, 2"],
        "modules with several weakly but not classical submodules",
        [],
        None
    ),
    theorem!(
        "theo18",
        "products over a common ring",
        "For N = N1 x M2 in M1 x M2 over R with phi = psi1 x psi2: N is phi-classical iff N1 is psi1-classical and rstm1 in psi1(N1), rsm1 not in N1, tm1 not in N1 imply rst in (psi2(M2):_R M2).",
        ["M1, M2 over the same ring", "N1 proper"],
        "same-ring product modules",
        [],
        None
    ),
    theorem!(
        "theo19",
        "products over a product ring, psi2(M2) != M2",
        "Over R1 x R2 with N = N1 x M2 proper: N1 classical iff N classical iff N is (psi1 x psi2)-classical, where psi2(M2) != M2.",
        ["R = R1 x R2", "psi2(M2) != M2"],
        "product modules over product rings",
        [],
        Some("Nonunits of R1 x R2 may have a unit first coordinate. With R = Z_8 x Z_2, N = 4Z_8 x Z_2, a = (1,0), b = c = (2,1), m = (1,0): abcm = (4,0) lies in N while abm = cm = (2,0) do not, although 4Z_8 is classical 1-absorbing prime. The implication from N1 to N fails; the converse directions hold.")
    ),
    theorem!(
        "theo20",
        "products over a product ring, psi2(M2) = M2",
        "Over R1 x R2 with N = N1 x M2 proper and psi2(M2) = M2: N1 is psi1-classical iff N is (psi1 x psi2)-classical.",
        ["R = R1 x R2", "psi2(M2) = M2"],
        "product modules over product rings",
        [],
        Some("The same nonunit (1,0) breaks the implication from N1 to N: with R = Z_8 x Z_2, N1 = 4Z_8 and psi1 empty, the tuple a = (1,0), b = c = (2,1), m = (1,0) falsifies N while N1 is psi1-classical.")
    ),
    theorem!(
        "theo21",
        "proper products",
        "Over R1 x R2, if N1 x N2 (both proper) is (psi1 x psi2)-classical, then N1 is psi1-classical and N2 is psi2-classical.",
        ["R = R1 x R2", "N1, N2 proper", "N1 x N2 phi-classical"],
        "product modules over product rings",
        [],
        None
    ),
];

pub fn lookup(id: &str) -> Option<&'static TheoremInfo> {
    THEOREMS.iter().find(|t| t.id == id)
}

pub fn ids() -> impl Iterator<Item = &'static str> {
    THEOREMS.iter().map(|t| t.id)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique() {
        let mut v: Vec<_> = ids().collect();
        let n = v.len();
        v.sort();
        v.dedup();
        assert_eq!(v.len(), n);
    }

    #[test]
    fn lookup_finds_localization() {
        let t = lookup("theo13").unwrap();
        assert!(t.hypotheses.iter().any(|h| h.contains("(N:_R M) n S = empty")));
        assert!(lookup("theo99").is_none());
    }
}
