//! Factorization of polynomials over `Q` by Hensel lifting a modular
//! factorization and recombining (Zassenhaus).

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::modp;
use super::poly::PolyQ;
use super::zpoly::{self, ZPoly};

/// Irreducible factors of `f` over `Q` with multiplicities. Factors are
/// monic and sorted by degree, then coefficients.
pub fn factor_q(f: &PolyQ) -> Vec<(PolyQ, u32)> {
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    for (g, mult) in squarefree_decomposition(&f.monic()) {
        let gz = g.primitive_integer();
        for h in factor_squarefree_z(&gz) {
            out.push((PolyQ::from_bigints(&h).monic(), mult));
        }
    }
    out.sort_by(|a, b| a.0.degree().cmp(&b.0.degree()).then_with(|| a.0.coeffs().cmp(b.0.coeffs())));
    out
}

/// Yun's algorithm on a monic polynomial: pairs `(g_i, i)` with `g_i`
/// squarefree and pairwise coprime, `f = ∏ g_i^i`.
pub fn squarefree_decomposition(f: &PolyQ) -> Vec<(PolyQ, u32)> {
    let mut out = Vec::new();
    let d = f.derivative();
    let a0 = f.gcd(&d);
    let mut b = f.div_exact(&a0).unwrap();
    let mut c = d.div_exact(&a0).unwrap();
    let mut dd = &c - &b.derivative();
    let mut i = 1;
    while b.degree().unwrap_or(0) > 0 {
        let a = b.gcd(&dd);
        b = b.div_exact(&a).unwrap();
        c = dd.div_exact(&a).unwrap();
        dd = &c - &b.derivative();
        if a.degree().unwrap_or(0) > 0 {
            out.push((a.monic(), i));
        }
        i += 1;
    }
    out
}

const SMALL_PRIMES: [u64; 40] = [
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109,
    113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179,
];

fn candidate_primes() -> impl Iterator<Item = u64> {
    SMALL_PRIMES.into_iter().chain((181u64..).filter(|&n| is_small_prime(n)))
}

fn is_small_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Factors a primitive squarefree integer polynomial into primitive
/// irreducibles.
pub fn factor_squarefree_z(f: &[BigInt]) -> Vec<ZPoly> {
    let f = zpoly::primitive(f);
    let n = f.len() - 1;
    if n <= 1 {
        return vec![f];
    }
    if f[0].is_zero() {
        let rest: ZPoly = f[1..].to_vec();
        let mut out = vec![vec![BigInt::zero(), BigInt::one()]];
        out.extend(factor_squarefree_z(&rest));
        return out;
    }
    let lc = f[n].clone();

    // pick the prime giving the fewest modular factors among a few tries
    let mut best: Option<(u64, usize)> = None;
    let mut tried = 0;
    for q in candidate_primes() {
        if (&lc % BigInt::from(q)).is_zero() {
            continue;
        }
        let fq = zpoly::to_modp(&f, q);
        if fq.len() != f.len() || !modp::is_squarefree(&fq, q) {
            continue;
        }
        let count: usize = modp::ddf(&modp::monic(&fq, q), q).iter().map(|(d, g)| (g.len() - 1) / d).sum();
        if best.is_none_or(|(_, c)| count < c) {
            best = Some((q, count));
        }
        tried += 1;
        if count == 1 || tried >= 6 {
            break;
        }
    }
    let (q, count) = best.expect("a squarefree reduction always exists");
    if count == 1 {
        return vec![f];
    }
    let fq = modp::monic(&zpoly::to_modp(&f, q), q);
    let mut modular = modp::factor_squarefree(&fq, q, 0x5eed);
    modular.sort();

    // lifting bound
    let bound = lc.abs() * (BigInt::one() << n) * zpoly::norm2_ceil(&f) * 2;
    let qb = BigInt::from(q);
    let mut k = 1u32;
    let mut qk = qb.clone();
    while qk <= bound {
        qk *= &qb;
        k += 1;
    }
    let lc_inv = mod_inverse(&lc, &qk);
    let target = zpoly::reduce(&zpoly::scale(&f, &lc_inv), &qk);
    let lifted = hensel_lift(&target, &modular, q, k);
    recombine(f, lifted, &qk)
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let e = num_integer::Integer::extended_gcd(a, m);
    assert!(e.gcd.is_one() || e.gcd == -BigInt::one());
    num_integer::Integer::mod_floor(&(e.x * &e.gcd), m)
}

/// Lifts monic pairwise-coprime factors of `target mod q` to factors mod
/// `q^k` by recursive binary splitting.
fn hensel_lift(target: &[BigInt], factors: &[Vec<u64>], q: u64, k: u32) -> Vec<ZPoly> {
    if factors.len() == 1 {
        return vec![target.to_vec()];
    }
    let mid = factors.len() / 2;
    let prod = |fs: &[Vec<u64>]| fs.iter().fold(vec![1u64], |acc, g| modp::mul(&acc, g, q));
    let g0 = prod(&factors[..mid]);
    let h0 = prod(&factors[mid..]);
    let (g, h) = lift_pair(target, &g0, &h0, q, k);
    let mut out = hensel_lift(&g, &factors[..mid], q, k);
    out.extend(hensel_lift(&h, &factors[mid..], q, k));
    out
}

fn lift_pair(f: &[BigInt], g0: &[u64], h0: &[u64], q: u64, k: u32) -> (ZPoly, ZPoly) {
    let (d, s, t) = modp::xgcd(g0, h0, q);
    debug_assert_eq!(d, vec![1]);
    let qb = BigInt::from(q);
    let mut g = zpoly::from_modp(g0);
    let mut h = zpoly::from_modp(h0);
    let mut qj = qb.clone();
    for _ in 1..k {
        let diff = zpoly::sub(f, &zpoly::mul(&g, &h));
        let e: ZPoly = diff.iter().map(|c| c / &qj).collect();
        let eq = zpoly::to_modp(&e, q);
        let se = modp::mul(&s, &eq, q);
        let (quo, b) = modp::divrem(&se, h0, q);
        let a = modp::add(&modp::mul(&t, &eq, q), &modp::mul(&quo, g0, q), q);
        g = zpoly::add(&g, &zpoly::scale(&zpoly::from_modp(&a), &qj));
        h = zpoly::add(&h, &zpoly::scale(&zpoly::from_modp(&b), &qj));
        qj *= &qb;
    }
    (zpoly::reduce(&g, &qj), zpoly::reduce(&h, &qj))
}

fn recombine(mut f: ZPoly, mut lifted: Vec<ZPoly>, qk: &BigInt) -> Vec<ZPoly> {
    let mut out = Vec::new();
    let mut size = 1;
    while 2 * size <= lifted.len() {
        let mut found = false;
        for subset in Subsets::new(lifted.len(), size) {
            let lc = f.last().unwrap().clone();
            // cheap constant-term screen
            let c0 =
                subset.iter().fold(lc.clone(), |acc, &i| num_integer::Integer::mod_floor(&(acc * &lifted[i][0]), qk));
            let c0 = zpoly::sym_mod(&[c0], qk);
            let c0 = c0.first().cloned().unwrap_or_else(BigInt::zero);
            if c0.is_zero() || !(&(&lc * &f[0]) % &c0).is_zero() {
                continue;
            }
            let mut cand = vec![lc];
            for &i in &subset {
                cand = zpoly::reduce(&zpoly::mul(&cand, &lifted[i]), qk);
            }
            let cand = zpoly::primitive(&zpoly::sym_mod(&cand, qk));
            if let Some(quot) = zpoly::div_exact(&f, &cand) {
                out.push(cand);
                f = zpoly::primitive(&quot);
                let keep: Vec<ZPoly> =
                    lifted.iter().enumerate().filter(|(i, _)| !subset.contains(i)).map(|(_, g)| g.clone()).collect();
                lifted = keep;
                found = true;
                break;
            }
        }
        if !found {
            size += 1;
        }
    }
    if f.len() > 1 {
        out.push(f);
    }
    out
}

/// Lexicographic `k`-subsets of `0..n`.
struct Subsets {
    idx: Vec<usize>,
    n: usize,
    done: bool,
}

impl Subsets {
    fn new(n: usize, k: usize) -> Self {
        Subsets { idx: (0..k).collect(), n, done: k > n }
    }
}

impl Iterator for Subsets {
    type Item = Vec<usize>;
    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let cur = self.idx.clone();
        let k = self.idx.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < self.n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(cur)
    }
}

/// Degree of every irreducible factor, for quick checks.
pub fn factor_degrees(f: &PolyQ) -> Vec<usize> {
    factor_q(f).iter().flat_map(|(g, m)| std::iter::repeat_n(g.degree().unwrap(), *m as usize)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> PolyQ {
        PolyQ::from_ints(cs)
    }

    #[test]
    fn small_factorizations() {
        let f = &(&p(&[-1, 1]) * &p(&[1, 1])) * &p(&[2, 0, 1]);
        let fs = factor_q(&f);
        assert_eq!(fs.len(), 3);
        assert_eq!(fs[2].0, p(&[2, 0, 1]));
        let g = &p(&[-3, 2]).pow(2) * &p(&[1, 0, 0, 1, 1]);
        let gs = factor_q(&g);
        assert_eq!(gs.len(), 2);
        assert_eq!(gs[0].1, 2);
    }

    #[test]
    fn swinnerton_dyer_like() {
        // x^4 - 10x^2 + 1 is irreducible but splits into quadratics mod every prime
        let f = p(&[1, 0, -10, 0, 1]);
        assert_eq!(factor_degrees(&f), vec![4]);
        let g = &f * &p(&[-2, 0, 1]);
        assert_eq!(factor_degrees(&g), vec![2, 4]);
    }

    #[test]
    fn cyclotomic_product() {
        // x^12 - 1 = Φ1 Φ2 Φ3 Φ4 Φ6 Φ12
        let mut cs = vec![0i64; 13];
        cs[0] = -1;
        cs[12] = 1;
        assert_eq!(factor_degrees(&p(&cs)), vec![1, 1, 2, 2, 2, 4]);
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(40))]
        #[test]
        fn product_of_factors_recovers_input(a in proptest::collection::vec(-20i64..20, 2..5), b in proptest::collection::vec(-20i64..20, 2..5)) {
            let f = &p(&a) * &p(&b);
            if f.degree().unwrap_or(0) > 0 {
                let fs = factor_q(&f);
                let prod = fs.iter().fold(PolyQ::one(), |acc, (g, m)| &acc * &g.pow(*m));
                proptest::prop_assert_eq!(prod, f.monic());
                let da = p(&a).degree().unwrap_or(0);
                let db = p(&b).degree().unwrap_or(0);
                let total: usize = fs.iter().map(|(g, m)| g.degree().unwrap() * *m as usize).sum();
                proptest::prop_assert_eq!(total, da + db);
            }
        }
    }
}
