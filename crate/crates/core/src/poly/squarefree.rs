//! Exact square-free decomposition over the rationals (Yun's algorithm),
//! guarded by a cheap modular test that certifies most inputs square-free
//! without any rational gcd.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// 2^61 - 1
const PRIME: u64 = (1 << 61) - 1;

type Dense = Vec<BigRational>;

fn trim(mut p: Dense) -> Dense {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn derivative(p: &[BigRational]) -> Dense {
    if p.len() <= 1 {
        return vec![BigRational::zero()];
    }
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
        .collect()
}

fn make_monic(p: Dense) -> Dense {
    let lead = p.last().cloned().expect("nonempty");
    p.into_iter().map(|c| c / &lead).collect()
}

/// Quotient and remainder; `b` must be nonzero.
fn divmod(a: &[BigRational], b: &[BigRational]) -> (Dense, Dense) {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    if a.len() < b.len() {
        return (vec![BigRational::zero()], trim(r));
    }
    let mut q = vec![BigRational::zero(); a.len() - db];
    let lead = b[db].clone();
    for k in (0..q.len()).rev() {
        let coef = &r[k + db] / &lead;
        if !coef.is_zero() {
            for (j, bj) in b.iter().enumerate() {
                r[k + j] -= &coef * bj;
            }
        }
        q[k] = coef;
    }
    r.truncate(db.max(1));
    (trim(q), trim(r))
}

fn is_zero_poly(p: &[BigRational]) -> bool {
    p.iter().all(Zero::is_zero)
}

fn gcd(a: &[BigRational], b: &[BigRational]) -> Dense {
    let (mut x, mut y) = (trim(a.to_vec()), trim(b.to_vec()));
    while !is_zero_poly(&y) {
        let (_, r) = divmod(&x, &y);
        x = y;
        y = r;
    }
    make_monic(x)
}

fn sub(a: &[BigRational], b: &[BigRational]) -> Dense {
    let n = a.len().max(b.len());
    let zero = BigRational::zero();
    trim(
        (0..n)
            .map(|i| a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero))
            .collect(),
    )
}

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % PRIME as u128) as u64
}

fn powmod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a);
        }
        a = mulmod(a, a);
        e >>= 1;
    }
    r
}

fn reduce(x: &BigInt) -> u64 {
    let m = x.mod_floor(&BigInt::from(PRIME));
    m.to_u64().expect("reduced below the prime")
}

fn trim_mod(mut p: Vec<u64>) -> Vec<u64> {
    while p.len() > 1 && p.last() == Some(&0) {
        p.pop();
    }
    p
}

fn gcd_degree_mod(a: Vec<u64>, b: Vec<u64>) -> usize {
    let (mut x, mut y) = (trim_mod(a), trim_mod(b));
    while !(y.len() == 1 && y[0] == 0) {
        // x mod y
        let inv = powmod(*y.last().unwrap(), PRIME - 2);
        let dy = y.len() - 1;
        while x.len() > dy && !(x.len() == 1 && x[0] == 0) {
            let shift = x.len() - 1 - dy;
            let coef = mulmod(*x.last().unwrap(), inv);
            for (j, &yj) in y.iter().enumerate() {
                let t = mulmod(coef, yj);
                x[shift + j] = (x[shift + j] + PRIME - t) % PRIME;
            }
            x = trim_mod(x);
            if x.len() - 1 < dy || (x.len() == 1 && x[0] == 0) {
                break;
            }
        }
        std::mem::swap(&mut x, &mut y);
    }
    x.len() - 1
}

/// True when `p` is certified square-free by reduction modulo a large prime.
/// `false` means "unknown", not "has a repeated factor".
fn certified_squarefree(p: &[BigRational]) -> bool {
    let lcm = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p.iter().map(|c| (c * &lcm).to_integer()).collect();
    let lead = ints.last().expect("nonempty");
    if reduce(lead) == 0 {
        return false;
    }
    let f: Vec<u64> = ints.iter().map(reduce).collect();
    let df: Vec<u64> = ints
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| mulmod(reduce(c), (i as u64) % PRIME))
        .collect();
    if df.iter().all(|&c| c == 0) {
        return false;
    }
    gcd_degree_mod(f, df) == 0
}

/// Factors a monic polynomial (ascending coefficients) as `Π g_i^i` with
/// each `g_i` monic and square-free. Factors of degree zero are omitted.
pub(crate) fn squarefree_decomposition(p: &[BigRational]) -> Vec<(Dense, usize)> {
    let f = trim(p.to_vec());
    if f.len() <= 2 || certified_squarefree(&f) {
        return vec![(f, 1)];
    }
    let df = derivative(&f);
    let a0 = gcd(&f, &df);
    let mut b = divmod(&f, &a0).0;
    let c = divmod(&df, &a0).0;
    let mut d = sub(&c, &derivative(&b));
    let mut out = Vec::new();
    let mut mult = 1;
    while b.len() > 1 {
        let a = gcd(&b, &d);
        let next_b = divmod(&b, &a).0;
        let c = divmod(&d, &a).0;
        d = sub(&c, &derivative(&next_b));
        if a.len() > 1 {
            out.push((a, mult));
        }
        b = next_b;
        mult += 1;
    }
    debug_assert!(out
        .iter()
        .all(|(g, _)| g.last().is_some_and(|l| l.abs().is_one())));
    out
}
