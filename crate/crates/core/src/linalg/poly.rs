//! Minimal polynomials and roots in the base field.
//!
//! Only what the decomposition routine needs: the eigenvalues of an
//! endomorphism that already lie in the coefficient field.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::field::{inv_mod, mul_mod, FieldSpec, Scalar};
use super::matrix::Matrix;

/// Coefficients (lowest degree first) of the monic minimal polynomial of a
/// square matrix.
pub fn minimal_polynomial(m: &Matrix) -> Vec<Scalar> {
    assert!(m.is_square());
    let f = m.field();
    let n = m.rows();
    let flat = |x: &Matrix| Matrix::from_fn(f, n * n, 1, |k, _| x.get(k / n, k % n));
    let mut powers = vec![flat(&Matrix::identity(f, n))];
    let mut current = Matrix::identity(f, n);
    loop {
        current = current.mul(m);
        let target = flat(&current);
        let refs: Vec<&Matrix> = powers.iter().collect();
        let basis = Matrix::hstack(f, n * n, &refs);
        if let Some(c) = basis.solve(&target).expect("shapes agree") {
            let mut coeffs: Vec<Scalar> = (0..powers.len()).map(|i| f.neg(&c.get(i, 0))).collect();
            coeffs.push(f.one());
            return coeffs;
        }
        powers.push(target);
    }
}

/// Distinct roots in the field of the polynomial with the given coefficients
/// (lowest degree first). Over the rationals only candidates allowed by the
/// rational root test with moderately sized coefficients are examined.
pub fn roots(field: FieldSpec, coeffs: &[Scalar]) -> Vec<Scalar> {
    match field {
        FieldSpec::Prime(p) => {
            let c: Vec<u64> = coeffs
                .iter()
                .map(|s| match s {
                    Scalar::Mod(x) => *x,
                    Scalar::Rat(_) => panic!("field mismatch"),
                })
                .collect();
            let mut r = roots_mod_p(&c, p);
            r.sort_unstable();
            r.into_iter().map(Scalar::Mod).collect()
        }
        FieldSpec::Rationals => {
            let c: Vec<BigRational> = coeffs
                .iter()
                .map(|s| match s {
                    Scalar::Rat(x) => (**x).clone(),
                    Scalar::Mod(_) => panic!("field mismatch"),
                })
                .collect();
            rational_roots(&c)
                .into_iter()
                .map(|r| Scalar::Rat(Box::new(r)))
                .collect()
        }
    }
}

fn trim(p: &mut Vec<u64>) {
    while p.last() == Some(&0) {
        p.pop();
    }
}

fn eval_mod(c: &[u64], x: u64, p: u64) -> u64 {
    c.iter().rev().fold(0, |acc, a| (mul_mod(acc, x, p) + a) % p)
}

fn poly_rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    trim(&mut r);
    let dm = m.len() - 1;
    let lead_inv = inv_mod(m[dm], p);
    while r.len() > dm {
        let d = r.len() - 1;
        let q = mul_mod(r[d], lead_inv, p);
        for i in 0..=dm {
            let t = mul_mod(q, m[i], p);
            r[d - dm + i] = (r[d - dm + i] + p - t) % p;
        }
        trim(&mut r);
    }
    r
}

fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mul_mod(*x, *y, p)) % p;
        }
    }
    out
}

fn poly_powmod(base: &[u64], mut e: u64, m: &[u64], p: u64) -> Vec<u64> {
    let mut acc = vec![1];
    let mut b = poly_rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_rem(&poly_mul(&acc, &b, p), m, p);
        }
        b = poly_rem(&poly_mul(&b, &b, p), m, p);
        e >>= 1;
    }
    acc
}

fn poly_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let r = poly_rem(&x, &y, p);
        x = y;
        y = r;
    }
    if let Some(&lead) = x.last() {
        let inv = inv_mod(lead, p);
        for c in &mut x {
            *c = mul_mod(*c, inv, p);
        }
    }
    x
}

fn poly_div_exact(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lead_inv = inv_mod(b[db], p);
    let mut q = vec![0; r.len().saturating_sub(db)];
    while r.len() > db {
        let d = r.len() - 1;
        let c = mul_mod(r[d], lead_inv, p);
        q[d - db] = c;
        for i in 0..=db {
            let t = mul_mod(c, b[i], p);
            r[d - db + i] = (r[d - db + i] + p - t) % p;
        }
        trim(&mut r);
    }
    q
}

fn roots_mod_p(coeffs: &[u64], p: u64) -> Vec<u64> {
    let mut c = coeffs.to_vec();
    trim(&mut c);
    if c.len() <= 1 {
        return Vec::new();
    }
    if p < 1024 {
        return (0..p).filter(|&x| eval_mod(&c, x, p) == 0).collect();
    }
    // product of the distinct linear factors: gcd(f, x^p - x)
    let xp = poly_powmod(&[0, 1], p, &c, p);
    let mut xp_minus_x = xp;
    xp_minus_x.resize(xp_minus_x.len().max(2), 0);
    xp_minus_x[1] = (xp_minus_x[1] + p - 1) % p;
    let g = poly_gcd(&c, &xp_minus_x, p);
    let mut out = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(p);
    split_linear(&g, p, &mut rng, &mut out);
    out
}

fn split_linear(g: &[u64], p: u64, rng: &mut ChaCha8Rng, out: &mut Vec<u64>) {
    let deg = g.len().saturating_sub(1);
    if deg == 0 {
        return;
    }
    if deg == 1 {
        // monic x + g0
        out.push((p - g[0]) % p);
        return;
    }
    loop {
        let a = rng.gen_range(0..p);
        let h = poly_powmod(&[a, 1], (p - 1) / 2, g, p);
        let mut h1 = h;
        if h1.is_empty() {
            h1.push(0);
        }
        h1[0] = (h1[0] + p - 1) % p;
        let d = poly_gcd(g, &h1, p);
        let dd = d.len().saturating_sub(1);
        if dd > 0 && dd < deg {
            let rest = poly_div_exact(g, &d, p);
            split_linear(&d, p, rng, out);
            split_linear(&rest, p, rng, out);
            return;
        }
    }
}

const MAX_ROOT_TEST: i128 = 1_000_000_000_000;

fn divisors(n: i128) -> Vec<i128> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

fn rational_roots(coeffs: &[BigRational]) -> Vec<BigRational> {
    let mut c = coeffs.to_vec();
    while c.last().is_some_and(|x| x.is_zero()) {
        c.pop();
    }
    if c.len() <= 1 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let lcm = c
        .iter()
        .fold(BigInt::from(1), |acc, x| acc.lcm(x.denom()));
    let mut ints: Vec<BigInt> = c
        .iter()
        .map(|x| (x * BigRational::from_integer(lcm.clone())).to_integer())
        .collect();
    if ints[0].is_zero() {
        out.push(BigRational::zero());
        while ints.first().is_some_and(|x| x.is_zero()) {
            ints.remove(0);
        }
    }
    if ints.len() <= 1 {
        return out;
    }
    let (Some(a0), Some(an)) = (ints[0].to_i128(), ints[ints.len() - 1].to_i128()) else {
        return out;
    };
    if a0.abs() > MAX_ROOT_TEST || an.abs() > MAX_ROOT_TEST {
        return out;
    }
    let eval = |x: &BigRational| {
        ints.iter()
            .rev()
            .fold(BigRational::zero(), |acc, a| acc * x + BigRational::from_integer(a.clone()))
    };
    let mut found: Vec<BigRational> = Vec::new();
    for num in divisors(a0) {
        for den in divisors(an) {
            for sign in [1i128, -1] {
                let cand = BigRational::new(BigInt::from(sign * num), BigInt::from(den));
                if !found.contains(&cand) && eval(&cand).is_zero() {
                    found.push(cand);
                }
            }
        }
    }
    found.sort_by(|a, b| a.abs().cmp(&b.abs()).then(a.cmp(b)));
    out.extend(found);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_polynomial_of_jordan_block() {
        let f = FieldSpec::Rationals;
        let j = Matrix::from_i64(f, 3, 3, &[2, 1, 0, 0, 2, 0, 0, 0, 2]);
        // (x-2)^2 = x^2 - 4x + 4
        let mp = minimal_polynomial(&j);
        assert_eq!(mp, vec![f.from_i64(4), f.from_i64(-4), f.one()]);
    }

    #[test]
    fn roots_over_large_prime() {
        let f = FieldSpec::Prime(32003);
        // (x-3)(x-7)(x^2+1); -1 is a non-residue mod 32003 since 32003 = 3 mod 4
        let c = [21i64, -10, 22, -10, 1].map(|v| f.from_i64(v));
        let r = roots(f, &c);
        assert_eq!(r, vec![Scalar::Mod(3), Scalar::Mod(7)]);
    }

    #[test]
    fn roots_over_small_prime_and_rationals() {
        let f = FieldSpec::Prime(5);
        let c = [4i64, 0, 1].map(|v| f.from_i64(v)); // x^2 - 1
        assert_eq!(roots(f, &c), vec![Scalar::Mod(1), Scalar::Mod(4)]);
        let q = FieldSpec::Rationals;
        let c = [
            q.parse_scalar("-1").unwrap(),
            q.parse_scalar("1/2").unwrap(),
            q.parse_scalar("1").unwrap(),
        ]; // (x - 1/2)... x^2 + x/2 - 1 has no rational roots
        assert!(roots(q, &c).is_empty());
        let c = [q.from_i64(0), q.from_i64(-3), q.from_i64(2)]; // x(2x-3)
        let r = roots(q, &c);
        assert_eq!(r.len(), 2);
        assert_eq!(q.format(&r[1]), "3/2");
    }
}
