//! Dense univariate polynomials over a [`Field`], coefficients stored low
//! degree first.

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::field::{Field, PrimeField};

pub type Poly<E> = Vec<E>;

pub fn trim<K: Field>(k: &K, p: &mut Poly<K::Elem>) {
    while p.last().is_some_and(|c| k.is_zero(c)) {
        p.pop();
    }
}

/// `None` for the zero polynomial.
pub fn degree<K: Field>(k: &K, p: &[K::Elem]) -> Option<usize> {
    p.iter().rposition(|c| !k.is_zero(c))
}

pub fn add<K: Field>(k: &K, a: &[K::Elem], b: &[K::Elem]) -> Poly<K::Elem> {
    let n = a.len().max(b.len());
    let z = k.zero();
    let mut out: Vec<_> = (0..n).map(|i| k.add(a.get(i).unwrap_or(&z), b.get(i).unwrap_or(&z))).collect();
    trim(k, &mut out);
    out
}

pub fn sub<K: Field>(k: &K, a: &[K::Elem], b: &[K::Elem]) -> Poly<K::Elem> {
    let n = a.len().max(b.len());
    let z = k.zero();
    let mut out: Vec<_> = (0..n).map(|i| k.sub(a.get(i).unwrap_or(&z), b.get(i).unwrap_or(&z))).collect();
    trim(k, &mut out);
    out
}

pub fn mul<K: Field>(k: &K, a: &[K::Elem], b: &[K::Elem]) -> Poly<K::Elem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![k.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if k.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = k.add(&out[i + j], &k.mul(x, y));
        }
    }
    trim(k, &mut out);
    out
}

/// Quotient and remainder; `b` must be nonzero.
pub fn divrem<K: Field>(k: &K, a: &[K::Elem], b: &[K::Elem]) -> (Poly<K::Elem>, Poly<K::Elem>) {
    let db = degree(k, b).expect("division by zero polynomial");
    let lead_inv = k.inv(&b[db]).unwrap();
    let mut r: Vec<_> = a.to_vec();
    trim(k, &mut r);
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = vec![k.zero(); r.len() - db];
    while let Some(dr) = degree(k, &r) {
        if dr < db {
            break;
        }
        let c = k.mul(&r[dr], &lead_inv);
        let shift = dr - db;
        for (j, bj) in b[..=db].iter().enumerate() {
            r[shift + j] = k.sub(&r[shift + j], &k.mul(&c, bj));
        }
        q[shift] = c;
        trim(k, &mut r);
    }
    trim(k, &mut q);
    (q, r)
}

pub fn rem<K: Field>(k: &K, a: &[K::Elem], b: &[K::Elem]) -> Poly<K::Elem> {
    divrem(k, a, b).1
}

pub fn monic<K: Field>(k: &K, a: &[K::Elem]) -> Poly<K::Elem> {
    match degree(k, a) {
        None => Vec::new(),
        Some(d) => {
            let inv = k.inv(&a[d]).unwrap();
            a[..=d].iter().map(|c| k.mul(c, &inv)).collect()
        }
    }
}

pub fn gcd<K: Field>(k: &K, a: &[K::Elem], b: &[K::Elem]) -> Poly<K::Elem> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(k, &mut x);
    trim(k, &mut y);
    while !y.is_empty() {
        let r = rem(k, &x, &y);
        x = y;
        y = r;
    }
    monic(k, &x)
}

/// Returns `(g, s, t)` with `s*a + t*b = g` and `g` monic.
pub fn ext_gcd<K: Field>(k: &K, a: &[K::Elem], b: &[K::Elem]) -> (Poly<K::Elem>, Poly<K::Elem>, Poly<K::Elem>) {
    let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
    trim(k, &mut r0);
    trim(k, &mut r1);
    let (mut s0, mut s1) = (vec![k.one()], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![k.one()]);
    while !r1.is_empty() {
        let (q, r) = divrem(k, &r0, &r1);
        let s2 = sub(k, &s0, &mul(k, &q, &s1));
        let t2 = sub(k, &t0, &mul(k, &q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    match degree(k, &r0) {
        None => (r0, s0, t0),
        Some(d) => {
            let inv = k.inv(&r0[d]).unwrap();
            let scale = |p: &[K::Elem]| -> Poly<K::Elem> {
                let mut v: Vec<_> = p.iter().map(|c| k.mul(c, &inv)).collect();
                trim(k, &mut v);
                v
            };
            (scale(&r0), scale(&s0), scale(&t0))
        }
    }
}

pub fn eval<K: Field>(k: &K, p: &[K::Elem], x: &K::Elem) -> K::Elem {
    p.iter().rev().fold(k.zero(), |acc, c| k.add(&k.mul(&acc, x), c))
}

fn powmod<K: Field>(k: &K, base: &[K::Elem], mut exp: u64, modulus: &[K::Elem]) -> Poly<K::Elem> {
    let mut acc = rem(k, &[k.one()], modulus);
    let mut b = rem(k, base, modulus);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = rem(k, &mul(k, &acc, &b), modulus);
        }
        b = rem(k, &mul(k, &b, &b), modulus);
        exp >>= 1;
    }
    acc
}

/// All distinct roots in GF(p), in ascending order.
///
/// Restricts to the product of linear factors via `gcd(f, t^p - t)` and then
/// splits with random `gcd(g, (t + a)^((p-1)/2) - 1)` (Cantor-Zassenhaus).
pub fn prime_roots(k: &PrimeField, poly: &[u64]) -> Vec<u64> {
    let f = monic(k, poly);
    if f.len() < 2 {
        return Vec::new();
    }
    let p = k.modulus();
    if p < 64 {
        return (0..p).filter(|x| eval(k, &f, x) == 0).collect();
    }
    let t = vec![0, 1];
    let tp = powmod(k, &t, p, &f);
    let g = gcd(k, &f, &sub(k, &tp, &t));
    let mut roots = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_u64 ^ p);
    split_linear(k, g, &mut rng, &mut roots);
    roots.sort_unstable();
    roots
}

fn split_linear(k: &PrimeField, g: Vec<u64>, rng: &mut ChaCha8Rng, out: &mut Vec<u64>) {
    match degree(k, &g) {
        None | Some(0) => {}
        Some(1) => out.push(k.neg(&k.mul(&g[0], &k.inv(&g[1]).unwrap()))),
        Some(d) => {
            let half = (k.modulus() - 1) / 2;
            for _ in 0..256 {
                let a = rng.next_u64() % k.modulus();
                let w = powmod(k, &[a, 1], half, &g);
                let h = gcd(k, &g, &sub(k, &w, &[1]));
                let dh = degree(k, &h).unwrap_or(0);
                if dh > 0 && dh < d {
                    let (q, _) = divrem(k, &g, &h);
                    split_linear(k, h, rng, out);
                    split_linear(k, q, rng, out);
                    return;
                }
            }
            // Splitting failed repeatedly (astronomically unlikely); fall back.
            out.extend((0..k.modulus()).filter(|x| eval(k, &g, x) == 0));
        }
    }
}
