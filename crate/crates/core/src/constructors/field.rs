//! Table-driven arithmetic in GF(q) for small prime powers.

use crate::characteristic::prime_factors;
use crate::error::{Error, Result};

/// Elements are `0..q`; for `q = p^k` with `k > 1` an element is the base-`p`
/// digit vector of a polynomial reduced modulo a primitive polynomial.
#[derive(Debug, Clone)]
pub struct Field {
    q: usize,
    p: usize,
    add: Vec<usize>,
    mul: Vec<usize>,
    primitive: usize,
}

const MAX_Q: usize = 128;

impl Field {
    pub fn new(q: usize) -> Result<Field> {
        let f = prime_factors(q);
        if f.len() != 1 {
            return Err(Error::InvalidSpec(format!("{q} is not a prime power")));
        }
        if q > MAX_Q {
            return Err(Error::InvalidSpec(format!(
                "field size {q} above supported maximum {MAX_Q}"
            )));
        }
        let (p, k) = (f[0].0, f[0].1 as usize);
        let add = table(q, |a, b| {
            let (da, db) = (digits(a, p, k), digits(b, p, k));
            undigits(
                &da.iter()
                    .zip(&db)
                    .map(|(x, y)| (x + y) % p)
                    .collect::<Vec<_>>(),
                p,
            )
        });
        if k == 1 {
            let mul = table(q, |a, b| a * b % p);
            let primitive = (1..p)
                .find(|&w| mult_order(w, |a, b| a * b % p) == p - 1)
                .expect("primitive roots exist mod p");
            return Ok(Field {
                q,
                p,
                add,
                mul,
                primitive,
            });
        }
        // first monic f of degree k (lexicographic low coefficients) for which x is primitive
        for low in 0..p.pow(k as u32) {
            let modulus = digits(low, p, k);
            let mul = table(q, |a, b| {
                poly_mul_mod(&digits(a, p, k), &digits(b, p, k), &modulus, p)
            });
            let x = p;
            if mult_order(x, |a, b| mul[a * q + b]) == q - 1 {
                return Ok(Field {
                    q,
                    p,
                    add,
                    mul,
                    primitive: x,
                });
            }
        }
        unreachable!("primitive polynomials exist in every degree")
    }

    pub fn size(&self) -> usize {
        self.q
    }

    pub fn characteristic(&self) -> usize {
        self.p
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.q + b]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.q + b]
    }

    pub fn neg(&self, a: usize) -> usize {
        (0..self.q)
            .find(|&b| self.add(a, b) == 0)
            .expect("additive inverse")
    }

    pub fn inv(&self, a: usize) -> Option<usize> {
        (1..self.q).find(|&b| self.mul(a, b) == 1)
    }

    /// A generator of the multiplicative group.
    pub fn primitive(&self) -> usize {
        self.primitive
    }
}

fn table(q: usize, f: impl Fn(usize, usize) -> usize) -> Vec<usize> {
    let mut t = vec![0; q * q];
    for a in 0..q {
        for b in 0..q {
            t[a * q + b] = f(a, b);
        }
    }
    t
}

fn digits(mut a: usize, p: usize, k: usize) -> Vec<usize> {
    let mut d = vec![0; k];
    for slot in d.iter_mut() {
        *slot = a % p;
        a /= p;
    }
    d
}

fn undigits(d: &[usize], p: usize) -> usize {
    d.iter().rev().fold(0, |acc, &x| acc * p + x)
}

/// Product of two residues modulo the monic polynomial `x^k + low`.
fn poly_mul_mod(a: &[usize], b: &[usize], low: &[usize], p: usize) -> usize {
    let k = a.len();
    let mut prod = vec![0; 2 * k];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    for deg in (k..2 * k).rev() {
        let c = prod[deg];
        if c != 0 {
            prod[deg] = 0;
            for (i, &l) in low.iter().enumerate() {
                prod[deg - k + i] = (prod[deg - k + i] + (p - c) * l) % p;
            }
        }
    }
    undigits(&prod[..k], p)
}

fn mult_order(x: usize, mul: impl Fn(usize, usize) -> usize) -> usize {
    let mut cur = x;
    let mut n = 1;
    while cur != 1 {
        cur = mul(cur, x);
        n += 1;
        if cur == 0 || n > MAX_Q {
            return 0;
        }
    }
    n
}

/// Multiplicative order of `a` modulo the prime `p`.
pub(crate) fn order_mod(a: usize, p: usize) -> usize {
    mult_order(a % p, |x, y| x * y % p)
}
