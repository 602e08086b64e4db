//! Polynomials over a prime field `F_p` with word-sized `p`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::bigpoly::IntPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct FpPoly {
    p: u64,
    coeffs: Vec<u64>,
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, b, p);
        }
        b = mulmod(b, b, p);
        e >>= 1;
    }
    acc
}

fn inv(a: u64, p: u64) -> u64 {
    powmod(a, p - 2, p)
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn primes_up_to(bound: u64) -> Vec<u64> {
    (2..=bound).filter(|&n| is_prime(n)).collect()
}

pub(crate) fn reduce(c: &BigInt, p: u64) -> u64 {
    c.mod_floor(&BigInt::from(p)).to_u64().unwrap()
}

impl FpPoly {
    pub fn new(p: u64, mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        FpPoly { p, coeffs }
    }

    pub fn from_int(poly: &IntPoly, p: u64) -> Self {
        Self::new(p, poly.coeffs().iter().map(|c| reduce(c, p)).collect())
    }

    fn x(p: u64) -> Self {
        Self::new(p, vec![0, 1])
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let p = self.p;
        let v = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0);
                let b = other.coeffs.get(i).copied().unwrap_or(0);
                (a + p - b) % p
            })
            .collect();
        Self::new(p, v)
    }

    fn mul(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Self::new(self.p, vec![]);
        }
        let p = self.p;
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + mulmod(a, b, p)) % p;
            }
        }
        Self::new(p, out)
    }

    fn div_rem(&self, d: &Self) -> (Self, Self) {
        let p = self.p;
        let dd = d.degree().expect("division by zero polynomial");
        let li = inv(*d.coeffs.last().unwrap(), p);
        let mut r = self.coeffs.clone();
        let mut q = vec![0u64; r.len().saturating_sub(dd)];
        while r.len() > dd {
            let k = r.len() - 1 - dd;
            let c = mulmod(*r.last().unwrap(), li, p);
            for (j, &dj) in d.coeffs.iter().enumerate() {
                r[k + j] = (r[k + j] + p - mulmod(c, dj, p)) % p;
            }
            q[k] = c;
            r.pop();
            while r.last() == Some(&0) {
                r.pop();
            }
        }
        (Self::new(p, q), Self::new(p, r))
    }

    fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    fn monic(&self) -> Self {
        match self.coeffs.last() {
            None => self.clone(),
            Some(&l) => {
                let li = inv(l, self.p);
                Self::new(self.p, self.coeffs.iter().map(|&c| mulmod(c, li, self.p)).collect())
            }
        }
    }

    fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.coeffs.is_empty() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    fn derivative(&self) -> Self {
        let p = self.p;
        Self::new(
            p,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| mulmod(c, (i as u64) % p, p))
                .collect(),
        )
    }

    /// `self^e mod m`
    fn pow_mod(&self, mut e: u64, m: &Self) -> Self {
        let mut acc = Self::new(self.p, vec![1]).rem(m);
        let mut base = self.rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        acc
    }

    pub fn is_squarefree(&self) -> bool {
        let d = self.derivative();
        !d.coeffs.is_empty() && self.gcd(&d).is_one()
    }

    /// Ben-Or test; valid for inputs that are not squarefree too.
    pub fn is_irreducible(&self) -> bool {
        let Some(n) = self.degree() else {
            return false;
        };
        if n == 0 {
            return false;
        }
        let f = self.monic();
        let x = Self::x(self.p);
        let mut h = x.rem(&f);
        for _ in 1..=n / 2 {
            h = h.pow_mod(self.p, &f);
            if !f.gcd(&h.sub(&x)).is_one() {
                return false;
            }
        }
        true
    }

    /// Degrees of the irreducible factors of a squarefree polynomial, ascending.
    pub fn factor_degrees(&self) -> Vec<usize> {
        let mut f = self.monic();
        let x = Self::x(self.p);
        let mut h = x.rem(&f);
        let mut out = Vec::new();
        let mut i = 1;
        while f.degree().unwrap_or(0) >= 2 * i {
            h = h.pow_mod(self.p, &f);
            let g = f.gcd(&h.sub(&x));
            if !g.is_one() {
                let dg = g.degree().unwrap();
                out.extend(std::iter::repeat_n(i, dg / i));
                f = f.div_rem(&g).0;
                h = h.rem(&f);
            }
            i += 1;
        }
        if let Some(d) = f.degree() {
            if d > 0 {
                out.push(d);
            }
        }
        out
    }
}
