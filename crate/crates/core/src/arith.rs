//! Integer helpers: exact square roots and trial-division factoring.

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// `Some(r)` with `r >= 0` and `r^2 = n`, else `None`. Zero is a square.
pub fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

pub fn is_square(n: &BigInt) -> bool {
    exact_sqrt(n).is_some()
}

pub fn is_square_u128(n: u128) -> Option<u128> {
    let r = n.sqrt();
    (r * r == n).then_some(r)
}

/// Prime factorization of `|n|` by trial division up to `limit`.
///
/// A cofactor left after dividing out every prime `<= limit` is accepted as
/// prime only when it is below `limit^2`; otherwise this fails.
pub fn factorize(n: &BigInt, limit: u64) -> Result<Vec<(BigInt, u32)>> {
    if n.is_zero() {
        return Err(Error::InvalidInput("cannot factor zero".into()));
    }
    let mut m = n.abs();
    let mut out = Vec::new();
    let mut push = |p: BigInt, m: &mut BigInt| {
        let mut e = 0;
        while (&*m % &p).is_zero() {
            *m /= &p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
    };
    push(BigInt::from(2), &mut m);
    let mut d = 3u64;
    while d <= limit {
        let bd = BigInt::from(d);
        if &bd * &bd > m {
            break;
        }
        push(bd, &mut m);
        d += 2;
    }
    if !m.is_one() {
        let lim = BigInt::from(limit);
        if m > &lim * &lim {
            return Err(Error::FactorBound(n.clone()));
        }
        out.push((m, 1));
    }
    Ok(out)
}

/// Positive divisors of `n != 0`, ascending.
pub fn divisors(n: &BigInt, limit: u64) -> Result<Vec<BigInt>> {
    let mut divs = vec![BigInt::one()];
    for (p, e) in factorize(n, limit)? {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut pk = d.clone();
            for _ in 0..=e {
                next.push(pk.clone());
                pk *= &p;
            }
        }
        divs = next;
    }
    divs.sort();
    Ok(divs)
}

/// Smallest prime factor of `n > 1`.
pub fn smallest_prime_factor(n: &BigInt) -> Option<BigInt> {
    if n.abs() <= BigInt::one() {
        return None;
    }
    let m = n.abs();
    let mut d = BigInt::from(2);
    while &d * &d <= m {
        if m.is_multiple_of(&d) {
            return Some(d);
        }
        d += 1;
    }
    Some(m)
}
