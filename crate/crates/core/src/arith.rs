//! Exact integer kernels shared by every other module.
//!
//! All quantities are arbitrary-precision naturals ([`Natural`]); nothing in the crate
//! touches floating point.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision non-negative integer.
pub type Natural = BigUint;

/// Shorthand for building a [`Natural`] from a machine integer.
#[inline]
pub fn nat(v: u64) -> Natural {
    Natural::from(v)
}

/// Largest `r` with `r² ≤ n`.
pub fn isqrt(n: &Natural) -> Natural {
    if n.is_zero() {
        return Natural::zero();
    }
    if let Some(small) = n.to_u64() {
        return nat(isqrt_u64(small));
    }
    // Start at a power of two that is ≥ √n; Newton steps then decrease monotonically.
    let mut x = Natural::one() << n.bits().div_ceil(2);
    loop {
        let y = (&x + n / &x) >> 1u32;
        if y >= x {
            return x;
        }
        x = y;
    }
}

fn isqrt_u64(n: u64) -> u64 {
    if n < 2 {
        return n;
    }
    let mut x = 1u64 << (64 - n.leading_zeros()).div_ceil(2);
    loop {
        let y = (x + n / x) >> 1;
        if y >= x {
            return x;
        }
        x = y;
    }
}

/// The square root of `n` when `n` is a perfect square.
pub fn is_perfect_square(n: &Natural) -> Option<Natural> {
    // Squares are 0, 1, 4 or 9 modulo 16.
    let low = n.iter_u32_digits().next().unwrap_or(0) & 0xf;
    if !matches!(low, 0 | 1 | 4 | 9) {
        return None;
    }
    let r = isqrt(n);
    (&r * &r == *n).then_some(r)
}

pub fn gcd(a: &Natural, b: &Natural) -> Natural {
    a.gcd(b)
}

/// Greatest common divisor of a nonempty list of positive integers.
pub fn gcd_many<'a, I>(values: I) -> Result<Natural>
where
    I: IntoIterator<Item = &'a Natural>,
{
    let mut iter = values.into_iter();
    let first = iter.next().ok_or(Error::EmptyInput("gcd of an empty list"))?;
    check_positive(first, "gcd input")?;
    let mut g = first.clone();
    for v in iter {
        check_positive(v, "gcd input")?;
        if !g.is_one() {
            g = g.gcd(v);
        }
    }
    Ok(g)
}

/// Exponent of the highest power of two dividing `n`.
pub fn two_adic_valuation(n: &Natural) -> Result<u64> {
    n.trailing_zeros()
        .ok_or_else(|| Error::NonPositive("2-adic valuation of 0 is undefined here".into()))
}

/// All positive divisors of `n` in ascending order (empty for `n = 0`).
pub fn divisors_of(n: &Natural) -> Vec<Natural> {
    if n.is_zero() {
        return Vec::new();
    }
    if let Some(small) = n.to_u64() {
        return divisors_u64(small).into_iter().map(nat).collect();
    }
    let mut out = vec![Natural::one()];
    for (p, e) in prime_factorization(n) {
        let base = out.len();
        let mut power = Natural::one();
        for _ in 0..e {
            power *= &p;
            for i in 0..base {
                out.push(&out[i] * &power);
            }
        }
    }
    out.sort();
    out
}

fn divisors_u64(n: u64) -> Vec<u64> {
    let root = isqrt_u64(n);
    let mut low = Vec::new();
    let mut high = Vec::new();
    for d in 1..=root {
        if n % d == 0 {
            low.push(d);
            if n / d != d {
                high.push(n / d);
            }
        }
    }
    low.extend(high.into_iter().rev());
    low
}

/// Prime factorization by trial division, as ascending `(prime, exponent)` pairs.
pub fn prime_factorization(n: &Natural) -> Vec<(Natural, u32)> {
    let mut out = Vec::new();
    if n.is_zero() {
        return out;
    }
    let mut rest = n.clone();
    let mut p = nat(2);
    while &p * &p <= rest {
        let mut e = 0u32;
        loop {
            let (q, r) = rest.div_rem(&p);
            if !r.is_zero() {
                break;
            }
            rest = q;
            e += 1;
        }
        if e > 0 {
            out.push((p.clone(), e));
        }
        p += if p == nat(2) { 1u32 } else { 2u32 };
    }
    if !rest.is_one() {
        out.push((rest, 1));
    }
    out
}

/// `n mod m` for a small modulus.
#[inline]
pub fn residue(n: &Natural, m: u32) -> u32 {
    (n % m).to_u32().expect("residue below a u32 modulus")
}

#[inline]
pub fn is_even(n: &Natural) -> bool {
    n.is_even()
}

pub(crate) fn check_positive(v: &Natural, what: &str) -> Result<()> {
    if v.is_zero() {
        Err(Error::NonPositive(format!("{what} must be ≥ 1")))
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn trial_divisors(n: u64) -> Vec<u64> {
        (1..=n).filter(|d| n % d == 0).collect()
    }

    #[test]
    fn isqrt_examples() {
        assert_eq!(isqrt(&nat(0)), nat(0));
        assert_eq!(isqrt(&nat(576)), nat(24));
        assert_eq!(isqrt(&nat(58320)), nat(241));
    }

    #[test]
    fn isqrt_exhaustive_to_a_million() {
        for n in 0..=1_000_000u64 {
            let r = isqrt_u64(n);
            assert!(r * r <= n && n < (r + 1) * (r + 1), "isqrt({n}) = {r}");
        }
    }

    #[test]
    fn isqrt_big_values_take_newton_path() {
        let r = nat(u64::MAX) * nat(977);
        let n = &r * &r;
        assert_eq!(isqrt(&n), r);
        assert_eq!(isqrt(&(&n - 1u32)), &r - 1u32);
        assert_eq!(isqrt(&(&n + &r + &r)), r);
    }

    #[test]
    fn perfect_square_examples() {
        assert_eq!(is_perfect_square(&nat(1_016_064)), Some(nat(1008)));
        assert_eq!(is_perfect_square(&nat(2)), None);
        assert_eq!(is_perfect_square(&nat(58320)), None);
        assert_eq!(is_perfect_square(&nat(0)), Some(nat(0)));
    }

    #[test]
    fn gcd_many_examples() {
        assert_eq!(gcd_many(&[nat(8), nat(10), nat(2)]).unwrap(), nat(2));
        assert_eq!(gcd_many(&[nat(1), nat(123_456)]).unwrap(), nat(1));
        // The printed value for these excesses is 8; the gcd is 4.
        assert_eq!(gcd_many(&[nat(48), nat(40), nat(28)]).unwrap(), nat(4));
        assert_eq!(gcd_many(&[]), Err(Error::EmptyInput("gcd of an empty list")));
        assert!(matches!(gcd_many(&[nat(3), nat(0)]), Err(Error::NonPositive(_))));
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(two_adic_valuation(&nat(16)).unwrap(), 4);
        assert_eq!(two_adic_valuation(&nat(40)).unwrap(), 3);
        assert_eq!(two_adic_valuation(&nat(45)).unwrap(), 0);
        assert!(two_adic_valuation(&nat(0)).is_err());
    }

    #[test]
    fn divisor_examples() {
        assert_eq!(divisors_of(&nat(2)), vec![nat(1), nat(2)]);
        let d90 = divisors_of(&nat(90));
        assert!(d90.contains(&nat(5)) && d90.contains(&nat(6)));
        let d162 = divisors_of(&nat(162));
        assert!(d162.contains(&nat(1)) && d162.contains(&nat(9)));
    }

    #[test]
    fn divisors_match_trial_division_to_ten_thousand() {
        for n in 1..=10_000u64 {
            let got: Vec<u64> = divisors_of(&nat(n)).iter().map(|d| d.to_u64().unwrap()).collect();
            assert_eq!(got, trial_divisors(n), "n = {n}");
        }
    }

    #[test]
    fn big_divisors_agree_with_small_path() {
        // 2^64 · 3 exercises the bigint branch.
        let n = nat(3) << 64u32;
        let divs = divisors_of(&n);
        assert_eq!(divs.len(), 65 * 2);
        assert!(divs.windows(2).all(|w| w[0] < w[1]));
        assert!(divs.iter().all(|d| (&n % d).is_zero()));
    }

    #[test]
    fn factorization_round_trips() {
        assert_eq!(
            prime_factorization(&nat(249_900)),
            vec![(nat(2), 2), (nat(3), 1), (nat(5), 2), (nat(7), 2), (nat(17), 1)]
        );
        assert_eq!(prime_factorization(&nat(1)), vec![]);
        assert_eq!(prime_factorization(&nat(97)), vec![(nat(97), 1)]);
    }

    proptest! {
        #[test]
        fn perfect_square_agrees_with_isqrt(n in any::<u128>()) {
            let n = Natural::from(n);
            let r = isqrt(&n);
            prop_assert!(&r * &r <= n);
            prop_assert!((&r + 1u32) * (&r + 1u32) > n);
            prop_assert_eq!(is_perfect_square(&n).is_some(), &r * &r == n);
        }

        #[test]
        fn gcd_is_order_invariant_and_idempotent(v in prop::collection::vec(1u64..10_000, 1..6)) {
            let nats: Vec<Natural> = v.iter().copied().map(nat).collect();
            let g = gcd_many(&nats).unwrap();
            let mut rev = nats.clone();
            rev.reverse();
            prop_assert_eq!(&gcd_many(&rev).unwrap(), &g);
            let mut dup = nats.clone();
            dup.extend(nats.iter().cloned());
            prop_assert_eq!(&gcd_many(&dup).unwrap(), &g);
            for x in &nats {
                prop_assert!((x % &g).is_zero());
            }
        }
    }
}
