use std::collections::HashSet;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

use super::CombinatoricsError;

/// Euler's totient by trial division.
pub fn totient(d: u64) -> u64 {
    assert!(d >= 1, "totient of zero");
    let (mut rest, mut phi) = (d, d);
    let mut f = 2;
    while f * f <= rest {
        if rest % f == 0 {
            while rest % f == 0 {
                rest /= f;
            }
            phi -= phi / f;
        }
        f += 1;
    }
    if rest > 1 {
        phi -= phi / rest;
    }
    phi
}

pub fn binomial(n: u64, r: u64) -> BigUint {
    if r > n {
        return BigUint::default();
    }
    let r = r.min(n - r);
    (0..r).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// Binary necklaces with `a` beads of one colour and `b` of the other, up
/// to rotation. A necklace of a single colour counts once.
pub fn necklace(a: u32, b: u32) -> Result<BigUint, CombinatoricsError> {
    if a == 0 && b == 0 {
        return Err(CombinatoricsError::BothZero);
    }
    if a == 0 {
        return Ok(BigUint::one());
    }
    let (a, b) = (a as u64, b as u64);
    let g = a.gcd(&b);
    let total: BigUint = (1..=g)
        .filter(|d| g % d == 0)
        .map(|d| binomial(b / d + a / d - 1, a / d - 1) * totient(d))
        .sum();
    Ok(total / a)
}

/// Counts necklaces by listing every arrangement and keeping its least
/// rotation.
pub fn necklace_bruteforce(a: u32, b: u32) -> Result<BigUint, CombinatoricsError> {
    if a == 0 && b == 0 {
        return Err(CombinatoricsError::BothZero);
    }
    let len = a + b;
    if len > 24 {
        return Err(CombinatoricsError::TooLarge { a, b });
    }
    let full = (1u32 << len) - 1;
    let least_rotation = |x: u32| {
        (0..len)
            .map(|s| ((x << s) | (x >> (len - s))) & full)
            .min()
            .unwrap_or(x)
    };
    let mut seen = HashSet::new();
    if a == 0 {
        seen.insert(0);
    } else {
        // Gosper's hack walks the masks with exactly `a` bits set.
        let mut x: u32 = (1 << a) - 1;
        while x <= full {
            seen.insert(least_rotation(x));
            let c = x & x.wrapping_neg();
            let r = x + c;
            if r > full || r == 0 {
                break;
            }
            x = (((r ^ x) >> 2) / c) | r;
        }
    }
    Ok(BigUint::from(seen.len()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn totients() {
        assert_eq!(totient(1), 1);
        assert_eq!(totient(6), 2);
        assert_eq!(totient(9), 6);
        assert_eq!(totient(97), 96);
    }

    #[test]
    fn small_necklaces() {
        assert_eq!(necklace(3, 6).unwrap(), BigUint::from(10u32));
        assert_eq!(necklace(2, 8).unwrap(), BigUint::from(5u32));
        assert_eq!(necklace(1, 17).unwrap(), BigUint::one());
        assert_eq!(necklace(4, 0).unwrap(), BigUint::one());
        assert_eq!(necklace(0, 0), Err(CombinatoricsError::BothZero));
    }

    #[test]
    fn oracle_small_cases() {
        assert_eq!(necklace_bruteforce(0, 5).unwrap(), BigUint::one());
        assert_eq!(necklace_bruteforce(5, 0).unwrap(), BigUint::one());
        assert_eq!(necklace_bruteforce(2, 2).unwrap(), BigUint::from(2u32));
        assert_eq!(necklace_bruteforce(3, 6).unwrap(), BigUint::from(10u32));
        assert!(matches!(necklace_bruteforce(13, 12), Err(CombinatoricsError::TooLarge { .. })));
    }

    #[test]
    fn oracle_full_width() {
        // 24 beads exercises the top bit of the mask walk.
        assert_eq!(necklace_bruteforce(12, 12).unwrap(), necklace(12, 12).unwrap());
        assert_eq!(necklace_bruteforce(23, 1).unwrap(), BigUint::one());
    }
}
