use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{check_n, count_c, CombinatoricsError};

/// A polynomial in `k` plus polynomials switched on by divisibility
/// conditions `d | k`. Coefficients are listed from the constant term up.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiPolynomial {
    pub base: Vec<BigRational>,
    /// `(d, coefficients)` pairs, sorted by `d`.
    pub periodic: Vec<(u64, Vec<BigRational>)>,
}

fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn horner(coeffs: &[BigRational], k: &BigRational) -> BigRational {
    coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * k + c)
}

impl QuasiPolynomial {
    /// Builds from `(divisor, power) → coefficient`, divisor 1 meaning the
    /// unconditional part. Zero coefficients are dropped.
    pub fn from_terms(terms: &BTreeMap<(u64, usize), BigRational>) -> Self {
        let mut groups: BTreeMap<u64, Vec<BigRational>> = BTreeMap::new();
        for (&(d, j), c) in terms.iter().filter(|(_, c)| !c.is_zero()) {
            let poly = groups.entry(d).or_default();
            if poly.len() <= j {
                poly.resize(j + 1, BigRational::zero());
            }
            poly[j] = c.clone();
        }
        let base = groups.remove(&1).unwrap_or_default();
        QuasiPolynomial {
            base,
            periodic: groups.into_iter().collect(),
        }
    }

    /// Non-zero coefficients keyed by `(divisor, power)`.
    pub fn terms(&self) -> BTreeMap<(u64, usize), BigRational> {
        std::iter::once((1, &self.base))
            .chain(self.periodic.iter().map(|(d, p)| (*d, p)))
            .flat_map(|(d, poly)| {
                poly.iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(move |(j, c)| ((d, j), c.clone()))
            })
            .collect()
    }

    pub fn evaluate(&self, k: u64) -> BigRational {
        let x = BigRational::from_integer(BigInt::from(k));
        let mut total = horner(&self.base, &x);
        for (d, poly) in &self.periodic {
            if k.is_multiple_of(*d) {
                total += horner(poly, &x);
            }
        }
        total
    }

    /// The value at `k` as a count, rejecting fractions and negatives.
    pub fn evaluate_count(&self, k: u64) -> Result<BigUint, CombinatoricsError> {
        let v = self.evaluate(k);
        if !v.is_integer() || v.is_negative() {
            return Err(CombinatoricsError::NotACount { k });
        }
        Ok(v.to_integer().to_biguint().expect("non-negative"))
    }
}

fn write_poly(f: &mut fmt::Formatter<'_>, poly: &[BigRational], first: &mut bool) -> fmt::Result {
    for (j, c) in poly.iter().enumerate().rev().filter(|(_, c)| !c.is_zero()) {
        let sign = if c.is_negative() { "-" } else { "+" };
        if *first {
            if c.is_negative() {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {sign} ")?;
        }
        *first = false;
        let num = c.numer().abs();
        let den = c.denom();
        let var = match j {
            0 => String::new(),
            1 => "k".to_string(),
            _ => format!("k^{j}"),
        };
        match (num.is_one() && j > 0, den.is_one()) {
            (true, true) => write!(f, "{var}")?,
            (true, false) => write!(f, "{var}/{den}")?,
            (false, true) => write!(f, "{num}{var}")?,
            (false, false) => write!(f, "{num}{var}/{den}")?,
        }
    }
    Ok(())
}

impl fmt::Display for QuasiPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        write_poly(f, &self.base, &mut first)?;
        for (d, poly) in &self.periodic {
            if poly.iter().all(Zero::is_zero) {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "[")?;
            let mut inner = true;
            write_poly(f, poly, &mut inner)?;
            write!(f, "]_{{{d}|k}}")?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// The closed forms for `|C_{3,k}^t|` and `|C_{5,k}^t|` as published,
/// valid (if at all) for `k ≥ 2`.
pub fn quasipoly_printed(n: u32) -> Result<QuasiPolynomial, CombinatoricsError> {
    let r = |v: &[(i64, i64)]| v.iter().map(|&(a, b)| rat(a, b)).collect::<Vec<_>>();
    match n {
        3 => Ok(QuasiPolynomial {
            base: r(&[(57, 5), (61, 6), (67, 12), (5, 6), (1, 60)]),
            periodic: vec![(2, r(&[(1, 1)])), (5, r(&[(8, 5)]))],
        }),
        5 => Ok(QuasiPolynomial {
            base: r(&[
                (1682, 126),
                (10921, 315),
                (3124847, 45360),
                (245269, 8640),
                (0, 1),
                (973, 180),
                (11527, 30240),
                (11, 1680),
                (1, 181440),
            ]),
            periodic: vec![
                (2, r(&[(3, 2), (1, 4)])),
                (3, r(&[(18, 9), (10, 9), (2, 81)])),
                (4, r(&[(1, 1)])),
                (7, r(&[(12, 7)])),
                (9, r(&[(4, 3)])),
            ],
        }),
        _ => Err(CombinatoricsError::UnsupportedN(n)),
    }
}

/// One coefficient where a printed and a fitted formula disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TermDifference {
    /// Divisibility condition `d | k`; 1 for the unconditional part.
    pub divisor: u64,
    pub power: usize,
    pub printed: BigRational,
    pub fitted: BigRational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TermComparison {
    pub term_for_term: bool,
    pub differences: Vec<TermDifference>,
    /// `(k, printed value, exact count)` wherever they differ in the
    /// checked range.
    pub value_mismatches: Vec<(u64, BigRational, BigUint)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation {
    pub n: u32,
    pub fitted: QuasiPolynomial,
    /// Inclusive range of `k` used to fit.
    pub training: (u64, u64),
    /// Inclusive range of `k` predicted exactly without being fitted.
    pub held_out: (u64, u64),
    pub comparison: Option<TermComparison>,
}

/// Unknowns of the fit: the unconditional polynomial of degree `2(n−1)` and,
/// for each `2 ≤ d ≤ 2n`, a polynomial of degree `⌊2n/d⌋ − 1` active when
/// `d | k`. Every necklace term in the count has this shape.
fn basis(n: u32) -> Vec<(u64, usize)> {
    let two_n = 2 * n as u64;
    let mut out: Vec<(u64, usize)> = (0..=2 * (n as usize - 1)).map(|j| (1, j)).collect();
    for d in 2..=two_n {
        let degree = (two_n / d) as usize - 1;
        out.extend((0..=degree).map(|j| (d, j)));
    }
    out
}

fn exact_count(n: u32, k: u64) -> Result<BigRational, CombinatoricsError> {
    let k32 = u32::try_from(k).map_err(|_| CombinatoricsError::InvalidK)?;
    Ok(BigRational::from_integer(BigInt::from(count_c(n, k32)?)))
}

/// Solves the overdetermined system exactly by row reduction. Returns the
/// first row whose equation contradicts the others, if any.
fn solve(mut rows: Vec<Vec<BigRational>>, unknowns: usize) -> Result<Vec<BigRational>, usize> {
    let mut pivot_row = 0;
    let mut pivots = Vec::with_capacity(unknowns);
    for col in 0..unknowns {
        let Some(found) = (pivot_row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(pivot_row, found);
        let lead = rows[pivot_row][col].clone();
        for v in rows[pivot_row].iter_mut() {
            *v /= &lead;
        }
        let pivot = rows[pivot_row].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != pivot_row && !row[col].is_zero() {
                let factor = row[col].clone();
                for (v, p) in row.iter_mut().zip(&pivot) {
                    *v -= &factor * p;
                }
            }
        }
        pivots.push(col);
        pivot_row += 1;
    }
    if let Some(bad) = (pivot_row..rows.len()).find(|&r| !rows[r][unknowns].is_zero()) {
        return Err(bad);
    }
    if pivots.len() < unknowns {
        return Err(rows.len());
    }
    Ok(rows.into_iter().take(unknowns).map(|row| row[unknowns].clone()).collect())
}

/// Fits the quasi-polynomial for `|C_{n,k}^t|` (`k ≥ 2`) with exact rational
/// arithmetic, checks it on 20 further values of `k`, and compares it with
/// the printed formula when one exists.
pub fn derive_quasipoly(n: u32) -> Result<Derivation, CombinatoricsError> {
    check_n(n)?;
    if n > 7 {
        return Err(CombinatoricsError::FitTooLarge(n));
    }
    let basis = basis(n);
    let unknowns = basis.len();
    // Enough rows to cover every divisibility pattern up to 2n several times.
    let first = 2u64;
    let last = first + unknowns as u64 + 4 * n as u64;
    let mut rows = Vec::new();
    for k in first..=last {
        let x = BigRational::from_integer(BigInt::from(k));
        let mut row: Vec<BigRational> = basis
            .iter()
            .map(|&(d, j)| {
                if k.is_multiple_of(d) {
                    num_traits::pow(x.clone(), j)
                } else {
                    BigRational::zero()
                }
            })
            .collect();
        row.push(exact_count(n, k)?);
        rows.push(row);
    }
    let coeffs = solve(rows, unknowns).map_err(|r| CombinatoricsError::FitInconsistent {
        k: first + r as u64,
    })?;
    let terms: BTreeMap<(u64, usize), BigRational> = basis.into_iter().zip(coeffs).collect();
    let fitted = QuasiPolynomial::from_terms(&terms);
    let held_out = (last + 1, last + 20);
    for k in held_out.0..=held_out.1 {
        if fitted.evaluate(k) != exact_count(n, k)? {
            return Err(CombinatoricsError::FitInconsistent { k });
        }
    }
    let comparison = match quasipoly_printed(n) {
        Ok(printed) => Some(compare(n, &printed, &fitted)?),
        Err(_) => None,
    };
    Ok(Derivation {
        n,
        fitted,
        training: (first, last),
        held_out,
        comparison,
    })
}

fn compare(n: u32, printed: &QuasiPolynomial, fitted: &QuasiPolynomial) -> Result<TermComparison, CombinatoricsError> {
    let (a, b) = (printed.terms(), fitted.terms());
    let mut keys: Vec<_> = a.keys().chain(b.keys()).copied().collect();
    keys.sort_unstable();
    keys.dedup();
    let differences: Vec<TermDifference> = keys
        .into_iter()
        .filter_map(|key| {
            let p = a.get(&key).cloned().unwrap_or_else(BigRational::zero);
            let f = b.get(&key).cloned().unwrap_or_else(BigRational::zero);
            (p != f).then_some(TermDifference {
                divisor: key.0,
                power: key.1,
                printed: p,
                fitted: f,
            })
        })
        .collect();
    let mut value_mismatches = Vec::new();
    for k in 2..=50u64 {
        let exact = exact_count(n, k)?;
        let value = printed.evaluate(k);
        if value != exact {
            let exact = exact.to_integer().to_biguint().expect("counts are non-negative");
            value_mismatches.push((k, value, exact));
        }
    }
    Ok(TermComparison {
        term_for_term: differences.is_empty(),
        differences,
        value_mismatches,
    })
}

/// Renders a rational as `p/q`, or `p` when integral.
pub fn format_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printed_n3_small_values() {
        let q = quasipoly_printed(3).unwrap();
        for (k, v) in [(2u64, 62u32), (3, 116), (4, 200), (5, 318)] {
            assert_eq!(q.evaluate_count(k).unwrap(), BigUint::from(v));
        }
        assert_eq!(q.evaluate_count(1).unwrap(), BigUint::from(28u32));
    }

    #[test]
    fn display_reads_like_the_formula() {
        let q = quasipoly_printed(3).unwrap();
        assert_eq!(
            q.to_string(),
            "k^4/60 + 5k^3/6 + 67k^2/12 + 61k/6 + 57/5 + [1]_{2|k} + [8/5]_{5|k}"
        );
    }

    #[test]
    fn n3_fit_matches_print() {
        let d = derive_quasipoly(3).unwrap();
        let cmp = d.comparison.unwrap();
        assert!(cmp.term_for_term, "{:?}", cmp.differences);
        assert!(cmp.value_mismatches.is_empty());
        assert_eq!(d.fitted, quasipoly_printed(3).unwrap());
    }

    #[test]
    fn n5_print_is_flagged() {
        let d = derive_quasipoly(5).unwrap();
        let cmp = d.comparison.unwrap();
        assert!(!cmp.term_for_term);
        assert_eq!(cmp.value_mismatches.first().map(|m| m.0), Some(2));
        assert!(cmp.differences.iter().any(|t| t.divisor == 1 && t.power == 4));
    }

    #[test]
    fn unsupported_inputs() {
        assert_eq!(quasipoly_printed(7), Err(CombinatoricsError::UnsupportedN(7)));
        assert_eq!(derive_quasipoly(9), Err(CombinatoricsError::FitTooLarge(9)));
        assert!(derive_quasipoly(7).unwrap().comparison.is_none());
    }

    #[test]
    fn formatting_helpers() {
        assert_eq!(format_rational(&rat(6, 4)), "3/2");
        assert_eq!(format_rational(&rat(4, 2)), "2");
    }
}
