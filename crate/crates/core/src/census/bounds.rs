//! Bounds on `f` and `F`, and the reference counts they are fed with.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

/// Values up to this many bits are kept exactly.
const EXACT_BITS: u64 = 1 << 16;

/// A non-negative quantity, exact or given by its base-2 logarithm.
#[derive(Clone, Debug)]
pub enum BigBound {
    Exact(BigUint),
    /// `2^x`; `x` may be infinite when even the logarithm overflows.
    Log2(f64),
}

fn log2_big(n: &BigUint) -> f64 {
    if n.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = n.bits();
    if bits <= 1000 {
        return n.to_f64().unwrap().log2();
    }
    let shift = bits - 64;
    (n >> shift).to_f64().unwrap().log2() + shift as f64
}

impl BigBound {
    pub fn exact(n: impl Into<BigUint>) -> BigBound {
        BigBound::Exact(n.into())
    }

    pub fn log2(&self) -> f64 {
        match self {
            BigBound::Exact(n) => log2_big(n),
            BigBound::Log2(x) => *x,
        }
    }

    pub fn as_exact(&self) -> Option<&BigUint> {
        match self {
            BigBound::Exact(n) => Some(n),
            BigBound::Log2(_) => None,
        }
    }
}

impl PartialEq for BigBound {
    fn eq(&self, other: &BigBound) -> bool {
        self.partial_cmp(other) == Some(Ordering::Equal)
    }
}

impl PartialOrd for BigBound {
    fn partial_cmp(&self, other: &BigBound) -> Option<Ordering> {
        match (self, other) {
            (BigBound::Exact(a), BigBound::Exact(b)) => Some(a.cmp(b)),
            _ => self.log2().partial_cmp(&other.log2()),
        }
    }
}

impl fmt::Display for BigBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BigBound::Exact(n) => {
                let digits = n.to_string();
                if digits.len() <= 20 {
                    return f.write_str(&digits);
                }
                // Three significant digits, rounded half up.
                let lead: u32 = digits[..4].parse().unwrap();
                let (lead, exp) = match (lead + 5) / 10 {
                    1000 => (100, digits.len()),
                    l => (l, digits.len() - 1),
                };
                write!(f, "{}.{:02}e{exp}", lead / 100, lead % 100)
            }
            BigBound::Log2(x) if x.is_infinite() => f.write_str("2^(beyond f64)"),
            BigBound::Log2(x) => write!(f, "2^{x:.3}"),
        }
    }
}

impl From<u64> for BigBound {
    fn from(n: u64) -> BigBound {
        BigBound::exact(n)
    }
}

/// `r[n]`: a tower of `n` copies of `r`; `r[0] = 1`.
pub fn power_tower(r: u32, n: u32) -> BigBound {
    assert!(r >= 2, "tower base must be at least 2");
    let lr = (r as f64).log2();
    let mut v = BigBound::exact(1u32);
    for _ in 0..n {
        v = match &v {
            BigBound::Exact(e) => match e.to_u64() {
                Some(e) if (e as f64) * lr <= EXACT_BITS as f64 => {
                    BigBound::Exact(BigUint::from(r).pow(e as u32))
                }
                _ => BigBound::Log2(log2_to_f64(e) * lr),
            },
            BigBound::Log2(x) => BigBound::Log2(x.exp2() * lr),
        };
    }
    v
}

fn log2_to_f64(e: &BigUint) -> f64 {
    e.to_f64().unwrap_or(f64::INFINITY)
}

/// Upper bound on `F(b + 1)` from `a(b)` and `F(b)`:
/// `2 a(b) (F(b) + b + 1) + 5b + 8`.
pub fn bound_lemma51(a_b: &BigUint, f_b: &BigUint, b: u64) -> BigUint {
    BigUint::from(2u32) * a_b * (f_b + b + 1u32) + 5 * b + 8u32
}

/// Lower bound on `F(b)`: `2[b - 1]` for `b >= 1`; 0 for `b = 0`.
pub fn bound_thm54(b: u32) -> BigBound {
    if b == 0 {
        return BigBound::exact(0u32);
    }
    power_tower(2, b - 1)
}

/// Upper bound `n 2^(n^2)` on the number of values realised on at most
/// `n` vertices.
pub fn bound_lemma53(n: u64) -> BigBound {
    if n == 0 {
        return BigBound::exact(1u32);
    }
    let bits = n.checked_mul(n);
    match bits {
        Some(bits) if bits <= EXACT_BITS => BigBound::Exact(BigUint::from(n) << bits),
        _ => BigBound::Log2((n as f64).log2() + (n as f64) * (n as f64)),
    }
}

/// Largest integer strictly below `g(b + 1) / 2 - b`, an upper bound on
/// `F(b)` for `b >= 1`.
pub fn bound_thm57(g_b1: &BigBound, b: u64) -> BigBound {
    match g_b1 {
        BigBound::Exact(g) => {
            // F < (g - 2b) / 2  iff  F <= ceil((g - 2b) / 2) - 1.
            let two_b = BigUint::from(2 * b);
            if *g <= two_b {
                return BigBound::exact(0u32);
            }
            let d = g - two_b;
            let ceil_half: BigUint = (d + 1u32) >> 1;
            BigBound::Exact(ceil_half - BigUint::one())
        }
        BigBound::Log2(x) => BigBound::Log2(x - 1.0),
    }
}

#[derive(Clone, Debug)]
pub struct ReferenceRow {
    pub b: u32,
    /// Largest antichain among values born by day `b`.
    pub a: BigUint,
    /// Number of values born by day `b`.
    pub g: BigUint,
    /// False when `a` and `g` are only upper bounds.
    pub exact: bool,
}

/// Published antichain sizes and value counts for `b <= 4`.
#[derive(Clone, Debug)]
pub struct ReferenceTable {
    pub rows: Vec<ReferenceRow>,
}

impl Default for ReferenceTable {
    fn default() -> Self {
        let row = |b, a: u64, g: u64| ReferenceRow { b, a: a.into(), g: g.into(), exact: true };
        let big = BigUint::from(4u32) * BigUint::from(10u32).pow(184);
        ReferenceTable {
            rows: vec![
                row(0, 1, 1),
                row(1, 2, 4),
                row(2, 4, 22),
                row(3, 86, 1474),
                ReferenceRow { b: 4, a: big.clone(), g: big, exact: false },
            ],
        }
    }
}

impl ReferenceTable {
    pub fn row(&self, b: u32) -> Option<&ReferenceRow> {
        self.rows.iter().find(|r| r.b == b)
    }
}

#[derive(Clone, Debug)]
pub struct BoundRow {
    pub b: u32,
    pub lower: BigBound,
    pub upper: BigBound,
    /// The upper bound was computed from a reference entry that is itself
    /// only an upper bound.
    pub upper_from_bound_input: bool,
}

/// Lower and upper bounds on `F(b)` for `b <= 5`: exact for `b <= 2`, then
/// the recursive upper bound fed with the reference table and the tower
/// lower bound.
pub fn theorem_table() -> Vec<BoundRow> {
    let table = ReferenceTable::default();
    let mut rows = Vec::new();
    let mut f_upper = BigUint::zero();
    let mut inexact = false;
    for b in 0..=5u32 {
        let row = match b {
            0..=2 => {
                let f = BigBound::exact([0u32, 2, 4][b as usize]);
                BoundRow { b, lower: f.clone(), upper: f, upper_from_bound_input: false }
            }
            _ => {
                let prev = table.row(b - 1).expect("reference rows cover b <= 4");
                inexact |= !prev.exact;
                // One more vertex than the four that {1|-1} needs.
                let lower = if b == 3 { BigBound::exact(5u32) } else { bound_thm54(b) };
                let upper = bound_lemma51(&prev.a, &f_upper, (b - 1) as u64);
                BoundRow { b, lower, upper: BigBound::Exact(upper), upper_from_bound_input: inexact }
            }
        };
        f_upper = row.upper.as_exact().cloned().expect("table upper bounds are exact");
        rows.push(row);
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: u64) -> BigUint {
        n.into()
    }

    #[test]
    fn towers() {
        assert_eq!(power_tower(2, 0), BigBound::from(1));
        assert_eq!(power_tower(2, 1), BigBound::from(2));
        assert_eq!(power_tower(2, 3), BigBound::from(16));
        assert_eq!(power_tower(2, 4), BigBound::from(65536));
        assert_eq!(power_tower(3, 2), BigBound::from(27));
        let t5 = power_tower(2, 5);
        assert_eq!(t5.log2(), 65536.0);
        assert!(power_tower(2, 6) > t5);
        assert!(matches!(power_tower(2, 6), BigBound::Log2(x) if x.is_infinite()));
    }

    #[test]
    fn mixed_comparisons() {
        assert!(BigBound::Log2(10.0) > BigBound::from(1000));
        assert!(BigBound::Log2(10.0) < BigBound::from(1025));
        assert_eq!(BigBound::Log2(3.0), BigBound::from(8));
    }

    #[test]
    fn recursive_upper_bound() {
        assert_eq!(bound_lemma51(&big(4), &big(4), 2), big(74));
        assert_eq!(bound_lemma51(&big(86), &big(74), 3), big(13439));
        assert_eq!(bound_lemma51(&big(1), &big(0), 0), big(10));
    }

    #[test]
    fn tower_lower_bound() {
        assert_eq!(bound_thm54(4), BigBound::from(16));
        assert_eq!(bound_thm54(5), BigBound::from(65536));
        assert_eq!(bound_thm54(2), BigBound::from(2));
    }

    #[test]
    fn counting_bound() {
        assert_eq!(bound_lemma53(1), BigBound::from(2));
        assert_eq!(bound_lemma53(4), BigBound::from(4 << 16));
        let far = bound_lemma53(1000);
        assert!((far.log2() - (1000f64.log2() + 1e6)).abs() < 1e-6);
    }

    #[test]
    fn non_recursive_upper_bound() {
        assert_eq!(bound_thm57(&BigBound::from(22), 1), BigBound::from(9));
        assert_eq!(bound_thm57(&BigBound::from(1474), 2), BigBound::from(734));
        assert_eq!(bound_thm57(&BigBound::from(7), 1), BigBound::from(2));
    }

    #[test]
    fn table_rows() {
        let rows = theorem_table();
        let upper: Vec<String> = rows.iter().map(|r| r.upper.to_string()).collect();
        assert_eq!(&upper[..5], &["0", "2", "4", "74", "13439"]);
        assert_eq!(upper[5], "1.08e189");
        let lower: Vec<String> = rows.iter().map(|r| r.lower.to_string()).collect();
        assert_eq!(lower, ["0", "2", "4", "5", "16", "65536"]);
        assert!(rows[5].upper_from_bound_input && !rows[4].upper_from_bound_input);
        let reference = ReferenceTable::default();
        assert_eq!(reference.row(3).unwrap().a, big(86));
        assert!(!reference.row(4).unwrap().exact);
    }
}
