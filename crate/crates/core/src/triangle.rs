//! Integer-sided triangles, their excess triples, and the integer form of Heron's formula.
//!
//! For sides `a, b, c` the excesses are `N₁ = −a+b+c`, `N₂ = a−b+c`, `N₃ = a+b−c`.
//! They sum to the perimeter `N`, and `16A² = N·N₁·N₂·N₃`. The semiperimeter is never
//! materialized; everything stays integral.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::arith::{gcd, gcd_many, is_perfect_square, residue, two_adic_valuation, Natural};
use crate::error::{Error, Result};

/// Three positive integer sides satisfying the strict triangle inequality.
///
/// Operations keep the caller's side order; [`Triangle::canonical`] sorts descending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triangle {
    sides: [Natural; 3],
}

impl Triangle {
    pub fn new(a: impl Into<Natural>, b: impl Into<Natural>, c: impl Into<Natural>) -> Result<Self> {
        Self::from_sides([a.into(), b.into(), c.into()])
    }

    pub fn from_sides(sides: [Natural; 3]) -> Result<Self> {
        let [a, b, c] = &sides;
        if a + b <= *c || a + c <= *b || b + c <= *a {
            return Err(Error::DegenerateTriangle {
                a: a.to_string(),
                b: b.to_string(),
                c: c.to_string(),
            });
        }
        Ok(Self { sides })
    }

    pub fn a(&self) -> &Natural {
        &self.sides[0]
    }

    pub fn b(&self) -> &Natural {
        &self.sides[1]
    }

    pub fn c(&self) -> &Natural {
        &self.sides[2]
    }

    pub fn sides(&self) -> &[Natural; 3] {
        &self.sides
    }

    pub fn perimeter(&self) -> Natural {
        self.sides.iter().sum()
    }

    /// Same triangle with sides sorted so that `a ≥ b ≥ c`.
    pub fn canonical(&self) -> Triangle {
        let mut sides = self.sides.clone();
        sides.sort_unstable_by(|x, y| y.cmp(x));
        Triangle { sides }
    }

    /// Reorders the sides: the result's side `i` is `self`'s side `order[i]`.
    pub fn permuted(&self, order: [usize; 3]) -> Triangle {
        Triangle { sides: order.map(|i| self.sides[i].clone()) }
    }

    /// True when the longest side is the hypotenuse of a right angle.
    pub fn is_right(&self) -> bool {
        let [a, b, c] = self.canonical().sides;
        &a * &a == &b * &b + &c * &c
    }
}

impl fmt::Display for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = &self.sides;
        write!(f, "({a}, {b}, {c})")
    }
}

/// Excesses of a triangle together with both gcds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExcessTriple {
    /// `[N₁, N₂, N₃]`.
    pub excess: [Natural; 3],
    /// `N = N₁ + N₂ + N₃ = a + b + c`.
    pub perimeter: Natural,
    /// `δ = gcd(a, b, c)`.
    pub side_gcd: Natural,
    /// `d = gcd(N₁, N₂, N₃)`; always `δ` or `2δ`.
    pub excess_gcd: Natural,
}

impl ExcessTriple {
    /// `[N₁/d, N₂/d, N₃/d]`.
    pub fn reduced(&self) -> [Natural; 3] {
        self.excess.clone().map(|n| n / &self.excess_gcd)
    }

    /// `N/d`.
    pub fn reduced_perimeter(&self) -> Natural {
        &self.perimeter / &self.excess_gcd
    }

    pub fn all_even(&self) -> bool {
        self.excess.iter().all(Integer::is_even)
    }

    pub fn all_odd(&self) -> bool {
        self.excess.iter().all(Integer::is_odd)
    }

    /// 2-adic valuations of the three excesses.
    pub fn alphas(&self) -> [u64; 3] {
        self.excess
            .clone()
            .map(|n| two_adic_valuation(&n).expect("excesses are positive"))
    }
}

pub fn excess_triple(t: &Triangle) -> ExcessTriple {
    let [a, b, c] = t.sides();
    // Each subtraction is positive by the triangle inequality.
    let excess = [b + c - a, a + c - b, a + b - c];
    let excess_gcd = gcd_many(&excess).expect("excesses are positive");
    let side_gcd = gcd_many(t.sides()).expect("sides are positive");
    ExcessTriple { perimeter: t.perimeter(), excess, side_gcd, excess_gcd }
}

/// Rebuilds `a = (N₂+N₃)/2`, `b = (N₁+N₃)/2`, `c = (N₁+N₂)/2`.
pub fn triangle_from_excess(n1: &Natural, n2: &Natural, n3: &Natural) -> Result<Triangle> {
    for n in [n1, n2, n3] {
        if n.is_zero() {
            return Err(Error::NonPositive("excess values must be ≥ 1".into()));
        }
    }
    if !(n1.is_even() == n2.is_even() && n2.is_even() == n3.is_even()) {
        return Err(Error::Parity(format!(
            "excesses ({n1}, {n2}, {n3}) mix parities, so the sides would not be integers"
        )));
    }
    Triangle::from_sides([(n2 + n3) >> 1u32, (n1 + n3) >> 1u32, (n1 + n2) >> 1u32])
}

/// `16A² = N·N₁·N₂·N₃`.
pub fn sixteen_area_squared(t: &Triangle) -> Natural {
    let e = excess_triple(t);
    let [n1, n2, n3] = &e.excess;
    e.perimeter * n1 * n2 * n3
}

/// The area when it is rational, which forces it to be an integer.
pub fn integer_area(t: &Triangle) -> Option<Natural> {
    let root = is_perfect_square(&sixteen_area_squared(t))?;
    assert!(
        residue(&root, 4) == 0,
        "4A = {root} is not a multiple of 4 for triangle {t}; rational areas must be even integers"
    );
    Some(root >> 2u32)
}

/// The seven parity patterns of a triangle's sides.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CaseLabel {
    /// All sides odd; excesses odd, `d = δ`.
    Case1,
    /// Exactly one side even; `d = 2δ`.
    Case2,
    /// Exactly two sides even; excesses odd, `d = δ`.
    Case3,
    /// All even and none of the mod-4 patterns below; excesses all ≡ 2 (mod 4), `d = δ`.
    Case4,
    /// Two sides ≡ 2 (mod 4), one ≡ 0 (mod 4); `d = 2δ`.
    Case5,
    /// All sides ≡ 0 (mod 4) with excess valuations not all equal; `d = 2δ`.
    Case6,
    /// All sides ≡ 0 (mod 4) with equal excess valuations; `d = δ`.
    Case7,
}

impl CaseLabel {
    pub const ALL: [CaseLabel; 7] = [
        CaseLabel::Case1,
        CaseLabel::Case2,
        CaseLabel::Case3,
        CaseLabel::Case4,
        CaseLabel::Case5,
        CaseLabel::Case6,
        CaseLabel::Case7,
    ];

    pub fn number(self) -> u8 {
        self as u8 + 1
    }

    /// Whether this pattern has `d = 2δ` (otherwise `d = δ`).
    pub fn doubles_gcd(self) -> bool {
        matches!(self, CaseLabel::Case2 | CaseLabel::Case5 | CaseLabel::Case6)
    }
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Case {}", self.number())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParityCase {
    pub label: CaseLabel,
    /// Excess valuations, present for Cases 6 and 7.
    pub alphas: Option<[u64; 3]>,
}

pub fn classify_parity_case(t: &Triangle) -> ParityCase {
    let evens = t.sides().iter().filter(|s| s.is_even()).count();
    let label = match evens {
        0 => CaseLabel::Case1,
        1 => CaseLabel::Case2,
        2 => CaseLabel::Case3,
        _ => {
            let mut r = t.sides().clone().map(|s| residue(&s, 4));
            r.sort_unstable();
            match r {
                [0, 2, 2] => CaseLabel::Case5,
                [0, 0, 0] => {
                    let alphas = excess_triple(t).alphas();
                    let label = if alphas[0] == alphas[1] && alphas[1] == alphas[2] {
                        CaseLabel::Case7
                    } else {
                        CaseLabel::Case6
                    };
                    return ParityCase { label, alphas: Some(alphas) };
                }
                _ => CaseLabel::Case4,
            }
        }
    };
    ParityCase { label, alphas: None }
}

/// Exact cosines and (when the area is rational) sines of the three angles.
///
/// Angle `i` is opposite side `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrigProfile {
    pub cosines: [BigRational; 3],
    pub sines: Option<[BigRational; 3]>,
}

impl TrigProfile {
    pub fn is_consistent(&self) -> bool {
        let one = BigRational::from_integer(1.into());
        let cos_ok = self.cosines.iter().all(|c| c.abs() < one);
        let sin_ok = match &self.sines {
            None => true,
            Some(s) => s
                .iter()
                .zip(&self.cosines)
                .all(|(s, c)| s.is_positive() && s * s + c * c == one),
        };
        cos_ok && sin_ok
    }
}

pub fn trig_profile(t: &Triangle) -> TrigProfile {
    let s = t.sides().clone().map(BigInt::from);
    let opposite = |i: usize| {
        let (x, y) = (&s[(i + 1) % 3], &s[(i + 2) % 3]);
        (x, y, &s[i])
    };
    let cosines = [0, 1, 2].map(|i| {
        let (x, y, z) = opposite(i);
        BigRational::new(x * x + y * y - z * z, BigInt::from(2) * x * y)
    });
    let sines = integer_area(t).map(|area| {
        let twice = BigInt::from(area) * BigInt::from(2u32);
        [0, 1, 2].map(|i| {
            let (x, y, _) = opposite(i);
            BigRational::new(twice.clone(), x * y)
        })
    });
    TrigProfile { cosines, sines }
}

/// Whether `N/d` is coprime to `(N₁/d)(N₂/d)(N₃/d)`.
pub fn satisfies_condition6(t: &Triangle) -> bool {
    let e = excess_triple(t);
    let product: Natural = e.reduced().iter().product();
    num_traits::One::is_one(&gcd(&product, &e.reduced_perimeter()))
}

/// `gcd((a/δ)(b/δ)(c/δ), N/d)` and `gcd((a/δ)(b/δ)(c/δ), N/δ)`.
///
/// Both are reported because the exceptional sub-cases are stated against `N/δ`
/// while the main statement uses `N/d`.
pub fn reduced_side_product_gcds(t: &Triangle) -> (Natural, Natural) {
    let e = excess_triple(t);
    let product: Natural = t.sides().iter().map(|s| s / &e.side_gcd).product();
    (
        gcd(&product, &e.reduced_perimeter()),
        gcd(&product, &(&e.perimeter / &e.side_gcd)),
    )
}
