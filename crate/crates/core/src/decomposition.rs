//! Coprime factorization of an integer-area triangle.
//!
//! With `d = gcd(N₁, N₂, N₃)` and reduced excesses `qᵢ = Nᵢ/d`, `Q = N/d`:
//!
//! ```text
//! qᵢ = Dᵢ · d_ij · d_ik · kᵢ²        Dᵢ  = gcd(qᵢ, Q)
//! Q  = D₁ · D₂ · D₃ · k²             d_ij = gcd(qᵢ, qⱼ)
//! ```
//!
//! and the identity `q₁ + q₂ + q₃ = Q` becomes
//! `D₁d₁₂d₁₃k₁² + D₂d₁₂d₂₃k₂² + D₃d₁₃d₂₃k₃² = D₁D₂D₃k²`.
//! The residual cofactors are pairwise coprime and their product is a square, so each
//! one is a square; `decompose` asserts this rather than assuming it.
//!
//! When all of `Dᵢ` and `d_ij` are squares, `Dᵢ = Lᵢ²` and `d_ij = δ_ij²`, the factorization
//! yields the primitive solution
//! `x = L₁δ₁₂δ₁₃k₁, y = L₂δ₁₂δ₂₃k₂, z = L₃δ₁₃δ₂₃k₃, t = L₁L₂L₃k` of `x² + y² + z² = t²`.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{gcd, is_perfect_square, residue, Natural};
use crate::error::{Error, Result};
use crate::generator::triangle_from_solution;
use crate::quad::{is_primitive_solution, QuadSolution};
use crate::triangle::{excess_triple, integer_area, Triangle};

/// Index pairs of the three pair gcds, in the order `d₁₂, d₁₃, d₂₃`.
pub const PAIRS: [(usize, usize); 3] = [(0, 1), (0, 2), (1, 2)];

/// The two pair-gcd slots that touch excess `i`.
const PAIRS_OF: [[usize; 2]; 3] = [[0, 1], [0, 2], [1, 2]];

/// The pair-gcd slot that does not touch excess `i`.
const OPPOSITE_PAIR: [usize; 3] = [2, 1, 0];

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoprimeFactorization {
    /// `d`, the gcd of the three excesses.
    pub d: Natural,
    /// `[D₁, D₂, D₃]`.
    pub perimeter_gcds: [Natural; 3],
    /// `[d₁₂, d₁₃, d₂₃]`.
    pub pair_gcds: [Natural; 3],
    /// `[k₁, k₂, k₃]`.
    pub excess_roots: [Natural; 3],
    /// `k`.
    pub perimeter_root: Natural,
}

/// One of the nine integers `D₁…D₃, d₁₂…d₂₃, k₁…k₃`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FactorEntry {
    PerimeterGcd(usize),
    PairGcd(usize),
    ExcessRoot(usize),
}

impl fmt::Display for FactorEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FactorEntry::PerimeterGcd(i) => write!(f, "D{}", i + 1),
            FactorEntry::PairGcd(p) => write!(f, "d{}{}", PAIRS[p].0 + 1, PAIRS[p].1 + 1),
            FactorEntry::ExcessRoot(i) => write!(f, "k{}", i + 1),
        }
    }
}

impl CoprimeFactorization {
    /// `qᵢ = Dᵢ · d_ij · d_ik · kᵢ²`.
    pub fn reduced_excess(&self, i: usize) -> Natural {
        let [p, r] = PAIRS_OF[i];
        let k = &self.excess_roots[i];
        &self.perimeter_gcds[i] * &self.pair_gcds[p] * &self.pair_gcds[r] * k * k
    }

    /// `Q = D₁D₂D₃k²`.
    pub fn reduced_perimeter(&self) -> Natural {
        let k = &self.perimeter_root;
        self.perimeter_gcds.iter().product::<Natural>() * k * k
    }

    /// The sum identity `q₁ + q₂ + q₃ = Q`.
    pub fn satisfies_sum_identity(&self) -> bool {
        (0..3).map(|i| self.reduced_excess(i)).sum::<Natural>() == self.reduced_perimeter()
    }

    /// `4A = D₁D₂D₃ · d₁₂d₁₃d₂₃ · k₁k₂k₃ · k · d²`.
    pub fn four_area(&self) -> Natural {
        self.perimeter_gcds.iter().product::<Natural>()
            * self.pair_gcds.iter().product::<Natural>()
            * self.excess_roots.iter().product::<Natural>()
            * &self.perimeter_root
            * &self.d
            * &self.d
    }

    pub fn get(&self, entry: FactorEntry) -> &Natural {
        match entry {
            FactorEntry::PerimeterGcd(i) => &self.perimeter_gcds[i],
            FactorEntry::PairGcd(p) => &self.pair_gcds[p],
            FactorEntry::ExcessRoot(i) => &self.excess_roots[i],
        }
    }

    /// The nine integers in the order `D₁ D₂ D₃ d₁₂ d₁₃ d₂₃ k₁ k₂ k₃`.
    pub fn nine(&self) -> [FactorEntry; 9] {
        use FactorEntry::*;
        [
            PerimeterGcd(0),
            PerimeterGcd(1),
            PerimeterGcd(2),
            PairGcd(0),
            PairGcd(1),
            PairGcd(2),
            ExcessRoot(0),
            ExcessRoot(1),
            ExcessRoot(2),
        ]
    }

    pub fn even_entries(&self) -> Vec<FactorEntry> {
        self.nine().into_iter().filter(|&e| self.get(e).is_even()).collect()
    }

    /// At least one and at most two of the nine are even, and an even pair is either
    /// `(d_ij, kᵢ)`/`(d_ij, kⱼ)` or `(Dᵢ, kᵢ)`.
    pub fn even_pattern_is_admissible(&self) -> bool {
        use FactorEntry::*;
        match self.even_entries()[..] {
            [_] => true,
            [PerimeterGcd(i), ExcessRoot(j)] => i == j,
            [PairGcd(p), ExcessRoot(j)] => PAIRS[p].0 == j || PAIRS[p].1 == j,
            _ => false,
        }
    }

    /// Names of the coprimeness conditions that fail (empty for a valid factorization).
    pub fn coprimeness_violations(&self) -> Vec<&'static str> {
        let big_d = &self.perimeter_gcds;
        let pair = &self.pair_gcds;
        let m: [Natural; 3] = self.excess_roots.clone().map(|k| &k * &k);
        let big_m = &self.perimeter_root * &self.perimeter_root;
        let coprime = |a: &Natural, b: &Natural| gcd(a, b).is_one();
        let mut out = Vec::new();

        // Dᵢ is coprime to Dⱼ·d_jk·Mⱼ for both other indices j (k the remaining one).
        for i in 0..3 {
            for j in (0..3).filter(|&j| j != i) {
                let other = &big_d[j] * &pair[OPPOSITE_PAIR[i]] * &m[j];
                if !coprime(&big_d[i], &other) {
                    out.push(["(i) D1", "(ii) D2", "(iii) D3"][i]);
                }
            }
        }
        if PAIRS.iter().enumerate().any(|(p, _)| {
            (p + 1..3).any(|r| !coprime(&pair[p], &pair[r]))
        }) {
            out.push("(iv) pair gcds");
        }
        let rest = pair.iter().product::<Natural>() * m.iter().product::<Natural>();
        if !coprime(&big_m, &rest) {
            out.push("(v) M");
        }
        let d_prod: Natural = big_d.iter().product();
        if !coprime(&d_prod, &pair.iter().product()) {
            out.push("(vi) D vs pair gcds");
        }
        if (0..3).any(|i| (i + 1..3).any(|j| !coprime(&m[i], &m[j]))) {
            out.push("(vii) M pairwise");
        }
        let ks = &self.excess_roots;
        if !coprime(&self.perimeter_root, &ks.iter().product()) {
            out.push("k vs k1k2k3");
        }
        out.dedup();
        out
    }

    /// Reduced excess `i` even, the other two odd, and the two pair gcds touching `i`
    /// congruent to each other and odd mod 4 (both ≡ 1 or both ≡ 3).
    pub fn has_mod4_obstruction_pattern(&self) -> bool {
        let q = [0, 1, 2].map(|i| self.reduced_excess(i));
        (0..3).any(|i| {
            let others_odd = (0..3).filter(|&j| j != i).all(|j| q[j].is_odd());
            let [p, r] = PAIRS_OF[i];
            let (rp, rr) = (residue(&self.pair_gcds[p], 4), residue(&self.pair_gcds[r], 4));
            q[i].is_even() && others_odd && rp == rr && rp % 2 == 1
        })
    }
}

/// Square roots `Lᵢ = √Dᵢ` and `δ_ij = √d_ij` carried by a solid witness.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SquareRoots {
    pub perimeter: [Natural; 3],
    pub pair: [Natural; 3],
}

/// A primitive solution and even `d` whose generated triangle has the given area.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SolidWitness {
    pub solution: QuadSolution,
    pub d: Natural,
    pub square_roots: SquareRoots,
}

impl SolidWitness {
    /// Builds the witness straight from a primitive solution, recovering the roots as
    /// `δ_ij = gcd` of the matching legs and `Lᵢ = gcd(legᵢ / (δ_ij δ_ik), t)`.
    pub fn from_primitive(solution: &QuadSolution, d: &Natural) -> Result<Self> {
        if !is_primitive_solution(solution) {
            return Err(Error::NonPrimitive(format!("solution {solution} has gcd(x, y, z) > 1")));
        }
        if d.is_zero() || d.is_odd() {
            return Err(Error::Parity(format!("d = {d} must be a positive even integer")));
        }
        let legs = solution.legs();
        let pair = PAIRS.map(|(i, j)| gcd(legs[i], legs[j]));
        let perimeter = [0, 1, 2].map(|i| {
            let [p, r] = PAIRS_OF[i];
            gcd(&(legs[i] / (&pair[p] * &pair[r])), solution.t())
        });
        Ok(Self {
            solution: solution.clone(),
            d: d.clone(),
            square_roots: SquareRoots { perimeter, pair },
        })
    }

    /// `x·y·z·t·d²/4`.
    pub fn area(&self) -> Natural {
        (self.solution.product() * &self.d * &self.d) >> 2u32
    }

    /// The triangle `a = d(y²+z²)/2, b = d(x²+z²)/2, c = d(x²+y²)/2`.
    pub fn triangle(&self) -> Triangle {
        triangle_from_solution(&self.solution, &self.d)
            .expect("even d is a legal scale")
            .triangle
    }
}

pub fn decompose(t: &Triangle) -> Result<CoprimeFactorization> {
    let area = integer_area(t).ok_or_else(|| {
        let [a, b, c] = t.sides().clone().map(|s| s.to_string());
        Error::IrrationalArea { a, b, c }
    })?;
    let e = excess_triple(t);
    let q = e.reduced();
    let big_q = e.reduced_perimeter();

    let perimeter_gcds = [0, 1, 2].map(|i| gcd(&q[i], &big_q));
    let pair_gcds = PAIRS.map(|(i, j)| gcd(&q[i], &q[j]));

    let square_root = |what: &str, v: Natural| {
        is_perfect_square(&v).unwrap_or_else(|| {
            panic!("{what} = {v} is not a perfect square for integer-area triangle {t}")
        })
    };
    let excess_roots = [0, 1, 2].map(|i| {
        let [p, r] = PAIRS_OF[i];
        let (m, rem) = q[i].div_rem(&(&perimeter_gcds[i] * &pair_gcds[p] * &pair_gcds[r]));
        assert!(rem.is_zero(), "pairwise-coprime factors must divide q{}", i + 1);
        square_root(["M1", "M2", "M3"][i], m)
    });
    let (big_m, rem) = big_q.div_rem(&perimeter_gcds.iter().product());
    assert!(rem.is_zero(), "D1·D2·D3 must divide N/d");
    let perimeter_root = square_root("M", big_m);

    let f = CoprimeFactorization {
        d: e.excess_gcd,
        perimeter_gcds,
        pair_gcds,
        excess_roots,
        perimeter_root,
    };
    let broken = f.coprimeness_violations();
    assert!(broken.is_empty(), "coprimeness conditions {broken:?} fail for {t}");
    assert!(f.satisfies_sum_identity(), "sum identity fails for {t}");
    assert_eq!(f.four_area(), area << 2u32, "area formula disagrees with Heron for {t}");
    Ok(f)
}

/// Rebuilds the sides `a = d·d₂₃·(D₂d₁₂k₂² + D₃d₁₃k₃²)/2` (and cyclically) and the area.
pub fn reconstruct_from_factorization(f: &CoprimeFactorization) -> Result<(Triangle, Natural)> {
    let entries = f.nine();
    if f.d.is_zero() || f.perimeter_root.is_zero() || entries.iter().any(|&e| f.get(e).is_zero()) {
        return Err(Error::Invariant("every factorization entry must be ≥ 1".into()));
    }
    if !f.satisfies_sum_identity() {
        return Err(Error::Invariant(format!(
            "sum identity fails: {} ≠ {}",
            (0..3).map(|i| f.reduced_excess(i)).sum::<Natural>(),
            f.reduced_perimeter()
        )));
    }
    let (big_d, pair, k) = (&f.perimeter_gcds, &f.pair_gcds, &f.excess_roots);
    let sq = |i: usize| &k[i] * &k[i];
    // side i = d · d_jk · (D_j · d_ij · k_j² + D_k · d_ik · k_k²) / 2 with {j, k} the other two.
    let twice = [
        &f.d * &pair[2] * (&big_d[1] * &pair[0] * sq(1) + &big_d[2] * &pair[1] * sq(2)),
        &f.d * &pair[1] * (&big_d[0] * &pair[0] * sq(0) + &big_d[2] * &pair[2] * sq(2)),
        &f.d * &pair[0] * (&big_d[0] * &pair[1] * sq(0) + &big_d[1] * &pair[2] * sq(1)),
    ];
    if twice.iter().any(Integer::is_odd) {
        return Err(Error::Invariant("sides are not integers (odd doubled side)".into()));
    }
    let four_area = f.four_area();
    if residue(&four_area, 4) != 0 {
        return Err(Error::Invariant(format!("4A = {four_area} is not a multiple of 4")));
    }
    let triangle = Triangle::from_sides(twice.map(|s| s >> 1u32))?;
    Ok((triangle, four_area >> 2u32))
}

/// The primitive solution hidden in a factorization whose `Dᵢ` and `d_ij` are all squares.
pub fn extract_quad_solution(f: &CoprimeFactorization) -> Option<SolidWitness> {
    let mut perimeter = Vec::with_capacity(3);
    for v in &f.perimeter_gcds {
        perimeter.push(is_perfect_square(v)?);
    }
    let mut pair = Vec::with_capacity(3);
    for v in &f.pair_gcds {
        pair.push(is_perfect_square(v)?);
    }
    let perimeter: [Natural; 3] = perimeter.try_into().ok()?;
    let pair: [Natural; 3] = pair.try_into().ok()?;

    let legs = [0, 1, 2].map(|i| {
        let [p, r] = PAIRS_OF[i];
        &perimeter[i] * &pair[p] * &pair[r] * &f.excess_roots[i]
    });
    let t = perimeter.iter().product::<Natural>() * &f.perimeter_root;
    let [x, y, z] = legs;
    let solution = QuadSolution::new(x, y, z, t)
        .expect("square factorization entries always give a solution");
    assert!(is_primitive_solution(&solution), "extracted solution {solution} is not primitive");

    let witness = SolidWitness {
        solution,
        d: f.d.clone(),
        square_roots: SquareRoots { perimeter, pair },
    };
    // The roots are recoverable from the solution alone.
    let rebuilt = SolidWitness::from_primitive(&witness.solution, &witness.d)
        .expect("decomposition d is even");
    assert_eq!(rebuilt.square_roots, witness.square_roots, "gcd identities fail for {}", witness.solution);
    Some(witness)
}

pub fn classify_solid_rectangular(t: &Triangle) -> Result<Option<SolidWitness>> {
    let f = decompose(t)?;
    let witness = extract_quad_solution(&f);
    if let Some(w) = &witness {
        assert_eq!(&w.triangle(), t, "witness does not rebuild {t}");
    }
    Ok(witness)
}
