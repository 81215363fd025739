//! Exhaustive enumeration of triangle area numbers up to a limit.
//!
//! Three routes are run independently and then compared:
//!
//! * every integer-area triangle, found by looping over even excess triples;
//! * right triangles, found by looping over leg pairs;
//! * solid rectangular areas `x·y·z·t·d²/4`, found from primitive solutions of
//!   `x² + y² + z² = t²` and even `d`.
//!
//! Each area triangle is also run through [`classify_solid_rectangular`], and
//! [`Catalog::cross_check`] reports any disagreement between that and the third route.

use std::collections::{BTreeMap, BTreeSet};
use std::thread;

use num_traits::ToPrimitive;

use crate::arith::{is_perfect_square, isqrt, nat, Natural};
use crate::decomposition::{classify_solid_rectangular, SolidWitness};
use crate::quad::{is_primitive_solution, EnumerationConfig, QuadSolution, SolutionStream};
use crate::triangle::Triangle;

/// The values the solid rectangular list is claimed to contain below 1000.
pub const PAPER_SOLID_LIST: [u64; 2] = [12, 972];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum SolidMode {
    /// Every `x·y·z·t·d²/4` with a primitive solution and even `d`.
    #[default]
    Definition2,
    /// Only the published values [`PAPER_SOLID_LIST`].
    PaperList,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CatalogOptions {
    /// Number of worker threads for the excess loop.
    pub jobs: usize,
    /// Maximum number of witnesses kept per record.
    pub witness_cap: usize,
}

impl Default for CatalogOptions {
    fn default() -> Self {
        Self { jobs: 1, witness_cap: 64 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Witness {
    /// Sides in descending order.
    pub triangle: Triangle,
    pub solid: Option<SolidWitness>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumberRecord {
    pub value: u64,
    pub is_triangle_area: bool,
    pub is_pythagorean: bool,
    pub is_solid_rectangular: bool,
    pub witnesses: Vec<Witness>,
}

impl NumberRecord {
    pub fn classes(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if self.is_triangle_area {
            out.push("triangle_area");
        }
        if self.is_pythagorean {
            out.push("pythagorean");
        }
        if self.is_solid_rectangular {
            out.push("solid_rectangular");
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CountSummary {
    pub area: usize,
    pub pythagorean: usize,
    pub solid: usize,
    pub solid_not_pythagorean: usize,
    pub both: usize,
    pub neither: usize,
    pub area_2_mod_4: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureReport {
    pub limit: u64,
    pub pythagorean_count: usize,
    pub solid_count: usize,
    /// Values that are both Pythagorean and solid rectangular.
    pub counterexamples: Vec<NumberRecord>,
}

impl ConjectureReport {
    pub fn holds(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

#[derive(Debug, Clone)]
pub struct Catalog {
    limit: u64,
    options: CatalogOptions,
    area: BTreeMap<u64, Vec<Witness>>,
    right: BTreeMap<u64, Vec<Triangle>>,
    solid: BTreeMap<u64, BTreeSet<SolidWitness>>,
}

/// Largest perimeter an integer-area triangle of area ≤ `limit` can have.
///
/// All excesses are even and ≥ 2, so `N₁N₂N₃ ≥ 4(N − 4)` and `16A² ≥ 4N(N − 4)`.
pub fn perimeter_bound(limit: u64) -> u64 {
    let l = nat(limit);
    let root = isqrt(&(&l * &l + 1u32)).to_u64().expect("bound fits in u64");
    2 + 2 * root
}

impl Catalog {
    pub fn build(limit: u64, options: &CatalogOptions) -> Self {
        let options = CatalogOptions { jobs: options.jobs.max(1), ..*options };
        let area = area_triangles(limit, options.jobs);
        let right = right_triangles(limit);
        let solid = solid_witnesses(limit);
        Self { limit, options, area, right, solid }
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn area_values(&self) -> impl Iterator<Item = u64> + '_ {
        self.area.keys().copied()
    }

    pub fn pythagorean_values(&self) -> impl Iterator<Item = u64> + '_ {
        self.right.keys().copied()
    }

    pub fn solid_values(&self, mode: SolidMode) -> Vec<u64> {
        match mode {
            SolidMode::Definition2 => self.solid.keys().copied().collect(),
            SolidMode::PaperList => PAPER_SOLID_LIST.into_iter().filter(|&v| v <= self.limit).collect(),
        }
    }

    /// All integer-area triangles with the given area, descending sides, sorted.
    pub fn triangles_with_area(&self, value: u64) -> &[Witness] {
        self.area.get(&value).map_or(&[], Vec::as_slice)
    }

    pub fn right_triangles_with_area(&self, value: u64) -> &[Triangle] {
        self.right.get(&value).map_or(&[], Vec::as_slice)
    }

    /// Solid witnesses found by the solution enumeration route.
    pub fn solid_witnesses(&self, value: u64) -> Vec<SolidWitness> {
        self.solid.get(&value).map(|s| s.iter().cloned().collect()).unwrap_or_default()
    }

    pub fn record(&self, value: u64, mode: SolidMode) -> NumberRecord {
        self.record_with_cap(value, mode, self.options.witness_cap)
    }

    fn record_with_cap(&self, value: u64, mode: SolidMode, cap: usize) -> NumberRecord {
        let witnesses = self.triangles_with_area(value);
        NumberRecord {
            value,
            is_triangle_area: !witnesses.is_empty(),
            is_pythagorean: self.right.contains_key(&value),
            is_solid_rectangular: self.solid_values(mode).contains(&value),
            witnesses: witnesses.iter().take(cap).cloned().collect(),
        }
    }

    pub fn triangle_area_numbers(&self, mode: SolidMode) -> Vec<NumberRecord> {
        self.area.keys().map(|&v| self.record(v, mode)).collect()
    }

    /// Records whose witnesses are the right triangles only.
    pub fn pythagorean_numbers(&self, mode: SolidMode) -> Vec<NumberRecord> {
        self.right
            .iter()
            .map(|(&v, tris)| {
                let mut r = self.record(v, mode);
                r.witnesses = tris
                    .iter()
                    .take(self.options.witness_cap)
                    .map(|t| Witness { triangle: t.clone(), solid: None })
                    .collect();
                r
            })
            .collect()
    }

    /// Records whose witnesses are the triangles carrying a solid witness.
    pub fn solid_rectangular_numbers(&self, mode: SolidMode) -> Vec<NumberRecord> {
        self.solid_values(mode)
            .into_iter()
            .map(|v| {
                let mut r = self.record_with_cap(v, mode, usize::MAX);
                r.witnesses.retain(|w| w.solid.is_some());
                r.witnesses.truncate(self.options.witness_cap);
                r
            })
            .collect()
    }

    /// Pythagorean values reached by more than one right triangle.
    pub fn equal_area_right_triangles(&self) -> Vec<(u64, Vec<Triangle>)> {
        self.right.iter().filter(|(_, t)| t.len() > 1).map(|(&v, t)| (v, t.clone())).collect()
    }

    /// A single value with every witness kept.
    pub fn classify(&self, value: u64) -> NumberRecord {
        self.record_with_cap(value, SolidMode::Definition2, usize::MAX)
    }

    pub fn count_summary(&self, mode: SolidMode) -> CountSummary {
        let solid: BTreeSet<u64> = self.solid_values(mode).into_iter().collect();
        let pyth: BTreeSet<u64> = self.right.keys().copied().collect();
        CountSummary {
            area: self.area.len(),
            pythagorean: pyth.len(),
            solid: solid.len(),
            solid_not_pythagorean: solid.difference(&pyth).count(),
            both: solid.intersection(&pyth).count(),
            neither: self.area.keys().filter(|v| !solid.contains(v) && !pyth.contains(v)).count(),
            area_2_mod_4: self.area.keys().filter(|&&v| v % 4 == 2).count(),
        }
    }

    pub fn check_conjecture(&self) -> ConjectureReport {
        let counterexamples = self
            .right
            .keys()
            .filter(|v| self.solid.contains_key(v))
            .map(|&v| self.classify(v))
            .collect();
        ConjectureReport {
            limit: self.limit,
            pythagorean_count: self.right.len(),
            solid_count: self.solid.len(),
            counterexamples,
        }
    }

    /// Disagreements between the enumeration routes; empty when they all agree.
    pub fn cross_check(&self) -> Vec<String> {
        let mut problems = Vec::new();
        for (&v, tris) in &self.right {
            if !self.area.contains_key(&v) {
                problems.push(format!("right-triangle area {v} missing from the area list"));
            }
            for t in tris {
                if !self.area[&v].iter().any(|w| &w.triangle == t) {
                    problems.push(format!("right triangle {t} missing from area {v}"));
                }
            }
        }
        for (&v, ws) in &self.area {
            let right_here: Vec<&Triangle> = ws.iter().map(|w| &w.triangle).filter(|t| t.is_right()).collect();
            if right_here.len() != self.right.get(&v).map_or(0, Vec::len) {
                problems.push(format!("area {v}: right triangle counts disagree"));
            }
            let classified: BTreeSet<(QuadSolution, Natural)> = ws
                .iter()
                .filter_map(|w| w.solid.as_ref())
                .map(|s| (s.solution.canonical(), s.d.clone()))
                .collect();
            let enumerated: BTreeSet<(QuadSolution, Natural)> = self
                .solid
                .get(&v)
                .into_iter()
                .flatten()
                .map(|s| (s.solution.canonical(), s.d.clone()))
                .collect();
            if classified != enumerated {
                problems.push(format!(
                    "area {v}: {} solid witnesses by classification, {} by enumeration",
                    classified.len(),
                    enumerated.len()
                ));
            }
        }
        for &v in self.solid.keys() {
            if !self.area.contains_key(&v) {
                problems.push(format!("solid area {v} missing from the area list"));
            }
        }
        problems
    }
}

/// Loops over even excesses `n₁ ≥ n₂ ≥ n₃`, sharding on `n₃` across `jobs` threads.
fn area_triangles(limit: u64, jobs: usize) -> BTreeMap<u64, Vec<Witness>> {
    let cap = 16 * (limit as u128) * (limit as u128);
    let bound = perimeter_bound(limit) as u128;
    let n3_values: Vec<u128> = (1..)
        .map(|h| 2 * h as u128)
        .take_while(|&n3| 3 * n3 * n3 * n3 * n3 <= cap && 3 * n3 <= bound)
        .collect();

    let shard = |which: usize| {
        let mut out: Vec<(u64, Triangle)> = Vec::new();
        for &n3 in n3_values.iter().skip(which).step_by(jobs) {
            let mut n2 = n3;
            while (2 * n2 + n3) * n2 * n2 * n3 <= cap && 2 * n2 + n3 <= bound {
                let mut n1 = n2;
                loop {
                    let per = n1 + n2 + n3;
                    let sixteen_a2 = per * n1 * n2 * n3;
                    if sixteen_a2 > cap || per > bound {
                        break;
                    }
                    if let Some(root) = is_perfect_square(&Natural::from(sixteen_a2)) {
                        let root = root.to_u64().expect("root below 4·limit");
                        debug_assert_eq!(root % 4, 0);
                        let sides = [(n1 + n2) / 2, (n1 + n3) / 2, (n2 + n3) / 2].map(|s| s as u64);
                        let t = Triangle::new(sides[0], sides[1], sides[2]).expect("positive excesses");
                        out.push((root / 4, t));
                    }
                    n1 += 2;
                }
                n2 += 2;
            }
        }
        out
    };

    let found: Vec<(u64, Triangle)> = if jobs == 1 {
        shard(0)
    } else {
        thread::scope(|s| {
            let handles: Vec<_> = (0..jobs).map(|j| s.spawn(move || shard(j))).collect();
            handles.into_iter().flat_map(|h| h.join().expect("catalog shard panicked")).collect()
        })
    };

    let mut by_value: BTreeMap<u64, Vec<Witness>> = BTreeMap::new();
    for (v, t) in found {
        let solid = classify_solid_rectangular(&t).expect("triangle has integer area");
        by_value.entry(v).or_default().push(Witness { triangle: t, solid });
    }
    for ws in by_value.values_mut() {
        ws.sort();
    }
    by_value
}

/// Right triangles with legs `p ≤ q`, `p·q ≤ 2·limit`.
fn right_triangles(limit: u64) -> BTreeMap<u64, Vec<Triangle>> {
    let mut out: BTreeMap<u64, Vec<Triangle>> = BTreeMap::new();
    let twice = 2 * limit;
    let mut p = 1u64;
    while p * p <= twice {
        for q in p..=twice / p {
            if let Some(h) = is_perfect_square(&nat(p * p + q * q)) {
                let h = h.to_u64().expect("hypotenuse fits");
                let t = Triangle::new(h, q, p).expect("right triangle");
                out.entry(p * q / 2).or_default().push(t);
            }
        }
        p += 1;
    }
    for tris in out.values_mut() {
        tris.sort();
    }
    out
}

/// `x·y·z·t·d²/4 ≤ limit` over primitive solutions and even `d`.
///
/// A primitive solution has exactly one odd leg, so up to order it is `(x, 2l, 2m, t)` with
/// `m ≤ l`, and `x·y·z·t > 8l²` bounds `l`.
fn solid_witnesses(limit: u64) -> BTreeMap<u64, BTreeSet<SolidWitness>> {
    let mut out: BTreeMap<u64, BTreeSet<SolidWitness>> = BTreeMap::new();
    let l_max = isqrt(&nat(limit / 8)).to_u64().expect("small");
    if l_max == 0 {
        return out;
    }
    let limit_n = nat(limit);
    for (_, s) in SolutionStream::new(EnumerationConfig::up_to(l_max).normalized(true)) {
        if !is_primitive_solution(&s) {
            continue;
        }
        let product = s.product();
        let mut d = nat(2);
        loop {
            let area = (&product * &d * &d) >> 2u32;
            if area > limit_n {
                break;
            }
            let w = SolidWitness::from_primitive(&s, &d).expect("primitive solution and even d");
            out.entry(area.to_u64().expect("≤ limit")).or_default().insert(w);
            d += 2u32;
        }
    }
    out
}

pub fn triangle_area_numbers(limit: u64) -> Vec<NumberRecord> {
    Catalog::build(limit, &CatalogOptions::default()).triangle_area_numbers(SolidMode::Definition2)
}

pub fn pythagorean_numbers(limit: u64) -> Vec<NumberRecord> {
    Catalog::build(limit, &CatalogOptions::default()).pythagorean_numbers(SolidMode::Definition2)
}

pub fn solid_rectangular_numbers(limit: u64, mode: SolidMode) -> Vec<NumberRecord> {
    Catalog::build(limit, &CatalogOptions::default()).solid_rectangular_numbers(mode)
}

pub fn classify_number(value: u64, limit_context: u64) -> NumberRecord {
    Catalog::build(limit_context.max(value), &CatalogOptions::default()).classify(value)
}

pub fn check_conjecture(limit: u64) -> ConjectureReport {
    Catalog::build(limit, &CatalogOptions::default()).check_conjecture()
}
