//! Positive solutions of `x² + y² + z² = t²` and their `(l, m, n)` parametrization.
//!
//! Every solution with `y, z` even arises exactly once from
//! `x = (l²+m²−n²)/n, y = 2l, z = 2m, t = (l²+m²+n²)/n` with `n | l²+m²` and `n² < l²+m²`.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::ops::RangeInclusive;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{divisors_of, gcd_many, nat, Natural};
use crate::error::{Error, Result};

/// Positive integers with `x² + y² + z² = t²`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadSolution {
    x: Natural,
    y: Natural,
    z: Natural,
    t: Natural,
}

impl QuadSolution {
    pub fn new(
        x: impl Into<Natural>,
        y: impl Into<Natural>,
        z: impl Into<Natural>,
        t: impl Into<Natural>,
    ) -> Result<Self> {
        let (x, y, z, t) = (x.into(), y.into(), z.into(), t.into());
        if [&x, &y, &z, &t].iter().any(|v| v.is_zero()) {
            return Err(Error::NonPositive("solution components must be ≥ 1".into()));
        }
        if &x * &x + &y * &y + &z * &z != &t * &t {
            return Err(Error::NotASolution(format!("{x}² + {y}² + {z}² ≠ {t}²")));
        }
        Ok(Self { x, y, z, t })
    }

    pub fn x(&self) -> &Natural {
        &self.x
    }

    pub fn y(&self) -> &Natural {
        &self.y
    }

    pub fn z(&self) -> &Natural {
        &self.z
    }

    pub fn t(&self) -> &Natural {
        &self.t
    }

    pub fn legs(&self) -> [&Natural; 3] {
        [&self.x, &self.y, &self.z]
    }

    /// Number of even entries among `x, y, z, t`.
    pub fn even_count(&self) -> usize {
        [&self.x, &self.y, &self.z, &self.t].iter().filter(|v| v.is_even()).count()
    }

    pub fn scaled(&self, k: &Natural) -> Self {
        Self { x: &self.x * k, y: &self.y * k, z: &self.z * k, t: &self.t * k }
    }

    /// Same solution with `x ≤ y ≤ z`.
    pub fn canonical(&self) -> Self {
        let mut legs = [self.x.clone(), self.y.clone(), self.z.clone()];
        legs.sort_unstable();
        let [x, y, z] = legs;
        Self { x, y, z, t: self.t.clone() }
    }

    /// Legs reordered so that entry `i` is the current leg `order[i]`.
    pub fn permuted(&self, order: [usize; 3]) -> Self {
        let legs = self.legs();
        let [x, y, z] = order.map(|i| legs[i].clone());
        Self { x, y, z, t: self.t.clone() }
    }

    pub fn product(&self) -> Natural {
        &self.x * &self.y * &self.z * &self.t
    }
}

impl fmt::Display for QuadSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.x, self.y, self.z, self.t)
    }
}

/// `(l, m, n)` with `n | l² + m²` and `n² < l² + m²`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParamTriple {
    l: Natural,
    m: Natural,
    n: Natural,
}

impl ParamTriple {
    pub fn new(l: impl Into<Natural>, m: impl Into<Natural>, n: impl Into<Natural>) -> Result<Self> {
        let (l, m, n) = (l.into(), m.into(), n.into());
        if l.is_zero() || m.is_zero() || n.is_zero() {
            return Err(Error::NonPositive("l, m, n must be ≥ 1".into()));
        }
        let sum = &l * &l + &m * &m;
        if !(&sum % &n).is_zero() {
            return Err(Error::Divisibility(format!("{n} does not divide {l}² + {m}² = {sum}")));
        }
        if &n * &n >= sum {
            return Err(Error::Range(format!("{n}² is not below {l}² + {m}² = {sum}")));
        }
        Ok(Self { l, m, n })
    }

    pub fn l(&self) -> &Natural {
        &self.l
    }

    pub fn m(&self) -> &Natural {
        &self.m
    }

    pub fn n(&self) -> &Natural {
        &self.n
    }

    /// `l² + m²`.
    pub fn norm(&self) -> Natural {
        &self.l * &self.l + &self.m * &self.m
    }
}

impl fmt::Display for ParamTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.l, self.m, self.n)
    }
}

pub fn solution_from_param(p: &ParamTriple) -> QuadSolution {
    let norm = p.norm();
    let nn = &p.n * &p.n;
    QuadSolution {
        x: (&norm - &nn) / &p.n,
        y: &p.l << 1u32,
        z: &p.m << 1u32,
        t: (norm + nn) / &p.n,
    }
}

/// Inverts the parametrization: `l = y/2`, `m = z/2`, `n = (t − x)/2`.
pub fn param_from_solution(s: &QuadSolution) -> Result<ParamTriple> {
    if s.y.is_odd() || s.z.is_odd() {
        return Err(Error::Parity(format!("y = {} and z = {} must both be even", s.y, s.z)));
    }
    // y, z even forces x ≡ t (mod 2), and t > x since y, z > 0.
    let p = ParamTriple { l: &s.y >> 1u32, m: &s.z >> 1u32, n: (&s.t - &s.x) >> 1u32 };
    debug_assert!(ParamTriple::new(p.l.clone(), p.m.clone(), p.n.clone()).is_ok());
    Ok(p)
}

pub fn is_primitive_solution(s: &QuadSolution) -> bool {
    gcd_many(s.legs()).expect("legs are positive").is_one()
}

/// Controls for [`SolutionStream`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationConfig {
    pub l_range: RangeInclusive<u64>,
    /// Upper bound on `m`; defaults to the top of `l_range`. Normalized streams also cap `m ≤ l`.
    pub m_max: Option<u64>,
    /// Keep only `m ≤ l` and odd `x`.
    pub normalized: bool,
    /// After each solution, also emit it scaled by `2, 4, …, 2^scale_pow2`.
    pub scale_pow2: u32,
}

impl EnumerationConfig {
    pub fn up_to(l_max: u64) -> Self {
        Self { l_range: 1..=l_max, m_max: None, normalized: false, scale_pow2: 0 }
    }

    pub fn normalized(mut self, yes: bool) -> Self {
        self.normalized = yes;
        self
    }

    pub fn m_max(mut self, m_max: u64) -> Self {
        self.m_max = Some(m_max);
        self
    }

    pub fn scale_pow2(mut self, k: u32) -> Self {
        self.scale_pow2 = k;
        self
    }

    pub fn l_range(mut self, range: RangeInclusive<u64>) -> Self {
        self.l_range = range;
        self
    }
}

/// Lexicographic `(l, m, n)` stream of parametrized solutions.
#[derive(Debug, Clone)]
pub struct SolutionStream {
    config: EnumerationConfig,
    l: u64,
    m: u64,
    pending: VecDeque<(ParamTriple, QuadSolution)>,
}

impl SolutionStream {
    pub fn new(config: EnumerationConfig) -> Self {
        let l = *config.l_range.start().max(&1);
        Self { config, l, m: 0, pending: VecDeque::new() }
    }

    fn m_cap(&self) -> u64 {
        let cap = self.config.m_max.unwrap_or(*self.config.l_range.end());
        if self.config.normalized {
            cap.min(self.l)
        } else {
            cap
        }
    }

    /// Advances to the next `(l, m)` pair; false once the range is exhausted.
    fn advance(&mut self) -> bool {
        loop {
            if self.l > *self.config.l_range.end() {
                return false;
            }
            if self.m < self.m_cap() {
                self.m += 1;
                return true;
            }
            self.l += 1;
            self.m = 0;
        }
    }

    fn fill(&mut self) {
        let (l, m) = (nat(self.l), nat(self.m));
        let norm = &l * &l + &m * &m;
        for n in divisors_of(&norm) {
            if &n * &n >= norm {
                break;
            }
            let p = ParamTriple { l: l.clone(), m: m.clone(), n };
            let s = solution_from_param(&p);
            if self.config.normalized && s.x.is_even() {
                continue;
            }
            let mut scale = Natural::one();
            let doublings: Vec<_> = (0..self.config.scale_pow2)
                .map(|_| {
                    scale <<= 1u32;
                    let scaled =
                        ParamTriple { l: &p.l * &scale, m: &p.m * &scale, n: &p.n * &scale };
                    (scaled, s.scaled(&scale))
                })
                .collect();
            self.pending.push_back((p, s));
            self.pending.extend(doublings);
        }
    }
}

impl Iterator for SolutionStream {
    type Item = (ParamTriple, QuadSolution);

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            if let Some(item) = self.pending.pop_front() {
                return Some(item);
            }
            if !self.advance() {
                return None;
            }
            self.fill();
        }
    }
}

/// Every `(l, m, n)` with `l ≤ l_max`; see [`EnumerationConfig`] for finer control.
pub fn enumerate_solutions(l_max: u64, normalized: bool) -> SolutionStream {
    SolutionStream::new(EnumerationConfig::up_to(l_max).normalized(normalized))
}

/// Collapses solutions that differ only by a permutation of `x, y, z`.
pub fn distinct_solutions<I>(solutions: I) -> BTreeSet<QuadSolution>
where
    I: IntoIterator<Item = QuadSolution>,
{
    solutions.into_iter().map(|s| s.canonical()).collect()
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sol(x: u64, y: u64, z: u64, t: u64) -> QuadSolution {
        QuadSolution::new(x, y, z, t).unwrap()
    }

    fn param(l: u64, m: u64, n: u64) -> ParamTriple {
        ParamTriple::new(l, m, n).unwrap()
    }

    #[test]
    fn from_param_examples() {
        assert_eq!(solution_from_param(&param(1, 1, 1)), sol(1, 2, 2, 3));
        assert_eq!(solution_from_param(&param(9, 3, 5)), sol(13, 18, 6, 23));
        assert_eq!(solution_from_param(&param(5, 3, 1)), sol(33, 10, 6, 35));
    }

    #[test]
    fn param_validation() {
        assert!(matches!(ParamTriple::new(1u32, 1u32, 3u32), Err(Error::Divisibility(_))));
        assert!(matches!(ParamTriple::new(1u32, 1u32, 2u32), Err(Error::Range(_))));
        assert!(matches!(ParamTriple::new(0u32, 1u32, 1u32), Err(Error::NonPositive(_))));
    }

    #[test]
    fn rejects_non_solutions() {
        assert!(matches!(QuadSolution::new(1u32, 2u32, 2u32, 4u32), Err(Error::NotASolution(_))));
    }

    #[test]
    fn to_param_examples() {
        assert_eq!(param_from_solution(&sol(1, 2, 2, 3)).unwrap(), param(1, 1, 1));
        assert_eq!(param_from_solution(&sol(13, 18, 6, 23)).unwrap(), param(9, 3, 5));
        assert_eq!(param_from_solution(&sol(9, 18, 18, 27)).unwrap(), param(9, 9, 9));
        assert!(matches!(param_from_solution(&sol(2, 1, 2, 3)), Err(Error::Parity(_))));
    }

    #[test]
    fn primitive_examples() {
        assert!(is_primitive_solution(&sol(1, 2, 2, 3)));
        assert!(!is_primitive_solution(&sol(3, 6, 6, 9)));
        assert!(is_primitive_solution(&sol(25, 10, 2, 27)));
    }

    #[test]
    fn single_row_at_l_one() {
        let all: Vec<_> = enumerate_solutions(1, true).collect();
        assert_eq!(all, vec![(param(1, 1, 1), sol(1, 2, 2, 3))]);
    }

    #[test]
    fn normalized_stream_contains_unlisted_rows() {
        assert!(enumerate_solutions(2, true).any(|(p, s)| p == param(2, 2, 1) && s == sol(7, 4, 4, 9)));
    }

    #[test]
    fn stream_is_lexicographic() {
        let params: Vec<_> = enumerate_solutions(12, false).map(|(p, _)| p).collect();
        assert!(params.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn scaling_follows_base_solution() {
        let cfg = EnumerationConfig::up_to(1).normalized(true).scale_pow2(2);
        let all: Vec<_> = SolutionStream::new(cfg).map(|(_, s)| s).collect();
        assert_eq!(all, vec![sol(1, 2, 2, 3), sol(2, 4, 4, 6), sol(4, 8, 8, 12)]);
    }

    #[test]
    fn unnormalized_respects_m_max() {
        let cfg = EnumerationConfig::up_to(5).m_max(2);
        assert!(SolutionStream::new(cfg).all(|(p, _)| p.m() <= &nat(2)));
        assert!(enumerate_solutions(3, false).any(|(p, _)| p.m() > p.l()));
    }

    #[test]
    fn distinct_collapses_permutations() {
        let set = distinct_solutions([sol(1, 2, 2, 3), sol(2, 1, 2, 3), sol(2, 2, 1, 3)]);
        assert_eq!(set.len(), 1);
    }

    #[test]
    fn l_range_shards_cover_the_whole_stream() {
        let whole: Vec<_> = enumerate_solutions(10, true).collect();
        let mut sharded: Vec<_> = SolutionStream::new(EnumerationConfig::up_to(10).normalized(true).l_range(1..=4))
            .collect();
        sharded.extend(SolutionStream::new(
            EnumerationConfig::up_to(10).normalized(true).l_range(5..=10),
        ));
        assert_eq!(whole, sharded);
    }

    pub(crate) fn params() -> impl Strategy<Value = ParamTriple> {
        (1u64..2_000, 1u64..2_000, any::<prop::sample::Index>()).prop_map(|(l, m, pick)| {
            let sum = nat(l * l + m * m);
            let ns: Vec<Natural> = divisors_of(&sum).into_iter().filter(|n| n * n < sum).collect();
            ParamTriple::new(l, m, pick.get(&ns).clone()).unwrap()
        })
    }

    proptest! {
        #[test]
        fn param_gives_solution_and_round_trips(p in params()) {
            let s = solution_from_param(&p);
            let [x, y, z] = s.legs();
            prop_assert_eq!(x * x + y * y + z * z, s.t() * s.t());
            prop_assert_eq!(param_from_solution(&s).unwrap(), p);
        }

        #[test]
        fn scaling_preserves_the_equation(p in params(), k in 1u64..1_000) {
            let s = solution_from_param(&p).scaled(&nat(k));
            let [x, y, z] = s.legs();
            prop_assert_eq!(x * x + y * y + z * z, s.t() * s.t());
            prop_assert_eq!(is_primitive_solution(&s), k == 1 && is_primitive_solution(&solution_from_param(&p)));
        }
    }
}
