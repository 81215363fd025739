//! Triangles with integer area built from solutions of `x² + y² + z² = t²`.
//!
//! With scale `D`, the sides `a = D(y²+z²)/2`, `b = D(x²+z²)/2`, `c = D(x²+y²)/2` give
//! `s − a = Dx²/2` and cyclically, so `A = D²·x·y·z·t/4`.

use num_integer::Integer;
use num_traits::Zero;

use crate::arith::{residue, Natural};
use crate::error::{Error, Result};
use crate::quad::{is_primitive_solution, QuadSolution};
use crate::triangle::{integer_area, Triangle};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratedTriangle {
    pub triangle: Triangle,
    pub area: Natural,
    pub source: QuadSolution,
    pub scale: Natural,
}

pub fn triangle_from_solution(s: &QuadSolution, scale: &Natural) -> Result<GeneratedTriangle> {
    if scale.is_zero() {
        return Err(Error::NonPositive("scale must be ≥ 1".into()));
    }
    if scale.is_odd() && s.legs().iter().any(|v| v.is_odd()) {
        return Err(Error::ScaleParity(format!(
            "solution {s} has an odd leg, so the scale must be even (got {scale})"
        )));
    }
    let [x2, y2, z2] = s.legs().map(|v| v * v);
    let sides = [
        scale * (&y2 + &z2) >> 1u32,
        scale * (&x2 + &z2) >> 1u32,
        scale * (&x2 + &y2) >> 1u32,
    ];
    let triangle = Triangle::from_sides(sides).expect("sums of squares satisfy the triangle inequality");
    let four_area = scale * scale * s.product();
    debug_assert_eq!(residue(&four_area, 4), 0);
    let area = four_area >> 2u32;
    assert_eq!(
        integer_area(&triangle).as_ref(),
        Some(&area),
        "Heron area of {triangle} disagrees with the generated area"
    );
    Ok(GeneratedTriangle { triangle, area, source: s.clone(), scale: scale.clone() })
}

/// `x·y·z·t·d²/4` for a primitive solution and even `d`.
pub fn solid_area(s: &QuadSolution, d_even: &Natural) -> Result<Natural> {
    if !is_primitive_solution(s) {
        return Err(Error::NonPrimitive(format!("solution {s} has gcd(x, y, z) > 1")));
    }
    if d_even.is_zero() {
        return Err(Error::NonPositive("d must be ≥ 2".into()));
    }
    if d_even.is_odd() {
        return Err(Error::Parity(format!("d = {d_even} must be even")));
    }
    Ok((s.product() * d_even * d_even) >> 2u32)
}
