//! Integer-sided triangles with integer area, the equation `x² + y² + z² = t²`, and the
//! coprime factorization linking the two.
//!
//! Everything is exact: sides, areas and intermediate products are arbitrary-precision
//! naturals.

pub mod arith;
pub mod catalog;
pub mod decomposition;
pub mod error;
pub mod generator;
pub mod quad;
pub mod triangle;

pub use arith::{nat, Natural};
pub use catalog::{Catalog, CatalogOptions, NumberRecord, SolidMode, Witness};
pub use decomposition::{
    classify_solid_rectangular, decompose, extract_quad_solution, reconstruct_from_factorization,
    CoprimeFactorization, SolidWitness,
};
pub use error::{Error, Result};
pub use generator::{solid_area, triangle_from_solution, GeneratedTriangle};
pub use quad::{ParamTriple, QuadSolution};
pub use triangle::{classify_parity_case, excess_triple, integer_area, CaseLabel, ExcessTriple, Triangle};
