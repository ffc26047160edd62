//! Exact computer-algebra checks for nilpotent matrix schemes: Gröbner
//! bases, wedge powers and shuffle ideals, Grassmannian chart ideals,
//! nilpotent orbit combinatorics and matrix polynomials in `t^-1`.

pub mod exterior;
pub mod fieldpoly;
pub mod groebner;
pub mod harness;
pub mod laurent;
pub mod orbits;
pub mod schemes;
