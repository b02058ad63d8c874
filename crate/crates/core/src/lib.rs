//! Cyclic codes over GF(q) through q-polynomials.
//!
//! Every cyclic code of length n over GF(q) has four interchangeable
//! descriptions implemented here: a generator polynomial `g`, a parity-check
//! polynomial `h`, a check element `λ` of GF(q^n) whose conjugates annihilate
//! the codewords, and a q-polynomial `l(x) = Σ l_i x^(q^i)` whose circulant
//! coefficient matrix generates the code. [`bridges`] converts between them
//! and [`bridges::verify_equivalence`] checks, by exact linear algebra and
//! exhaustive enumeration, that all four agree.
//!
//! The image of `l` as a map on GF(q^n), read in normal coordinates, is the
//! circulant's column space: the reciprocal of the code its rows generate.
//!
//! ```
//! use qcyclic::{bridges, cyclic::CyclicCode, gf::FieldTower, poly::Poly};
//!
//! let tower = FieldTower::build(2, 1, 7)?;
//! let g = Poly::parse("1,1,0,1", tower.base())?;
//! let code = CyclicCode::from_generator(tower.base(), g.clone(), 7)?;
//! let ell = bridges::ell_from_generator(&tower, &g)?;
//! assert_eq!(ell.to_text(), "qpoly:1,0,0,0,1,0,1");
//! let circ = bridges::image_code_generator_matrix(&ell);
//! assert!(circ.row_space_equal(&code.generator_matrix())?);
//! # Ok::<(), qcyclic::Error>(())
//! ```

pub mod arith;
pub mod bridges;
pub mod cli;
pub mod cyclic;
mod error;
pub mod gf;
pub mod linalg;
pub mod normal;
pub mod poly;
pub mod qpoly;

pub use error::{Error, Result};
