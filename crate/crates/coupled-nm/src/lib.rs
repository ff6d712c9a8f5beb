//! Constraints of Haah's code that are constant along the body diagonal,
//! seen as three coupled Newman-Moore layers.
//!
//! A constraint `a` of the `g^x` sector satisfies, at every site `v`,
//!
//! ```text
//! a(v) = a(v - e1) + a(v - e2) + a(v - e3)
//! a(v) = a(v - e1 - e2) + a(v - e2 - e3) + a(v - e1 - e3)
//! ```
//!
//! If `a` is constant along `(1,1,1)` it is a function `A(u)` of
//! `u = (v1 - v3, v2 - v3)` and the two conditions become four-point
//! stencils on `Z^2`. The three cosets of `{u : u1 + u2 = 0 mod 3}` are the
//! red vertices, green triangles and blue triangles of the flattened
//! picture:
//!
//! ```text
//!  u2
//!   2 | B R G
//!   1 | G B R
//!   0 | R G B
//!     +------- u1
//!       0 1 2
//! ```
//!
//! Each color is an `L x L` layer with the basis `b1 = (1,-1)`,
//! `b2 = (1,2)`; green sits at offset `(1,0)` from red and blue at `(1,1)`.

mod fractal;
mod lift;
mod pattern;
mod system;

pub use fractal::{fractal_conditions, FractalCondition};
pub use lift::{ansatz_gap, lift_to_haah, AnsatzGap, Lift, Sector};
pub use pattern::Pattern;
pub use system::{build_system, count_solutions, enumerate_solutions, Color, LayerSystem, Recurrence};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NmError {
    #[error("lattice size {0} is too small, need L >= 2")]
    SizeTooSmall(usize),
    #[error("generation {k} has scale 2^{k} which does not fit in L = {l}")]
    ScaleTooLarge { k: u32, l: usize },
    #[error("pattern is not periodic under the lattice translations of the L = {0} torus")]
    NotPeriodic(usize),
    #[error("the target is not Haah's code on the L = {0} torus")]
    WrongCode(usize),
    #[error(transparent)]
    Code(#[from] code_factory::CodeError),
}
