//! Exact computation in Weyl and affine Weyl groups.
//!
//! Elements are integer matrices in the geometric representation of a
//! crystallographic Coxeter system. On top of that sit the Demazure product,
//! the nil-Hecke module on twisted involutions (recursive and closed form),
//! the maps `pi` and `^J pi`, the affine translation map `pi'`, and a
//! generic-`u` Hecke algebra used as an oracle for all of it.

pub mod affine;
pub mod coxeter;
pub mod demazure;
pub mod error;
pub mod hecke;
pub mod involutions;
pub mod parabolic;
pub mod verify;

pub use affine::{affine_table, AffineContext, TableRow, TranslationBasis};
pub use coxeter::{Element, GeneratorId, Group, GroupSpec, Star, StarKind, Word};
pub use demazure::{demazure_product, is_final_segment, is_initial_segment};
pub use error::{Error, Result};
pub use hecke::{nil_product, HVec, MVec, UPoly};
pub use involutions::{
    act_tw_closed, act_tw_iterative, enumerate_involutions, involution_graph, pi, AscentKind,
    InvolutionGraph, InvolutionLine, InvolutionRecord, PhiCache, Sign, SignedInvolution,
    TwistedInvolution,
};
pub use parabolic::ParabolicContext;
pub use verify::{run_suite, CheckResult, Report, VerifyOptions, SUITES};
