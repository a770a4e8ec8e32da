//! Exact combinatorics of convex geometries.
//!
//! Starting from a finite convex geometry (an anti-exchange closure on
//! `[n] = {1, …, n}`), this crate builds the lattice of closed sets, the
//! stellar-subdivision sequence of its order complex, the reflected sphere
//! obtained by pushing that complex out to all sign patterns, and the signed
//! face poset of the resulting cell decomposition.  On top of those objects it
//! checks, with exact integer/rational arithmetic, the enumeration identities
//! that connect them: chain-fiber product formulas, flag-vector identities,
//! counts of enriched extremal functions, zeta-polynomial reciprocity, and
//! real-rootedness of h-polynomials.
//!
//! Modules:
//! - [`subset`]: bitmask subsets of the ground set.
//! - [`geometry`]: closure operators in four representations, validation.
//! - [`lattice`]: graded posets, Möbius functions, distributivity tests, zeta.
//! - [`complex`]: simplicial complexes, order complexes, stellar subdivision.
//! - [`sphere`]: the reflected complex and the signed face poset.
//! - [`qsym`]: flag quasisymmetric data and the flag-vector identity.
//! - [`enriched`]: enriched extremal functions and zeta-side identities.
//! - [`poly`]: exact rational polynomials and Sturm-sequence root counting.
//! - [`io`]: JSON input, DOT and OFF export.
//! - [`report`]: the check pipelines behind the command-line interface.
//! - [`corpus`]: generated test families (posets up to isomorphism, point
//!   configurations) shared by tests and examples.

pub mod bits;
pub mod complex;
pub mod corpus;
pub mod enriched;
pub mod geometry;
pub mod io;
pub mod lattice;
pub mod poly;
pub mod qsym;
pub mod report;
pub mod sphere;
pub mod subset;

pub use complex::{order_complex, SimplicialComplex, SubdivisionTrace};
pub use enriched::{EnrichedContext, SignedFunction};
pub use geometry::{BasePoset, ConvexGeometry, IdealDirection, ValidationReport};
pub use lattice::{ClosedSetLattice, GradedPoset};
pub use poly::Poly;
pub use qsym::{Composition, FlagQSym};
pub use sphere::{QNode, QPoset, SignedElement};
pub use subset::Subset;

/// Errors shared by every module of the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("ground set too large: n = {0} exceeds the cap of {max}", max = subset::MAX_GROUND_SET)]
    GroundSetTooLarge(usize),
    #[error("the empty set must be closed, but its closure is {0}")]
    EmptySetNotClosed(Subset),
    #[error("invalid geometry: {0}")]
    InvalidGeometry(String),
    #[error("invalid poset: {0}")]
    InvalidPoset(String),
    #[error("elements are not comparable")]
    NotComparable,
    #[error("poset has no unique minimum")]
    No0Hat,
    #[error("poset has no unique maximum")]
    No1Hat,
    #[error("not a lattice: {0}")]
    NotALattice(String),
    #[error("poset is not graded: {0}")]
    NotGraded(String),
    #[error("face is not in the complex")]
    FaceNotInComplex,
    #[error("vertex label is already present in the complex")]
    VertexCollision,
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("not a chain of closed sets: {0}")]
    ChainNotInL(String),
    #[error("chain must end at the top element")]
    ChainMustEndAtTop,
    #[error("not a proper element of the poset")]
    NotProperElement,
    #[error("not a multichain: {0}")]
    NotAMultichain(String),
    #[error("function is not enriched extremal: {0}")]
    NotExtremal(String),
    #[error("the zero polynomial has no root data")]
    ZeroPolynomial,
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
