pub mod algebra;
pub mod cli;
pub mod error;
pub mod graded;
pub mod groebner;
pub mod minimal;
pub mod module;
pub mod monomial;
pub mod resolution;
pub mod scalar;
pub mod terms;
pub mod text;

pub use algebra::{
    validate_algebra, Algebra, AlgebraSpec, Relation, RewriteStrategy, ValidationReport, Violation,
};
pub use error::{Error, Result};
pub use graded::{
    assoc_graded_algebra, check_transfer_rees, check_transfer_sigma,
    minimal_homogeneous_generators, rees_algebra, rees_mod_z, same_submodule, GradedContext,
    TransferModules, TransferReport,
};
pub use groebner::{
    buchberger, check_groebner, normal_form, reduce_basis, s_poly, GroebnerRecord, SyzygySeed,
    DEFAULT_STEP_CAP,
};
pub use minimal::{
    check_basis_multiset_invariance, degree_multiset, minimal_standard_basis,
    minimize_presentation, QuotientPresentation,
};
pub use module::{
    monomial_divides, Division, FreeModule, ModuleElement, ModuleMonomial, ModuleOrderKind,
    ModuleOrdering,
};
pub use monomial::{Monomial, MonomialOrdering, OrderKind};
pub use resolution::{
    minimal_filtered_resolution, schreyer_syzygies, syzygy_generators, verify_resolution,
    Resolution, Syzygies, VerificationReport,
};
pub use scalar::Rational;
pub use terms::{Accumulator, Polynomial, Terms};
