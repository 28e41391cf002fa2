//! Independent numerical checks of the closed forms.

pub mod deficiency;
pub mod domain;
pub mod matching;
pub mod norms;
pub mod quadrature;
pub mod suites;

pub use deficiency::{square_integrability_probe, IntegrabilityProbe};
pub use domain::{verify_domain_membership, verify_domain_membership_with_constant, DomainReport};
pub use matching::{matching_energy, MatchingProblem, MatchingSolution};
pub use norms::{verify_deficiency_norm, verify_norm, NormReport};
pub use quadrature::{
    integrate_interval, integrate_radial, integrate_radial_real, QuadratureConfig,
    QuadratureEstimate,
};
pub use suites::{CheckOutcome, Scope, SuiteReport, VerifyOptions};
