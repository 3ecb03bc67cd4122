//! Calculus of Z/2Z-graded sl2 representations and their defects.
//!
//! Three layers:
//! - [`rep`]: the formal multiset calculus (dual, tensor, exterior square,
//!   the two bar gradings, defect) in exact integer arithmetic;
//! - [`oracle`]: an independent brute-force referee working on explicit
//!   exact-rational matrices;
//! - [`verify`]: exhaustive desk-scale verifiers for the defect
//!   inequalities, selected by name through a common trait.

pub mod oracle;
pub mod rep;
pub mod verify;

pub use rep::{
    closed_form_tensor_defect, closed_form_wedge2_defect, GradedIrrep, GradedRep, Sign,
    UngradedRep,
};
