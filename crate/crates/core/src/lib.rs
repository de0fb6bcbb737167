//! Finite commutative rings, finite modules over them, and exhaustive
//! decision procedures for phi-classical 1-absorbing prime submodules.

pub mod bits;
pub mod characterize;
pub mod classify;
pub mod construct;
pub mod error;
pub mod expr;
pub mod hom;
pub mod ideal;
pub mod module;
pub mod multiplication;
pub mod phi;
pub mod primes;
pub mod ring;

pub use bits::Bits;
pub use error::{Error, Result};
pub use hom::ModuleHom;
pub use ideal::Ideal;
pub use module::{FiniteModule, ModuleOrigin, Submodule};
pub use phi::{Phi, PhiValue};
pub use ring::{FiniteRing, RingOrigin};
pub use characterize::{characterization_check, characterization_witness, Condition};
pub use classify::{is_phi_1abs_prime, is_phi_classical_1abs, ClassificationResult, QuadrupleZero, Witness};
pub use construct::{localize, LocalizationMap, MultSet};
