//! Explicit modules over the Hall algebra of the arrowless quiver: the
//! finite exterior Fock space with creation/annihilation actions, the
//! q-deformed Hall module with its raising/lowering operators, Clifford
//! relation checks, and Lie-closure probing.

mod express;
mod fock;
mod hall;
mod lie;
mod operator;

pub use express::{coha_act_fock, express_in_xi};
pub use fock::{annihilation, creation, FockElement};
pub use hall::{commutator_spectrum, hall_rho, Convention, HallSign, QOperator};
pub use lie::{lie_closure_dim, LieClosure};
pub use operator::{annihilation_matrix, clifford_report, creation_matrix, CliffordReport, OperatorMatrix};
