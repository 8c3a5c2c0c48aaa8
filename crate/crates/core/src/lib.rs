//! Prime graphs (Gruenberg–Kegel graphs) of finite simple groups and of
//! selected maximal subgroups.
//!
//! Edges are decided by centralizer-order formulas for semisimple classes,
//! stored unipotent/involution certificates, cycle-type combinatorics for
//! alternating groups, and brute-force spectra for small groups.

pub mod error;
pub mod group;
pub mod numtheory;
pub mod orders;
pub mod evidence;
pub mod semisimple;
pub mod altgraph;
pub mod certificates;
pub mod oracle;
pub mod engine;

pub use error::{Error, Result};
pub use group::{Family, Flavor, GroupId, Sign, Sporadic};
pub use numtheory::Factorization;
