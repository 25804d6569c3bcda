//! Picard lattices of Type II Kulikov components, the gluing lattice `Λ`,
//! and KSBA semifans.

mod component;
mod lambda;
pub mod order4;
mod semifan;

pub use component::{build_component, primitive_picard, ComponentModel, ComponentSpec, Orbit};
pub use lambda::{glue_lambda, pairings, root_split_check, KulikovLattice, RootSplit};
pub use order4::{order4_checks, order4_lattice, Order4Checks};
pub use semifan::{cusp_model, ksba_table, semifan, semifan_record, CuspModel, SemifanFamily, SemifanRecord};
