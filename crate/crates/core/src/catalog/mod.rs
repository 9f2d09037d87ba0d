//! Named models, quadric presentations and classification procedures.

pub mod biquotient;
pub mod checks;
pub mod classify;
pub mod entries;
pub mod models;
pub mod rings;

pub use biquotient::{biquotient_ring, table_one, BiquotientKind, TableRow};
pub use checks::{check_tasks, listed_exponents, random_biquotients, run_checks, CheckGroup, CheckRecord, CheckTask, Status};
pub use classify::{
    classify_dim7, classify_dim8, classify_dim8_middle_pairing, classify_dim9, classify_dim9_two_even,
    classify_x_sigma_s4, Label,
};
pub use entries::{build_entry, catalog, verify_entry, CatalogEntry, EntryData, Expected, FAMILIES};
pub use models::*;
pub use rings::{model_quadric_relations, nine_dim_rings, square_zero_profile, RingFragment};
