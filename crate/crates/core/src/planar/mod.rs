//! The five-holed sphere and planar surfaces in general.

mod atlas;
mod elim;
mod equations;
mod exceptional;
mod glue;

pub use atlas::{c, check_relations, pentagon, pentagon_relations, pentagon_relations_check, subset_of, x, Auto, Curve, RelationCheck};
pub use elim::{adjugate3, det3, elimination_45, harvest_45, leading_equations, printed_product, symbolic_system, system_matrix, Elimination, PentagonRhs};
pub use exceptional::{
    certify_exceptional, exceptional_enumerate, exceptional_witness, orbit_count, partitions, pm2_exceptional_search, Certificate, PartitionTF, MAX_N,
};
pub use glue::{
    check_trace_function_05, diagonal_realization, frame_symmetries, glue_sigma05, is_exceptional_data, linear_realization, restrictions, subset_label, Glue, GlueBranch, TraceData05, Verdict05,
};
pub use equations::{involution, Chart, Frame, LinearForm, UNKNOWNS};
