//! Constructions of matrices with prescribed sign pattern and characteristic
//! polynomial (or refined inertia).

mod d_block;
mod engine;
mod inertia;
mod select;
mod xtemplate;

pub use d_block::realize_quadratic_d;
pub use engine::{
    realize_layout, realize_layout_from_quadratics, realize_v, BlockKind, BlockTarget,
    RealizationPlan, RealizationReport,
};
pub use inertia::{
    d_target_for_inertia, realize_inertia_t, realize_inertia_td, InertiaRealization, DOUBLING_CAP,
};
pub use select::{select_t_triple, LinearClass, TripleSelection};
pub use xtemplate::{
    obs2_params, obs3_params, realize_obs2, realize_obs3, t_gate, x_matrix, GateStatus, XParams,
};
