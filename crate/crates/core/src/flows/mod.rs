//! Nowhere-zero flows of Steiner triple systems.
//!
//! A flow is a nowhere-zero integer block vector whose sum over the blocks
//! through each point vanishes; its value is `‖v‖∞ + 1`. Flows are exactly
//! the nowhere-zero integer eigenvectors of the block graph for `−3`.

mod am;
mod cert;
mod firsteig;
mod resolvable;
mod search;

pub use am::{
    am_five_flow, am_normalizing_perm, am_w, am_w_values, find_h, g_point_sums, g_values, AmDiagnostics, AmFlow,
    CoveringFunction, GBlock, COVERING_FLOOR, T0_WEIGHT,
};
pub use cert::{is_flow, FlowCertificate, FlowKind};
pub use firsteig::{auxiliary_cycles, auxiliary_graph, first_eig_nzi, FirstEigVector};
pub use resolvable::resolvable_flow;
pub use search::{min_flow_search, search_value};
