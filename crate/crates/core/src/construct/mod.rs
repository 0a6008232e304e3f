//! Generators for the diagram families.

mod gauss;
mod realize;
mod qr;
mod trivalent;

pub use gauss::virtual_to_free;
pub use realize::{
    realize, realize_with_retries, oddify, pair_and_frame, pair_and_frame_detailed, Framing,
    Realization, RealizeStats, Oddified, DEFAULT_RETRIES,
};
pub use qr::{is_prime, qr_diagram};
pub use trivalent::{random_cubic, TrivalentGraph};
