//! Structural bijections between tableau families.

mod grid;
mod iota;
mod jdt;
mod rsk;
mod swap;

pub use iota::{iota, iota_box, split, superimpose};
pub use jdt::{jdt_backward, jdt_forward, jdt_forward_traced, JdtPair};
pub use rsk::{rsk_backward, rsk_forward, rsk_forward_traced, RskPair};
pub use swap::{bubble_path, order_swap_down, order_swap_up, reorder, swap_adjacent};
