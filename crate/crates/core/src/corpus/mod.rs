//! Named graphs, generators, exhaustive enumeration, random claw-free
//! subcubic graphs and the text formats.

pub mod catalog;
mod edgelist;
mod enumerate;
pub mod generators;
mod graph6;
mod random;

pub use catalog::CatalogEntry;
pub use edgelist::{parse_edge_list, write_edge_list};
pub use enumerate::{enumerate_connected_subcubic, ENUMERATION_LIMIT};
pub use generators::{diamond_ring, expanded_prism, gen_k_prism, triangle_expand};
pub use graph6::{parse_graph6, parse_graph6_lines, write_graph6};
pub use random::random_claw_free_subcubic;
